"""Exact convex-geometry toolkit: distinguishability certificates, affine
symmetry groups, and state-space classification.

The heavy lifting lives in the compiled `_statespace` module; this package
re-exports it both from a wheel layout (module inside the package) and from
a CMake build tree (module on sys.path).
"""

try:
    from ._statespace import *  # noqa: F401,F403
    from ._statespace import __doc__ as _doc
except ImportError:  # build-tree layout
    from _statespace import *  # noqa: F401,F403
    from _statespace import __doc__ as _doc

__doc__ = _doc
__version__ = "0.1.0"
