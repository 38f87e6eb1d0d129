"""Smoke tests for the python bindings."""

import json
import os
import subprocess

import pytest

import statespace


def test_generators_and_classify():
    square = statespace.gen("affinely_regular_polygon", 4)
    assert square["dim"] == 2
    assert len(square["vertices"]) == 4
    assert statespace.classify(square) == "VertexTransitivePolytope"
    assert statespace.classify(statespace.gen("simplex", 3)) == "Simplex(3)"


def test_automorphism_group():
    cube = statespace.gen("cube", 3)
    group = statespace.automorphism_group(cube)
    assert group["order"] == 48
    assert len(group["orbits"]) == 1


def test_distinguishability_and_decomposition():
    square = statespace.gen("affinely_regular_polygon", 4)
    witness = statespace.distinguishable(square, [["1", "0"], ["-1", "0"]])
    assert witness is not None
    assert len(witness["effects"]) == 2
    assert len(witness["hyperplane_witness"]["hyperplanes"]) == 2

    assert statespace.distinguishable(
        square, [["1", "0"], ["-1", "0"], ["0", "1"]]) is None

    decomposition = statespace.decompose(square, ["0", "0"])
    assert decomposition is not None
    assert [t["weight"] for t in decomposition["terms"]] == ["1/2", "1/2"]

    sets = statespace.max_distinguishable(square)
    assert sets["max_size"] == 2
    assert len(sets["maximal_sets"]) == 6


def test_analyze_report():
    report = statespace.analyze(statespace.gen("affinely_regular_polygon", 6), seed=5, trials=20)
    assert report["automorphism_group"]["order"] == 12
    assert report["classification"] == "VertexTransitivePolytope"
    assert report["fixed_point"]["interior"] is True


def test_models():
    assert statespace.ball_distinguishable(3, [[1, 0, 0], [-1, 0, 0]])
    assert not statespace.ball_distinguishable(3, [[1, 0, 0], [0, 1, 0]])
    terms = statespace.ball_decompose(3, ["1/2", "0", "0"])
    assert [t["exact_weight"] for t in terms] == ["3/4", "1/4"]

    assert statespace.cylinder_decompose(["0", "0", "1/4"]) is None
    center = statespace.cylinder_decompose(["0", "0", "0"])
    assert [t["exact_weight"] for t in center] == ["1/2", "1/2"]

    report = statespace.model_report("ball", dim=3, seed=7)
    conds = report["conditions"]
    assert conds["extreme_transitive"]["value"]
    assert conds["pair_transitive"]["value"]
    assert conds["two_decomposable"]["value"]

    cyl = statespace.model_report("cylinder", seed=7)
    assert cyl["conditions"]["two_decomposable"]["value"] is False
    assert cyl["counterexample"] == [0.0, 0.0, 0.25]


@pytest.mark.skipif("STATESPACE_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_roundtrip(tmp_path):
    cli = os.environ["STATESPACE_CLI"]
    out = tmp_path / "square.json"
    subprocess.run([cli, "gen", "affinely_regular_polygon(4)", "-o", str(out)], check=True)
    analyzed = subprocess.run(
        [cli, "analyze", str(out), "--seed", "3", "--trials", "10"],
        check=True, capture_output=True, text=True)
    report = json.loads(analyzed.stdout)
    assert report["automorphism_group"]["order"] == 8

    bad = tmp_path / "broken.json"
    bad.write_text('{"vertices": []}')
    rc = subprocess.run([cli, "analyze", str(bad)], capture_output=True)
    assert rc.returncode == 2

    degenerate = tmp_path / "segment.json"
    degenerate.write_text('{"dim": 2, "vertices": [["0", "0"], ["1", "1"]]}')
    rc = subprocess.run([cli, "analyze", str(degenerate)], capture_output=True)
    assert rc.returncode == 3

    verified = subprocess.run(
        [cli, "verify", "--trials", "5", "--seed", "1", "--format", "text"],
        capture_output=True, text=True)
    assert verified.returncode == 0
    assert "redundancy_probe" in verified.stdout
