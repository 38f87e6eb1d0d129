#include "statespace/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace statespace {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows) {
    if (rows.empty()) return Matrix();
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols()) {
            throw std::invalid_argument("dimension mismatch");
        }
        for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols) {
    return from_rows(cols).transposed();
}

Vec Matrix::row(std::size_t r) const {
    Vec v(cols_);
    for (std::size_t c = 0; c < cols_; ++c) v[c] = at(r, c);
    return v;
}

Vec Matrix::column(std::size_t c) const {
    Vec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("dimension mismatch");
    Matrix m(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& f = a.at(r, k);
            if (f == 0) continue;
            for (std::size_t c = 0; c < b.cols(); ++c) {
                m.at(r, c) += f * b.at(k, c);
            }
        }
    }
    return m;
}

Vec operator*(const Matrix& a, const Vec& v) {
    if (a.cols() != v.size()) throw std::invalid_argument("dimension mismatch");
    Vec out(a.rows(), Rational(0));
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            if (a.at(r, c) != 0) out[r] += a.at(r, c) * v[c];
        }
    }
    return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("dimension mismatch");
    }
    Matrix m(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            m.at(r, c) = a.at(r, c) + b.at(r, c);
    return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("dimension mismatch");
    }
    Matrix m(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            m.at(r, c) = a.at(r, c) - b.at(r, c);
    return m;
}

Matrix operator*(const Rational& s, const Matrix& a) {
    Matrix m(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) m.at(r, c) = s * a.at(r, c);
    return m;
}

namespace {

// Row echelon reduction in place. Returns the list of pivot columns.
// Among the nonzero pivot candidates in a column, picks the entry with the
// smallest bit size.
std::vector<std::size_t> echelonize(Matrix& m) {
    std::vector<std::size_t> pivot_cols;
    std::size_t next_row = 0;
    for (std::size_t col = 0; col < m.cols() && next_row < m.rows(); ++col) {
        std::size_t best = m.rows();
        std::size_t best_bits = 0;
        for (std::size_t r = next_row; r < m.rows(); ++r) {
            if (m.at(r, col) == 0) continue;
            const std::size_t bits = bit_size(m.at(r, col));
            if (best == m.rows() || bits < best_bits) {
                best = r;
                best_bits = bits;
            }
        }
        if (best == m.rows()) continue;
        if (best != next_row) {
            for (std::size_t c = 0; c < m.cols(); ++c) {
                std::swap(m.at(best, c), m.at(next_row, c));
            }
        }
        const Rational pivot = m.at(next_row, col);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == next_row || m.at(r, col) == 0) continue;
            const Rational factor = m.at(r, col) / pivot;
            for (std::size_t c = col; c < m.cols(); ++c) {
                m.at(r, c) -= factor * m.at(next_row, c);
            }
        }
        pivot_cols.push_back(col);
        ++next_row;
    }
    return pivot_cols;
}

}  // namespace

std::size_t rank(Matrix m) { return echelonize(m).size(); }

Rational determinant(Matrix m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("dimension mismatch");
    const std::size_t n = m.rows();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t best = n;
        std::size_t best_bits = 0;
        for (std::size_t r = col; r < n; ++r) {
            if (m.at(r, col) == 0) continue;
            const std::size_t bits = bit_size(m.at(r, col));
            if (best == n || bits < best_bits) {
                best = r;
                best_bits = bits;
            }
        }
        if (best == n) return Rational(0);
        if (best != col) {
            for (std::size_t c = 0; c < n; ++c) {
                std::swap(m.at(best, c), m.at(col, c));
            }
            det = -det;
        }
        const Rational pivot = m.at(col, col);
        det *= pivot;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m.at(r, col) == 0) continue;
            const Rational factor = m.at(r, col) / pivot;
            for (std::size_t c = col; c < n; ++c) {
                m.at(r, c) -= factor * m.at(col, c);
            }
        }
    }
    return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("dimension mismatch");
    const std::size_t n = m.rows();
    // Augment with the identity and reduce.
    Matrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, n + r) = 1;
    }
    const auto pivots = echelonize(aug);
    if (pivots.size() != n) return std::nullopt;
    for (std::size_t r = 0; r < n; ++r) {
        if (pivots[r] >= n) return std::nullopt;
    }
    Matrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        const Rational pivot = aug.at(r, pivots[r]);
        for (std::size_t c = 0; c < n; ++c) inv.at(pivots[r], c) = aug.at(r, n + c) / pivot;
    }
    return inv;
}

std::optional<Vec> solve_linear(Matrix m, Vec rhs) {
    if (m.rows() != m.cols() || m.rows() != rhs.size()) {
        throw std::invalid_argument("dimension mismatch");
    }
    const auto inv = inverse(m);
    if (!inv) return std::nullopt;
    return *inv * rhs;
}

std::vector<Vec> kernel_basis(Matrix m) {
    const std::size_t n = m.cols();
    const auto pivots = echelonize(m);
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        Vec v(n, Rational(0));
        v[free_col] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            v[pivots[r]] = -m.at(r, free_col) / m.at(r, pivots[r]);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

bool leading_minors_positive(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("dimension mismatch");
    for (std::size_t k = 1; k <= m.rows(); ++k) {
        Matrix sub(k, k);
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = 0; c < k; ++c) sub.at(r, c) = m.at(r, c);
        if (determinant(std::move(sub)) <= 0) return false;
    }
    return true;
}

}  // namespace statespace
