#include "wmhh/linear.hpp"

namespace wmhh {

Vec zero_vec(std::size_t dim) { return Vec(dim); }

Vec basis_vec(std::size_t dim, std::size_t i) {
    Vec v(dim);
    v[i] = 1;
    return v;
}

Vec add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw ShapeError("vector dimension mismatch in add");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw ShapeError("vector dimension mismatch in sub");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec scale(const Scalar& c, const Vec& v) {
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

LinearMap LinearMap::identity(std::size_t n) {
    LinearMap m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

LinearMap LinearMap::zero(std::size_t rows, std::size_t cols) { return LinearMap(rows, cols); }

LinearMap LinearMap::diagonal(const Vec& d) {
    LinearMap m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
    return m;
}

Vec LinearMap::apply(const Vec& v) const {
    if (v.size() != cols_) throw ShapeError("LinearMap::apply dimension mismatch");
    Vec r(rows_);
    for (std::size_t c = 0; c < cols_; ++c) {
        if (v[c] == 0) continue;
        for (std::size_t r_ = 0; r_ < rows_; ++r_) {
            const Scalar& e = at(r_, c);
            if (e != 0) r[r_] += e * v[c];
        }
    }
    return r;
}

LinearMap LinearMap::compose(const LinearMap& rhs) const {
    if (cols_ != rhs.rows_) throw ShapeError("LinearMap::compose dimension mismatch");
    LinearMap r(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& e = at(i, k);
            if (e == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                const Scalar& f = rhs.at(k, j);
                if (f != 0) r.at(i, j) += e * f;
            }
        }
    return r;
}

LinearMap LinearMap::transpose() const {
    LinearMap r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Vec LinearMap::column(std::size_t c) const {
    Vec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
}

LinearMap LinearMap::kron(const LinearMap& a, const LinearMap& b) {
    LinearMap r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Scalar& e = a.at(i, j);
            if (e == 0) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    const Scalar& f = b.at(k, l);
                    if (f != 0) r.at(i * b.rows() + k, j * b.cols() + l) = e * f;
                }
        }
    return r;
}

std::optional<Vec> solve(const LinearMap& f, const Vec& b) {
    if (b.size() != f.rows()) throw ShapeError("solve dimension mismatch");
    const std::size_t m = f.rows(), n = f.cols();
    LinearMap a = f;
    Vec rhs = b;
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t piv = row;
        while (piv < m && a.at(piv, col) == 0) ++piv;
        if (piv == m) continue;
        if (piv != row) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(row, j));
            std::swap(rhs[piv], rhs[row]);
        }
        Scalar p = a.at(row, col);
        for (std::size_t j = 0; j < n; ++j) a.at(row, j) /= p;
        rhs[row] /= p;
        for (std::size_t r = 0; r < m; ++r) {
            if (r == row) continue;
            Scalar mul = a.at(r, col);
            if (mul == 0) continue;
            for (std::size_t j = 0; j < n; ++j) a.at(r, j) -= mul * a.at(row, j);
            rhs[r] -= mul * rhs[row];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (std::size_t r = row; r < m; ++r)
        if (rhs[r] != 0) return std::nullopt;
    Vec x(n);
    for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = rhs[i];
    return x;
}

LinearMap invert(const LinearMap& f) {
    if (f.rows() != f.cols()) throw ShapeError("invert: map is not square");
    const std::size_t n = f.rows();
    LinearMap a = f;
    LinearMap inv = LinearMap::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a.at(piv, col) == 0) ++piv;
        if (piv == n) throw SingularMap("invert: singular map");
        if (piv != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a.at(piv, j), a.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
        Scalar p = a.at(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a.at(col, j) /= p;
            inv.at(col, j) /= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            Scalar m = a.at(r, col);
            if (m == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                a.at(r, j) -= m * a.at(col, j);
                inv.at(r, j) -= m * inv.at(col, j);
            }
        }
    }
    return inv;
}

bool is_invertible(const LinearMap& f) {
    if (f.rows() != f.cols()) return false;
    try {
        invert(f);
        return true;
    } catch (const SingularMap&) {
        return false;
    }
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vec>& vectors) {
    // Gaussian elimination to reduced row-echelon form.
    std::vector<Vec> rows;
    for (const auto& v : vectors) {
        if (v.size() != ambient_dim) throw ShapeError("Subspace::span dimension mismatch");
        if (!is_zero(v)) rows.push_back(v);
    }
    std::vector<Vec> basis;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    // forward elimination with column-ordered pivots
    for (std::size_t col = 0; col < ambient_dim && row < rows.size(); ++col) {
        std::size_t piv = row;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[row], rows[piv]);
        Scalar p = rows[row][col];
        for (auto& x : rows[row]) x /= p;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == row) continue;
            Scalar m = rows[r][col];
            if (m == 0) continue;
            for (std::size_t j = 0; j < ambient_dim; ++j) rows[r][j] -= m * rows[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    rows.resize(row);
    Subspace s(ambient_dim);
    s.basis_ = std::move(rows);
    s.pivots_ = std::move(pivots);
    return s;
}

bool Subspace::contains(const Vec& v) const { return coords(v).has_value(); }

std::optional<Vec> Subspace::coords(const Vec& v) const {
    if (v.size() != ambient_) throw ShapeError("Subspace::coords dimension mismatch");
    Vec c(basis_.size());
    Vec resid = v;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        c[i] = resid[pivots_[i]];
        if (c[i] != 0)
            for (std::size_t j = 0; j < ambient_; ++j) resid[j] -= c[i] * basis_[i][j];
    }
    if (!is_zero(resid)) return std::nullopt;
    return c;
}

LinearMap Subspace::inclusion() const {
    LinearMap m(ambient_, basis_.size());
    for (std::size_t j = 0; j < basis_.size(); ++j)
        for (std::size_t i = 0; i < ambient_; ++i) m.at(i, j) = basis_[j][i];
    return m;
}

Subspace image_subspace(const LinearMap& f) {
    std::vector<Vec> cols;
    cols.reserve(f.cols());
    for (std::size_t c = 0; c < f.cols(); ++c) cols.push_back(f.column(c));
    return Subspace::span(f.rows(), cols);
}

Vec contract_mul(const Tensor3& m, const Vec& a, const Vec& b) {
    if (a.size() != m.d0() || b.size() != m.d1())
        throw ShapeError("contract_mul dimension mismatch");
    Vec r(m.d2());
    for (std::size_t i = 0; i < m.d0(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < m.d1(); ++j) {
            if (b[j] == 0) continue;
            Scalar c = a[i] * b[j];
            for (std::size_t k = 0; k < m.d2(); ++k) {
                const Scalar& e = m.at(i, j, k);
                if (e != 0) r[k] += c * e;
            }
        }
    }
    return r;
}

Vec apply_delta(const Tensor3& d, const Vec& c) {
    if (c.size() != d.d0()) throw ShapeError("apply_delta dimension mismatch");
    Vec r(d.d1() * d.d2());
    for (std::size_t i = 0; i < d.d0(); ++i) {
        if (c[i] == 0) continue;
        for (std::size_t j = 0; j < d.d1(); ++j)
            for (std::size_t k = 0; k < d.d2(); ++k) {
                const Scalar& e = d.at(i, j, k);
                if (e != 0) r[j * d.d2() + k] += c[i] * e;
            }
    }
    return r;
}

}  // namespace wmhh
