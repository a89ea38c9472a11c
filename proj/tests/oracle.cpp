#include "oracle.hpp"

#include <stdexcept>

namespace oracle {

namespace {

// mat[r*n+c] with column c = image of e_c
Q mat(const V& m, std::size_t n, std::size_t r, std::size_t c) { return m[r * n + c]; }

Q t3(const V& t, std::size_t d1, std::size_t d2, std::size_t i, std::size_t j, std::size_t k) {
    return t[(i * d1 + j) * d2 + k];
}

/// Gauss-Jordan inverse of a square row-major matrix.
V invert(const V& m, std::size_t n) {
    V a = m;
    V inv(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) inv[i * n + i] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv * n + col] == 0) ++piv;
        if (piv == n) throw std::runtime_error("oracle: singular matrix");
        if (piv != col)
            for (std::size_t c = 0; c < n; ++c) {
                std::swap(a[piv * n + c], a[col * n + c]);
                std::swap(inv[piv * n + c], inv[col * n + c]);
            }
        Q p = a[col * n + col];
        for (std::size_t c = 0; c < n; ++c) {
            a[col * n + c] /= p;
            inv[col * n + c] /= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r * n + col] == 0) continue;
            Q f = a[r * n + col];
            for (std::size_t c = 0; c < n; ++c) {
                a[r * n + c] -= f * a[col * n + c];
                inv[r * n + c] -= f * inv[col * n + c];
            }
        }
    }
    return inv;
}

V matmul(const V& x, const V& y, std::size_t n) {
    V out(n * n, 0);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t t = 0; t < n; ++t) {
            if (x[r * n + t] == 0) continue;
            for (std::size_t c = 0; c < n; ++c) out[r * n + c] += x[r * n + t] * y[t * n + c];
        }
    return out;
}

}  // namespace

bool hom_associativity(const Algebra& a) {
    const std::size_t n = a.n;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
                for (std::size_t k = 0; k < n; ++k) {
                    Q lhs = 0, rhs = 0;
                    for (std::size_t i = 0; i < n; ++i) {
                        if (mat(a.xi, n, i, x) == 0) continue;
                        for (std::size_t p = 0; p < n; ++p)
                            lhs += mat(a.xi, n, i, x) * t3(a.mul, n, n, y, z, p) *
                                   t3(a.mul, n, n, i, p, k);
                    }
                    for (std::size_t q = 0; q < n; ++q) {
                        if (t3(a.mul, n, n, x, y, q) == 0) continue;
                        for (std::size_t j = 0; j < n; ++j)
                            rhs += t3(a.mul, n, n, x, y, q) * mat(a.xi, n, j, z) *
                                   t3(a.mul, n, n, q, j, k);
                    }
                    if (lhs != rhs) return false;
                }
    return true;
}

bool unitality_left(const Algebra& a) {
    const std::size_t n = a.n;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t k = 0; k < n; ++k) {
            Q lhs = 0;
            for (std::size_t i = 0; i < n; ++i) lhs += a.unit[i] * t3(a.mul, n, n, i, x, k);
            if (lhs != mat(a.xi, n, k, x)) return false;
        }
    return true;
}

bool hom_coassociativity(const Algebra& a) {
    const std::size_t n = a.n;
    V xinv = invert(a.xi, n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = 0; v < n; ++v)
                for (std::size_t w = 0; w < n; ++w) {
                    Q lhs = 0, rhs = 0;
                    for (std::size_t p = 0; p < n; ++p)
                        for (std::size_t q = 0; q < n; ++q) {
                            Q c = t3(a.comul, n, n, x, p, q);
                            if (c == 0) continue;
                            lhs += c * mat(xinv, n, u, p) * t3(a.comul, n, n, q, v, w);
                            rhs += c * t3(a.comul, n, n, p, u, v) * mat(xinv, n, w, q);
                        }
                    if (lhs != rhs) return false;
                }
    return true;
}

bool counit_law_left(const Algebra& a) {
    const std::size_t n = a.n;
    V xinv = invert(a.xi, n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t k = 0; k < n; ++k) {
            Q lhs = 0;
            for (std::size_t p = 0; p < n; ++p)
                lhs += a.counit[p] * t3(a.comul, n, n, x, p, k);
            if (lhs != mat(xinv, n, k, x)) return false;
        }
    return true;
}

bool xi_comultiplicative(const Algebra& a) {
    const std::size_t n = a.n;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = 0; v < n; ++v) {
                Q lhs = 0, rhs = 0;
                for (std::size_t p = 0; p < n; ++p) {
                    lhs += mat(a.xi, n, p, x) * t3(a.comul, n, n, p, u, v);
                    for (std::size_t q = 0; q < n; ++q)
                        rhs += t3(a.comul, n, n, x, p, q) * mat(a.xi, n, u, p) *
                               mat(a.xi, n, v, q);
                }
                if (lhs != rhs) return false;
            }
    return true;
}

bool delta_multiplicative(const Algebra& a) {
    const std::size_t n = a.n;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    Q lhs = 0, rhs = 0;
                    for (std::size_t p = 0; p < n; ++p)
                        lhs += t3(a.mul, n, n, x, y, p) * t3(a.comul, n, n, p, k, l);
                    for (std::size_t a1 = 0; a1 < n; ++a1)
                        for (std::size_t a2 = 0; a2 < n; ++a2) {
                            Q ca = t3(a.comul, n, n, x, a1, a2);
                            if (ca == 0) continue;
                            for (std::size_t b1 = 0; b1 < n; ++b1)
                                for (std::size_t b2 = 0; b2 < n; ++b2) {
                                    Q cb = t3(a.comul, n, n, y, b1, b2);
                                    if (cb == 0) continue;
                                    rhs += ca * cb * t3(a.mul, n, n, a1, b1, k) *
                                           t3(a.mul, n, n, a2, b2, l);
                                }
                        }
                    if (lhs != rhs) return false;
                }
    return true;
}

bool antipode_target(const Algebra& a) {
    const std::size_t n = a.n;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t k = 0; k < n; ++k) {
            Q lhs = 0, rhs = 0;
            // x1 S(x2)
            for (std::size_t p = 0; p < n; ++p)
                for (std::size_t q = 0; q < n; ++q) {
                    Q c = t3(a.comul, n, n, x, p, q);
                    if (c == 0) continue;
                    for (std::size_t s = 0; s < n; ++s)
                        lhs += c * mat(a.antipode, n, s, q) * t3(a.mul, n, n, p, s, k);
                }
            // eps_t(x) = eps(1_1 x) 1_2, with Delta(1) = sum_u unit_u Delta(e_u)
            for (std::size_t u = 0; u < n; ++u) {
                if (a.unit[u] == 0) continue;
                for (std::size_t i = 0; i < n; ++i) {
                    Q c = a.unit[u] * t3(a.comul, n, n, u, i, k);
                    if (c == 0) continue;
                    for (std::size_t p = 0; p < n; ++p)
                        rhs += c * t3(a.mul, n, n, i, x, p) * a.counit[p];
                }
            }
            if (lhs != rhs) return false;
        }
    return true;
}

bool module_associativity(const Algebra& a, const Module& m) {
    const std::size_t n = a.n, d = m.d;
    for (std::size_t h = 0; h < n; ++h)
        for (std::size_t g = 0; g < n; ++g)
            for (std::size_t x = 0; x < d; ++x)
                for (std::size_t k = 0; k < d; ++k) {
                    Q lhs = 0, rhs = 0;
                    for (std::size_t i = 0; i < n; ++i) {
                        if (mat(a.xi, n, i, h) == 0) continue;
                        for (std::size_t p = 0; p < d; ++p)
                            lhs += mat(a.xi, n, i, h) * t3(m.action, d, d, g, x, p) *
                                   t3(m.action, d, d, i, p, k);
                    }
                    for (std::size_t q = 0; q < n; ++q) {
                        if (t3(a.mul, n, n, h, g, q) == 0) continue;
                        for (std::size_t j = 0; j < d; ++j)
                            rhs += t3(a.mul, n, n, h, g, q) * mat(m.mu, d, j, x) *
                                   t3(m.action, d, d, q, j, k);
                    }
                    if (lhs != rhs) return false;
                }
    return true;
}

bool comodule_coassociativity(const Algebra& a, const Module& m) {
    const std::size_t n = a.n, d = m.d;
    V xinv = invert(a.xi, n);
    V muinv = invert(m.mu, d);
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t u = 0; u < d; ++u)
            for (std::size_t v = 0; v < n; ++v)
                for (std::size_t w = 0; w < n; ++w) {
                    Q lhs = 0, rhs = 0;
                    for (std::size_t p = 0; p < d; ++p)
                        for (std::size_t q = 0; q < n; ++q) {
                            Q c = t3(m.coaction, d, n, x, p, q);
                            if (c == 0) continue;
                            lhs += c * mat(muinv, d, u, p) * t3(a.comul, n, n, q, v, w);
                            rhs += c * t3(m.coaction, d, n, p, u, v) * mat(xinv, n, w, q);
                        }
                    if (lhs != rhs) return false;
                }
    return true;
}

bool yd_compatibility(const Algebra& a, const Module& m) {
    const std::size_t n = a.n, d = m.d;
    V xinv = invert(a.xi, n);
    V asinv = matmul(m.alpha, invert(a.antipode, n), n);  // alpha o S^{-1}
    for (std::size_t h = 0; h < n; ++h)
        for (std::size_t x = 0; x < d; ++x)
            for (std::size_t w = 0; w < d; ++w)
                for (std::size_t b = 0; b < n; ++b) {
                    Q lhs = 0, rhs = 0;
                    // rho(h . x)
                    for (std::size_t p = 0; p < d; ++p)
                        lhs += t3(m.action, d, d, h, x, p) * t3(m.coaction, d, n, p, w, b);
                    // xi(h21).x0 (x) ((beta(h22) xi^{-1}(x1)) alpha(S^{-1}(h1)))
                    for (std::size_t h1 = 0; h1 < n; ++h1)
                        for (std::size_t h2 = 0; h2 < n; ++h2) {
                            Q c1 = t3(a.comul, n, n, h, h1, h2);
                            if (c1 == 0) continue;
                            for (std::size_t h21 = 0; h21 < n; ++h21)
                                for (std::size_t h22 = 0; h22 < n; ++h22) {
                                    Q c2 = c1 * t3(a.comul, n, n, h2, h21, h22);
                                    if (c2 == 0) continue;
                                    for (std::size_t x0 = 0; x0 < d; ++x0)
                                        for (std::size_t x1 = 0; x1 < n; ++x1) {
                                            Q c3 = c2 * t3(m.coaction, d, n, x, x0, x1);
                                            if (c3 == 0) continue;
                                            for (std::size_t p1 = 0; p1 < n; ++p1) {
                                                Q c4 = c3 * mat(a.xi, n, p1, h21) *
                                                       t3(m.action, d, d, p1, x0, w);
                                                if (c4 == 0) continue;
                                                for (std::size_t p2 = 0; p2 < n; ++p2)
                                                    for (std::size_t p4 = 0; p4 < n; ++p4) {
                                                        Q c5 = c4 * mat(m.beta, n, p2, h22) *
                                                               mat(xinv, n, p4, x1);
                                                        if (c5 == 0) continue;
                                                        for (std::size_t p0 = 0; p0 < n; ++p0) {
                                                            Q c6 = c5 * mat(asinv, n, p0, h1);
                                                            if (c6 == 0) continue;
                                                            for (std::size_t u = 0; u < n; ++u)
                                                                rhs += c6 *
                                                                       t3(a.mul, n, n, p2, p4,
                                                                          u) *
                                                                       t3(a.mul, n, n, u, p0,
                                                                          b);
                                                        }
                                                    }
                                            }
                                        }
                                }
                        }
                    if (lhs != rhs) return false;
                }
    return true;
}

}  // namespace oracle
