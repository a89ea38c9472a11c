#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "wmhh/scalar.hpp"

namespace wmhh {

struct ShapeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SingularMap : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Coordinate vector in a fixed basis.
using Vec = std::vector<Scalar>;

Vec zero_vec(std::size_t dim);
Vec basis_vec(std::size_t dim, std::size_t i);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Scalar& c, const Vec& v);
bool is_zero(const Vec& v);

/// Dense matrix; column j is the image of the j-th basis vector.
class LinearMap {
public:
    LinearMap() = default;
    LinearMap(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static LinearMap identity(std::size_t n);
    static LinearMap zero(std::size_t rows, std::size_t cols);
    /// diag(d) as a square map.
    static LinearMap diagonal(const Vec& d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    Vec apply(const Vec& v) const;
    LinearMap compose(const LinearMap& rhs) const;  // this after rhs
    LinearMap transpose() const;

    /// Column c as a Vec (image of basis vector c).
    Vec column(std::size_t c) const;

    bool operator==(const LinearMap& o) const = default;

    /// Kronecker product: acts on the flattened tensor square (row-major).
    static LinearMap kron(const LinearMap& a, const LinearMap& b);

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> a_;
};

/// A particular exact solution of f x = b (free variables set to 0),
/// or nullopt when the system is inconsistent.
std::optional<Vec> solve(const LinearMap& f, const Vec& b);

/// Exact inverse by Gauss-Jordan elimination. Throws SingularMap.
LinearMap invert(const LinearMap& f);

bool is_invertible(const LinearMap& f);

/// Order-3 tensor of structure constants.
/// Multiplication convention: entry(i,j,k) is the x_k-coefficient of x_i x_j.
/// Comultiplication convention: entry(i,j,k) is the x_j (x) x_k coefficient of D(x_i).
class Tensor3 {
public:
    Tensor3() = default;
    Tensor3(std::size_t d0, std::size_t d1, std::size_t d2)
        : d0_(d0), d1_(d1), d2_(d2), a_(d0 * d1 * d2) {}

    std::size_t d0() const { return d0_; }
    std::size_t d1() const { return d1_; }
    std::size_t d2() const { return d2_; }

    Scalar& at(std::size_t i, std::size_t j, std::size_t k) {
        return a_[(i * d1_ + j) * d2_ + k];
    }
    const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const {
        return a_[(i * d1_ + j) * d2_ + k];
    }

    std::vector<Scalar>& raw() { return a_; }
    const std::vector<Scalar>& raw() const { return a_; }

    bool operator==(const Tensor3& o) const = default;

private:
    std::size_t d0_ = 0, d1_ = 0, d2_ = 0;
    std::vector<Scalar> a_;
};

/// Subspace given by a reduced row-echelon basis. Membership tests are exact.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}

    /// Row-reduces the given spanning set.
    static Subspace span(std::size_t ambient_dim, const std::vector<Vec>& vectors);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t rank() const { return basis_.size(); }
    const std::vector<Vec>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(const Vec& v) const;
    /// Coefficients of v in the echelon basis, or nullopt if v is outside.
    std::optional<Vec> coords(const Vec& v) const;
    /// Basis vectors as columns: the inclusion map R^rank -> R^ambient.
    LinearMap inclusion() const;

    bool operator==(const Subspace& o) const = default;

private:
    std::size_t ambient_ = 0;
    std::vector<Vec> basis_;
    std::vector<std::size_t> pivots_;
};

/// Reduced echelon basis of the column span of f.
Subspace image_subspace(const LinearMap& f);

/// Evaluates the bilinear product: sum_{i,j} a_i b_j m[i][j][.].
Vec contract_mul(const Tensor3& m, const Vec& a, const Vec& b);

/// Coordinates of D(c) in the flattened basis {x_j (x) x_k}, index j*n+k.
Vec apply_delta(const Tensor3& d, const Vec& c);

}  // namespace wmhh
