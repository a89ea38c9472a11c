#pragma once

#include <cstddef>
#include <vector>

#include "wmhh/linear.hpp"

namespace wmhh {

/// Element of a tensor product of coordinate spaces, stored flat row-major.
/// The identity checkers build each side of an equation by chaining the leg
/// operations below, starting from a basis element.
struct TensorElement {
    std::vector<std::size_t> dims;
    Vec data;  // size = product of dims

    static TensorElement basis(const std::vector<std::size_t>& dims,
                               const std::vector<std::size_t>& index);
    static TensorElement zero(const std::vector<std::size_t>& dims);
    /// Single leg holding the given vector.
    static TensorElement from_vec(const Vec& v);

    std::size_t size() const { return data.size(); }
    std::size_t legs() const { return dims.size(); }

    bool operator==(const TensorElement& o) const = default;
};

TensorElement te_add(const TensorElement& a, const TensorElement& b);
TensorElement te_sub(const TensorElement& a, const TensorElement& b);
TensorElement te_scale(const Scalar& c, const TensorElement& a);
bool te_is_zero(const TensorElement& a);

/// Tensor product a (x) b (legs concatenated).
TensorElement te_tensor(const TensorElement& a, const TensorElement& b);

/// Applies a linear map to one leg.
TensorElement apply_map(const TensorElement& e, std::size_t leg, const LinearMap& f);

/// Splits leg into two via a comultiplication tensor (leg dim = d.d0()).
TensorElement split_leg(const TensorElement& e, std::size_t leg, const Tensor3& d);

/// Fuses legs (leg, leg+1) into one via a multiplication/action tensor
/// t[i][j][k]: first leg runs over i (dim d0), second over j (dim d1),
/// output leg has dim d2. Covers both algebra products and module actions.
TensorElement contract_pair(const TensorElement& e, std::size_t leg, const Tensor3& t);

/// Contracts one leg against a covector (e.g. the counit), removing it.
TensorElement contract_covector(const TensorElement& e, std::size_t leg, const Vec& phi);

/// Reorders legs: new leg i is old leg perm[i].
TensorElement permute_legs(const TensorElement& e, const std::vector<std::size_t>& perm);

/// Drops a leg whose dimension is 1 (scalar leg absorbed).
TensorElement drop_unit_leg(const TensorElement& e, std::size_t leg);

/// Merges adjacent legs (leg, leg+1) into one flat leg (pure reshape).
TensorElement fuse_legs(const TensorElement& e, std::size_t leg);

/// Splits a flat leg of dimension d1*d2 back into (d1, d2) (pure reshape).
TensorElement unfuse_leg(const TensorElement& e, std::size_t leg, std::size_t d1,
                         std::size_t d2);

/// Applies a linear map on the flattened pair of adjacent legs (leg, leg+1).
TensorElement apply_map2(const TensorElement& e, std::size_t leg, const LinearMap& f);

}  // namespace wmhh
