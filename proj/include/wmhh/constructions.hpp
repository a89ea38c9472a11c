#pragma once

#include "wmhh/bialgebra.hpp"

namespace wmhh {

struct UnknownFixture : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ConditionFailed : std::runtime_error {
    ConditionFailed(std::string msg, Vec lhs_, Vec rhs_)
        : std::runtime_error(std::move(msg)), lhs(std::move(lhs_)), rhs(std::move(rhs_)) {}
    Vec lhs, rhs;  // the two sides of the failed condition, flattened
};
struct NotAMorphism : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Built-in fixtures addressable by name:
///   example-2.10     10-dimensional, parameter lambda != 0; xi_variant selects
///                    the shipped diagonal twist or the "printed" off-diagonal
///                    matrix (which fails unitality at x_8 -- kept for tests)
///   h2-remark        2-dimensional weak bialgebra on basis {I, E}
///   groupoid-pair-n  pair-groupoid algebra on n objects (dim n^2), with
///                    antipode E_ij -> E_ji and xi = id
///   trivial-1d       the ground field
struct FixtureId {
    std::string name;
    Scalar lambda = 2;                 // example-2.10 only; must be nonzero
    std::size_t n = 2;                 // groupoid-pair-n only; must be >= 1
    std::string xi_variant = "diagonal";  // example-2.10: diagonal | printed
};

/// Parses "example-2.10", "h2-remark", "trivial-1d", "groupoid-pair-<n>".
FixtureId parse_fixture_name(const std::string& name);

BialgebraPtr build_fixture(const FixtureId& id);

/// Dual-basis presentation: mul* / comul* transpose comul / mul,
/// unit* = counit, counit* = unit, xi* = (xi^{-1})^T, S* = S^T.
BialgebraPtr dualize(const PresentedBialgebra& h);

/// Replaces comul by Delta o xi^2 and flags the result as Hom-convention.
BialgebraPtr xi_square_twist(const PresentedBialgebra& h);

/// Replaces comul by Delta o xi^{-2} and flags the result as monoidal-Hom.
BialgebraPtr xi_square_untwist(const PresentedBialgebra& b);

/// Twist of a weak bialgebra (xi = id) by a unit/counit-preserving bialgebra
/// endomorphism a: new structure (H, a, a o mul, 1, Delta o a, eps), valid
/// exactly when a(1_1) (x) 1_2 = Delta(1). Throws ConditionFailed with both
/// sides as witness when the condition fails, NotAMorphism when a is not a
/// morphism or b is not a weak bialgebra with identity twist.
BialgebraPtr alpha_twist(const BialgebraPtr& b, const LinearMap& a);

/// Object-swap automorphism of groupoid-pair-n induced by the transposition
/// of objects 1 and 2 (identity for n = 1).
LinearMap groupoid_swap(std::size_t n);

}  // namespace wmhh
