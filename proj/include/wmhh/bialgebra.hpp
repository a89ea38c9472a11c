#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wmhh/report.hpp"

namespace wmhh {

struct MissingAntipode : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DefinitionMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InvalidStructure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Which coalgebra-axiom variant the check suite applies. The xi-square twist
/// moves between the two conventions.
enum class Convention { MonoidalHom, Hom };

/// Structure-constant presentation of a (candidate) weak monoidal Hom-bialgebra
/// H = (H, xi, m, 1, Delta, eps) with optional antipode S.
struct PresentedBialgebra {
    std::size_t dim = 0;
    Tensor3 mul;     // mul(i,j,k): x_k-coefficient of x_i x_j
    Vec unit;        // coordinates of 1_H
    Tensor3 comul;   // comul(i,j,k): x_j (x) x_k coefficient of Delta(x_i)
    Vec counit;      // covector eps
    LinearMap xi;
    std::optional<LinearMap> antipode;
    Convention convention = Convention::MonoidalHom;

    // cached exact inverses (filled by finalize)
    LinearMap xi_inv;
    std::optional<LinearMap> antipode_inv;

    bool has_antipode() const { return antipode.has_value(); }

    /// xi^p for any integer p (negative powers use the cached inverse).
    LinearMap xi_pow(int p) const;

    Vec product(const Vec& a, const Vec& b) const { return contract_mul(mul, a, b); }
};

using BialgebraPtr = std::shared_ptr<const PresentedBialgebra>;

/// Validates shapes, dim > 0, invertibility of xi (and S when present);
/// fills the cached inverses. Throws InvalidStructure / SingularMap.
BialgebraPtr finalize(PresentedBialgebra h);

/// Source/target counital maps and their images.
struct CounitalMaps {
    LinearMap eps_s, eps_t, eps_s_hat, eps_t_hat;
    Subspace Hs, Ht, Hs_hat, Ht_hat;
};

struct MorphismCandidate {
    BialgebraPtr source;
    BialgebraPtr target;
    LinearMap map;
};

/// Hom-algebra axioms: Hom-associativity, multiplicativity of xi, twisted
/// unitality, xi(1) = 1.
std::vector<CheckReport> check_hom_algebra(const PresentedBialgebra& h);

/// Hom-coalgebra axioms, in the variant selected by h.convention.
std::vector<CheckReport> check_hom_coalgebra(const PresentedBialgebra& h);

/// Weak compatibility: Delta multiplicative, weak-counit and weak-unit laws.
std::vector<CheckReport> check_weak_compat(const PresentedBialgebra& h);

/// Computes eps_s, eps_t and hat variants from the simplified forms, asserts
/// agreement with the xi^2-based definitions (DefinitionMismatch otherwise).
CounitalMaps counital_maps(const PresentedBialgebra& h);

/// The Props 2.3-2.8 / Theorem 2.4 / Corollary 2.5 identity suite.
std::vector<CheckReport> check_counital_identities(const PresentedBialgebra& h,
                                                  const CounitalMaps& cm);

/// Antipode axioms (Definition 2.11) plus, in the monoidal-Hom convention,
/// the Prop 2.12 identities. Throws MissingAntipode.
std::vector<CheckReport> check_antipode(const PresentedBialgebra& h);

/// Morphism laws of Definition 2.2 (unit/counit preservation, multiplicativity,
/// comultiplicativity, xi-intertwining). With check_s, also S-commutation.
std::vector<CheckReport> check_morphism(const MorphismCandidate& f, bool check_s = true);

/// True iff Delta(1) = 1 (x) 1 and eps is multiplicative on all basis pairs.
bool is_strict_monoidal_hom(const PresentedBialgebra& h);

/// Convenience: the full applicable suite for one structure.
std::vector<CheckReport> check_all(const PresentedBialgebra& h);

}  // namespace wmhh
