#pragma once

#include "wmhh/constructions.hpp"

namespace wmhh {

/// A pair (alpha, beta) of certified Hopf automorphisms of one host.
/// make_automorphism_pair verifies Definition 2.2 morphism laws plus
/// S- and xi-commutation and invertibility before construction.
struct AutomorphismPair {
    BialgebraPtr host;
    LinearMap alpha, beta;
    LinearMap alpha_inv, beta_inv;
};

AutomorphismPair make_automorphism_pair(const BialgebraPtr& host, const LinearMap& alpha,
                                        const LinearMap& beta);

/// Candidate weak (alpha,beta)-Yetter-Drinfeld Hom-module presented by
/// structure constants over the host's basis and its own carrier basis.
struct YDModule {
    BialgebraPtr host;
    AutomorphismPair component;  // (alpha, beta)
    std::size_t dim = 0;
    Tensor3 action;    // action(i, j, k): x_k-coefficient of h_i . m_j
    Tensor3 coaction;  // coaction(i, j, k): m_j (x) h_k coefficient of rho(m_i)
    LinearMap mu;
    LinearMap mu_inv;  // filled by finalize_module
};

YDModule finalize_module(YDModule m);

/// Module axioms, comodule axioms Eqs (1.7)(1.8), the compatibility
/// condition Eq (3.1), and the range condition Eq (3.2).
std::vector<CheckReport> check_yd(const YDModule& m);

/// Eqs (3.2) and (3.3) checked directly, plus a report asserting that the
/// (3.2)+(3.3)-based characterization of a weak YD module gives the same
/// verdict as the Eq (3.1)-based one on the same data (Prop 3.2 equivalence;
/// both characterizations include the module/comodule axioms).
std::vector<CheckReport> check_yd_equivalent_form(const YDModule& m);

struct Entwining {
    BialgebraPtr host;
    LinearMap psi;  // on the flattened tensor square H (x) H
};

/// psi(alpha,beta): a (x) c -> xi^2(a_21) (x) (beta(a_22) xi^{-2}(c)) alpha(S^{-1}(a_1)).
Entwining build_entwining(const BialgebraPtr& host, const AutomorphismPair& p);

/// Definition 3.3 axioms Eqs (3.4)-(3.7) plus the coassociativity
/// consequence Eq (3.8) of the host.
std::vector<CheckReport> check_entwining(const Entwining& e);

/// The entwined-module law for m over e, plus a report asserting that the
/// entwined-module characterization agrees with the Eq (3.1)-based one on
/// the same module (the category identification after Prop 3.4).
std::vector<CheckReport> check_entwined_module(const YDModule& m, const Entwining& e);

}  // namespace wmhh
