#include "wmhh/yd.hpp"

namespace wmhh {

AutomorphismPair make_automorphism_pair(const BialgebraPtr& host, const LinearMap& alpha,
                                        const LinearMap& beta) {
    for (const LinearMap* f : {&alpha, &beta}) {
        auto reps = check_morphism({host, host, *f}, /*check_s=*/true);
        for (const auto& r : reps)
            if (!r.passed())
                throw NotAMorphism("automorphism certification failed: " + r.identity_id);
        if (!is_invertible(*f)) throw NotAMorphism("automorphism candidate is singular");
    }
    return AutomorphismPair{host, alpha, beta, invert(alpha), invert(beta)};
}

YDModule finalize_module(YDModule m) {
    const std::size_t n = m.host->dim, d = m.dim;
    if (d == 0) throw InvalidStructure("module dim must be positive");
    if (m.action.d0() != n || m.action.d1() != d || m.action.d2() != d)
        throw InvalidStructure("action: shape mismatch");
    if (m.coaction.d0() != d || m.coaction.d1() != d || m.coaction.d2() != n)
        throw InvalidStructure("coaction: shape mismatch");
    if (m.mu.rows() != d || m.mu.cols() != d)
        throw InvalidStructure("mu: shape mismatch");
    m.mu_inv = invert(m.mu);
    return m;
}

namespace {

/// Projector m (x) h -> 1_1 . m (x) beta(1_2) h onto the truncated space
/// M (x)_{t_beta} H of Eq (3.2).
LinearMap range_projector(const YDModule& m) {
    const PresentedBialgebra& h = *m.host;
    const std::size_t n = h.dim, d = m.dim;
    TensorElement delta1 = split_leg(TensorElement::from_vec(h.unit), 0, h.comul);
    LinearMap p(d * n, d * n);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto e = TensorElement::basis({d, n}, {i, j});
            auto t = te_tensor(delta1, e);           // a b m h
            t = apply_map(t, 1, m.component.beta);   // a beta(b) m h
            t = permute_legs(t, {0, 2, 1, 3});       // a m beta(b) h
            t = contract_pair(t, 0, m.action);       // a.m beta(b) h
            t = contract_pair(t, 1, h.mul);          // a.m beta(b)h
            for (std::size_t k = 0; k < d * n; ++k) p.at(k, i * n + j) = t.data[k];
        }
    return p;
}

CheckReport eq31_check(const YDModule& m) {
    const PresentedBialgebra& h = *m.host;
    const std::size_t n = h.dim, d = m.dim;
    LinearMap aSinv = m.component.alpha.compose(*h.antipode_inv);
    return sweep_check(
        "Eq(3.1) YD compatibility", {n, d},
        [&](const TensorElement& e) {
            return split_leg(contract_pair(e, 0, m.action), 0, m.coaction);
        },
        [&](const TensorElement& e) {
            auto t = split_leg(e, 0, h.comul);       // h1 h2 m
            t = split_leg(t, 1, h.comul);            // h1 h21 h22 m
            t = split_leg(t, 3, m.coaction);         // h1 h21 h22 m0 m1
            t = apply_map(t, 1, h.xi);
            t = apply_map(t, 2, m.component.beta);
            t = apply_map(t, 4, h.xi_inv);
            t = apply_map(t, 0, aSinv);
            t = permute_legs(t, {1, 3, 2, 4, 0});    // h21 m0 h22 m1 h1
            t = contract_pair(t, 0, m.action);       // h21.m0 h22 m1 h1
            t = contract_pair(t, 1, h.mul);          // . (h22 m1) h1
            return contract_pair(t, 1, h.mul);       // . ((h22 m1) h1)
        });
}

CheckReport eq32_check(const YDModule& m) {
    const std::size_t n = m.host->dim, d = m.dim;
    Subspace range = image_subspace(range_projector(m));
    CheckReport rep;
    rep.identity_id = "Eq(3.2) coaction range";
    for (std::size_t i = 0; i < d; ++i) {
        auto rho = split_leg(TensorElement::basis({d}, {i}), 0, m.coaction);
        if (!range.contains(rho.data)) {
            rep.status = CheckStatus::Fail;
            Witness w;
            w.tuple = {i};
            w.out_dims = {d, n};
            w.lhs = rho.data;
            w.rhs = zero_vec(d * n);  // nearest statement: membership failed
            rep.witness = w;
            break;
        }
    }
    return rep;
}

CheckReport eq33_check(const YDModule& m) {
    const PresentedBialgebra& h = *m.host;
    const std::size_t n = h.dim, d = m.dim;
    return sweep_check(
        "Eq(3.3) YD equivalent form", {n, d},
        [&](const TensorElement& e) {
            auto t = split_leg(e, 0, h.comul);     // h1 h2 m
            t = split_leg(t, 2, m.coaction);       // h1 h2 m0 m1
            t = apply_map(t, 1, m.component.beta);
            t = permute_legs(t, {0, 2, 1, 3});     // h1 m0 b(h2) m1
            t = contract_pair(t, 0, m.action);     // h1.m0 b(h2) m1
            return contract_pair(t, 1, h.mul);
        },
        [&](const TensorElement& e) {
            auto t = apply_map(e, 1, m.mu_inv);    // h mu^-1(m)
            t = split_leg(t, 0, h.comul);          // h1 h2 .
            t = permute_legs(t, {1, 2, 0});        // h2 . h1
            t = contract_pair(t, 0, m.action);     // w h1
            t = split_leg(t, 0, m.coaction);       // w0 w1 h1
            t = apply_map(t, 0, m.mu);
            t = apply_map(t, 2, m.component.alpha);
            return contract_pair(t, 1, h.mul);     // mu(w0) (x) w1 a(h1)
        });
}

/// The Hom-module and Hom-comodule axioms shared by every characterization.
std::vector<CheckReport> axiom_checks(const YDModule& m) {
    const PresentedBialgebra& h = *m.host;
    const std::size_t n = h.dim, d = m.dim;
    std::vector<CheckReport> out;

    out.push_back(sweep_check(
        "Hom-module associativity", {n, n, d},
        [&](const TensorElement& e) {
            auto t = apply_map(e, 0, h.xi);
            t = contract_pair(t, 1, m.action);
            return contract_pair(t, 0, m.action);
        },
        [&](const TensorElement& e) {
            auto t = apply_map(e, 2, m.mu);
            t = contract_pair(t, 0, h.mul);
            return contract_pair(t, 0, m.action);
        }));
    out.push_back(sweep_check(
        "Hom-module mu-compat", {n, d},
        [&](const TensorElement& e) { return apply_map(contract_pair(e, 0, m.action), 0, m.mu); },
        [&](const TensorElement& e) {
            auto t = apply_map(apply_map(e, 0, h.xi), 1, m.mu);
            return contract_pair(t, 0, m.action);
        }));
    {
        auto unit_te = TensorElement::from_vec(h.unit);
        out.push_back(sweep_check(
            "Hom-module unit", {d},
            [&](const TensorElement& e) {
                return contract_pair(te_tensor(unit_te, e), 0, m.action);
            },
            [&](const TensorElement& e) { return apply_map(e, 0, m.mu); }));
    }

    out.push_back(sweep_check(
        "Eq(1.7) comodule coassociativity", {d},
        [&](const TensorElement& e) {
            auto t = split_leg(e, 0, m.coaction);  // m0 m1
            t = apply_map(t, 0, m.mu_inv);
            return split_leg(t, 1, h.comul);       // mu^-1(m0) m11 m12
        },
        [&](const TensorElement& e) {
            auto t = split_leg(e, 0, m.coaction);
            t = split_leg(t, 0, m.coaction);       // m00 m01 m1
            return apply_map(t, 2, h.xi_inv);
        }));
    out.push_back(sweep_check(
        "Eq(1.8) comodule mu-compat", {d},
        [&](const TensorElement& e) { return split_leg(apply_map(e, 0, m.mu), 0, m.coaction); },
        [&](const TensorElement& e) {
            auto t = split_leg(e, 0, m.coaction);
            return apply_map(apply_map(t, 0, m.mu), 1, h.xi);
        }));
    out.push_back(sweep_check(
        "Eq(1.8) comodule counit", {d},
        [&](const TensorElement& e) {
            return contract_covector(split_leg(e, 0, m.coaction), 1, h.counit);
        },
        [&](const TensorElement& e) { return apply_map(e, 0, m.mu_inv); }));
    return out;
}

bool axioms_hold(const YDModule& m) { return all_passed(axiom_checks(m)); }

}  // namespace

std::vector<CheckReport> check_yd(const YDModule& m) {
    if (!m.host->antipode) throw MissingAntipode("check_yd: host has no antipode");
    std::vector<CheckReport> out = axiom_checks(m);
    out.push_back(eq31_check(m));
    out.push_back(eq32_check(m));
    return out;
}

std::vector<CheckReport> check_yd_equivalent_form(const YDModule& m) {
    std::vector<CheckReport> out;
    out.push_back(eq32_check(m));
    out.push_back(eq33_check(m));
    // Prop 3.2 equates the two characterizations of a weak YD module; the
    // module/comodule axioms are part of both sides of the equivalence.
    bool ax = axioms_hold(m);
    bool via_33 = ax && out[0].passed() && out[1].passed();
    bool via_31 = ax && out[0].passed() && eq31_check(m).passed();
    out.push_back(condition_check("Prop3.2 verdict agreement with Eq(3.1)", via_33 == via_31));
    return out;
}

Entwining build_entwining(const BialgebraPtr& host, const AutomorphismPair& p) {
    const PresentedBialgebra& h = *host;
    if (!h.antipode) throw MissingAntipode("build_entwining: host has no antipode");
    const std::size_t n = h.dim;
    LinearMap aSinv = p.alpha.compose(*h.antipode_inv);
    LinearMap xi2 = h.xi_pow(2), xim2 = h.xi_pow(-2);
    LinearMap psi(n * n, n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t c = 0; c < n; ++c) {
            auto e = TensorElement::basis({n, n}, {a, c});
            auto t = split_leg(e, 0, h.comul);   // a1 a2 c
            t = split_leg(t, 1, h.comul);        // a1 a21 a22 c
            t = apply_map(t, 1, xi2);
            t = apply_map(t, 2, p.beta);
            t = apply_map(t, 3, xim2);
            t = apply_map(t, 0, aSinv);
            t = permute_legs(t, {1, 2, 3, 0});   // a21 a22 c a1
            t = contract_pair(t, 1, h.mul);      // a21 (a22 c) a1
            t = contract_pair(t, 1, h.mul);      // a21 ((a22 c) a1)
            for (std::size_t k = 0; k < n * n; ++k) psi.at(k, a * n + c) = t.data[k];
        }
    return Entwining{host, psi};
}

std::vector<CheckReport> check_entwining(const Entwining& ent) {
    const PresentedBialgebra& h = *ent.host;
    const std::size_t n = h.dim;
    const LinearMap& psi = ent.psi;
    const LinearMap& gam = h.xi;          // C = H with gamma = xi
    const LinearMap& gam_inv = h.xi_inv;
    auto unit_te = TensorElement::from_vec(h.unit);
    std::vector<CheckReport> out;

    out.push_back(sweep_check(
        "Eq(3.4)", {n, n, n},
        [&](const TensorElement& e) {
            return apply_map2(contract_pair(e, 0, h.mul), 0, psi);
        },
        [&](const TensorElement& e) {
            auto t = apply_map(e, 2, gam_inv);   // h g g^-1(c)
            t = apply_map2(t, 1, psi);           // h g' c'
            t = permute_legs(t, {1, 0, 2});      // g' h c'
            t = apply_map2(t, 1, psi);           // g' h' c''
            t = permute_legs(t, {1, 0, 2});      // h' g' c''
            t = contract_pair(t, 0, h.mul);      // h'g' c''
            return apply_map(t, 1, gam);
        }));

    out.push_back(sweep_check(
        "Eq(3.5)", {n},
        [&](const TensorElement& e) { return apply_map2(te_tensor(unit_te, e), 0, psi); },
        [&](const TensorElement& e) {
            auto t = split_leg(e, 0, h.comul);            // c1 c2
            t = te_tensor(unit_te, t);                    // 1 c1 c2
            t = apply_map2(t, 0, psi);                    // 1' c1' c2
            t = contract_covector(t, 1, h.counit);        // 1' c2
            return apply_map(t, 1, gam);
        }));

    out.push_back(sweep_check(
        "Eq(3.6)", {n, n},
        [&](const TensorElement& e) {
            return split_leg(apply_map2(e, 0, psi), 1, h.comul);
        },
        [&](const TensorElement& e) {
            auto t = apply_map(e, 0, h.xi_inv);  // xi^-1(h) c
            t = split_leg(t, 1, h.comul);        // h c1 c2
            t = permute_legs(t, {0, 2, 1});      // h c2 c1
            t = apply_map2(t, 0, psi);           // h' c2' c1
            t = permute_legs(t, {0, 2, 1});      // h' c1 c2'
            t = apply_map2(t, 0, psi);           // h'' c1' c2'
            return apply_map(t, 0, h.xi);
        }));

    out.push_back(sweep_check(
        "Eq(3.7)", {n, n},
        [&](const TensorElement& e) {
            return contract_covector(apply_map2(e, 0, psi), 1, h.counit);
        },
        [&](const TensorElement& e) {
            auto t = te_tensor(unit_te, apply_map(e, 1, gam_inv));  // 1 h c
            t = permute_legs(t, {0, 2, 1});        // 1 c h
            t = apply_map2(t, 0, psi);             // 1' c' h
            t = contract_covector(t, 1, h.counit); // 1' h
            t = permute_legs(t, {1, 0});           // h 1'
            return contract_pair(t, 0, h.mul);     // h (psi-1)
        }));

    out.push_back(sweep_check(
        "Eq(3.8)", {n},
        [&](const TensorElement& e) {
            auto t = split_leg(e, 0, h.comul);   // a1 a2
            t = split_leg(t, 1, h.comul);        // a1 a21 a22
            t = split_leg(t, 1, h.comul);        // a1 a211 a212 a22
            return split_leg(t, 2, h.comul);     // a1 a211 a2121 a2122 a22
        },
        [&](const TensorElement& e) {
            auto t = split_leg(e, 0, h.comul);   // a1 a2
            t = split_leg(t, 0, h.comul);        // a11 a12 a2
            t = split_leg(t, 2, h.comul);        // a11 a12 a21 a22
            t = split_leg(t, 3, h.comul);        // a11 a12 a21 a221 a222
            t = apply_map(t, 0, h.xi);
            t = apply_map(t, 1, h.xi_inv);
            t = apply_map(t, 2, h.xi_pow(-2));
            t = apply_map(t, 3, h.xi_inv);
            return apply_map(t, 4, h.xi);
        }));
    return out;
}

std::vector<CheckReport> check_entwined_module(const YDModule& m, const Entwining& ent) {
    const PresentedBialgebra& h = *m.host;
    const std::size_t n = h.dim, d = m.dim;
    std::vector<CheckReport> out;
    out.push_back(sweep_check(
        "entwined-module law", {n, d},
        [&](const TensorElement& e) {
            return split_leg(contract_pair(e, 0, m.action), 0, m.coaction);
        },
        [&](const TensorElement& e) {
            auto t = apply_map(e, 0, h.xi_inv);   // xi^-1(h) m
            t = split_leg(t, 1, m.coaction);      // h m0 m1
            t = apply_map(t, 2, h.xi);            // h m0 gamma(m1)
            t = permute_legs(t, {0, 2, 1});       // h m1 m0
            t = apply_map2(t, 0, ent.psi);        // h' m1' m0
            t = permute_legs(t, {0, 2, 1});       // h' m0 m1'
            return contract_pair(t, 0, m.action); // h'.m0 (x) m1'
        }));
    // The Remark identifies the entwined-module and weak YD categories; as
    // with Prop 3.2, the identification is between the full characterizations.
    bool ax = axioms_hold(m);
    bool rng = eq32_check(m).passed();
    bool via_ent = ax && rng && out[0].passed();
    bool via_31 = ax && rng && eq31_check(m).passed();
    out.push_back(condition_check("Remark after Prop3.4 verdict agreement with Eq(3.1)",
                                  via_ent == via_31));
    return out;
}

}  // namespace wmhh
