#include "wmhh/bialgebra.hpp"

namespace wmhh {

namespace {

CheckReport vec_check(const std::string& id, const Vec& lhs, const Vec& rhs) {
    CheckReport rep;
    rep.identity_id = id;
    if (lhs != rhs) {
        rep.status = CheckStatus::Fail;
        Witness w;
        w.out_dims = {lhs.size()};
        w.lhs = lhs;
        w.rhs = rhs;
        rep.witness = w;
    }
    return rep;
}

}  // namespace

LinearMap PresentedBialgebra::xi_pow(int p) const {
    LinearMap r = LinearMap::identity(dim);
    const LinearMap& base = p >= 0 ? xi : xi_inv;
    for (int i = 0; i < (p >= 0 ? p : -p); ++i) r = base.compose(r);
    return r;
}

BialgebraPtr finalize(PresentedBialgebra h) {
    if (h.dim == 0) throw InvalidStructure("dim must be positive");
    auto want3 = [&](const Tensor3& t, const char* name) {
        if (t.d0() != h.dim || t.d1() != h.dim || t.d2() != h.dim)
            throw InvalidStructure(std::string(name) + ": shape mismatch");
    };
    want3(h.mul, "mul");
    want3(h.comul, "comul");
    if (h.unit.size() != h.dim) throw InvalidStructure("unit: shape mismatch");
    if (h.counit.size() != h.dim) throw InvalidStructure("counit: shape mismatch");
    if (h.xi.rows() != h.dim || h.xi.cols() != h.dim)
        throw InvalidStructure("xi: shape mismatch");
    h.xi_inv = invert(h.xi);  // throws SingularMap for non-bijective twists
    if (h.antipode) {
        if (h.antipode->rows() != h.dim || h.antipode->cols() != h.dim)
            throw InvalidStructure("antipode: shape mismatch");
        h.antipode_inv = invert(*h.antipode);
    }
    return std::make_shared<const PresentedBialgebra>(std::move(h));
}

std::vector<CheckReport> check_hom_algebra(const PresentedBialgebra& h) {
    const std::size_t n = h.dim;
    const auto& M = h.mul;
    std::vector<CheckReport> out;

    out.push_back(sweep_check(
        "Eq(1.1) Hom-associativity", {n, n, n},
        [&](const TensorElement& e) {
            auto t = apply_map(e, 0, h.xi);
            t = contract_pair(t, 1, M);
            return contract_pair(t, 0, M);
        },
        [&](const TensorElement& e) {
            auto t = apply_map(e, 2, h.xi);
            t = contract_pair(t, 0, M);
            return contract_pair(t, 0, M);
        }));

    out.push_back(sweep_check(
        "Eq(1.1) xi-multiplicativity", {n, n},
        [&](const TensorElement& e) { return apply_map(contract_pair(e, 0, M), 0, h.xi); },
        [&](const TensorElement& e) {
            auto t = apply_map(apply_map(e, 0, h.xi), 1, h.xi);
            return contract_pair(t, 0, M);
        }));

    auto unit_te = TensorElement::from_vec(h.unit);
    out.push_back(sweep_check(
        "Eq(1.2) unitality-left", {n},
        [&](const TensorElement& e) { return contract_pair(te_tensor(unit_te, e), 0, M); },
        [&](const TensorElement& e) { return apply_map(e, 0, h.xi); }));
    out.push_back(sweep_check(
        "Eq(1.2) unitality-right", {n},
        [&](const TensorElement& e) { return contract_pair(te_tensor(e, unit_te), 0, M); },
        [&](const TensorElement& e) { return apply_map(e, 0, h.xi); }));

    out.push_back(vec_check("Eq(1.3) xi-fixes-unit", h.xi.apply(h.unit), h.unit));
    return out;
}

std::vector<CheckReport> check_hom_coalgebra(const PresentedBialgebra& h) {
    const std::size_t n = h.dim;
    const auto& D = h.comul;
    // In the monoidal-Hom convention the coassociativity/counit twist is
    // xi^{-1}; in the Hom convention it is xi (Prop 2.13's target axioms).
    const LinearMap& tw = h.convention == Convention::MonoidalHom ? h.xi_inv : h.xi;
    std::vector<CheckReport> out;

    out.push_back(sweep_check(
        "Eq(1.4) Hom-coassociativity", {n},
        [&](const TensorElement& e) {
            auto t = split_leg(e, 0, D);
            t = apply_map(t, 0, tw);
            return split_leg(t, 1, D);
        },
        [&](const TensorElement& e) {
            auto t = split_leg(e, 0, D);
            t = split_leg(t, 0, D);
            return apply_map(t, 2, tw);
        }));

    out.push_back(sweep_check(
        "Eq(1.5) xi-comultiplicativity", {n},
        [&](const TensorElement& e) { return split_leg(apply_map(e, 0, h.xi), 0, D); },
        [&](const TensorElement& e) {
            auto t = split_leg(e, 0, D);
            return apply_map(apply_map(t, 0, h.xi), 1, h.xi);
        }));

    out.push_back(sweep_check(
        "counit-law-left", {n},
        [&](const TensorElement& e) {
            return contract_covector(split_leg(e, 0, D), 0, h.counit);
        },
        [&](const TensorElement& e) { return apply_map(e, 0, tw); }));
    out.push_back(sweep_check(
        "counit-law-right", {n},
        [&](const TensorElement& e) {
            return contract_covector(split_leg(e, 0, D), 1, h.counit);
        },
        [&](const TensorElement& e) { return apply_map(e, 0, tw); }));

    out.push_back(sweep_check(
        "Eq(1.6) eps-xi", {n},
        [&](const TensorElement& e) {
            return contract_covector(apply_map(e, 0, h.xi), 0, h.counit);
        },
        [&](const TensorElement& e) { return contract_covector(e, 0, h.counit); }));
    return out;
}

std::vector<CheckReport> check_weak_compat(const PresentedBialgebra& h) {
    const std::size_t n = h.dim;
    const auto& M = h.mul;
    const auto& D = h.comul;
    std::vector<CheckReport> out;

    out.push_back(sweep_check(
        "Def2.1(1) Delta-multiplicative", {n, n},
        [&](const TensorElement& e) { return split_leg(contract_pair(e, 0, M), 0, D); },
        [&](const TensorElement& e) {
            auto t = split_leg(e, 0, D);     // a1 a2 b
            t = split_leg(t, 2, D);          // a1 a2 b1 b2
            t = permute_legs(t, {0, 2, 1, 3});
            t = contract_pair(t, 0, M);      // a1b1 a2 b2
            return contract_pair(t, 1, M);   // a1b1 a2b2
        }));

    out.push_back(sweep_check(
        "Def2.1(2)-left weak-counit", {n, n, n},
        [&](const TensorElement& e) {
            auto t = contract_pair(e, 0, M);
            t = contract_pair(t, 0, M);
            return contract_covector(t, 0, h.counit);
        },
        [&](const TensorElement& e) {
            auto t = split_leg(e, 1, D);  // a b1 b2 c
            t = contract_pair(t, 0, M);   // ab1 b2 c
            t = contract_pair(t, 1, M);   // ab1 b2c
            t = contract_covector(t, 0, h.counit);
            return contract_covector(t, 0, h.counit);
        }));

    out.push_back(sweep_check(
        "Def2.1(2)-right weak-counit", {n, n, n},
        [&](const TensorElement& e) {
            auto t = contract_pair(e, 1, M);
            t = contract_pair(t, 0, M);
            return contract_covector(t, 0, h.counit);
        },
        [&](const TensorElement& e) {
            auto t = split_leg(e, 1, D);          // a b1 b2 c
            t = permute_legs(t, {0, 2, 1, 3});    // a b2 b1 c
            t = contract_pair(t, 0, M);           // ab2 b1 c
            t = contract_pair(t, 1, M);           // ab2 b1c
            t = contract_covector(t, 0, h.counit);
            return contract_covector(t, 0, h.counit);
        }));

    TensorElement delta1 = split_leg(TensorElement::from_vec(h.unit), 0, h.comul);
    {
        auto lhs1 = split_leg(delta1, 0, D);                   // 1_11 1_12 1_2
        auto rhs1 = te_tensor(delta1, delta1);                 // a b c d
        rhs1 = contract_pair(rhs1, 1, M);                      // a bc d
        out.push_back(vec_check("Def2.1(3)-left weak-unit", lhs1.data, rhs1.data));

        auto lhs2 = split_leg(delta1, 1, D);                   // 1_1 1_21 1_22
        auto rhs2 = te_tensor(delta1, delta1);                 // a b c d
        rhs2 = permute_legs(rhs2, {0, 2, 1, 3});               // a c b d
        rhs2 = contract_pair(rhs2, 1, M);                      // a cb d
        out.push_back(vec_check("Def2.1(3)-right weak-unit", lhs2.data, rhs2.data));
    }
    return out;
}

namespace {

struct CounitalMats {
    LinearMap es, et, esh, eth;
};

// Simplified forms (2.9)(2.10): eps_s(h)=1_1 eps(h 1_2), eps_t(h)=eps(1_1 h)1_2,
// eps_s_hat(h)=1_1 eps(1_2 h), eps_t_hat(h)=eps(h 1_1)1_2.
CounitalMats counital_simplified(const PresentedBialgebra& h) {
    const std::size_t n = h.dim;
    TensorElement delta1 = split_leg(TensorElement::from_vec(h.unit), 0, h.comul);
    CounitalMats r{LinearMap(n, n), LinearMap(n, n), LinearMap(n, n), LinearMap(n, n)};
    for (std::size_t i = 0; i < n; ++i) {
        TensorElement e = te_tensor(delta1, TensorElement::basis({n}, {i}));  // a b h
        // eps_s
        {
            auto t = permute_legs(e, {0, 2, 1});  // a h b
            t = contract_pair(t, 1, h.mul);       // a hb
            t = contract_covector(t, 1, h.counit);
            for (std::size_t k = 0; k < n; ++k) r.es.at(k, i) = t.data[k];
        }
        // eps_t
        {
            auto t = permute_legs(e, {0, 2, 1});    // a h b
            t = contract_pair(t, 0, h.mul);         // ah b
            t = contract_covector(t, 0, h.counit);  // leaves b
            for (std::size_t k = 0; k < n; ++k) r.et.at(k, i) = t.data[k];
        }
        // eps_s_hat: 1_1 eps(1_2 h)
        {
            auto t = contract_pair(e, 1, h.mul);  // a bh
            t = contract_covector(t, 1, h.counit);
            for (std::size_t k = 0; k < n; ++k) r.esh.at(k, i) = t.data[k];
        }
        // eps_t_hat: eps(h 1_1) 1_2
        {
            auto t = permute_legs(e, {2, 0, 1});  // h a b
            t = contract_pair(t, 0, h.mul);       // ha b
            t = contract_covector(t, 0, h.counit);
            for (std::size_t k = 0; k < n; ++k) r.eth.at(k, i) = t.data[k];
        }
    }
    return r;
}

// xi^2-based definitions from Section 2.
CounitalMats counital_xi_form(const PresentedBialgebra& h) {
    const std::size_t n = h.dim;
    LinearMap xi2 = h.xi.compose(h.xi);
    LinearMap xim2 = h.xi_inv.compose(h.xi_inv);
    TensorElement delta1 = split_leg(TensorElement::from_vec(h.unit), 0, h.comul);
    CounitalMats r{LinearMap(n, n), LinearMap(n, n), LinearMap(n, n), LinearMap(n, n)};
    for (std::size_t i = 0; i < n; ++i) {
        TensorElement e = te_tensor(delta1, TensorElement::basis({n}, {i}));  // a b h
        e = apply_map(e, 2, xim2);
        // eps_s(h) = xi^2(1_1) eps(xi^{-2}(h) 1_2)
        {
            auto t = apply_map(e, 0, xi2);
            t = permute_legs(t, {0, 2, 1});
            t = contract_pair(t, 1, h.mul);
            t = contract_covector(t, 1, h.counit);
            for (std::size_t k = 0; k < n; ++k) r.es.at(k, i) = t.data[k];
        }
        // eps_t(h) = eps(1_1 xi^{-2}(h)) xi^2(1_2)
        {
            auto t = apply_map(e, 1, xi2);
            t = permute_legs(t, {0, 2, 1});
            t = contract_pair(t, 0, h.mul);
            t = contract_covector(t, 0, h.counit);
            for (std::size_t k = 0; k < n; ++k) r.et.at(k, i) = t.data[k];
        }
        // eps_s_hat(h) = xi^2(1_1) eps(1_2 xi^{-2}(h))
        {
            auto t = apply_map(e, 0, xi2);
            t = contract_pair(t, 1, h.mul);
            t = contract_covector(t, 1, h.counit);
            for (std::size_t k = 0; k < n; ++k) r.esh.at(k, i) = t.data[k];
        }
        // eps_t_hat(h) = eps(xi^{-2}(h) 1_1) xi^2(1_2)
        {
            auto t = apply_map(e, 1, xi2);
            t = permute_legs(t, {2, 0, 1});
            t = contract_pair(t, 0, h.mul);
            t = contract_covector(t, 0, h.counit);
            for (std::size_t k = 0; k < n; ++k) r.eth.at(k, i) = t.data[k];
        }
    }
    return r;
}

}  // namespace

CounitalMaps counital_maps(const PresentedBialgebra& h) {
    CounitalMats simp = counital_simplified(h);
    CounitalMats xif = counital_xi_form(h);
    if (!(simp.es == xif.es && simp.et == xif.et && simp.esh == xif.esh &&
          simp.eth == xif.eth))
        throw DefinitionMismatch(
            "counital maps: xi^2-based and simplified definitions disagree "
            "(input is not a valid weak monoidal Hom-bialgebra)");
    CounitalMaps cm;
    cm.eps_s = simp.es;
    cm.eps_t = simp.et;
    cm.eps_s_hat = simp.esh;
    cm.eps_t_hat = simp.eth;
    cm.Hs = image_subspace(cm.eps_s);
    cm.Ht = image_subspace(cm.eps_t);
    cm.Hs_hat = image_subspace(cm.eps_s_hat);
    cm.Ht_hat = image_subspace(cm.eps_t_hat);
    return cm;
}

std::vector<CheckReport> check_counital_identities(const PresentedBialgebra& h,
                                                  const CounitalMaps& cm) {
    const std::size_t n = h.dim;
    const auto& M = h.mul;
    const auto& D = h.comul;
    LinearMap xi3 = h.xi_pow(3);
    LinearMap xim2 = h.xi_pow(-2);
    TensorElement delta1 = split_leg(TensorElement::from_vec(h.unit), 0, D);
    std::vector<CheckReport> out;

    // Prop 2.3
    out.push_back(sweep_check(
        "Prop2.3(2.1)", {n},
        [&](const TensorElement& e) { return apply_map(split_leg(e, 0, D), 0, cm.eps_s); },
        [&](const TensorElement& e) {
            auto t = te_tensor(delta1, e);        // a b h
            t = apply_map(t, 0, xi3);
            t = apply_map(t, 2, xim2);
            t = permute_legs(t, {0, 2, 1});       // a h b
            return contract_pair(t, 1, M);        // a hb
        }));
    out.push_back(sweep_check(
        "Prop2.3(2.2)", {n},
        [&](const TensorElement& e) {
            return apply_map(split_leg(e, 0, D), 0, cm.eps_s_hat);
        },
        [&](const TensorElement& e) {
            auto t = te_tensor(delta1, e);  // a b h
            t = apply_map(t, 0, h.xi);
            t = apply_map(t, 2, xim2);
            return contract_pair(t, 1, M);  // a bh
        }));

    // Theorem 2.4
    out.push_back(vec_check("Thm2.4(i)/(2.3)", split_leg(delta1, 0, D).data,
                            split_leg(delta1, 1, D).data));
    out.push_back(sweep_check(
        "Thm2.4(ii)/(2.4)", {n, n, n},
        [&](const TensorElement& e) {
            auto t = contract_pair(e, 0, M);
            t = contract_pair(t, 0, M);
            return contract_covector(t, 0, h.counit);
        },
        [&](const TensorElement& e) {
            auto t = contract_pair(e, 1, M);
            t = contract_pair(t, 0, M);
            return contract_covector(t, 0, h.counit);
        }));

    // (2.5)-(2.8)
    out.push_back(vec_check("Eq(2.5)", delta1.data, apply_map(delta1, 0, h.xi).data));
    out.push_back(vec_check("Eq(2.6)", delta1.data, apply_map(delta1, 1, h.xi).data));
    out.push_back(sweep_check(
        "Eq(2.7)", {n, n},
        [&](const TensorElement& e) {
            return contract_covector(contract_pair(apply_map(e, 0, h.xi), 0, M), 0,
                                     h.counit);
        },
        [&](const TensorElement& e) {
            return contract_covector(contract_pair(e, 0, M), 0, h.counit);
        }));
    out.push_back(sweep_check(
        "Eq(2.8)", {n, n},
        [&](const TensorElement& e) {
            return contract_covector(contract_pair(apply_map(e, 1, h.xi), 0, M), 0,
                                     h.counit);
        },
        [&](const TensorElement& e) {
            return contract_covector(contract_pair(e, 0, M), 0, h.counit);
        }));

    // Corollary 2.5 (i): invariance under xi on either factor, for all four maps
    struct Named {
        const char* name;
        const LinearMap* map;
    };
    const Named maps[] = {{"eps_s", &cm.eps_s},
                          {"eps_t", &cm.eps_t},
                          {"eps_s_hat", &cm.eps_s_hat},
                          {"eps_t_hat", &cm.eps_t_hat}};
    for (const auto& nm : maps) {
        const LinearMap& F = *nm.map;
        out.push_back(sweep_check(
            std::string("Cor2.5(i) ") + nm.name + "(xi(a)b)", {n, n},
            [&](const TensorElement& e) { return apply_map(contract_pair(e, 0, M), 0, F); },
            [&](const TensorElement& e) {
                return apply_map(contract_pair(apply_map(e, 0, h.xi), 0, M), 0, F);
            }));
        out.push_back(sweep_check(
            std::string("Cor2.5(i) ") + nm.name + "(a xi(b))", {n, n},
            [&](const TensorElement& e) { return apply_map(contract_pair(e, 0, M), 0, F); },
            [&](const TensorElement& e) {
                return apply_map(contract_pair(apply_map(e, 1, h.xi), 0, M), 0, F);
            }));
        // (ii)/(iii): idempotence and xi-commutation as matrix equalities
        out.push_back(matrix_check(std::string("Cor2.5(ii) ") + nm.name + "-idempotent",
                                   F.compose(F), F));
        out.push_back(matrix_check(std::string("Cor2.5(ii) ") + nm.name + "-after-xi",
                                   F.compose(h.xi), F));
        out.push_back(matrix_check(std::string("Cor2.5(ii) xi-after-") + nm.name,
                                   h.xi.compose(F), F));
    }

    // Prop 2.6 (i): counit absorption
    auto eps_of_product = [&](const TensorElement& e) {
        return contract_covector(contract_pair(e, 0, M), 0, h.counit);
    };
    out.push_back(sweep_check(
        "Prop2.6(i) eps(eps_s(x)y)", {n, n},
        [&](const TensorElement& e) { return eps_of_product(e); },
        [&](const TensorElement& e) { return eps_of_product(apply_map(e, 0, cm.eps_s)); }));
    out.push_back(sweep_check(
        "Prop2.6(i) eps(x eps_t(y))", {n, n},
        [&](const TensorElement& e) { return eps_of_product(e); },
        [&](const TensorElement& e) { return eps_of_product(apply_map(e, 1, cm.eps_t)); }));
    out.push_back(sweep_check(
        "Prop2.6(i) eps(eps_t_hat(x)y)", {n, n},
        [&](const TensorElement& e) { return eps_of_product(e); },
        [&](const TensorElement& e) {
            return eps_of_product(apply_map(e, 0, cm.eps_t_hat));
        }));
    out.push_back(sweep_check(
        "Prop2.6(i) eps(x eps_s_hat(y))", {n, n},
        [&](const TensorElement& e) { return eps_of_product(e); },
        [&](const TensorElement& e) {
            return eps_of_product(apply_map(e, 1, cm.eps_s_hat));
        }));

    // Prop 2.6 (ii)
    out.push_back(sweep_check(
        "Prop2.6(ii) x1 (x) eps_t(x2)", {n},
        [&](const TensorElement& e) { return apply_map(split_leg(e, 0, D), 1, cm.eps_t); },
        [&](const TensorElement& e) {
            auto t = te_tensor(delta1, apply_map(e, 0, xim2));  // a b x
            t = permute_legs(t, {0, 2, 1});                     // a x b
            return contract_pair(t, 0, M);                      // ax (x) b
        }));
    out.push_back(sweep_check(
        "Prop2.6(ii) eps_s(x1) (x) x2", {n},
        [&](const TensorElement& e) { return apply_map(split_leg(e, 0, D), 0, cm.eps_s); },
        [&](const TensorElement& e) {
            auto t = te_tensor(delta1, apply_map(e, 0, xim2));  // a b x
            t = permute_legs(t, {0, 2, 1});                     // a x b
            return contract_pair(t, 1, M);                      // a xb
        }));
    out.push_back(sweep_check(
        "Prop2.6(ii) eps_s_hat(x1) (x) x2", {n},
        [&](const TensorElement& e) {
            return apply_map(split_leg(e, 0, D), 0, cm.eps_s_hat);
        },
        [&](const TensorElement& e) {
            auto t = te_tensor(delta1, apply_map(e, 0, xim2));  // a b x
            return contract_pair(t, 1, M);                      // a bx
        }));
    out.push_back(sweep_check(
        "Prop2.6(ii) x1 (x) eps_t_hat(x2)", {n},
        [&](const TensorElement& e) {
            return apply_map(split_leg(e, 0, D), 1, cm.eps_t_hat);
        },
        [&](const TensorElement& e) {
            auto t = te_tensor(delta1, apply_map(e, 0, xim2));  // a b x
            t = permute_legs(t, {2, 0, 1});                     // x a b
            return contract_pair(t, 0, M);                      // xa b
        }));

    // Prop 2.6 (iii): inputs (x, h)
    out.push_back(sweep_check(
        "Prop2.6(iii) x1 eps(h x2)", {n, n},
        [&](const TensorElement& e) {
            auto t = split_leg(e, 0, D);        // x1 x2 h
            t = permute_legs(t, {0, 2, 1});     // x1 h x2
            t = contract_pair(t, 1, M);         // x1 h*x2
            return contract_covector(t, 1, h.counit);
        },
        [&](const TensorElement& e) {
            auto t = apply_map(apply_map(e, 0, xim2), 1, cm.eps_s);  // xi^-2 x, eps_s h
            t = permute_legs(t, {1, 0});
            return contract_pair(t, 0, M);  // eps_s(h) xi^-2(x)
        }));
    out.push_back(sweep_check(
        "Prop2.6(iii) eps(x1 h) x2", {n, n},
        [&](const TensorElement& e) {
            auto t = split_leg(e, 0, D);     // x1 x2 h
            t = permute_legs(t, {0, 2, 1});  // x1 h x2
            t = contract_pair(t, 0, M);      // x1*h x2
            return contract_covector(t, 0, h.counit);
        },
        [&](const TensorElement& e) {
            auto t = apply_map(apply_map(e, 0, xim2), 1, cm.eps_t);
            return contract_pair(t, 0, M);  // xi^-2(x) eps_t(h)
        }));
    out.push_back(sweep_check(
        "Prop2.6(iii) eps(h x1) x2", {n, n},
        [&](const TensorElement& e) {
            auto t = split_leg(e, 0, D);     // x1 x2 h
            t = permute_legs(t, {2, 0, 1});  // h x1 x2
            t = contract_pair(t, 0, M);      // h*x1 x2
            return contract_covector(t, 0, h.counit);
        },
        [&](const TensorElement& e) {
            auto t = apply_map(apply_map(e, 0, xim2), 1, cm.eps_t_hat);
            t = permute_legs(t, {1, 0});
            return contract_pair(t, 0, M);  // eps_t_hat(h) xi^-2(x)
        }));
    out.push_back(sweep_check(
        "Prop2.6(iii) x1 eps(x2 h)", {n, n},
        [&](const TensorElement& e) {
            auto t = split_leg(e, 0, D);  // x1 x2 h
            t = contract_pair(t, 1, M);   // x1 x2*h
            return contract_covector(t, 1, h.counit);
        },
        [&](const TensorElement& e) {
            auto t = apply_map(apply_map(e, 0, xim2), 1, cm.eps_s_hat);
            return contract_pair(t, 0, M);  // xi^-2(x) eps_s_hat(h)
        }));

    // Prop 2.6 (iv): commutation of the projections
    out.push_back(sweep_check(
        "Prop2.6(iv) eps_s/eps_t commute", {n, n},
        [&](const TensorElement& e) {
            auto t = apply_map(apply_map(e, 0, cm.eps_s), 1, cm.eps_t);
            return contract_pair(t, 0, M);
        },
        [&](const TensorElement& e) {
            auto t = apply_map(apply_map(e, 0, cm.eps_s), 1, cm.eps_t);
            t = permute_legs(t, {1, 0});
            return contract_pair(t, 0, M);
        }));
    out.push_back(sweep_check(
        "Prop2.6(iv) eps_s_hat/eps_t_hat commute", {n, n},
        [&](const TensorElement& e) {
            auto t = apply_map(apply_map(e, 0, cm.eps_s_hat), 1, cm.eps_t_hat);
            return contract_pair(t, 0, M);
        },
        [&](const TensorElement& e) {
            auto t = apply_map(apply_map(e, 0, cm.eps_s_hat), 1, cm.eps_t_hat);
            t = permute_legs(t, {1, 0});
            return contract_pair(t, 0, M);
        }));

    // Prop 2.7 (2.22)-(2.25): Delta of a projection collapses onto Delta(1)
    struct P7 {
        const char* id;
        const LinearMap* map;
        bool left;   // projection multiplies 1_1 (left tensor factor)...
        bool pre;    // ...from the left (pre) or right (post)
    };
    const P7 p7[] = {{"Prop2.7(2.22) Delta(eps_t), 1_1 eps_t(h)", &cm.eps_t, true, false},
                     {"Prop2.7(2.22) Delta(eps_t), eps_t(h) 1_1", &cm.eps_t, true, true},
                     {"Prop2.7(2.23) Delta(eps_s), 1_2 eps_s(h)", &cm.eps_s, false, false},
                     {"Prop2.7(2.23) Delta(eps_s), eps_s(h) 1_2", &cm.eps_s, false, true},
                     {"Prop2.7(2.24) Delta(eps_s_hat), eps_s_hat(h) 1_2", &cm.eps_s_hat,
                      false, true},
                     {"Prop2.7(2.24) Delta(eps_s_hat), 1_2 eps_s_hat(h)", &cm.eps_s_hat,
                      false, false},
                     {"Prop2.7(2.25) Delta(eps_t_hat), 1_1 eps_t_hat(h)", &cm.eps_t_hat,
                      true, false},
                     {"Prop2.7(2.25) Delta(eps_t_hat), eps_t_hat(h) 1_1", &cm.eps_t_hat,
                      true, true}};
    for (const auto& c : p7) {
        out.push_back(sweep_check(
            c.id, {n},
            [&](const TensorElement& e) {
                return split_leg(apply_map(e, 0, *c.map), 0, D);
            },
            [&](const TensorElement& e) {
                auto t = te_tensor(delta1, apply_map(e, 0, *c.map));  // a b f(h)
                if (c.left) {
                    // product with the first tensor factor 1_1
                    t = permute_legs(t, c.pre ? std::vector<std::size_t>{2, 0, 1}
                                              : std::vector<std::size_t>{0, 2, 1});
                    // now (f a b) or (a f b): multiply first two, keep b second
                    t = contract_pair(t, 0, M);
                    return t;  // (f*a or a*f, b)
                }
                // product with the second factor 1_2
                if (c.pre) {
                    t = permute_legs(t, {0, 2, 1});  // a f b
                    t = contract_pair(t, 1, M);      // a f*b
                } else {
                    t = contract_pair(t, 1, M);      // a b*f
                }
                return t;
            }));
    }

    // Prop 2.8 (i)-(iv): projection absorption/multiplicativity, inputs (x,y)
    auto proj_of_product = [&](const LinearMap& F) {
        return [&, F](const TensorElement& e) {
            return apply_map(contract_pair(e, 0, M), 0, F);
        };
    };
    auto proj_absorb = [&](const LinearMap& outer, const LinearMap& inner, bool on_y) {
        return [&, outer, inner, on_y](const TensorElement& e) {
            return apply_map(contract_pair(apply_map(e, on_y ? 1 : 0, inner), 0, M), 0,
                             outer);
        };
    };
    auto proj_product = [&](const LinearMap& outerless_a, const LinearMap& b_map) {
        return [&, outerless_a, b_map](const TensorElement& e) {
            auto t = apply_map(apply_map(e, 0, outerless_a), 1, b_map);
            return contract_pair(t, 0, M);
        };
    };
    out.push_back(sweep_check("Prop2.8(i) eps_t(x eps_t(y)) = eps_t(xy)", {n, n},
                              proj_absorb(cm.eps_t, cm.eps_t, true),
                              proj_of_product(cm.eps_t)));
    out.push_back(sweep_check("Prop2.8(i) eps_t(eps_t(x)y) = eps_t(x)eps_t(y)", {n, n},
                              proj_absorb(cm.eps_t, cm.eps_t, false),
                              proj_product(cm.eps_t, cm.eps_t)));
    out.push_back(sweep_check("Prop2.8(i) eps_s(x eps_s(y)) = eps_s(x)eps_s(y)", {n, n},
                              proj_absorb(cm.eps_s, cm.eps_s, true),
                              proj_product(cm.eps_s, cm.eps_s)));
    out.push_back(sweep_check("Prop2.8(i) eps_s(eps_s(x)y) = eps_s(xy)", {n, n},
                              proj_absorb(cm.eps_s, cm.eps_s, false),
                              proj_of_product(cm.eps_s)));
    out.push_back(sweep_check(
        "Prop2.8(ii) eps_t_hat(x eps_t_hat(y)) = eps_t_hat(x)eps_t_hat(y)", {n, n},
        proj_absorb(cm.eps_t_hat, cm.eps_t_hat, true),
        proj_product(cm.eps_t_hat, cm.eps_t_hat)));
    out.push_back(sweep_check("Prop2.8(ii) eps_t_hat(eps_t_hat(x)y) = eps_t_hat(xy)",
                              {n, n}, proj_absorb(cm.eps_t_hat, cm.eps_t_hat, false),
                              proj_of_product(cm.eps_t_hat)));
    out.push_back(sweep_check("Prop2.8(ii) eps_s_hat(x eps_s_hat(y)) = eps_s_hat(xy)",
                              {n, n}, proj_absorb(cm.eps_s_hat, cm.eps_s_hat, true),
                              proj_of_product(cm.eps_s_hat)));
    out.push_back(sweep_check(
        "Prop2.8(ii) eps_s_hat(eps_s_hat(x)y) = eps_s_hat(x)eps_s_hat(y)", {n, n},
        proj_absorb(cm.eps_s_hat, cm.eps_s_hat, false),
        proj_product(cm.eps_s_hat, cm.eps_s_hat)));
    out.push_back(sweep_check("Prop2.8(iii) eps_t(x eps_s_hat(y)) = eps_t(xy)", {n, n},
                              proj_absorb(cm.eps_t, cm.eps_s_hat, true),
                              proj_of_product(cm.eps_t)));
    out.push_back(sweep_check(
        "Prop2.8(iii) eps_t(eps_t_hat(x)y) = eps_t_hat(x)eps_t(y)", {n, n},
        proj_absorb(cm.eps_t, cm.eps_t_hat, false), proj_product(cm.eps_t_hat, cm.eps_t)));
    out.push_back(sweep_check(
        "Prop2.8(iii) eps_s(x eps_s_hat(y)) = eps_s(x)eps_s_hat(y)", {n, n},
        proj_absorb(cm.eps_s, cm.eps_s_hat, true), proj_product(cm.eps_s, cm.eps_s_hat)));
    out.push_back(sweep_check("Prop2.8(iii) eps_s(eps_t_hat(x)y) = eps_s(xy)", {n, n},
                              proj_absorb(cm.eps_s, cm.eps_t_hat, false),
                              proj_of_product(cm.eps_s)));
    out.push_back(sweep_check(
        "Prop2.8(iv) eps_t_hat(x eps_t(y)) = eps_t_hat(x)eps_t(y)", {n, n},
        proj_absorb(cm.eps_t_hat, cm.eps_t, true), proj_product(cm.eps_t_hat, cm.eps_t)));
    out.push_back(sweep_check("Prop2.8(iv) eps_t_hat(eps_s(x)y) = eps_t_hat(xy)", {n, n},
                              proj_absorb(cm.eps_t_hat, cm.eps_s, false),
                              proj_of_product(cm.eps_t_hat)));
    out.push_back(sweep_check("Prop2.8(iv) eps_s_hat(x eps_t(y)) = eps_s_hat(xy)", {n, n},
                              proj_absorb(cm.eps_s_hat, cm.eps_t, true),
                              proj_of_product(cm.eps_s_hat)));
    out.push_back(sweep_check(
        "Prop2.8(iv) eps_s_hat(eps_s(x)y) = eps_s(x)eps_s_hat(y)", {n, n},
        proj_absorb(cm.eps_s_hat, cm.eps_s, false),
        proj_product(cm.eps_s, cm.eps_s_hat)));

    // Prop 2.8 (v)
    out.push_back(sweep_check(
        "Prop2.8(v) eps_t(x1) (x) x2", {n},
        [&](const TensorElement& e) { return apply_map(split_leg(e, 0, D), 0, cm.eps_t); },
        [&](const TensorElement& e) {
            // eps_t(1_1) (x) 1_2 xi^{-2}(x)
            auto t = te_tensor(delta1, apply_map(e, 0, xim2));  // a b x
            t = apply_map(t, 0, cm.eps_t);
            return contract_pair(t, 1, M);  // eps_t(a) (x) b*x
        }));
    out.push_back(sweep_check(
        "Prop2.8(v) x1 (x) eps_s(x2)", {n},
        [&](const TensorElement& e) { return apply_map(split_leg(e, 0, D), 1, cm.eps_s); },
        [&](const TensorElement& e) {
            // xi^{-2}(x) 1_1 (x) eps_s(1_2)
            auto t = te_tensor(delta1, apply_map(e, 0, xim2));  // a b x
            t = apply_map(t, 1, cm.eps_s);
            t = permute_legs(t, {2, 0, 1});  // x a eps_s(b)
            return contract_pair(t, 0, M);   // x*a (x) eps_s(b)
        }));
    out.push_back(sweep_check(
        "Prop2.8(v) x1 (x) eps_s_hat(x2)", {n},
        [&](const TensorElement& e) {
            return apply_map(split_leg(e, 0, D), 1, cm.eps_s_hat);
        },
        [&](const TensorElement& e) {
            // 1_1 xi^{-2}(x) (x) eps_s_hat(1_2)
            auto t = te_tensor(delta1, apply_map(e, 0, xim2));  // a b x
            t = apply_map(t, 1, cm.eps_s_hat);
            t = permute_legs(t, {0, 2, 1});  // a x eps_s_hat(b)
            return contract_pair(t, 0, M);   // a*x (x) eps_s_hat(b)
        }));
    out.push_back(sweep_check(
        "Prop2.8(v) eps_t_hat(x1) (x) x2", {n},
        [&](const TensorElement& e) {
            return apply_map(split_leg(e, 0, D), 0, cm.eps_t_hat);
        },
        [&](const TensorElement& e) {
            // eps_t_hat(1_1) (x) xi^{-2}(x) 1_2
            auto t = te_tensor(delta1, apply_map(e, 0, xim2));  // a b x
            t = apply_map(t, 0, cm.eps_t_hat);
            t = permute_legs(t, {0, 2, 1});  // eps_t_hat(a) x b
            return contract_pair(t, 1, M);   // eps_t_hat(a) (x) x*b
        }));

    // Section 2 displays after the hat definitions
    {
        auto xx = apply_map(apply_map(delta1, 0, h.xi), 1, h.xi);
        out.push_back(vec_check("Sec2-display 1_1 (x) 1_2 = xi(1_1) (x) xi(1_2)",
                                delta1.data, xx.data));
        // membership: Delta(1) in Hs (x) Ht and in Hs_hat (x) Ht_hat
        auto tensor_subspace = [&](const Subspace& a, const Subspace& b) {
            std::vector<Vec> gens;
            for (const auto& u : a.basis())
                for (const auto& v : b.basis()) {
                    Vec w(n * n);
                    for (std::size_t i = 0; i < n; ++i)
                        for (std::size_t j = 0; j < n; ++j) w[i * n + j] = u[i] * v[j];
                    gens.push_back(w);
                }
            return Subspace::span(n * n, gens);
        };
        out.push_back(condition_check("Sec2-display Delta(1) in Hs (x) Ht",
                                      tensor_subspace(cm.Hs, cm.Ht).contains(delta1.data)));
        out.push_back(condition_check(
            "Sec2-display Delta(1) in Hs_hat (x) Ht_hat",
            tensor_subspace(cm.Hs_hat, cm.Ht_hat).contains(delta1.data)));
    }
    out.push_back(sweep_check(
        "Sec2-display xi(h1) (x) xi(h2) = 1_1 h_1 (x) 1_2 h_2", {n},
        [&](const TensorElement& e) {
            auto t = split_leg(e, 0, D);
            return apply_map(apply_map(t, 0, h.xi), 1, h.xi);
        },
        [&](const TensorElement& e) {
            auto t = te_tensor(delta1, split_leg(e, 0, D));  // a b h1 h2
            t = permute_legs(t, {0, 2, 1, 3});               // a h1 b h2
            t = contract_pair(t, 0, M);                      // a*h1 b h2
            return contract_pair(t, 1, M);                   // a*h1 b*h2
        }));
    out.push_back(sweep_check(
        "Sec2-display xi(h1) (x) xi(h2) = h_1 1_1 (x) h_2 1_2", {n},
        [&](const TensorElement& e) {
            auto t = split_leg(e, 0, D);
            return apply_map(apply_map(t, 0, h.xi), 1, h.xi);
        },
        [&](const TensorElement& e) {
            auto t = te_tensor(split_leg(e, 0, D), delta1);  // h1 h2 a b
            t = permute_legs(t, {0, 2, 1, 3});               // h1 a h2 b
            t = contract_pair(t, 0, M);                      // h1*a h2 b
            return contract_pair(t, 1, M);                   // h1*a h2*b
        }));

    return out;
}

std::vector<CheckReport> check_antipode(const PresentedBialgebra& h) {
    if (!h.antipode) throw MissingAntipode("check_antipode: no antipode present");
    const std::size_t n = h.dim;
    const auto& M = h.mul;
    const auto& D = h.comul;
    const LinearMap& S = *h.antipode;
    CounitalMats cms = counital_simplified(h);
    std::vector<CheckReport> out;

    out.push_back(matrix_check("Def2.11(1) S-xi-commute", S.compose(h.xi), h.xi.compose(S)));
    out.push_back(sweep_check(
        "Def2.11(2) h1 S(h2) = eps_t(h)", {n},
        [&](const TensorElement& e) {
            return contract_pair(apply_map(split_leg(e, 0, D), 1, S), 0, M);
        },
        [&](const TensorElement& e) { return apply_map(e, 0, cms.et); }));
    out.push_back(sweep_check(
        "Def2.11(2) S(h1) h2 = eps_s(h)", {n},
        [&](const TensorElement& e) {
            return contract_pair(apply_map(split_leg(e, 0, D), 0, S), 0, M);
        },
        [&](const TensorElement& e) { return apply_map(e, 0, cms.es); }));
    out.push_back(sweep_check(
        "Def2.11(3) S(hg) = S(g)S(h)", {n, n},
        [&](const TensorElement& e) { return apply_map(contract_pair(e, 0, M), 0, S); },
        [&](const TensorElement& e) {
            auto t = apply_map(apply_map(e, 0, S), 1, S);
            t = permute_legs(t, {1, 0});
            return contract_pair(t, 0, M);
        }));
    out.push_back(vec_check("Def2.11(3) S(1) = 1", S.apply(h.unit), h.unit));
    out.push_back(sweep_check(
        "Def2.11(4) Delta(S(h)) = S(h2) (x) S(h1)", {n},
        [&](const TensorElement& e) { return split_leg(apply_map(e, 0, S), 0, D); },
        [&](const TensorElement& e) {
            auto t = apply_map(apply_map(split_leg(e, 0, D), 0, S), 1, S);
            return permute_legs(t, {1, 0});
        }));
    out.push_back(sweep_check(
        "Def2.11(4) eps(S(h)) = eps(h)", {n},
        [&](const TensorElement& e) {
            return contract_covector(apply_map(e, 0, S), 0, h.counit);
        },
        [&](const TensorElement& e) { return contract_covector(e, 0, h.counit); }));

    if (h.convention == Convention::MonoidalHom) {
        TensorElement delta1 = split_leg(TensorElement::from_vec(h.unit), 0, D);
        LinearMap xim2 = h.xi_pow(-2);
        out.push_back(sweep_check(
            "Prop2.12(2.33) eps_s(h1) S(h2) = xi^-1(S(h))", {n},
            [&](const TensorElement& e) {
                auto t = split_leg(e, 0, D);
                t = apply_map(apply_map(t, 0, cms.es), 1, S);
                return contract_pair(t, 0, M);
            },
            [&](const TensorElement& e) {
                return apply_map(apply_map(e, 0, S), 0, h.xi_inv);
            }));
        out.push_back(sweep_check(
            "Prop2.12(2.33) S(h1) eps_t(h2) = xi^-1(S(h))", {n},
            [&](const TensorElement& e) {
                auto t = split_leg(e, 0, D);
                t = apply_map(apply_map(t, 0, S), 1, cms.et);
                return contract_pair(t, 0, M);
            },
            [&](const TensorElement& e) {
                return apply_map(apply_map(e, 0, S), 0, h.xi_inv);
            }));
        out.push_back(matrix_check("Prop2.12(2.34) eps_t = S o eps_s_hat",
                                   cms.et, S.compose(cms.esh)));
        out.push_back(matrix_check("Prop2.12(2.34) eps_s = S o eps_t_hat",
                                   cms.es, S.compose(cms.eth)));
        out.push_back(sweep_check(
            "Prop2.12(2.35) eps_t(h1) (x) h2 = S(1_1) (x) 1_2 xi^-2(h)", {n},
            [&](const TensorElement& e) {
                return apply_map(split_leg(e, 0, D), 0, cms.et);
            },
            [&](const TensorElement& e) {
                auto t = te_tensor(delta1, apply_map(e, 0, xim2));  // a b h
                t = apply_map(t, 0, S);
                return contract_pair(t, 1, M);  // S(a) (x) b*h
            }));
        out.push_back(sweep_check(
            "Prop2.12(2.35) h1 (x) eps_s(h2) = xi^-2(h) 1_1 (x) S(1_2)", {n},
            [&](const TensorElement& e) {
                return apply_map(split_leg(e, 0, D), 1, cms.es);
            },
            [&](const TensorElement& e) {
                auto t = te_tensor(delta1, apply_map(e, 0, xim2));  // a b h
                t = apply_map(t, 1, S);
                t = permute_legs(t, {2, 0, 1});  // h a S(b)
                return contract_pair(t, 0, M);   // h*a (x) S(b)
            }));
    }
    return out;
}

std::vector<CheckReport> check_morphism(const MorphismCandidate& f, bool check_s) {
    const PresentedBialgebra& a = *f.source;
    const PresentedBialgebra& b = *f.target;
    if (f.map.rows() != b.dim || f.map.cols() != a.dim)
        throw ShapeError("check_morphism: map shape mismatch");
    const std::size_t n = a.dim;
    std::vector<CheckReport> out;
    out.push_back(matrix_check("Morph xi-intertwine", f.map.compose(a.xi),
                               b.xi.compose(f.map)));
    out.push_back(vec_check("Morph unit", f.map.apply(a.unit), b.unit));
    {
        // eps' o f = eps, as covectors
        Vec lhs(n), rhs = a.counit;
        for (std::size_t j = 0; j < n; ++j) {
            Scalar s = 0;
            for (std::size_t i = 0; i < b.dim; ++i) s += b.counit[i] * f.map.at(i, j);
            lhs[j] = s;
        }
        out.push_back(vec_check("Morph counit", lhs, rhs));
    }
    out.push_back(sweep_check(
        "Morph multiplicative", {n, n},
        [&](const TensorElement& e) { return apply_map(contract_pair(e, 0, a.mul), 0, f.map); },
        [&](const TensorElement& e) {
            return contract_pair(apply_map(apply_map(e, 0, f.map), 1, f.map), 0, b.mul);
        }));
    out.push_back(sweep_check(
        "Morph comultiplicative", {n},
        [&](const TensorElement& e) { return split_leg(apply_map(e, 0, f.map), 0, b.comul); },
        [&](const TensorElement& e) {
            return apply_map(apply_map(split_leg(e, 0, a.comul), 0, f.map), 1, f.map);
        }));
    if (check_s && a.antipode && b.antipode)
        out.push_back(matrix_check("Morph S-commute", f.map.compose(*a.antipode),
                                   b.antipode->compose(f.map)));
    return out;
}

bool is_strict_monoidal_hom(const PresentedBialgebra& h) {
    const std::size_t n = h.dim;
    TensorElement delta1 = split_leg(TensorElement::from_vec(h.unit), 0, h.comul);
    TensorElement one_one = te_tensor(TensorElement::from_vec(h.unit),
                                      TensorElement::from_vec(h.unit));
    if (delta1.data != one_one.data) return false;
    auto rep = sweep_check(
        "strict eps mult", {n, n},
        [&](const TensorElement& e) {
            return contract_covector(contract_pair(e, 0, h.mul), 0, h.counit);
        },
        [&](const TensorElement& e) {
            return contract_covector(contract_covector(e, 1, h.counit), 0, h.counit);
        });
    return rep.passed();
}

std::vector<CheckReport> check_all(const PresentedBialgebra& h) {
    std::vector<CheckReport> out = check_hom_algebra(h);
    auto app = [&](std::vector<CheckReport> v) {
        out.insert(out.end(), std::make_move_iterator(v.begin()),
                   std::make_move_iterator(v.end()));
    };
    app(check_hom_coalgebra(h));
    app(check_weak_compat(h));
    if (h.convention == Convention::MonoidalHom && all_passed(out)) {
        auto cm = counital_maps(h);
        app(check_counital_identities(h, cm));
    }
    if (h.antipode) app(check_antipode(h));
    return out;
}

}  // namespace wmhh
