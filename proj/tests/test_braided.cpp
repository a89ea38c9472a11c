#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wmhh/braided.hpp"

using namespace wmhh;

namespace {

BialgebraPtr fixture(const std::string& name) {
    return build_fixture(parse_fixture_name(name));
}

void require_all(const std::vector<CheckReport>& reps) {
    for (const auto& r : reps) {
        INFO("identity: ", r.identity_id);
        CHECK(r.passed());
    }
}

// basis index of E_ij in groupoid-pair-n (1-based labels)
std::size_t eidx(std::size_t n, std::size_t i, std::size_t j) {
    return (i - 1) * n + (j - 1);
}

// coaction as a matrix into the flattened space M (x) H
LinearMap coaction_matrix(const YDModule& m) {
    const std::size_t n = m.host->dim;
    LinearMap r(m.dim * n, m.dim);
    for (std::size_t i = 0; i < m.dim; ++i)
        for (std::size_t j = 0; j < m.dim; ++j)
            for (std::size_t k = 0; k < n; ++k) r.at(j * n + k, i) = m.coaction.at(i, j, k);
    return r;
}

}  // namespace

TEST_CASE("group laws of (Aut x Aut, *) on groupoid-pair-2") {
    auto h = fixture("groupoid-pair-2");
    LinearMap id4 = LinearMap::identity(4), sigma = groupoid_swap(2);
    GroupElement e = group_identity(h);
    std::vector<GroupElement> pool{e,
                                   {make_automorphism_pair(h, sigma, id4)},
                                   {make_automorphism_pair(h, id4, sigma)},
                                   {make_automorphism_pair(h, sigma, sigma)}};
    for (const auto& a : pool) {
        CHECK(group_equal(group_mul(e, a), a));
        CHECK(group_equal(group_mul(a, e), a));
        CHECK(group_equal(group_mul(a, group_inverse(a)), e));
        CHECK(group_equal(group_mul(group_inverse(a), a), e));
        for (const auto& b : pool)
            for (const auto& c : pool)
                CHECK(group_equal(group_mul(group_mul(a, b), c),
                                  group_mul(a, group_mul(b, c))));
    }
    // sigma^2 = id gives (sigma,id)*(sigma,id) = (id,id)
    CHECK(group_equal(group_mul(pool[1], pool[1]), e));
}

TEST_CASE("H_t (x) H_t over groupoid-pair-2: carrier, unit action, component") {
    auto h = fixture("groupoid-pair-2");
    BraidedObject u = make_unit_module(h);
    BraidedObject t = tensor_yd(u, u);
    CHECK(t.mod.dim == 2);
    // carrier = span{E_11 (x) E_11, E_22 (x) E_22} in the 2x2 pair space
    CHECK(t.pair_incl.column(0) == basis_vec(4, 0));
    CHECK(t.pair_incl.column(1) == basis_vec(4, 3));
    // acting by 1 gives mu (x) nu on the truncated space
    LinearMap act_unit(2, 2);
    for (std::size_t i = 0; i < 4; ++i) {
        if (h->unit[i] == 0) continue;
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t q = 0; q < 2; ++q)
                act_unit.at(q, j) += h->unit[i] * t.mod.action.at(i, j, q);
    }
    CHECK(act_unit == t.mod.mu);
    CHECK(t.mod.component.alpha == LinearMap::identity(4));
    CHECK(t.mod.component.beta == LinearMap::identity(4));
    require_all(check_yd(t.mod));
}

TEST_CASE("component bookkeeping under tensor and conjugation") {
    auto h = fixture("groupoid-pair-2");
    BraidedObject u = make_unit_module(h);
    GroupElement g{make_automorphism_pair(h, groupoid_swap(2), LinearMap::identity(4))};
    BraidedObject t = tensor_yd(u, u);
    CHECK(group_equal({t.mod.component},
                      group_mul({u.mod.component}, {u.mod.component})));
    BraidedObject c = conjugate_module(g, u);
    CHECK(group_equal({c.mod.component},
                      group_mul(g, group_mul({u.mod.component}, group_inverse(g)))));
}

TEST_CASE("tensor_yd throws NotClosed when the action escapes the carrier") {
    auto h = fixture("groupoid-pair-2");
    BraidedObject u = make_unit_module(h);
    BraidedObject bad = u;
    YDModule m = u.mod;
    m.action.at(eidx(2, 1, 2), 1, 1) += 1;  // E_12 . E_22 picks up an extra E_22 term
    bad.mod = finalize_module(std::move(m));
    CHECK_THROWS_AS(tensor_yd(bad, u), NotClosed);
}

TEST_CASE("tensor_yd throws NotClosed when the twist escapes the carrier") {
    auto h = fixture("groupoid-pair-2");
    BraidedObject u = make_unit_module(h);
    BraidedObject bad = u;
    YDModule m = u.mod;
    m.mu.at(0, 1) += 1;  // still invertible, no longer diagonal
    bad.mod = finalize_module(std::move(m));
    CHECK_THROWS_AS(tensor_yd(bad, u), NotClosed);
}

TEST_CASE("associator on (H_t,H_t,H_t) is the plain re-bracketing") {
    auto h = fixture("groupoid-pair-2");
    BraidedObject u = make_unit_module(h);
    Associator a = associator(u, u, u);
    CHECK(a.left.mod.dim == 2);
    CHECK(a.a == LinearMap::identity(2));
    CHECK(a.a_inv == LinearMap::identity(2));
}

TEST_CASE("unit constraints on H_t evaluate per the closed forms") {
    auto h = fixture("groupoid-pair-2");
    BraidedObject u = make_unit_module(h);
    UnitConstraints uc = unit_constraints(u);
    // l(E_11 (x) E_11) = E_11 and all four maps invert exactly
    CHECK(uc.l.column(0) == basis_vec(2, 0));
    CHECK(uc.l.compose(uc.l_inv) == LinearMap::identity(2));
    CHECK(uc.l_inv.compose(uc.l) == LinearMap::identity(2));
    CHECK(uc.r.compose(uc.r_inv) == LinearMap::identity(2));
    CHECK(uc.r_inv.compose(uc.r) == LinearMap::identity(2));
}

TEST_CASE("unit triangle on (H_t,H_t)") {
    auto h = fixture("groupoid-pair-2");
    BraidedObject u = make_unit_module(h);
    CHECK(unit_triangle(u, u).passed());
}

TEST_CASE("conjugation distributes over the truncated tensor product") {
    auto h = fixture("groupoid-pair-2");
    BraidedObject u = make_unit_module(h);
    GroupElement g{make_automorphism_pair(h, groupoid_swap(2), LinearMap::identity(4))};
    CHECK(modules_equal(conjugate_module(g, tensor_yd(u, u)),
                        tensor_yd(conjugate_module(g, u), conjugate_module(g, u))));
}

TEST_CASE("braiding on (H_t,H_t) is the identity in carrier coordinates") {
    auto h = fixture("groupoid-pair-2");
    BraidedObject u = make_unit_module(h);
    Braiding b = braiding(u, u);
    // c(E_11 (x) E_11) = E_11 (x) E_11; both carriers are the diagonal span
    CHECK(b.c == LinearMap::identity(2));
    CHECK(b.c_inv == LinearMap::identity(2));
    CHECK(b.c.compose(b.c_inv) == LinearMap::identity(2));
}

TEST_CASE("check_braiding_laws passes on (H_t,H_t,H_t)") {
    for (const char* name : {"groupoid-pair-2", "groupoid-pair-3"}) {
        auto h = fixture(name);
        BraidedObject u = make_unit_module(h);
        require_all(check_braiding_laws(u, u, u));
    }
}

TEST_CASE("check_braiding_laws with a conjugated middle factor") {
    auto h = fixture("groupoid-pair-2");
    BraidedObject u = make_unit_module(h);
    GroupElement g{make_automorphism_pair(h, groupoid_swap(2), LinearMap::identity(4))};
    require_all(check_braiding_laws(u, conjugate_module(g, u), u));
}

TEST_CASE("crossing invariance for (s,t) = (sigma,id) and (sigma,sigma)") {
    auto h = fixture("groupoid-pair-2");
    LinearMap id4 = LinearMap::identity(4), sigma = groupoid_swap(2);
    BraidedObject u = make_unit_module(h);
    CHECK(crossing_invariance({make_automorphism_pair(h, sigma, id4)}, u, u).passed());
    CHECK(crossing_invariance({make_automorphism_pair(h, sigma, sigma)}, u, u).passed());
}

TEST_CASE("a fake braiding fails H-colinearity with a witness") {
    auto h = fixture("groupoid-pair-2");
    BraidedObject u = make_unit_module(h);
    Braiding b = braiding(u, u);
    // swap of the two carrier lines: E_11(x)E_11 <-> E_22(x)E_22
    LinearMap fake(2, 2);
    fake.at(0, 1) = 1;
    fake.at(1, 0) = 1;
    LinearMap lhs = coaction_matrix(b.target.mod).compose(fake);
    LinearMap rhs = LinearMap::kron(fake, LinearMap::identity(4))
                        .compose(coaction_matrix(b.source.mod));
    CheckReport r = matrix_check("fake braiding H-colinearity", lhs, rhs);
    CHECK_FALSE(r.passed());
    CHECK(r.witness.has_value());
}

TEST_CASE("trivial-1d: all categorical maps are identity scalars") {
    auto h = fixture("trivial-1d");
    BraidedObject u = make_unit_module(h);
    CHECK(u.mod.dim == 1);
    Associator a = associator(u, u, u);
    CHECK(a.a == LinearMap::identity(1));
    UnitConstraints uc = unit_constraints(u);
    CHECK(uc.l == LinearMap::identity(1));
    CHECK(uc.l_inv == LinearMap::identity(1));
    CHECK(uc.r == LinearMap::identity(1));
    CHECK(uc.r_inv == LinearMap::identity(1));
    Braiding b = braiding(u, u);
    CHECK(b.c == LinearMap::identity(1));
    require_all(check_braiding_laws(u, u, u));
}
