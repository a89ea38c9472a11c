#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wmhh/tensor_ops.hpp"

using namespace wmhh;

TEST_CASE("scalar parsing round-trips") {
    CHECK(to_string(parse_scalar("3/6")) == "1/2");
    CHECK(to_string(parse_scalar("-4/2")) == "-2");
    CHECK(to_string(parse_scalar("0")) == "0");
    CHECK(parse_scalar("7") == Scalar(7));
    CHECK_THROWS_AS(parse_scalar("1/0"), ParseError);
    CHECK_THROWS_AS(parse_scalar("abc"), ParseError);
    CHECK_THROWS_AS(parse_scalar(""), ParseError);
}

TEST_CASE("vector helpers") {
    Vec a = {Scalar(1), Scalar(2)};
    Vec b = {Scalar(3), Scalar(-2)};
    CHECK(add(a, b) == Vec{Scalar(4), Scalar(0)});
    CHECK(sub(a, b) == Vec{Scalar(-2), Scalar(4)});
    CHECK(scale(Scalar(1) / 2, a) == Vec{Scalar(1) / 2, Scalar(1)});
    CHECK(is_zero(zero_vec(3)));
    CHECK_FALSE(is_zero(basis_vec(3, 1)));
}

TEST_CASE("matrix inversion is exact") {
    LinearMap m(2, 2);
    m.at(0, 0) = 1;
    m.at(0, 1) = 2;
    m.at(1, 0) = 3;
    m.at(1, 1) = 4;
    LinearMap mi = invert(m);
    CHECK(m.compose(mi) == LinearMap::identity(2));
    CHECK(mi.compose(m) == LinearMap::identity(2));
    CHECK(is_invertible(m));

    LinearMap sing(2, 2);
    sing.at(0, 0) = 1;
    sing.at(1, 0) = 2;
    CHECK_FALSE(is_invertible(sing));
    CHECK_THROWS_AS(invert(sing), SingularMap);
}

TEST_CASE("inversion of random invertible matrices round-trips") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 1 + trial % 5;
        LinearMap m(n, n);
        do {
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) m.at(i, j) = coef(rng);
        } while (!is_invertible(m));
        CHECK(invert(m).compose(m) == LinearMap::identity(n));
    }
}

TEST_CASE("kron acts on flattened tensors") {
    LinearMap a = LinearMap::diagonal({Scalar(2), Scalar(3)});
    LinearMap b = LinearMap::diagonal({Scalar(5), Scalar(7)});
    LinearMap k = LinearMap::kron(a, b);
    // basis (i,j) flattened as i*2+j
    CHECK(k.at(0, 0) == Scalar(10));
    CHECK(k.at(3, 3) == Scalar(21));
    CHECK(k.at(1, 2) == Scalar(0));
}

TEST_CASE("subspace span, membership, coords") {
    Vec v1 = {Scalar(1), Scalar(1), Scalar(0)};
    Vec v2 = {Scalar(0), Scalar(1), Scalar(1)};
    auto s = Subspace::span(3, {v1, v2, add(v1, v2)});
    CHECK(s.rank() == 2);
    CHECK(s.contains(v1));
    CHECK(s.contains(sub(v1, v2)));
    CHECK_FALSE(s.contains(basis_vec(3, 0)));
    auto c = s.coords(add(v1, scale(Scalar(3), v2)));
    REQUIRE(c.has_value());
    // reconstruct through the inclusion map
    CHECK(s.inclusion().apply(*c) == add(v1, scale(Scalar(3), v2)));
    CHECK_FALSE(s.coords(basis_vec(3, 2) == v2 ? v1 : basis_vec(3, 0)).has_value());
    // spanning an already reduced basis is idempotent
    CHECK(Subspace::span(3, s.basis()) == s);
}

TEST_CASE("tensor element leg operations") {
    // two legs of dim 2 and 3
    auto e = TensorElement::basis({2, 3}, {1, 2});
    CHECK(e.data[1 * 3 + 2] == Scalar(1));

    LinearMap f(2, 2);
    f.at(0, 1) = 4;  // maps basis 1 to 4*basis 0
    auto fe = apply_map(e, 0, f);
    CHECK(fe.data[0 * 3 + 2] == Scalar(4));

    auto p = permute_legs(e, {1, 0});
    CHECK(p.dims == std::vector<std::size_t>{3, 2});
    CHECK(p.data[2 * 2 + 1] == Scalar(1));

    Vec phi = {Scalar(0), Scalar(0), Scalar(5)};
    auto ce = contract_covector(e, 1, phi);
    CHECK(ce.dims == std::vector<std::size_t>{2});
    CHECK(ce.data[1] == Scalar(5));

    Tensor3 m(2, 2, 2);
    m.at(1, 1, 0) = 7;
    auto two = te_tensor(TensorElement::basis({2}, {1}), TensorElement::basis({2}, {1}));
    auto prod = contract_pair(two, 0, m);
    CHECK(prod.dims == std::vector<std::size_t>{2});
    CHECK(prod.data[0] == Scalar(7));

    Tensor3 d(2, 2, 2);
    d.at(1, 0, 1) = 3;
    auto sp = split_leg(TensorElement::basis({2}, {1}), 0, d);
    CHECK(sp.dims == std::vector<std::size_t>{2, 2});
    CHECK(sp.data[0 * 2 + 1] == Scalar(3));
}

TEST_CASE("leg operations are linear") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> coef(-2, 2);
    auto rand_te = [&](std::vector<std::size_t> dims) {
        auto e = TensorElement::zero(dims);
        for (auto& x : e.data) x = coef(rng);
        return e;
    };
    Tensor3 m(3, 3, 3);
    for (auto& x : m.raw()) x = coef(rng);
    for (int trial = 0; trial < 10; ++trial) {
        auto a = rand_te({3, 3}), b = rand_te({3, 3});
        Scalar c = coef(rng);
        auto lhs = contract_pair(te_add(a, te_scale(c, b)), 0, m);
        auto rhs = te_add(contract_pair(a, 0, m), te_scale(c, contract_pair(b, 0, m)));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("contract_mul and apply_delta match the leg engine") {
    Tensor3 m(2, 2, 2);
    m.at(0, 1, 0) = 2;
    m.at(1, 1, 1) = 5;
    Vec a = {Scalar(1), Scalar(3)};
    Vec b = {Scalar(0), Scalar(1)};
    auto via_legs =
        contract_pair(te_tensor(TensorElement::from_vec(a), TensorElement::from_vec(b)), 0, m);
    CHECK(contract_mul(m, a, b) == via_legs.data);

    Tensor3 d(2, 2, 2);
    d.at(1, 0, 1) = 7;
    CHECK(apply_delta(d, basis_vec(2, 1)) == split_leg(TensorElement::basis({2}, {1}), 0, d).data);
}
