#include "wmhh/constructions.hpp"

#include <charconv>

namespace wmhh {

namespace {

// comul' = Delta o f
Tensor3 precompose_comul(const Tensor3& comul, const LinearMap& f) {
    const std::size_t n = comul.d0();
    Tensor3 out(n, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < n; ++l) {
            const Scalar& c = f.at(l, i);
            if (c == 0) continue;
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    if (comul.at(l, j, k) != 0) out.at(i, j, k) += c * comul.at(l, j, k);
        }
    return out;
}

// mul' = f o mul
Tensor3 postcompose_mul(const Tensor3& mul, const LinearMap& f) {
    const std::size_t n = mul.d0();
    Tensor3 out(n, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l) {
                const Scalar& c = mul.at(i, j, l);
                if (c == 0) continue;
                for (std::size_t k = 0; k < n; ++k)
                    if (f.at(k, l) != 0) out.at(i, j, k) += f.at(k, l) * c;
            }
    return out;
}

BialgebraPtr build_trivial_1d() {
    PresentedBialgebra h;
    h.dim = 1;
    h.mul = Tensor3(1, 1, 1);
    h.mul.at(0, 0, 0) = 1;
    h.unit = {Scalar(1)};
    h.comul = Tensor3(1, 1, 1);
    h.comul.at(0, 0, 0) = 1;
    h.counit = {Scalar(1)};
    h.xi = LinearMap::identity(1);
    h.antipode = LinearMap::identity(1);
    return finalize(std::move(h));
}

BialgebraPtr build_groupoid_pair(std::size_t n) {
    if (n < 1) throw InvalidStructure("groupoid-pair-n requires n >= 1");
    const std::size_t d = n * n;
    auto idx = [n](std::size_t i, std::size_t j) { return i * n + j; };
    PresentedBialgebra h;
    h.dim = d;
    h.mul = Tensor3(d, d, d);
    h.comul = Tensor3(d, d, d);
    h.unit = zero_vec(d);
    h.counit = Vec(d, Scalar(1));
    h.xi = LinearMap::identity(d);
    LinearMap s(d, d);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t e = idx(i, j);
            for (std::size_t l = 0; l < n; ++l) h.mul.at(e, idx(j, l), idx(i, l)) = 1;
            h.comul.at(e, e, e) = 1;
            s.at(idx(j, i), e) = 1;
        }
    for (std::size_t i = 0; i < n; ++i) h.unit[idx(i, i)] = 1;
    h.antipode = s;
    return finalize(std::move(h));
}

BialgebraPtr build_h2_remark() {
    PresentedBialgebra h;
    h.dim = 2;
    const std::size_t I = 0, E = 1;
    h.mul = Tensor3(2, 2, 2);
    h.mul.at(I, I, I) = 1;
    h.mul.at(I, E, E) = 1;
    h.mul.at(E, I, E) = 1;
    h.mul.at(E, E, E) = 1;
    h.unit = basis_vec(2, I);
    // Delta(I) = (I-E)(x)(I-E) + E(x)E, Delta(E) = E(x)E
    h.comul = Tensor3(2, 2, 2);
    h.comul.at(I, I, I) = 1;
    h.comul.at(I, I, E) = -1;
    h.comul.at(I, E, I) = -1;
    h.comul.at(I, E, E) = 2;
    h.comul.at(E, E, E) = 1;
    h.counit = {Scalar(2), Scalar(1)};
    h.xi = LinearMap::identity(2);
    return finalize(std::move(h));
}

BialgebraPtr build_example_210(const Scalar& lam, const std::string& xi_variant) {
    if (lam == 0) throw InvalidStructure("example-2.10 requires lambda != 0");
    const std::size_t n = 10;
    PresentedBialgebra h;
    h.dim = n;
    h.mul = Tensor3(n, n, n);
    // row i, column j: x_i x_j = c * x_k, encoded (c-code, k) with k 1-based;
    // c-code: 1 -> 1, -1 -> -1, 2 -> lam, -2 -> -lam, 0 -> zero product
    static const int tab[10][10][2] = {
        {{1, 1}, {1, 2}, {1, 3}, {2, 4}, {2, 5}, {1, 6}, {1, 7}, {1, 8}, {2, 9}, {2, 10}},
        {{1, 2}, {1, 2}, {1, 3}, {2, 4}, {2, 5}, {1, 7}, {1, 7}, {1, 8}, {2, 9}, {2, 10}},
        {{1, 3}, {1, 3}, {1, 2}, {-2, 5}, {-2, 4}, {1, 8}, {1, 8}, {1, 7}, {-2, 10}, {-2, 9}},
        {{2, 4}, {2, 4}, {2, 5}, {0, 0}, {0, 0}, {2, 9}, {2, 9}, {2, 10}, {0, 0}, {0, 0}},
        {{2, 5}, {2, 5}, {2, 4}, {0, 0}, {0, 0}, {2, 10}, {2, 10}, {2, 9}, {0, 0}, {0, 0}},
        {{1, 6}, {1, 7}, {1, 8}, {2, 9}, {2, 10}, {1, 6}, {1, 7}, {1, 8}, {2, 9}, {2, 10}},
        {{1, 7}, {1, 7}, {1, 8}, {2, 9}, {2, 10}, {1, 7}, {1, 7}, {1, 8}, {2, 9}, {2, 10}},
        {{1, 8}, {1, 8}, {1, 7}, {-2, 10}, {-2, 9}, {1, 8}, {1, 8}, {1, 7}, {-2, 10}, {-2, 9}},
        {{2, 9}, {2, 9}, {2, 10}, {0, 0}, {0, 0}, {2, 9}, {2, 9}, {2, 10}, {0, 0}, {0, 0}},
        {{2, 10}, {2, 10}, {2, 9}, {0, 0}, {0, 0}, {2, 10}, {2, 10}, {2, 9}, {0, 0}, {0, 0}}};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            int code = tab[i][j][0], k = tab[i][j][1];
            if (code == 0) continue;
            Scalar c = (code == 1 || code == -1) ? Scalar(code) : (code == 2 ? lam : -lam);
            h.mul.at(i, j, static_cast<std::size_t>(k - 1)) += c;
        }
    h.unit = basis_vec(n, 0);
    h.comul = Tensor3(n, n, n);
    // (i, coeff-numerator, lambda-power, a, b): Delta(x_i) += (num * lam^p) x_a (x) x_b
    struct DTerm {
        int i, num, p, a, b;
    };
    static const DTerm dterms[] = {
        // Delta(x_1): the 16-term square of (x_1 - x_6 ... ) pattern
        {1, 1, 0, 1, 1},   {1, -1, 0, 1, 6},  {1, -1, 0, 6, 1},  {1, 2, 0, 6, 6},
        {1, -1, 0, 1, 2},  {1, 1, 0, 1, 7},   {1, 1, 0, 6, 2},   {1, -2, 0, 6, 7},
        {1, -1, 0, 2, 1},  {1, 1, 0, 2, 6},   {1, 1, 0, 7, 1},   {1, -2, 0, 7, 6},
        {1, 2, 0, 2, 2},   {1, -2, 0, 2, 7},  {1, -2, 0, 7, 2},  {1, 4, 0, 7, 7},
        {2, 1, 0, 2, 2},   {2, -1, 0, 2, 7},  {2, -1, 0, 7, 2},  {2, 2, 0, 7, 7},
        {3, 1, 0, 3, 3},   {3, -1, 0, 3, 8},  {3, -1, 0, 8, 3},  {3, 2, 0, 8, 8},
        {4, 1, -1, 3, 4},  {4, -1, -1, 3, 9}, {4, -1, -1, 8, 4}, {4, 2, -1, 8, 9},
        {4, 1, -1, 4, 2},  {4, -1, -1, 4, 7}, {4, -1, -1, 9, 2}, {4, 2, -1, 9, 7},
        {5, 1, -1, 2, 5},  {5, -1, -1, 2, 10}, {5, -1, -1, 7, 5}, {5, 2, -1, 7, 10},
        {5, 1, -1, 5, 3},  {5, -1, -1, 5, 8}, {5, -1, -1, 10, 3}, {5, 2, -1, 10, 8},
        {6, 1, 0, 6, 6},   {6, -1, 0, 6, 7},  {6, -1, 0, 7, 6},  {6, 2, 0, 7, 7},
        {7, 1, 0, 7, 7},
        {8, 1, 0, 8, 8},
        {9, 1, -1, 8, 9},  {9, 1, -1, 9, 7},
        {10, 1, -1, 7, 10}, {10, 1, -1, 10, 8}};
    for (const auto& t : dterms) {
        Scalar c = Scalar(t.num);
        if (t.p == -1) c /= lam;
        h.comul.at(static_cast<std::size_t>(t.i - 1), static_cast<std::size_t>(t.a - 1),
                   static_cast<std::size_t>(t.b - 1)) += c;
    }
    h.counit = {Scalar(4), Scalar(2), Scalar(2), Scalar(0), Scalar(0),
                Scalar(2), Scalar(1), Scalar(1), Scalar(0), Scalar(0)};
    Vec d = {Scalar(1), Scalar(1), Scalar(1), lam, lam,
             Scalar(1), Scalar(1), Scalar(1), lam, lam};
    h.xi = LinearMap::diagonal(d);
    if (xi_variant == "printed") {
        h.xi.at(2, 7) = 1;  // xi(x_8) = x_3 + x_8
    } else if (xi_variant != "diagonal") {
        throw InvalidStructure("example-2.10: unknown xi variant " + xi_variant);
    }
    return finalize(std::move(h));
}

}  // namespace

FixtureId parse_fixture_name(const std::string& name) {
    FixtureId id;
    id.name = name;
    if (name == "example-2.10" || name == "h2-remark" || name == "trivial-1d") return id;
    const std::string prefix = "groupoid-pair-";
    if (name.rfind(prefix, 0) == 0) {
        const std::string tail = name.substr(prefix.size());
        std::size_t n = 0;
        auto [p, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), n);
        if (ec == std::errc() && p == tail.data() + tail.size() && n >= 1) {
            id.name = "groupoid-pair-n";
            id.n = n;
            return id;
        }
    }
    throw UnknownFixture("unknown fixture: " + name);
}

BialgebraPtr build_fixture(const FixtureId& id) {
    if (id.name == "trivial-1d") return build_trivial_1d();
    if (id.name == "h2-remark") return build_h2_remark();
    if (id.name == "example-2.10") return build_example_210(id.lambda, id.xi_variant);
    if (id.name == "groupoid-pair-n") return build_groupoid_pair(id.n);
    // allow a fully spelled groupoid name to arrive here too
    return build_fixture(parse_fixture_name(id.name));
}

BialgebraPtr dualize(const PresentedBialgebra& h) {
    const std::size_t n = h.dim;
    PresentedBialgebra d;
    d.dim = n;
    d.mul = Tensor3(n, n, n);
    d.comul = Tensor3(n, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                d.mul.at(i, j, k) = h.comul.at(k, i, j);
                d.comul.at(i, j, k) = h.mul.at(j, k, i);
            }
    d.unit = h.counit;
    d.counit = h.unit;
    d.xi = h.xi_inv.transpose();
    if (h.antipode) d.antipode = h.antipode->transpose();
    d.convention = h.convention;
    return finalize(std::move(d));
}

BialgebraPtr xi_square_twist(const PresentedBialgebra& h) {
    PresentedBialgebra t = h;
    t.comul = precompose_comul(h.comul, h.xi_pow(2));
    t.convention = Convention::Hom;
    return finalize(std::move(t));
}

BialgebraPtr xi_square_untwist(const PresentedBialgebra& b) {
    PresentedBialgebra t = b;
    t.comul = precompose_comul(b.comul, b.xi_pow(-2));
    t.convention = Convention::MonoidalHom;
    return finalize(std::move(t));
}

BialgebraPtr alpha_twist(const BialgebraPtr& b, const LinearMap& a) {
    const PresentedBialgebra& h = *b;
    if (h.xi != LinearMap::identity(h.dim))
        throw InvalidStructure("alpha_twist: input must have identity twist");
    MorphismCandidate cand{b, b, a};
    if (!all_passed(check_morphism(cand, /*check_s=*/false)))
        throw NotAMorphism("alpha_twist: a is not a unit/counit-preserving "
                           "bialgebra endomorphism");
    TensorElement delta1 = split_leg(TensorElement::from_vec(h.unit), 0, h.comul);
    TensorElement cond = apply_map(delta1, 0, a);  // a(1_1) (x) 1_2
    if (cond.data != delta1.data)
        throw ConditionFailed("alpha_twist: a(1_1) (x) 1_2 != Delta(1)", cond.data,
                              delta1.data);
    PresentedBialgebra t;
    t.dim = h.dim;
    t.mul = postcompose_mul(h.mul, a);
    t.unit = h.unit;
    t.comul = precompose_comul(h.comul, a);
    t.counit = h.counit;
    t.xi = a;
    t.convention = Convention::Hom;
    return finalize(std::move(t));
}

LinearMap groupoid_swap(std::size_t n) {
    const std::size_t d = n * n;
    auto s = [n](std::size_t i) { return n >= 2 ? (i == 0 ? 1 : i == 1 ? 0 : i) : i; };
    LinearMap m(d, d);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(s(i) * n + s(j), i * n + j) = 1;
    return m;
}

}  // namespace wmhh
