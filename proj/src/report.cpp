#include "wmhh/report.hpp"

#include <chrono>

namespace wmhh {

bool all_passed(const std::vector<CheckReport>& reports) {
    for (const auto& r : reports)
        if (!r.passed()) return false;
    return true;
}

CheckReport sweep_check(const std::string& identity_id,
                        const std::vector<std::size_t>& in_dims, const EvalFn& lhs,
                        const EvalFn& rhs) {
    auto t0 = std::chrono::steady_clock::now();
    CheckReport rep;
    rep.identity_id = identity_id;
    std::vector<std::size_t> tuple(in_dims.size(), 0);
    auto advance = [&]() {
        for (std::size_t pos = tuple.size(); pos-- > 0;) {
            if (++tuple[pos] < in_dims[pos]) return true;
            tuple[pos] = 0;
        }
        return false;
    };
    // lexicographic sweep; empty in_dims means a single (nullary) evaluation
    do {
        TensorElement e = TensorElement::basis(in_dims, tuple);
        TensorElement l = lhs(e);
        TensorElement r = rhs(e);
        if (l.dims != r.dims) throw ShapeError("sweep_check: sides have different shapes");
        if (l.data != r.data) {
            rep.status = CheckStatus::Fail;
            Witness w;
            w.tuple = tuple;
            w.out_dims = l.dims;
            w.lhs = l.data;
            w.rhs = r.data;
            rep.witness = w;
            break;
        }
    } while (advance());
    rep.elapsed_sec =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

CheckReport matrix_check(const std::string& identity_id, const LinearMap& lhs,
                         const LinearMap& rhs) {
    CheckReport rep;
    rep.identity_id = identity_id;
    if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols())
        throw ShapeError("matrix_check: shape mismatch");
    for (std::size_t c = 0; c < lhs.cols(); ++c) {
        Vec l = lhs.column(c), r = rhs.column(c);
        if (l != r) {
            rep.status = CheckStatus::Fail;
            Witness w;
            w.tuple = {c};
            w.out_dims = {lhs.rows()};
            w.lhs = l;
            w.rhs = r;
            rep.witness = w;
            break;
        }
    }
    return rep;
}

CheckReport condition_check(const std::string& identity_id, bool holds) {
    CheckReport rep;
    rep.identity_id = identity_id;
    rep.status = holds ? CheckStatus::Pass : CheckStatus::Fail;
    return rep;
}

}  // namespace wmhh
