#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wmhh/tensor_ops.hpp"

namespace wmhh {

/// Minimal counterexample for a failed identity: the lexicographically first
/// basis tuple where the two sides disagree, plus both sides' coordinates.
struct Witness {
    std::vector<std::size_t> tuple;
    std::vector<std::size_t> out_dims;
    Vec lhs;
    Vec rhs;
};

enum class CheckStatus { Pass, Fail };

struct CheckReport {
    std::string identity_id;
    CheckStatus status = CheckStatus::Pass;
    std::optional<Witness> witness;
    double elapsed_sec = 0.0;

    bool passed() const { return status == CheckStatus::Pass; }
};

bool all_passed(const std::vector<CheckReport>& reports);

using EvalFn = std::function<TensorElement(const TensorElement&)>;

/// Sweeps all basis tuples of the given input shape, evaluating both sides.
/// Multilinearity of every checked identity makes the basis sweep equivalent
/// to the universally quantified statement.
CheckReport sweep_check(const std::string& identity_id,
                        const std::vector<std::size_t>& in_dims, const EvalFn& lhs,
                        const EvalFn& rhs);

/// Reports equality of two maps, witness = first differing column.
CheckReport matrix_check(const std::string& identity_id, const LinearMap& lhs,
                         const LinearMap& rhs);

/// Reports a bare condition (used for membership/structural checks).
CheckReport condition_check(const std::string& identity_id, bool holds);

}  // namespace wmhh
