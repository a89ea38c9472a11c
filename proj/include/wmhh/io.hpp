#pragma once

#include <json.hpp>
#include <string>
#include <utility>
#include <vector>

#include "wmhh/braided.hpp"

namespace wmhh {

using Json = nlohmann::ordered_json;

/// Definition-file and report-format errors (schema violations, bad rational
/// literals, unresolved references); messages name the offending field.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---- definition files -----------------------------------------------------

/// Serializes a bialgebra (kind "hopf" when an antipode is present).
Json to_json(const PresentedBialgebra& h);

BialgebraPtr bialgebra_from_json(const Json& j);

struct NamedAutomorphism {
    std::string name;
    std::string host_path;  // as written in the file
    LinearMap matrix;
};

Json to_json(const NamedAutomorphism& a);
NamedAutomorphism automorphism_from_json(const Json& j);

/// YD-module files reference their host by path and their component
/// automorphisms by name, resolved against a list of automorphism files.
Json yd_module_to_json(const YDModule& m, const std::string& host_path,
                       const std::string& alpha_name, const std::string& beta_name,
                       const std::vector<std::string>& automorphism_paths);
YDModule load_yd_module(const std::string& path);

Json load_json(const std::string& path);
void write_json(const std::string& path, const Json& j);

/// Dispatches on the "kind" discriminator ("bialgebra" or "hopf").
BialgebraPtr load_bialgebra(const std::string& path);

// ---- verification pipeline ------------------------------------------------

enum class Suite { Algebra, Coalgebra, Weak, Counital, Antipode, Yd, Entwining, Braided, All };

Suite parse_suite(const std::string& name);

struct SuiteGroup {
    std::string name;
    std::vector<CheckReport> reports;
};

struct VerificationReport {
    std::string target;
    std::string suite;
    std::vector<SuiteGroup> groups;
    std::vector<std::pair<std::string, std::string>> skipped;  // group, reason

    bool any_fail() const;
    /// 0 all-pass, 1 any-fail, 2 skipped-with-reason present.
    int exit_code() const;
};

/// Runs the selected checker groups on a host structure. Inapplicable groups
/// (missing antipode, wrong convention) are reported as skipped-with-reason.
VerificationReport run_suite(const BialgebraPtr& h, Suite s, const std::string& target);

/// Runs the module-level groups (yd, entwining) on a YD module.
VerificationReport run_suite(const YDModule& m, Suite s, const std::string& target);

/// Deterministic machine-readable rendering (no timestamps).
Json report_json(const VerificationReport& r);

/// Human-readable rendering.
std::string report_text(const VerificationReport& r);

/// Re-renders a structured report as text (the `report` CLI verb).
std::string report_text(const Json& structured);

}  // namespace wmhh
