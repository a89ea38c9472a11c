#include "wmhh/io.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

namespace wmhh {

namespace {

const Json& field(const Json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) throw IoError(std::string("missing field: ") + name);
    return *it;
}

std::size_t size_field(const Json& j, const char* name) {
    const Json& f = field(j, name);
    if (!f.is_number_unsigned() || f.get<std::size_t>() == 0)
        throw IoError(std::string("field ") + name + " must be a positive integer");
    return f.get<std::size_t>();
}

std::string string_field(const Json& j, const char* name) {
    const Json& f = field(j, name);
    if (!f.is_string()) throw IoError(std::string("field ") + name + " must be a string");
    return f.get<std::string>();
}

Scalar scalar_at(const Json& j, const std::string& path) {
    if (!j.is_string()) throw IoError("expected a rational string at " + path);
    try {
        return parse_scalar(j.get<std::string>());
    } catch (const ParseError& e) {
        throw IoError("bad rational literal at " + path + ": " + e.what());
    }
}

const Json& array_at(const Json& j, std::size_t len, const std::string& path) {
    if (!j.is_array() || j.size() != len)
        throw IoError("expected an array of length " + std::to_string(len) + " at " + path);
    return j;
}

Json vec_to_json(const Vec& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_string(x));
    return a;
}

Vec vec_from_json(const Json& j, std::size_t dim, const std::string& path) {
    array_at(j, dim, path);
    Vec v(dim);
    for (std::size_t i = 0; i < dim; ++i)
        v[i] = scalar_at(j[i], path + "[" + std::to_string(i) + "]");
    return v;
}

Json matrix_to_json(const LinearMap& m) {
    Json a = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m.at(r, c)));
        a.push_back(std::move(row));
    }
    return a;
}

LinearMap matrix_from_json(const Json& j, std::size_t rows, std::size_t cols,
                           const std::string& path) {
    array_at(j, rows, path);
    LinearMap m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        std::string rp = path + "[" + std::to_string(r) + "]";
        array_at(j[r], cols, rp);
        for (std::size_t c = 0; c < cols; ++c)
            m.at(r, c) = scalar_at(j[r][c], rp + "[" + std::to_string(c) + "]");
    }
    return m;
}

Json tensor3_to_json(const Tensor3& t) {
    Json a = Json::array();
    for (std::size_t i = 0; i < t.d0(); ++i) {
        Json b = Json::array();
        for (std::size_t j = 0; j < t.d1(); ++j) {
            Json c = Json::array();
            for (std::size_t k = 0; k < t.d2(); ++k) c.push_back(to_string(t.at(i, j, k)));
            b.push_back(std::move(c));
        }
        a.push_back(std::move(b));
    }
    return a;
}

Tensor3 tensor3_from_json(const Json& j, std::size_t d0, std::size_t d1, std::size_t d2,
                          const std::string& path) {
    array_at(j, d0, path);
    Tensor3 t(d0, d1, d2);
    for (std::size_t i = 0; i < d0; ++i) {
        std::string ip = path + "[" + std::to_string(i) + "]";
        array_at(j[i], d1, ip);
        for (std::size_t k = 0; k < d1; ++k) {
            std::string kp = ip + "[" + std::to_string(k) + "]";
            array_at(j[i][k], d2, kp);
            for (std::size_t l = 0; l < d2; ++l)
                t.at(i, k, l) = scalar_at(j[i][k][l], kp + "[" + std::to_string(l) + "]");
        }
    }
    return t;
}

std::string resolve_ref(const std::string& referencing_file, const std::string& ref) {
    std::filesystem::path p(ref);
    if (p.is_absolute()) return ref;
    return (std::filesystem::path(referencing_file).parent_path() / p).string();
}

}  // namespace

Json to_json(const PresentedBialgebra& h) {
    Json j;
    j["schema_version"] = "1";
    j["kind"] = h.has_antipode() ? "hopf" : "bialgebra";
    j["convention"] = h.convention == Convention::MonoidalHom ? "monoidal-hom" : "hom";
    j["dim"] = h.dim;
    j["mul"] = tensor3_to_json(h.mul);
    j["unit"] = vec_to_json(h.unit);
    j["comul"] = tensor3_to_json(h.comul);
    j["counit"] = vec_to_json(h.counit);
    j["xi"] = matrix_to_json(h.xi);
    if (h.has_antipode()) j["antipode"] = matrix_to_json(*h.antipode);
    return j;
}

BialgebraPtr bialgebra_from_json(const Json& j) {
    std::string kind = string_field(j, "kind");
    if (kind != "bialgebra" && kind != "hopf")
        throw IoError("field kind: expected bialgebra or hopf, got " + kind);
    std::string conv = string_field(j, "convention");
    if (conv != "monoidal-hom" && conv != "hom")
        throw IoError("field convention: expected monoidal-hom or hom, got " + conv);
    PresentedBialgebra h;
    h.dim = size_field(j, "dim");
    const std::size_t n = h.dim;
    h.convention = conv == "monoidal-hom" ? Convention::MonoidalHom : Convention::Hom;
    h.mul = tensor3_from_json(field(j, "mul"), n, n, n, "mul");
    h.unit = vec_from_json(field(j, "unit"), n, "unit");
    h.comul = tensor3_from_json(field(j, "comul"), n, n, n, "comul");
    h.counit = vec_from_json(field(j, "counit"), n, "counit");
    h.xi = matrix_from_json(field(j, "xi"), n, n, "xi");
    if (j.contains("antipode"))
        h.antipode = matrix_from_json(j["antipode"], n, n, "antipode");
    else if (kind == "hopf")
        throw IoError("kind hopf requires field antipode");
    return finalize(std::move(h));
}

Json to_json(const NamedAutomorphism& a) {
    Json j;
    j["schema_version"] = "1";
    j["kind"] = "automorphism";
    j["name"] = a.name;
    j["host"] = a.host_path;
    j["matrix"] = matrix_to_json(a.matrix);
    return j;
}

NamedAutomorphism automorphism_from_json(const Json& j) {
    if (string_field(j, "kind") != "automorphism")
        throw IoError("field kind: expected automorphism");
    NamedAutomorphism a;
    a.name = string_field(j, "name");
    a.host_path = string_field(j, "host");
    const Json& m = field(j, "matrix");
    if (!m.is_array() || m.empty()) throw IoError("field matrix must be a non-empty array");
    a.matrix = matrix_from_json(m, m.size(), m.size(), "matrix");
    return a;
}

Json yd_module_to_json(const YDModule& m, const std::string& host_path,
                       const std::string& alpha_name, const std::string& beta_name,
                       const std::vector<std::string>& automorphism_paths) {
    Json j;
    j["schema_version"] = "1";
    j["kind"] = "yd_module";
    j["host"] = host_path;
    j["automorphisms"] = automorphism_paths;
    j["component"] = Json{{"alpha", alpha_name}, {"beta", beta_name}};
    j["dim"] = m.dim;
    j["action"] = tensor3_to_json(m.action);
    j["coaction"] = tensor3_to_json(m.coaction);
    j["mu"] = matrix_to_json(m.mu);
    return j;
}

YDModule load_yd_module(const std::string& path) {
    Json j = load_json(path);
    if (string_field(j, "kind") != "yd_module") throw IoError("field kind: expected yd_module");
    BialgebraPtr host = load_bialgebra(resolve_ref(path, string_field(j, "host")));
    const std::size_t n = host->dim;

    std::map<std::string, LinearMap> autos{{"id", LinearMap::identity(n)}};
    if (j.contains("automorphisms")) {
        const Json& files = j["automorphisms"];
        if (!files.is_array()) throw IoError("field automorphisms must be an array of paths");
        for (std::size_t i = 0; i < files.size(); ++i) {
            if (!files[i].is_string())
                throw IoError("automorphisms[" + std::to_string(i) + "] must be a path string");
            NamedAutomorphism a =
                automorphism_from_json(load_json(resolve_ref(path, files[i].get<std::string>())));
            if (a.matrix.rows() != n)
                throw IoError("automorphism " + a.name + ": dimension mismatch with host");
            autos.insert_or_assign(a.name, a.matrix);
        }
    }
    auto resolve_auto = [&](const std::string& name) -> const LinearMap& {
        auto it = autos.find(name);
        if (it == autos.end()) throw IoError("unresolved automorphism reference: " + name);
        return it->second;
    };
    const Json& comp = field(j, "component");
    const LinearMap& alpha = resolve_auto(string_field(comp, "alpha"));
    const LinearMap& beta = resolve_auto(string_field(comp, "beta"));

    YDModule m;
    m.host = host;
    m.component = make_automorphism_pair(host, alpha, beta);
    m.dim = size_field(j, "dim");
    m.action = tensor3_from_json(field(j, "action"), n, m.dim, m.dim, "action");
    m.coaction = tensor3_from_json(field(j, "coaction"), m.dim, m.dim, n, "coaction");
    m.mu = matrix_from_json(field(j, "mu"), m.dim, m.dim, "mu");
    return finalize_module(std::move(m));
}

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open file: " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw IoError("invalid JSON in " + path + ": " + e.what());
    }
}

void write_json(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open file for writing: " + path);
    out << j.dump(2) << '\n';
}

BialgebraPtr load_bialgebra(const std::string& path) { return bialgebra_from_json(load_json(path)); }

// ---- verification pipeline ------------------------------------------------

Suite parse_suite(const std::string& name) {
    if (name == "algebra") return Suite::Algebra;
    if (name == "coalgebra") return Suite::Coalgebra;
    if (name == "weak") return Suite::Weak;
    if (name == "counital") return Suite::Counital;
    if (name == "antipode") return Suite::Antipode;
    if (name == "yd") return Suite::Yd;
    if (name == "entwining") return Suite::Entwining;
    if (name == "braided") return Suite::Braided;
    if (name == "all") return Suite::All;
    throw IoError("unknown suite: " + name);
}

bool VerificationReport::any_fail() const {
    for (const auto& g : groups)
        if (!all_passed(g.reports)) return true;
    return false;
}

int VerificationReport::exit_code() const {
    if (any_fail()) return 1;
    if (!skipped.empty()) return 2;
    return 0;
}

namespace {

bool selected(Suite s, Suite want) { return s == want || s == Suite::All; }

/// Runs fn and appends its reports; structural exceptions from object
/// construction become skipped-with-reason entries.
template <typename Fn>
void group_or_skip(VerificationReport& r, const std::string& name, Fn&& fn) {
    try {
        r.groups.push_back({name, fn()});
    } catch (const std::runtime_error& e) {
        r.skipped.emplace_back(name, e.what());
    }
}

}  // namespace

VerificationReport run_suite(const BialgebraPtr& h, Suite s, const std::string& target) {
    VerificationReport r;
    r.target = target;
    r.suite = s == Suite::All ? "all" : "";
    switch (s) {
        case Suite::Algebra: r.suite = "algebra"; break;
        case Suite::Coalgebra: r.suite = "coalgebra"; break;
        case Suite::Weak: r.suite = "weak"; break;
        case Suite::Counital: r.suite = "counital"; break;
        case Suite::Antipode: r.suite = "antipode"; break;
        case Suite::Yd: r.suite = "yd"; break;
        case Suite::Entwining: r.suite = "entwining"; break;
        case Suite::Braided: r.suite = "braided"; break;
        case Suite::All: break;
    }

    if (selected(s, Suite::Algebra)) r.groups.push_back({"algebra", check_hom_algebra(*h)});
    if (selected(s, Suite::Coalgebra)) r.groups.push_back({"coalgebra", check_hom_coalgebra(*h)});
    if (selected(s, Suite::Weak)) r.groups.push_back({"weak", check_weak_compat(*h)});

    if (selected(s, Suite::Counital)) {
        if (h->convention != Convention::MonoidalHom) {
            r.skipped.emplace_back("counital",
                                   "counital maps are defined in the monoidal-Hom convention");
        } else {
            try {
                CounitalMaps cm = counital_maps(*h);
                r.groups.push_back({"counital", check_counital_identities(*h, cm)});
            } catch (const DefinitionMismatch&) {
                r.groups.push_back(
                    {"counital",
                     {condition_check("Eq(2.9)(2.10) counital definition agreement", false)}});
            }
        }
    }

    if (selected(s, Suite::Antipode)) {
        if (!h->has_antipode())
            r.skipped.emplace_back("antipode", "no antipode in the definition");
        else
            r.groups.push_back({"antipode", check_antipode(*h)});
    }

    if (selected(s, Suite::Yd))
        group_or_skip(r, "yd", [&] {
            BraidedObject u = make_unit_module(h);
            std::vector<CheckReport> reps = check_yd(u.mod);
            for (auto& rep : check_yd_equivalent_form(u.mod)) reps.push_back(std::move(rep));
            return reps;
        });

    if (selected(s, Suite::Entwining))
        group_or_skip(r, "entwining", [&] {
            const std::size_t n = h->dim;
            AutomorphismPair p =
                make_automorphism_pair(h, LinearMap::identity(n), LinearMap::identity(n));
            return check_entwining(build_entwining(h, p));
        });

    if (selected(s, Suite::Braided))
        group_or_skip(r, "braided", [&] {
            BraidedObject u = make_unit_module(h);
            return check_braiding_laws(u, u, u);
        });

    return r;
}

VerificationReport run_suite(const YDModule& m, Suite s, const std::string& target) {
    VerificationReport r;
    r.target = target;
    switch (s) {
        case Suite::Yd: r.suite = "yd"; break;
        case Suite::Entwining: r.suite = "entwining"; break;
        case Suite::All: r.suite = "all"; break;
        default: throw IoError("suite not applicable to a yd_module target");
    }
    if (selected(s, Suite::Yd))
        group_or_skip(r, "yd", [&] {
            std::vector<CheckReport> reps = check_yd(m);
            for (auto& rep : check_yd_equivalent_form(m)) reps.push_back(std::move(rep));
            return reps;
        });
    if (selected(s, Suite::Entwining))
        group_or_skip(r, "entwining", [&] {
            Entwining e = build_entwining(m.host, m.component);
            std::vector<CheckReport> reps = check_entwining(e);
            for (auto& rep : check_entwined_module(m, e)) reps.push_back(std::move(rep));
            return reps;
        });
    return r;
}

Json report_json(const VerificationReport& r) {
    Json j;
    j["schema_version"] = "1";
    j["target"] = r.target;
    j["suite"] = r.suite;
    j["verdict"] = r.any_fail() ? "fail" : (r.skipped.empty() ? "pass" : "skip");
    Json groups = Json::array();
    for (const auto& g : r.groups) {
        Json gj;
        gj["name"] = g.name;
        Json reps = Json::array();
        for (const auto& rep : g.reports) {
            Json rj;
            rj["identity"] = rep.identity_id;
            rj["status"] = rep.passed() ? "pass" : "fail";
            if (rep.witness) {
                Json w;
                w["tuple"] = rep.witness->tuple;
                w["out_dims"] = rep.witness->out_dims;
                w["lhs"] = vec_to_json(rep.witness->lhs);
                w["rhs"] = vec_to_json(rep.witness->rhs);
                rj["witness"] = std::move(w);
            }
            reps.push_back(std::move(rj));
        }
        gj["reports"] = std::move(reps);
        groups.push_back(std::move(gj));
    }
    j["groups"] = std::move(groups);
    Json sk = Json::array();
    for (const auto& [grp, reason] : r.skipped)
        sk.push_back(Json{{"group", grp}, {"reason", reason}});
    j["skipped"] = std::move(sk);
    return j;
}

std::string report_text(const VerificationReport& r) { return report_text(report_json(r)); }

std::string report_text(const Json& j) {
    std::ostringstream out;
    out << field(j, "target").get<std::string>() << " (suite: "
        << field(j, "suite").get<std::string>()
        << "): " << field(j, "verdict").get<std::string>() << "\n";
    for (const auto& g : field(j, "groups")) {
        out << "  group " << field(g, "name").get<std::string>() << "\n";
        for (const auto& rep : field(g, "reports")) {
            bool ok = field(rep, "status").get<std::string>() == "pass";
            out << "    [" << (ok ? "PASS" : "FAIL") << "] "
                << field(rep, "identity").get<std::string>() << "\n";
            if (!ok && rep.contains("witness")) {
                const Json& w = rep["witness"];
                out << "      witness tuple=" << w["tuple"].dump()
                    << " lhs=" << w["lhs"].dump() << " rhs=" << w["rhs"].dump() << "\n";
            }
        }
    }
    for (const auto& sk : field(j, "skipped"))
        out << "  [SKIP] " << field(sk, "group").get<std::string>() << ": "
            << field(sk, "reason").get<std::string>() << "\n";
    return out.str();
}

}  // namespace wmhh
