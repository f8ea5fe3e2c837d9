#include "wronski/cli.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

namespace wronski::cli {

namespace {

Rational rational_of(const Json& j, const std::string& what) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw DomainError(what + ": expected a \"p/q\" string");
}

long integer_of(const Json& j, const std::string& what) {
    if (!j.is_number_integer()) throw DomainError(what + ": expected an integer");
    return j.get<long>();
}

double real_of(const Json& j, const std::string& what) {
    if (!j.is_number()) throw DomainError(what + ": expected a number");
    return j.get<double>();
}

std::vector<Rational> rationals_of(const Json& j, const std::string& what) {
    if (!j.is_array()) throw DomainError(what + ": expected a list");
    std::vector<Rational> out;
    for (const auto& x : j) out.push_back(rational_of(x, what));
    return out;
}

Partition partition_of(const Json& j) {
    if (!j.is_array()) throw DomainError("lambda: expected a list of parts");
    std::vector<int> parts;
    for (const auto& x : j) parts.push_back(static_cast<int>(integer_of(x, "lambda")));
    return Partition(std::move(parts));
}

Json rationals_json(const std::vector<Rational>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(format_rational(x));
    return a;
}

Json partition_json(const Partition& p) { return Json(p.parts()); }

void check_keys(const Json& j, const std::set<std::string>& allowed, const std::string& where) {
    for (const auto& [key, value] : j.items())
        if (!allowed.count(key)) throw DomainError(where + ": unknown key \"" + key + "\"");
}

Tolerances tolerances_of(const Json& j) {
    if (!j.is_object()) throw DomainError("tolerances: expected an object");
    check_keys(j,
               {"cluster_gap", "cluster_merge", "eigenvalue", "reconstruction", "orthogonality", "sign",
                "max_rerandomizations"},
               "tolerances");
    Tolerances t;
    if (j.contains("cluster_gap")) t.cluster_gap = real_of(j["cluster_gap"], "cluster_gap");
    if (j.contains("cluster_merge")) t.cluster_merge = real_of(j["cluster_merge"], "cluster_merge");
    if (j.contains("eigenvalue")) t.eigenvalue = real_of(j["eigenvalue"], "eigenvalue");
    if (j.contains("reconstruction")) t.reconstruction = real_of(j["reconstruction"], "reconstruction");
    if (j.contains("orthogonality")) t.orthogonality = real_of(j["orthogonality"], "orthogonality");
    if (j.contains("sign")) t.sign = real_of(j["sign"], "sign");
    if (j.contains("max_rerandomizations"))
        t.max_rerandomizations = static_cast<int>(integer_of(j["max_rerandomizations"], "max_rerandomizations"));
    return t;
}

Json tolerances_json(const Tolerances& t) {
    return Json{{"cluster_gap", t.cluster_gap},     {"cluster_merge", t.cluster_merge},
                {"eigenvalue", t.eigenvalue},       {"reconstruction", t.reconstruction},
                {"orthogonality", t.orthogonality}, {"sign", t.sign},
                {"max_rerandomizations", t.max_rerandomizations}};
}

std::vector<Rational> default_params(int count) {
    std::vector<Rational> v;
    for (int i = 1; i <= count; ++i) v.emplace_back(i);
    return v;
}

Json matrix_json(const ExactOperator& A, bool exact) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < A.dim(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < A.dim(); ++c) {
            if (exact)
                row.push_back(format_rational(A(r, c)));
            else
                row.push_back(to_double(A(r, c)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Rational sample_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-6, 6), den(1, 3);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

// Spaces for the quasi-exponential suites: the configured one, or seeded random ones whose
// Wronskian does not vanish at t.
std::vector<QuasiExpSpace> suite_spaces(const RunConfig& cfg) {
    if (cfg.space) return {*cfg.space};
    std::mt19937_64 rng(cfg.seed);
    std::vector<QuasiExpSpace> out;
    const int N = std::min(cfg.instance.N, 3);
    for (int i = 0; static_cast<int>(out.size()) < cfg.samples; ++i) {
        auto V = random_space(rng, N, i % 2 == 0);
        if (sgn(plucker_vector(V, cfg.t, 0).at(Partition{})) != 0) out.push_back(std::move(V));
    }
    return out;
}

Json identity_json(const IdentityReport& r) {
    return Json{{"holds", r.holds},
                {"mode", r.mode},
                {"lhs", format_rational(r.lhs)},
                {"rhs", format_rational(r.rhs)},
                {"max_discrepancy", format_rational(r.max_discrepancy)}};
}

Outcome verify_routes(const RunConfig& cfg) {
    Outcome o;
    const auto& inst = cfg.instance;
    const ColumnFamily columns = build_columns(inst, std::max(cfg.bound, 1));
    Json entries = Json::array();
    for (const auto& lam : partitions_up_to(cfg.bound)) {
        const auto def = build_T_definitional(lam, inst);
        const auto tr = build_T_partial_trace(lam, inst);
        bool jt_ok = false;
        std::string note;
        try {
            jt_ok = build_T_jacobi_trudi(lam, inst, columns) == def;
        } catch (const IdentityViolation& e) {
            note = e.what();
        }
        const bool ok = (tr == def) && jt_ok;
        ++o.checks;
        if (!ok) ++o.failures;
        Json e{{"lambda", partition_json(lam)},
               {"degree", def.degree()},
               {"partial_trace", tr == def},
               {"jacobi_trudi", jt_ok}};
        if (!note.empty()) e["note"] = note;
        entries.push_back(std::move(e));
    }
    o.report["entries"] = std::move(entries);
    return o;
}

Outcome verify_commute(const RunConfig& cfg) {
    Outcome o;
    const int b = std::min(cfg.bound, 3);
    std::vector<std::pair<Partition, OperatorPolynomial>> Ts;
    for (const auto& lam : partitions_up_to(b)) Ts.emplace_back(lam, build_T_definitional(lam, cfg.instance));
    std::mt19937_64 rng(cfg.seed);
    Json samples = Json::array();
    for (int s = 0; s < 3; ++s) {
        const Rational u = sample_rational(rng), v = sample_rational(rng);
        std::vector<ExactOperator> at_u, at_v;
        for (const auto& [lam, T] : Ts) {
            at_u.push_back(T(u));
            at_v.push_back(T(v));
        }
        long bad = 0;
        for (std::size_t a = 0; a < Ts.size(); ++a)
            for (std::size_t c = 0; c < Ts.size(); ++c) {
                ++o.checks;
                if (!(at_u[a] * at_v[c] == at_v[c] * at_u[a])) ++bad;
            }
        o.failures += bad;
        samples.push_back(Json{{"u", format_rational(u)}, {"v", format_rational(v)}, {"failures", bad}});
    }
    o.report["partition_bound"] = b;
    o.report["samples"] = std::move(samples);
    return o;
}

Outcome verify_jt(const RunConfig& cfg, bool dual) {
    Outcome o;
    Json spaces = Json::array();
    for (const auto& V : suite_spaces(cfg)) {
        Json entries = Json::array();
        for (const auto& lam : partitions_up_to(cfg.bound)) {
            const int m0 = dual ? std::max(1, lam[0]) : std::max(1, lam.length());
            for (int m : {m0, m0 + 1}) {
                const auto r = dual ? verify_dual_jacobi_trudi(V, lam, m, cfg.t) : verify_jacobi_trudi(V, lam, m, cfg.t);
                ++o.checks;
                if (!r.holds) ++o.failures;
                Json e = identity_json(r);
                e["lambda"] = partition_json(lam);
                e["m"] = m;
                entries.push_back(std::move(e));
            }
        }
        spaces.push_back(Json{{"space", to_json(V)}, {"entries", std::move(entries)}});
    }
    o.report["t"] = format_rational(cfg.t);
    o.report["spaces"] = std::move(spaces);
    return o;
}

Outcome verify_translation(const RunConfig& cfg) {
    Outcome o;
    Json spaces = Json::array();
    for (const auto& V : suite_spaces(cfg)) {
        Json entries = Json::array();
        for (const auto& mu : partitions_up_to(cfg.bound)) {
            const auto r = verify_translation_identity(V, mu, cfg.t, cfg.bound);
            ++o.checks;
            if (!r.holds) ++o.failures;
            Json e = identity_json(r);
            e["mu"] = partition_json(mu);
            entries.push_back(std::move(e));
        }
        spaces.push_back(Json{{"space", to_json(V)}, {"entries", std::move(entries)}});
    }
    o.report["t"] = format_rational(cfg.t);
    o.report["spaces"] = std::move(spaces);
    return o;
}

Outcome verify_beta(const RunConfig& cfg) {
    Outcome o;
    GaudinInstance zero = cfg.instance;
    zero.h.assign(zero.h.size(), Rational(0));
    Json entries = Json::array();
    for (const auto& lam : partitions_up_to(cfg.bound)) {
        const bool ok = build_T_definitional(lam, zero) == build_beta(lam, zero);
        ++o.checks;
        if (!ok) ++o.failures;
        entries.push_back(Json{{"lambda", partition_json(lam)}, {"agrees", ok}});
    }
    o.report["entries"] = std::move(entries);
    return o;
}

Outcome verify_traces(const RunConfig& cfg) {
    Outcome o;
    const auto rep = verify_trace_identities(cfg.instance.N, std::max(cfg.bound, 1), 2, cfg.seed);
    Json ids = Json::array();
    for (const auto& i : rep.identities) {
        o.checks += i.checked;
        o.failures += i.failed;
        ids.push_back(Json{{"identity", i.name}, {"checked", i.checked}, {"failed", i.failed}});
    }
    o.report["max_N"] = cfg.instance.N;
    o.report["max_L"] = std::max(cfg.bound, 1);
    o.report["max_K"] = 2;
    o.report["identities"] = std::move(ids);
    return o;
}

Outcome verify_psd(const RunConfig& cfg) {
    Outcome o;
    const auto rep = verify_psd_theorem(cfg.instance, cfg.t, cfg.bound);
    Json entries = Json::array();
    for (const auto& e : rep.entries) {
        ++o.checks;
        if (!e.ok) ++o.failures;
        Json j{{"lambda", partition_json(e.lambda)},
               {"verdict", to_string(e.verdict)},
               {"required", to_string(e.required)},
               {"ok", e.ok},
               {"matrix_hash", e.certificate.matrix_hash},
               {"char_poly", rationals_json(e.certificate.char_poly)}};
        if (!e.certificate.leading_minors.empty()) j["leading_minors"] = rationals_json(e.certificate.leading_minors);
        if (!e.certificate.witness.empty()) {
            j["witness"] = rationals_json(e.certificate.witness);
            j["witness_value"] = format_rational(e.certificate.witness_value);
        }
        entries.push_back(std::move(j));
    }
    o.report["psd_hypotheses"] = rep.psd_hypotheses;
    o.report["pd_hypotheses"] = rep.pd_hypotheses;
    o.report["entries"] = std::move(entries);
    if (!rep.psd_hypotheses) {
        o.hypotheses_unmet = true;
        o.warnings.push_back("hypotheses unmet: needs h_i >= 0 and t >= max(-z_k); verdicts are informational");
    }
    return o;
}

Json reconstruction_json(const ReconstructionReport& r) {
    return Json{{"order", r.order},
                {"wronskian_residual", r.wronskian_residual},
                {"plucker_residual", r.plucker_residual},
                {"fit_residual", r.fit_residual},
                {"passed", r.passed},
                {"plucker", to_json(r.plucker)}};
}

Outcome verify_universal(const RunConfig& cfg) {
    Outcome o;
    const auto rep = verify_universal_coordinates(cfg.instance, cfg.t, cfg.bound, cfg.truncation, cfg.seed, cfg.tol);
    Json spaces = Json::array();
    for (const auto& s : rep.spaces) {
        ++o.checks;
        if (!s.passed) ++o.failures;
        Json j = reconstruction_json(s.reconstruction);
        j["dim"] = s.dim;
        j["link_residual"] = s.link_residual;
        j["passed"] = s.passed;
        spaces.push_back(std::move(j));
    }
    o.report["attempts"] = rep.attempts;
    o.report["total_dim"] = rep.total_dim;
    o.report["max_orthogonality"] = rep.max_orthogonality;
    o.report["spaces"] = std::move(spaces);
    if (!rep.passed && o.failures == 0) ++o.failures;
    return o;
}

Outcome verify_positivity_suite(const RunConfig& cfg) {
    Outcome o;
    const auto rep = verify_positivity(cfg.instance, cfg.t, cfg.bound, cfg.truncation, cfg.seed, cfg.tol);
    o.checks = static_cast<long>(rep.spaces);
    o.failures = static_cast<long>(rep.spaces - rep.one_signed);
    o.report["hypotheses"] = rep.hypotheses;
    o.report["spaces"] = rep.spaces;
    o.report["one_signed"] = rep.one_signed;
    o.report["worst_violation"] = rep.worst_violation;
    if (!rep.hypotheses) {
        o.hypotheses_unmet = true;
        o.failures = 0;
        o.warnings.push_back("hypotheses unmet: needs h_i >= 0 and t >= max(-z_k); signs are informational");
    }
    return o;
}

bool exact_suite(const std::string& suite) { return suite != "universal" && suite != "positivity"; }

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json parse_json_file(const std::string& path) {
    try {
        return Json::parse(read_file(path));
    } catch (const Json::parse_error& e) {
        throw DomainError(path + ": " + e.what());
    }
}

}  // namespace

RunConfig default_config() {
    RunConfig c;
    c.instance = GaudinInstance{2, 2, default_params(2), default_params(2)};
    return c;
}

RunConfig parse_config(const Json& j) {
    if (!j.is_object()) throw DomainError("config: expected an object");
    check_keys(j,
               {"N", "n", "h", "z", "t", "bound", "truncation", "tolerances", "seed", "backend", "lambda", "M", "k",
                "samples", "space"},
               "config");
    RunConfig c = default_config();
    auto& g = c.instance;
    if (j.contains("N")) g.N = static_cast<int>(integer_of(j["N"], "N"));
    if (j.contains("n")) g.n = static_cast<int>(integer_of(j["n"], "n"));
    if (g.N < 1 || g.n < 0) throw DomainError("config: need N >= 1 and n >= 0");
    g.h = j.contains("h") ? rationals_of(j["h"], "h") : default_params(g.N);
    g.z = j.contains("z") ? rationals_of(j["z"], "z") : default_params(g.n);
    g.validate();
    if (j.contains("t")) c.t = rational_of(j["t"], "t");
    if (j.contains("bound")) c.bound = static_cast<int>(integer_of(j["bound"], "bound"));
    if (j.contains("truncation")) c.truncation = static_cast<int>(integer_of(j["truncation"], "truncation"));
    if (c.bound < 0 || c.truncation < 0) throw DomainError("config: bound and truncation must be nonnegative");
    if (j.contains("tolerances")) c.tol = tolerances_of(j["tolerances"]);
    if (j.contains("seed")) {
        if (!j["seed"].is_number_unsigned()) throw DomainError("seed: expected a nonnegative integer");
        c.seed = j["seed"].get<std::uint64_t>();
    }
    if (j.contains("backend")) {
        if (!j["backend"].is_string()) throw DomainError("backend: expected a string");
        c.backend = j["backend"].get<std::string>();
        if (c.backend != "exact" && c.backend != "float") throw DomainError("backend: expected exact or float");
    }
    if (j.contains("lambda")) c.lambda = partition_of(j["lambda"]);
    if (j.contains("M")) c.M = static_cast<int>(integer_of(j["M"], "M"));
    if (j.contains("k")) c.k = integer_of(j["k"], "k");
    if (j.contains("samples")) c.samples = static_cast<int>(integer_of(j["samples"], "samples"));
    if (c.samples < 1) throw DomainError("samples: must be positive");
    if (j.contains("space")) c.space = parse_space(j["space"]);
    return c;
}

Json to_json(const RunConfig& c) {
    Json j{{"N", c.instance.N},
           {"n", c.instance.n},
           {"h", rationals_json(c.instance.h)},
           {"z", rationals_json(c.instance.z)},
           {"t", format_rational(c.t)},
           {"bound", c.bound},
           {"truncation", c.truncation},
           {"tolerances", tolerances_json(c.tol)},
           {"seed", c.seed},
           {"backend", c.backend},
           {"lambda", partition_json(c.lambda)},
           {"M", c.M},
           {"k", c.k},
           {"samples", c.samples}};
    if (c.space) j["space"] = to_json(*c.space);
    return j;
}

QuasiExpSpace parse_space(const Json& j) {
    if (!j.is_object() || !j.contains("basis") || !j["basis"].is_array())
        throw DomainError("space: expected {\"basis\": [...]}");
    check_keys(j, {"basis"}, "space");
    std::vector<QuasiExp> basis;
    for (const auto& f : j["basis"]) {
        if (!f.is_array()) throw DomainError("space: each basis function is a list of terms");
        QuasiExp q;
        for (const auto& term : f) {
            if (!term.is_object() || !term.contains("poly")) throw DomainError("space: each term needs \"poly\"");
            check_keys(term, {"exp", "poly"}, "space term");
            const Rational c = term.contains("exp") ? rational_of(term["exp"], "exp") : Rational(0);
            q += QuasiExp::term(c, RationalPoly(rationals_of(term["poly"], "poly")));
        }
        basis.push_back(std::move(q));
    }
    return QuasiExpSpace(std::move(basis));
}

Json to_json(const QuasiExp& f) {
    Json terms = Json::array();
    for (const auto& [c, p] : f.terms()) terms.push_back(Json{{"exp", format_rational(c)}, {"poly", rationals_json(p.coeffs())}});
    return terms;
}

Json to_json(const QuasiExpSpace& V) {
    Json basis = Json::array();
    for (const auto& f : V.basis()) basis.push_back(to_json(f));
    return Json{{"basis", std::move(basis)}};
}

Json to_json(const OperatorPolynomial& T, const std::string& backend) {
    const bool exact = backend != "float";
    Json coeffs = Json::array();
    for (const auto& A : T.coeffs()) coeffs.push_back(matrix_json(A, exact));
    return Json{{"factors", T.factors().labels()},
                {"N", T.factors().dim_per_factor()},
                {"dim", T.factors().total_dim()},
                {"degree", T.degree()},
                {"backend", exact ? "exact" : "float"},
                {"coefficients", std::move(coeffs)}};
}

Json to_json(const PlueckerVector<Rational>& pv) {
    Json a = Json::array();
    for (const auto& [p, x] : pv.values()) a.push_back(Json{{"lambda", partition_json(p)}, {"value", format_rational(x)}});
    return a;
}

Json to_json(const PlueckerVector<double>& pv) {
    Json a = Json::array();
    for (const auto& [p, x] : pv.values()) a.push_back(Json{{"lambda", partition_json(p)}, {"value", x}});
    return a;
}

QuasiExpSpace random_space(std::mt19937_64& rng, int N, bool polynomial, int max_degree) {
    std::uniform_int_distribution<int> e(0, 2), deg(0, max_degree);
    std::uniform_int_distribution<long> d(-4, 4);
    for (;;) {
        std::vector<QuasiExp> b;
        for (int j = 0; j < N; ++j) {
            Rational c = polynomial ? Rational(0) : Rational(e(rng) - 1, 2);
            c.canonicalize();
            std::vector<Rational> coeffs(static_cast<std::size_t>(deg(rng) + 1));
            for (auto& x : coeffs) x = d(rng);
            if (sgn(coeffs.back()) == 0) coeffs.back() = 1;
            b.push_back(QuasiExp::term(c, RationalPoly(std::move(coeffs))));
        }
        try {
            return QuasiExpSpace(std::move(b));
        } catch (const DependentBasisError&) {
        }
    }
}

Outcome run_build(const std::string& kind, const RunConfig& cfg) {
    const auto& inst = cfg.instance;
    const Partition& lam = cfg.lambda;
    std::optional<OperatorPolynomial> T;
    if (kind == "T-definitional")
        T = build_T_definitional(lam, inst);
    else if (kind == "T-trace")
        T = build_T_partial_trace(lam, inst);
    else if (kind == "T-jt")
        T = build_T_jacobi_trudi(lam, inst);
    else if (kind == "beta")
        T = build_beta(lam, inst);
    else
        throw DomainError("unknown build kind \"" + kind + "\"");
    Outcome o;
    o.checks = 1;
    o.report["kind"] = kind;
    o.report["lambda"] = partition_json(lam);
    o.report["operator"] = to_json(*T, cfg.backend);
    return o;
}

Outcome run_verify(const std::string& suite, const RunConfig& cfg) {
    Outcome o;
    if (suite == "routes")
        o = verify_routes(cfg);
    else if (suite == "commute")
        o = verify_commute(cfg);
    else if (suite == "jt")
        o = verify_jt(cfg, false);
    else if (suite == "dual-jt")
        o = verify_jt(cfg, true);
    else if (suite == "translation")
        o = verify_translation(cfg);
    else if (suite == "beta-specialization")
        o = verify_beta(cfg);
    else if (suite == "trace-identities")
        o = verify_traces(cfg);
    else if (suite == "psd")
        o = verify_psd(cfg);
    else if (suite == "universal")
        o = verify_universal(cfg);
    else if (suite == "positivity")
        o = verify_positivity_suite(cfg);
    else
        throw DomainError("unknown suite \"" + suite + "\"");
    const bool exact = exact_suite(suite);
    o.report["backend"] = exact ? "exact" : "float";
    if (exact && cfg.backend == "float") o.warnings.push_back("suite runs in the exact backend; --backend float ignored");
    return o;
}

Outcome run_space(const std::string& action, const QuasiExpSpace& V, const RunConfig& cfg) {
    Outcome o;
    o.checks = 1;
    o.report["space"] = to_json(V);
    if (action == "wronskian") {
        const auto& W = V.wronskian();
        o.report["wronskian"] = to_json(W);
        o.report["text"] = W.to_string();
    } else if (action == "plucker") {
        const auto pv = plucker_vector(V, cfg.t, cfg.bound);
        o.report["t"] = format_rational(cfg.t);
        o.report["bound"] = cfg.bound;
        o.report["coordinates"] = cfg.backend == "float" ? to_json(to_float(pv)) : to_json(pv);
    } else if (action == "translate") {
        o.report["t"] = format_rational(cfg.t);
        o.report["translated"] = to_json(translate(V, cfg.t));
    } else if (action == "dual") {
        if (!V.is_polynomial()) throw DomainError("dual: the space must be polynomial");
        const int M = cfg.M > 0 ? cfg.M : static_cast<int>(V.max_degree()) + 1 + V.dim();
        o.report["M"] = M;
        o.report["dual"] = to_json(dual_space(V, M));
    } else if (action == "limit-family") {
        const auto Vk = poly_limit_family(V, cfg.k);
        o.report["k"] = cfg.k;
        o.report["family"] = to_json(Vk);
        o.report["plucker_distance"] =
            projective_distance(to_float(plucker_vector(Vk, cfg.t, cfg.bound)), to_float(plucker_vector(V, cfg.t, cfg.bound)));
    } else {
        throw DomainError("unknown space action \"" + action + "\"");
    }
    return o;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact and float checks for Gaudin transfer operators and quasi-exponential spaces", "wronski"};
    app.require_subcommand(1);
    std::string config_path, out_path, backend;
    std::optional<std::uint64_t> seed;

    auto add_common = [&](CLI::App* sub, bool config_required) {
        auto* opt = sub->add_option("--config", config_path, "JSON config file");
        if (config_required) opt->required();
        sub->add_option("--seed", seed, "override the config seed");
        sub->add_option("--backend", backend, "exact or float")->check(CLI::IsMember({"exact", "float"}));
        sub->add_option("--out", out_path, "write the report here instead of stdout");
    };

    std::string kind, suite, action, space_path;
    auto* build = app.add_subcommand("build", "dump T_lambda(u) or beta_lambda(u)");
    build->add_option("kind", kind, "T-definitional | T-trace | T-jt | beta")->required();
    add_common(build, true);
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite,
                       "routes | commute | jt | dual-jt | translation | beta-specialization | trace-identities | psd | "
                       "universal | positivity")
        ->required();
    add_common(verify, true);
    auto* space = app.add_subcommand("space", "exact computations on a quasi-exponential space");
    space->add_option("action", action, "wronskian | plucker | translate | dual | limit-family")->required();
    space->add_option("space-file", space_path, "JSON space file")->required();
    add_common(space, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? Ok : Usage;
    }

    std::string command, target;
    RunConfig cfg;
    Outcome o;
    try {
        cfg = config_path.empty() ? default_config() : parse_config(parse_json_file(config_path));
        if (seed) cfg.seed = *seed;
        if (!backend.empty()) cfg.backend = backend;
        if (build->parsed()) {
            command = "build";
            target = kind;
            o = run_build(kind, cfg);
        } else if (verify->parsed()) {
            command = "verify";
            target = suite;
            o = run_verify(suite, cfg);
        } else {
            command = "space";
            target = action;
            const auto V = parse_space(parse_json_file(space_path));
            o = run_space(action, V, cfg);
        }
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return Usage;
    } catch (const DependentBasisError& e) {
        err << "violation: " << e.what() << "\n";
        return Violation;
    } catch (const IdentityViolation& e) {
        err << "violation: " << e.what() << "\n";
        return Violation;
    } catch (const GenericityError& e) {
        err << "violation: " << e.what() << "\n";
        return Violation;
    } catch (const InstabilityError& e) {
        err << "violation: " << e.what() << "\n";
        return Violation;
    }

    const int code = o.failures > 0 ? Violation : Ok;
    const std::string status = o.failures > 0 ? "fail" : o.hypotheses_unmet ? "hypotheses unmet" : "pass";
    Json report{{"command", command}, {"target", target}, {"config", to_json(cfg)}, {"result", std::move(o.report)}};
    report["summary"] = Json{{"status", status},
                             {"checks", o.checks},
                             {"failures", o.failures},
                             {"warnings", o.warnings},
                             {"exit_code", code}};
    const std::string text = report.dump(2) + "\n";
    if (out_path.empty()) {
        out << text;
    } else {
        std::ofstream f(out_path);
        if (!f) {
            err << "error: cannot write " << out_path << "\n";
            return Usage;
        }
        f << text;
    }
    err << command << " " << target << ": " << status << " (" << o.checks << " checks, " << o.failures << " failures)\n";
    for (const auto& w : o.warnings) err << "warning: " << w << "\n";
    return code;
}

}  // namespace wronski::cli
