#pragma once

#include "json.hpp"
#include "wronski/gaudin.hpp"
#include "wronski/quasiexp.hpp"
#include "wronski/spectral.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace wronski::cli {

using Json = nlohmann::ordered_json;

enum ExitCode { Ok = 0, Violation = 1, Usage = 2 };

/// Parsed config file. Every key is optional; see default_config() for the values used when absent.
struct RunConfig {
    GaudinInstance instance;
    Rational t;
    /// Partition bound B: suites cover |lambda| <= B.
    int bound = 3;
    /// Series truncation D for the spectral reconstruction.
    int truncation = 16;
    Tolerances tol;
    std::uint64_t seed = 1;
    std::string backend = "exact";
    /// Target partition for `build`.
    Partition lambda{1};
    /// Ambient degree bound for `space dual`; 0 means max degree + 1 + dim.
    int M = 0;
    /// Parameter of `space limit-family`.
    long k = 10;
    /// Number of seeded random spaces for jt, dual-jt and translation when no space is given.
    int samples = 3;
    std::optional<QuasiExpSpace> space;
};

/// N = 2, n = 2, h = (1, 2), z = (1, 2), t = 0, B = 3, D = 16, seed 1, exact backend.
RunConfig default_config();
/// Throws DomainError on unknown keys, malformed rationals or inconsistent sizes.
RunConfig parse_config(const Json& j);
Json to_json(const RunConfig& cfg);

/// {"basis": [[{"exp": "p/q", "poly": ["c0", "c1", ...]}, ...], ...]}; poly coefficients ascending.
/// Throws DomainError when malformed, DependentBasisError for a dependent basis.
QuasiExpSpace parse_space(const Json& j);
Json to_json(const QuasiExp& f);
Json to_json(const QuasiExpSpace& V);
Json to_json(const OperatorPolynomial& T, const std::string& backend);
Json to_json(const PlueckerVector<Rational>& pv);
Json to_json(const PlueckerVector<double>& pv);

struct Outcome {
    Json report = Json::object();
    long checks = 0;
    long failures = 0;
    /// Set when the suite ran outside its hypotheses.
    bool hypotheses_unmet = false;
    std::vector<std::string> warnings;
};

/// kind: T-definitional, T-trace, T-jt, beta.
Outcome run_build(const std::string& kind, const RunConfig& cfg);
/// suite: routes, commute, jt, dual-jt, translation, beta-specialization, trace-identities, psd,
/// universal, positivity.
Outcome run_verify(const std::string& suite, const RunConfig& cfg);
/// action: wronskian, plucker, translate, dual, limit-family.
Outcome run_space(const std::string& action, const QuasiExpSpace& V, const RunConfig& cfg);

/// Seeded random single-exponent space; exponents from {-1/2, 0, 1/2} unless polynomial.
QuasiExpSpace random_space(std::mt19937_64& rng, int N, bool polynomial, int max_degree = 3);

/// Full command line: parses arguments, runs, writes the JSON report to --out or `out`,
/// a one-line summary to `err`, and returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wronski::cli
