#pragma once

#include "wronski/gaudin.hpp"
#include "wronski/quasiexp.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace wronski {

/// Numerical knobs for the float stages.
struct Tolerances {
    /// Relative eigenvalue gap that separates two clusters.
    double cluster_gap = 1e-7;
    /// Relative gap below which eigenvalues are treated as equal; gaps in between are ambiguous.
    double cluster_merge = 1e-10;
    double eigenvalue = 1e-8;
    double reconstruction = 1e-6;
    double orthogonality = 1e-7;
    double sign = 1e-8;
    int max_rerandomizations = 3;
};

// ---------------------------------------------------------------- exact PSD certification

enum class PsdVerdict { Indefinite, Semidefinite, Definite };
std::string to_string(PsdVerdict v);

struct PSDCertificate {
    std::string matrix_hash;
    PsdVerdict verdict = PsdVerdict::Indefinite;
    /// det(xI - A) = sum c_i x^i
    std::vector<Rational> char_poly;
    /// Leading principal minors, filled in strict mode.
    std::vector<Rational> leading_minors;
    /// v with v^T A v = witness_value < 0, for indefinite verdicts.
    std::vector<Rational> witness;
    Rational witness_value;
};

/// Hessenberg reduction followed by the companion recurrence; exact.
std::vector<Rational> characteristic_polynomial(const RationalMatrix& A);

std::string matrix_hash(const ExactOperator& A);

/// Throws DomainError for a non-symmetric operator. Strict mode also records Sylvester minors.
PSDCertificate certify_psd_exact(const ExactOperator& A, bool strict = false);
/// Re-derives the verdict from the recorded characteristic polynomial, minors and witness.
bool certificate_consistent(const ExactOperator& A, const PSDCertificate& cert);

struct PsdEntry {
    Partition lambda;
    PsdVerdict verdict = PsdVerdict::Indefinite;
    /// Weakest verdict the hypotheses guarantee (Indefinite means no guarantee).
    PsdVerdict required = PsdVerdict::Indefinite;
    bool ok = false;
    PSDCertificate certificate;
};

struct PsdReport {
    bool psd_hypotheses = false;
    bool pd_hypotheses = false;
    std::vector<PsdEntry> entries;
    bool all_ok = true;
};

/// Certifies T_lambda(t) for every |lambda| <= bound against the positivity hypotheses.
PsdReport verify_psd_theorem(const GaudinInstance& inst, const Rational& t, int bound);

// ---------------------------------------------------------------- float spectral stage

/// Lazily built T_lambda(u) for one instance (definitional route).
class OperatorFamily {
public:
    explicit OperatorFamily(GaudinInstance inst);
    const GaudinInstance& instance() const { return inst_; }
    const OperatorPolynomial& T(const Partition& lambda);
    /// T_lambda(t) in the float backend.
    const FloatOperator& T_at(const Partition& lambda, const Rational& t);

private:
    GaudinInstance inst_;
    std::map<Partition, OperatorPolynomial> cache_;
    std::map<std::pair<Partition, Rational>, FloatOperator> values_;
};

struct Eigenspace {
    /// Orthonormal vectors of length N^n.
    std::vector<std::vector<double>> basis;
    std::map<Partition, double> eigenvalues;
    /// max over lambda of ||T Q - value Q|| / max(1, ||T||).
    double residual = 0;
};

struct EigenspaceDecomposition {
    Rational t;
    int bound = 0;
    std::uint64_t seed = 0;
    int attempts = 0;
    std::vector<Eigenspace> spaces;
    double max_orthogonality = 0;
    double max_residual = 0;
    double max_rayleigh_deviation = 0;
};

/// Clusters the spectrum of a seeded random combination of T_lambda(t), |lambda| <= bound.
/// Throws GenericityError after max_rerandomizations failed attempts.
EigenspaceDecomposition simultaneous_eigenspaces(OperatorFamily& family, const Rational& t, int bound,
                                                 std::uint64_t seed = 1, const Tolerances& tol = {});
EigenspaceDecomposition simultaneous_eigenspaces(const GaudinInstance& inst, const Rational& t, int bound,
                                                 std::uint64_t seed = 1, const Tolerances& tol = {});

/// Mean Rayleigh quotient of T_lambda(t) over the eigenspace basis.
double eigenvalue_at(OperatorFamily& family, const Eigenspace& E, const Partition& lambda, const Rational& t);

/// Degree <= n interpolation of the eigenvalue of T_lambda(u) on E from n+1 samples, checked at a
/// held-out point; throws InstabilityError when the residual exceeds tol.eigenvalue.
FloatPoly eigenvalue_polynomial(OperatorFamily& family, const Eigenspace& E, const Partition& lambda,
                                const Tolerances& tol = {});

struct ReconstructionReport {
    /// series[j][q]: coefficient of (u-t)^q in d_t^j g, q = 0..order.
    std::vector<std::vector<double>> series;
    int order = 0;
    PlueckerVector<double> plucker{1, 0};
    PlueckerVector<double> eigenvalues{1, 0};
    double wronskian_residual = 0;
    double plucker_residual = 0;
    double fit_residual = 0;
    bool passed = false;
};

/// Builds the g-series basis of V_E(t) from single-row eigenvalue polynomials and checks
/// (a) its Wronskian, (b) its Pluecker vector up to `bound`, (c) a quasi-exponential fit.
/// Throws PreconditionError if t is a zero of the Wronskian.
ReconstructionReport reconstruct_space(OperatorFamily& family, const Eigenspace& E, const Rational& t, int D, int bound,
                                       const Tolerances& tol = {});

struct EigenspaceCheck {
    std::size_t dim = 0;
    ReconstructionReport reconstruction;
    /// D_V from single-column eigenvalues applied to the reconstructed basis.
    double link_residual = 0;
    bool passed = false;
};

struct UniversalityReport {
    std::uint64_t seed = 0;
    int attempts = 0;
    std::size_t total_dim = 0;
    double max_orthogonality = 0;
    std::vector<EigenspaceCheck> spaces;
    bool passed = false;
};

UniversalityReport verify_universal_coordinates(const GaudinInstance& inst, const Rational& t, int bound, int D,
                                                std::uint64_t seed = 1, const Tolerances& tol = {});

struct PositivityReport {
    bool hypotheses = false;
    std::size_t spaces = 0;
    std::size_t one_signed = 0;
    /// Largest entry of the wrong sign, relative to the largest magnitude.
    double worst_violation = 0;
    bool passed = false;
};

/// Reconstructs every eigenspace and checks its Pluecker vector for |lambda| <= bound is one-signed.
PositivityReport verify_positivity(const GaudinInstance& inst, const Rational& t, int bound, int D,
                                   std::uint64_t seed = 1, const Tolerances& tol = {});

/// Largest wrong-sign entry relative to the largest magnitude (0 when one-signed).
double sign_violation(const PlueckerVector<double>& pv);

}  // namespace wronski
