#pragma once

#include "wronski/combinatorics.hpp"
#include "wronski/polynomial.hpp"
#include "wronski/symfunc.hpp"
#include "wronski/tensor.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace wronski {

/// N-dimensional factors at n sites with twist h (length N) and site parameters z (length n).
struct GaudinInstance {
    int N = 1;
    int n = 0;
    EigenvalueList h;
    std::vector<Rational> z;

    /// Throws DomainError on inconsistent sizes.
    void validate() const;
    FactorSet sites() const { return FactorSet::range(n, N); }
};

/// Polynomial in u with operator coefficients on a fixed factor set.
class OperatorPolynomial {
public:
    explicit OperatorPolynomial(FactorSet f) : f_(std::move(f)) {}

    const FactorSet& factors() const { return f_; }
    /// Coefficient of u^i, trimmed (no trailing zero operators).
    const std::vector<ExactOperator>& coeffs() const { return c_; }
    ExactOperator coeff(std::size_t i) const { return i < c_.size() ? c_[i] : ExactOperator(f_); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    ExactOperator operator()(const Rational& t) const;
    OperatorPolynomial derivative() const;

    /// this += p(u) * A
    void add_product(const RationalPoly& p, const ExactOperator& A);
    OperatorPolynomial& operator+=(const OperatorPolynomial& o);
    OperatorPolynomial& operator-=(const OperatorPolynomial& o);
    friend OperatorPolynomial operator-(OperatorPolynomial a, const OperatorPolynomial& b) { return a -= b; }
    friend OperatorPolynomial operator*(const RationalPoly& p, const OperatorPolynomial& a);
    friend bool operator==(const OperatorPolynomial& a, const OperatorPolynomial& b) {
        return a.f_ == b.f_ && a.c_ == b.c_;
    }

    /// Builds from per-entry scalar polynomials (row-major, dim^2 entries).
    static OperatorPolynomial from_entries(const FactorSet& f, const std::vector<RationalPoly>& entries);

private:
    void trim();
    FactorSet f_;
    std::vector<ExactOperator> c_;
};

/// d_K f(h) by multilinear epsilon-coefficient extraction; result acts on the factors K.
ExactOperator matrix_derivative(const TraceExpression& f, const std::vector<int>& K, const EigenvalueList& h);

/// T_lambda(u) = sum_K prod_{l not in K}(u+z_l) d_K s_lambda(h).
OperatorPolynomial build_T_definitional(const Partition& lambda, const GaudinInstance& inst);

/// Partial-trace formula with m auxiliary-capable factors; m = 0 selects max(n, |lambda|).
OperatorPolynomial build_T_partial_trace(const Partition& lambda, const GaudinInstance& inst, int m = 0);

/// Single-column operators T_{(1^a)}(u) keyed by a.
using ColumnFamily = std::map<int, OperatorPolynomial>;

/// Columns a = 0..max_a built by the definitional route.
ColumnFamily build_columns(const GaudinInstance& inst, int max_a);

/// Dual Jacobi-Trudi determinant in the single-column operators. Throws IdentityViolation
/// if the cleared determinant is not divisible by the expected power of prod(u+z_k).
OperatorPolynomial build_T_jacobi_trudi(const Partition& lambda, const GaudinInstance& inst, const ColumnFamily& columns);
OperatorPolynomial build_T_jacobi_trudi(const Partition& lambda, const GaudinInstance& inst);

/// beta_lambda(u) = sum_{|K|=|lambda|} prod_{l not in K}(u+z_l) alpha_lambda^(K).
OperatorPolynomial build_beta(const Partition& lambda, const GaudinInstance& inst);

/// Trace expression of a central group-algebra element: each permutation contributes p_{cyc(s)}.
TraceExpression trace_of_central(const GroupAlgebraElement& g);

struct IdentityTally {
    std::string name;
    long checked = 0;
    long failed = 0;
};

struct TraceIdentityReport {
    std::vector<IdentityTally> identities;
    bool all_ok = true;
};

/// Exact checks of the trace identities behind the partial-trace formula for N <= max_N,
/// |L| <= max_L, |K| <= max_K, with nonzero random rational h drawn from `seed`.
/// K runs over prefixes of L; every permutation of L is checked, so this covers all K up to relabeling.
TraceIdentityReport verify_trace_identities(int max_N = 3, int max_L = 4, int max_K = 2, std::uint64_t seed = 1);

}  // namespace wronski
