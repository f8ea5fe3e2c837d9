#pragma once

#include "wronski/combinatorics.hpp"
#include "wronski/errors.hpp"
#include "wronski/matrix.hpp"
#include "wronski/polynomial.hpp"
#include "wronski/rational.hpp"

#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

namespace wronski {

/// Finite sum of e^{c u} p(u) with distinct exponents c and nonzero polynomials p.
class QuasiExp {
public:
    QuasiExp() = default;
    static QuasiExp term(const Rational& c, RationalPoly p);
    static QuasiExp polynomial(RationalPoly p) { return term(Rational(0), std::move(p)); }
    static QuasiExp exponential(const Rational& c) { return term(c, RationalPoly::constant(1)); }

    const std::map<Rational, RationalPoly>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_polynomial() const { return t_.empty() || (t_.size() == 1 && sgn(t_.begin()->first) == 0); }
    /// The exponent when there is exactly one term.
    std::optional<Rational> single_exponent() const;
    /// Polynomial part of a single-exponent function (zero polynomial for zero).
    RationalPoly polynomial_part() const;

    QuasiExp derivative(unsigned k = 1) const;
    /// f(u + t) with the constant factor e^{c t} dropped; needs a single exponent unless t = 0.
    QuasiExp translated(const Rational& t) const;
    /// f(t) with e^{c t} dropped; needs a single exponent unless t = 0.
    Rational value_at(const Rational& t) const;

    QuasiExp& operator+=(const QuasiExp& o);
    QuasiExp& operator-=(const QuasiExp& o);
    QuasiExp& operator*=(const Rational& s);
    friend QuasiExp operator+(QuasiExp a, const QuasiExp& b) { return a += b; }
    friend QuasiExp operator-(QuasiExp a, const QuasiExp& b) { return a -= b; }
    friend QuasiExp operator*(QuasiExp a, const Rational& s) { return a *= s; }
    friend QuasiExp operator*(const QuasiExp& a, const QuasiExp& b);
    friend bool operator==(const QuasiExp& a, const QuasiExp& b) { return a.t_ == b.t_; }

    std::string to_string() const;

private:
    void add_term(const Rational& c, const RationalPoly& p);
    std::map<Rational, RationalPoly> t_;
};

/// N-dimensional span of quasi-exponentials; construction rejects dependent bases.
class QuasiExpSpace {
public:
    /// Throws DomainError for an empty basis, DependentBasisError for dependent functions
    /// (rank test on the e^{cu} u^d coordinates, equivalent to a vanishing Wronskian).
    explicit QuasiExpSpace(std::vector<QuasiExp> basis);

    const std::vector<QuasiExp>& basis() const { return basis_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    /// Computed on first use.
    const QuasiExp& wronskian() const;
    bool is_polynomial() const;
    /// Every basis function has exactly one exponent.
    bool is_single_exponent() const;
    /// Exponents h_1..h_N of a single-exponent basis, in basis order.
    std::vector<Rational> exponents() const;
    /// Largest polynomial degree over the basis.
    long max_degree() const;

private:
    std::vector<QuasiExp> basis_;
    mutable std::optional<QuasiExp> wr_;
};

/// Wr(f_1..f_N) = det(f_j^{(i-1)}); throws DependentBasisError when identically zero.
QuasiExp wronskian(const std::vector<QuasiExp>& basis);
inline QuasiExp wronskian(const QuasiExpSpace& V) { return V.wronskian(); }

/// Basis change inside each exponent group so polynomial degrees within a group are distinct.
QuasiExpSpace normalize_basis(const QuasiExpSpace& V);
/// deg g in Wr = e^{(h_1+..+h_N)u} g(u), predicted from a normalized basis.
long wronskian_degree_formula(const QuasiExpSpace& V);
/// Lower bound for the zero order of Wr(V) at t from the zero orders of the basis at t.
long wronskian_zero_order_bound(const QuasiExpSpace& V, const Rational& t);
/// Actual order of the zero of Wr(V) at t.
unsigned wronskian_zero_order(const QuasiExpSpace& V, const Rational& t);

/// Derivative values at t: values(i, j) = f_j^{(i)}(t) / e^{log_scale[j]}.
struct TaylorMatrix {
    RationalMatrix values;
    std::vector<Rational> log_scale;
};
/// Needs rows >= N; for t != 0 every basis function must have a single exponent.
TaylorMatrix taylor_matrix(const QuasiExpSpace& V, const Rational& t, int rows);

/// Rows {lambda_N, lambda_{N-1}+1, ..., lambda_1+N-1} selecting the minor of Delta_lambda.
std::vector<std::size_t> plucker_rows(const Partition& lambda, int N);

template <typename S>
S from_integer(const Integer& z) {
    if constexpr (std::is_same_v<S, Rational>) return Rational(z);
    else return z.get_d();
}

/// k-th derivative in the expansion point of the minor on `rows`: each derivative moves one
/// row index up by one (multinomial sum over distributions of k among the rows).
template <typename S>
S jet_minor_derivative(const Matrix<S>& jets, const std::vector<std::size_t>& rows, int k) {
    const std::size_t N = rows.size();
    if (N == 0) return k == 0 ? S(1) : S(0);
    S total(0);
    std::vector<int> dist(N, 0);
    // enumerate compositions of k into N parts
    std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int left) {
        if (pos + 1 == N) {
            dist[pos] = left;
            std::vector<std::size_t> r(N);
            for (std::size_t l = 0; l < N; ++l) {
                r[l] = rows[l] + static_cast<std::size_t>(dist[l]);
                if (r[l] >= jets.rows()) throw DomainError("jet matrix too short for requested derivative");
            }
            std::vector<std::size_t> cols(N);
            for (std::size_t j = 0; j < N; ++j) cols[j] = j;
            S det = determinant(jets.submatrix(r, cols));
            if (det == S(0)) return;
            Integer mult = factorial(static_cast<unsigned>(k));
            for (int d : dist) mult /= factorial(static_cast<unsigned>(d));
            total += from_integer<S>(mult) * det;
            return;
        }
        for (int d = 0; d <= left; ++d) {
            dist[pos] = d;
            rec(pos + 1, left - d);
        }
    };
    rec(0, k);
    return total;
}

/// k-th derivative of Delta_lambda at the expansion point; zero when l(lambda) > N.
template <typename S>
S plucker_derivative(const Matrix<S>& jets, const Partition& lambda, int k = 0) {
    const int N = static_cast<int>(jets.cols());
    if (lambda.length() > N) return S(0);
    return jet_minor_derivative(jets, plucker_rows(lambda, N), k);
}

/// Projective family (Delta_lambda) over all |lambda| <= bound, graded-lex order.
template <typename S>
class PlueckerVector {
public:
    PlueckerVector(int N, int bound) : N_(N), bound_(bound) {
        for (const auto& p : partitions_up_to(bound)) v_.emplace(p, S(0));
    }
    int N() const { return N_; }
    int bound() const { return bound_; }
    const std::map<Partition, S>& values() const { return v_; }
    S& operator[](const Partition& p) {
        auto it = v_.find(p);
        if (it == v_.end()) throw DomainError("partition " + p.to_string() + " exceeds the Pluecker bound");
        return it->second;
    }
    const S& at(const Partition& p) const {
        auto it = v_.find(p);
        if (it == v_.end()) throw DomainError("partition " + p.to_string() + " exceeds the Pluecker bound");
        return it->second;
    }
    bool is_zero() const {
        for (const auto& [p, x] : v_)
            if (!(x == S(0))) return false;
        return true;
    }
    /// Divided by the first nonzero entry (for floats: first entry above 1e-12 of the largest).
    PlueckerVector normalized() const {
        PlueckerVector out = *this;
        const S* pivot = nullptr;
        if constexpr (std::is_same_v<S, double>) {
            double mx = 0;
            for (const auto& [p, x] : v_) mx = std::max(mx, std::abs(x));
            for (const auto& [p, x] : v_)
                if (std::abs(x) > 1e-12 * mx) {
                    pivot = &x;
                    break;
                }
        } else {
            for (const auto& [p, x] : v_)
                if (!(x == S(0))) {
                    pivot = &x;
                    break;
                }
        }
        if (pivot == nullptr) return out;
        const S piv = *pivot;
        for (auto& [p, x] : out.v_) x /= piv;
        return out;
    }

private:
    int N_;
    int bound_;
    std::map<Partition, S> v_;
};

template <typename S>
PlueckerVector<S> plucker_from_jets(const Matrix<S>& jets, int bound) {
    PlueckerVector<S> pv(static_cast<int>(jets.cols()), bound);
    for (const auto& p : partitions_up_to(bound)) pv[p] = plucker_derivative(jets, p, 0);
    return pv;
}

PlueckerVector<double> to_float(const PlueckerVector<Rational>& pv);
/// max |r a - b| / max |b| with r matching a to b at b's largest entry (coefficient vectors of equal length).
double projective_distance(const std::vector<double>& a, const std::vector<double>& b);
bool projectively_equal(const PlueckerVector<Rational>& a, const PlueckerVector<Rational>& b);
/// max |r a - b| / max |b|, r matching both at b's largest entry; 0 for two zero vectors, 1 if only one is zero.
double projective_distance(const PlueckerVector<double>& a, const PlueckerVector<double>& b);
bool projectively_equal(const PlueckerVector<double>& a, const PlueckerVector<double>& b, double rel_tol = 1e-9);

/// Delta_lambda(V(t)) for |lambda| <= bound (global factor e^{sum of log scales} dropped).
PlueckerVector<Rational> plucker_vector(const QuasiExpSpace& V, const Rational& t, int bound);

/// V(t): basis e^{c u} p(u + t), equal as a subspace to span{f_j(u + t)}.
QuasiExpSpace translate(const QuasiExpSpace& V, const Rational& t);

/// Whether two spaces span the same functions (compared on exponent/degree coordinates).
bool same_span(const QuasiExpSpace& a, const QuasiExpSpace& b);

struct IdentityReport {
    bool holds = false;
    /// "exact" or "truncated" (power-series congruence).
    std::string mode = "exact";
    Rational max_discrepancy;
    Rational lhs;
    Rational rhs;
};

/// Delta_mu(V(t)) against sum_{lambda ⊇ mu} f^{lambda/mu}/(|lambda|-|mu|)! t^{|lambda|-|mu|} Delta_lambda(V).
/// Exact at t for polynomial spaces when bound covers every nonzero Delta_lambda; otherwise the
/// t-Taylor coefficients are compared up to order bound - |mu|.
IdentityReport verify_translation_identity(const QuasiExpSpace& V, const Partition& mu, const Rational& t, int bound);

/// Delta_lambda * Delta_empty^{m-1} = det(sum_k (-1)^k C(j-1,k) d^k Delta_{(lambda_i-i+j-k)}) at u = t.
IdentityReport verify_jacobi_trudi(const QuasiExpSpace& V, const Partition& lambda, int m, const Rational& t);
/// Same with single-column coordinates Delta_{(1^{lambda'_i-i+j-k})}; m >= lambda_1.
IdentityReport verify_dual_jacobi_trudi(const QuasiExpSpace& V, const Partition& lambda, int m, const Rational& t);

/// Coefficients of (u-t)^q, q = 0..N+D-1, of sum_{i<=D} Delta_(i)(V(t))/(N+i-1)! (u-t)^{N+i-1}.
std::vector<Rational> g_series(const QuasiExpSpace& V, const Rational& t, int D);

struct GBasis {
    /// series[j][q]: coefficient of (u-t)^q in d_t^j g, valid for q <= order.
    std::vector<std::vector<Rational>> series;
    int order = 0;
    std::size_t rank = 0;
    bool independent = false;
    /// series[j] = sum_l change_of_basis(j, l) * (Taylor series of translated basis l); empty if not in span.
    RationalMatrix change_of_basis;
    bool in_span = false;
};
/// g, d_t g, ..., d_t^{N-1} g with exact rank certification against the translated basis.
GBasis basis_from_g(const QuasiExpSpace& V, const Rational& t, int D);

struct DifferentialOperator {
    /// coefficients[k] multiplies d^k at u = t; coefficients[N] = 1.
    std::vector<Rational> coefficients;
    /// sum_i (-1)^i Delta_(1^i)(V(u)) f^{(N-i)}(u) vanishes to the checked order for every basis f.
    bool annihilates = false;
    int checked_orders = 0;
};
/// D_V at u = t; throws PreconditionError if t is a zero of Wr(V).
DifferentialOperator differential_operator(const QuasiExpSpace& V, const Rational& t, int margin = 3);

/// Orthogonal complement in C[u]_{<=M-1} under (f,g) = sum_i (-1)^i f^{(i)}(0) g^{(M-1-i)}(0).
QuasiExpSpace dual_space(const QuasiExpSpace& V, int M);

/// Basis (1 + u/k)^{h_i k} p_i(u) for nonnegative integer exponents h_i.
QuasiExpSpace poly_limit_family(const QuasiExpSpace& V, long k);

/// Multiplication by e^{c u} on derivative vectors: B(i, k) = C(i, k) c^{i-k}.
RationalMatrix exp_shift_matrix(const Rational& c, std::size_t size);

struct MinorSampleReport {
    std::size_t sampled = 0;
    std::size_t positive = 0;
    Rational smallest;
};
/// Random minors with rows i_1<..<i_m, columns j_1<..<j_m and i_l >= j_l.
MinorSampleReport sample_shift_minors(const RationalMatrix& B, std::size_t samples, std::uint64_t seed);

}  // namespace wronski
