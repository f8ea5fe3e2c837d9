#pragma once

#include "wronski/combinatorics.hpp"
#include "wronski/errors.hpp"
#include "wronski/matrix.hpp"
#include "wronski/rational.hpp"

#include <vector>

namespace wronski {

using EigenvalueList = std::vector<Rational>;

/// p_k(h) = h_1^k + ... + h_N^k, k >= 1.
template <typename S>
S power_sum(int k, const std::vector<S>& h) {
    if (k < 1) throw DomainError("power sum p_k needs k >= 1");
    S total(0);
    for (const auto& x : h) {
        S p(1);
        for (int i = 0; i < k; ++i) p *= x;
        total += p;
    }
    return total;
}

/// Complete homogeneous symmetric polynomial h_k; 0 for k < 0, 1 for k = 0.
template <typename S>
S complete_homogeneous(int k, const std::vector<S>& x) {
    if (k < 0) return S(0);
    // dp[j] = h_j in the variables processed so far
    std::vector<S> dp(static_cast<std::size_t>(k) + 1, S(0));
    dp[0] = S(1);
    for (const auto& v : x)
        for (std::size_t j = 1; j < dp.size(); ++j) dp[j] += v * dp[j - 1];
    return dp[static_cast<std::size_t>(k)];
}

/// Elementary symmetric polynomial e_k; 0 outside 0..N.
template <typename S>
S elementary(int k, const std::vector<S>& x) {
    if (k < 0 || static_cast<std::size_t>(k) > x.size()) return S(0);
    std::vector<S> dp(static_cast<std::size_t>(k) + 1, S(0));
    dp[0] = S(1);
    for (const auto& v : x)
        for (std::size_t j = dp.size() - 1; j >= 1; --j) dp[j] += v * dp[j - 1];
    return dp[static_cast<std::size_t>(k)];
}

/// s_lambda(h) via det(h_{lambda_i - i + j}); no division by eigenvalue differences,
/// so repeated eigenvalues are fine. Zero when l(lambda) > N.
template <typename S>
S schur_eval(const Partition& lambda, const std::vector<S>& h) {
    if (lambda.length() > static_cast<int>(h.size())) return S(0);
    const std::size_t l = static_cast<std::size_t>(lambda.length());
    if (l == 0) return S(1);
    Matrix<S> m(l, l);
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < l; ++j)
            m(i, j) = complete_homogeneous(lambda[i] - static_cast<int>(i) + static_cast<int>(j), h);
    return determinant(m);
}

/// Dual form det(e_{lambda'_i - i + j}).
template <typename S>
S schur_eval_dual(const Partition& lambda, const std::vector<S>& h) {
    const Partition conj = lambda.conjugate();
    const std::size_t l = static_cast<std::size_t>(conj.length());
    if (l == 0) return S(1);
    Matrix<S> m(l, l);
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < l; ++j)
            m(i, j) = elementary(conj[i] - static_cast<int>(i) + static_cast<int>(j), h);
    return determinant(m);
}

/// Ratio of alternants det(x_j^{lambda_i+N-i}) / det(x_j^{N-i}). Requires distinct values.
Rational schur_bialternant(const Partition& lambda, const EigenvalueList& h);

/// Rational combination of products of traces Tr(h^{k_1})...Tr(h^{k_r}).
struct TraceTerm {
    Rational coefficient;
    /// Powers k_i >= 1; empty means the constant 1.
    std::vector<int> powers;
};
using TraceExpression = std::vector<TraceTerm>;

/// s_lambda = sum over cycle types rho of chi^lambda(rho) |C_rho| / m! * p_rho.
TraceExpression schur_power_sum_expansion(const Partition& lambda);

Rational evaluate(const TraceExpression& f, const EigenvalueList& h);

/// (1/m!) sum_sigma chi^lambda(sigma) p_cyc(sigma)(h), weighted by class sizes.
Rational schur_via_power_sums(const Partition& lambda, const EigenvalueList& h);

}  // namespace wronski
