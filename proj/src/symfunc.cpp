#include "wronski/symfunc.hpp"

namespace wronski {

Rational schur_bialternant(const Partition& lambda, const EigenvalueList& h) {
    const std::size_t n = h.size();
    if (lambda.length() > static_cast<int>(n)) return 0;
    RationalMatrix num(n, n), den(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            num(i, j) = rational_pow(h[j], static_cast<unsigned>(lambda[i] + static_cast<int>(n - 1 - i)));
            den(i, j) = rational_pow(h[j], static_cast<unsigned>(n - 1 - i));
        }
    Rational d = determinant(den);
    if (sgn(d) == 0) throw DomainError("bialternant formula needs distinct eigenvalues");
    return determinant(num) / d;
}

TraceExpression schur_power_sum_expansion(const Partition& lambda) {
    TraceExpression f;
    const int m = lambda.size();
    const Integer mfact = factorial(static_cast<unsigned>(m));
    for (const auto& rho : partitions_of(m)) {
        Integer chi = irreducible_character(lambda, rho);
        if (chi == 0) continue;
        Rational c(chi * class_size(rho), mfact);
        c.canonicalize();
        f.push_back({c, rho.parts()});
    }
    return f;
}

Rational evaluate(const TraceExpression& f, const EigenvalueList& h) {
    Rational total = 0;
    for (const auto& term : f) {
        Rational prod = term.coefficient;
        for (int k : term.powers) prod *= power_sum(k, h);
        total += prod;
    }
    return total;
}

Rational schur_via_power_sums(const Partition& lambda, const EigenvalueList& h) {
    return evaluate(schur_power_sum_expansion(lambda), h);
}

}  // namespace wronski
