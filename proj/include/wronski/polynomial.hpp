#pragma once

#include "wronski/errors.hpp"
#include "wronski/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

namespace wronski {

/// Dense univariate polynomial, coefficient of u^i at index i. Always trimmed:
/// no trailing zero coefficients, so the zero polynomial has no coefficients.
template <typename S>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<S> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Polynomial constant(const S& a) { return Polynomial(std::vector<S>{a}); }
    /// u + a
    static Polynomial linear(const S& a) { return Polynomial(std::vector<S>{a, S(1)}); }
    static Polynomial monomial(std::size_t degree, const S& a = S(1)) {
        std::vector<S> c(degree + 1, S(0));
        c[degree] = a;
        return Polynomial(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<S>& coeffs() const { return c_; }
    S coeff(std::size_t i) const { return i < c_.size() ? c_[i] : S(0); }
    S leading() const { return c_.empty() ? S(0) : c_.back(); }

    S operator()(const S& x) const {
        S acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<S> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * S(static_cast<long>(i));
        return Polynomial(std::move(d));
    }

    /// p(u + t)
    Polynomial shifted(const S& t) const {
        std::vector<S> r(c_.begin(), c_.end());
        const std::size_t n = r.size();
        // Ruffini-Horner taylor shift
        for (std::size_t k = 0; k + 1 < n; ++k) {
            for (std::size_t i = n - 1; i > k; --i) r[i - 1] += t * r[i];
        }
        return Polynomial(std::move(r));
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), S(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), S(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator*=(const S& a) {
        for (auto& x : c_) x *= a;
        trim();
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const S& s) { return a *= s; }
    friend Polynomial operator*(const S& s, Polynomial a) { return a *= s; }
    friend Polynomial operator-(Polynomial a) { return a *= S(-1); }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<S> r(a.c_.size() + b.c_.size() - 1, S(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == S(0)) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return Polynomial(std::move(r));
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    Polynomial pow(unsigned e) const {
        Polynomial r = constant(S(1));
        for (unsigned i = 0; i < e; ++i) r *= *this;
        return r;
    }

    /// Quotient and remainder by a nonzero divisor.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
        if (d.is_zero()) throw DomainError("polynomial division by zero");
        std::vector<S> rem(c_.begin(), c_.end());
        if (rem.size() < d.c_.size()) return {Polynomial{}, *this};
        std::vector<S> q(rem.size() - d.c_.size() + 1, S(0));
        const S lead = d.c_.back();
        for (std::size_t k = q.size(); k-- > 0;) {
            S f = rem[k + d.c_.size() - 1] / lead;
            q[k] = f;
            if (f == S(0)) continue;
            for (std::size_t j = 0; j < d.c_.size(); ++j) rem[k + j] -= f * d.c_[j];
        }
        rem.resize(d.c_.size() - 1);
        return {Polynomial(std::move(q)), Polynomial(std::move(rem))};
    }

    /// Multiplicity of t as a root (0 if p(t) != 0). Zero polynomial throws.
    unsigned zero_order_at(const S& t) const {
        if (is_zero()) throw DomainError("zero polynomial has no finite zero order");
        Polynomial s = shifted(t);
        unsigned k = 0;
        while (s.c_[k] == S(0)) ++k;
        return k;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == S(0)) c_.pop_back();
    }
    std::vector<S> c_;
};

using RationalPoly = Polynomial<Rational>;
using FloatPoly = Polynomial<double>;

/// (u + z_1)...(u + z_k)
template <typename S>
Polynomial<S> linear_product(const std::vector<S>& roots_negated) {
    Polynomial<S> p = Polynomial<S>::constant(S(1));
    for (const auto& z : roots_negated) p *= Polynomial<S>::linear(z);
    return p;
}

/// Newton interpolation through (xs[i], ys[i]); xs distinct.
template <typename S>
Polynomial<S> interpolate(const std::vector<S>& xs, std::vector<S> ys) {
    if (xs.size() != ys.size()) throw DomainError("interpolate: size mismatch");
    const std::size_t n = xs.size();
    for (std::size_t k = 1; k < n; ++k)
        for (std::size_t i = n - 1; i >= k; --i) {
            ys[i] = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - k]);
            if (i == k) break;
        }
    Polynomial<S> p;
    for (std::size_t i = n; i-- > 0;) {
        p *= Polynomial<S>::linear(-xs[i]);
        p += Polynomial<S>::constant(ys[i]);
    }
    return p;
}

}  // namespace wronski
