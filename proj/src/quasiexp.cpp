#include "wronski/quasiexp.hpp"

#include <algorithm>
#include <bit>
#include <iterator>
#include <random>
#include <set>
#include <unordered_map>

namespace wronski {

// ---------------------------------------------------------------- QuasiExp

void QuasiExp::add_term(const Rational& c, const RationalPoly& p) {
    if (p.is_zero()) return;
    auto it = t_.find(c);
    if (it == t_.end()) {
        t_.emplace(c, p);
        return;
    }
    it->second += p;
    if (it->second.is_zero()) t_.erase(it);
}

QuasiExp QuasiExp::term(const Rational& c, RationalPoly p) {
    QuasiExp f;
    f.add_term(c, p);
    return f;
}

std::optional<Rational> QuasiExp::single_exponent() const {
    if (t_.size() != 1) return std::nullopt;
    return t_.begin()->first;
}

RationalPoly QuasiExp::polynomial_part() const {
    if (t_.empty()) return {};
    if (t_.size() != 1) throw DomainError("polynomial part needs a single exponent");
    return t_.begin()->second;
}

QuasiExp QuasiExp::derivative(unsigned k) const {
    QuasiExp f = *this;
    for (unsigned r = 0; r < k; ++r) {
        QuasiExp d;
        for (const auto& [c, p] : f.t_) d.add_term(c, p * c + p.derivative());
        f = std::move(d);
    }
    return f;
}

QuasiExp QuasiExp::translated(const Rational& t) const {
    if (sgn(t) == 0) return *this;
    if (t_.size() > 1) throw DomainError("translation by t != 0 needs a single exponent");
    QuasiExp f;
    for (const auto& [c, p] : t_) f.add_term(c, p.shifted(t));
    return f;
}

Rational QuasiExp::value_at(const Rational& t) const {
    Rational v(0);
    if (sgn(t) != 0 && t_.size() > 1) throw DomainError("evaluation at t != 0 needs a single exponent");
    for (const auto& [c, p] : t_) v += p(t);
    return v;
}

QuasiExp& QuasiExp::operator+=(const QuasiExp& o) {
    for (const auto& [c, p] : o.t_) add_term(c, p);
    return *this;
}

QuasiExp& QuasiExp::operator-=(const QuasiExp& o) {
    for (const auto& [c, p] : o.t_) add_term(c, -p);
    return *this;
}

QuasiExp& QuasiExp::operator*=(const Rational& s) {
    if (sgn(s) == 0) {
        t_.clear();
        return *this;
    }
    for (auto& [c, p] : t_) p *= s;
    return *this;
}

QuasiExp operator*(const QuasiExp& a, const QuasiExp& b) {
    QuasiExp r;
    for (const auto& [c1, p1] : a.t_)
        for (const auto& [c2, p2] : b.t_) r.add_term(c1 + c2, p1 * p2);
    return r;
}

std::string QuasiExp::to_string() const {
    if (t_.empty()) return "0";
    std::string out;
    for (const auto& [c, p] : t_) {
        if (!out.empty()) out += " + ";
        std::string poly;
        for (std::size_t i = p.coeffs().size(); i-- > 0;) {
            if (sgn(p.coeffs()[i]) == 0) continue;
            if (!poly.empty()) poly += " + ";
            poly += format_rational(p.coeffs()[i]);
            if (i == 1) poly += "*u";
            if (i > 1) poly += "*u^" + std::to_string(i);
        }
        if (sgn(c) == 0 && t_.size() == 1) return poly;
        out += sgn(c) == 0 ? "(" + poly + ")" : "e^(" + format_rational(c) + "*u)*(" + poly + ")";
    }
    return out;
}

// ---------------------------------------------------------------- Wronskian and spaces

namespace {

QuasiExp quasi_determinant(const std::vector<std::vector<QuasiExp>>& grid) {
    const std::size_t n = grid.size();
    if (n == 0) return QuasiExp::polynomial(RationalPoly::constant(1));
    std::unordered_map<std::uint32_t, QuasiExp> memo;
    // expansion along rows in order; memo keyed by the set of used columns
    std::function<QuasiExp(std::uint32_t)> rec = [&](std::uint32_t used) -> QuasiExp {
        const std::size_t row = static_cast<std::size_t>(std::popcount(used));
        if (row == n) return QuasiExp::polynomial(RationalPoly::constant(1));
        if (auto it = memo.find(used); it != memo.end()) return it->second;
        QuasiExp acc;
        int free_index = 0;
        for (std::size_t c = 0; c < n; ++c) {
            if (used & (1u << c)) continue;
            const QuasiExp& x = grid[row][c];
            if (!x.is_zero()) {
                QuasiExp term = x * rec(used | (1u << c));
                if (free_index % 2 == 0) acc += term;
                else acc -= term;
            }
            ++free_index;
        }
        memo.emplace(used, acc);
        return acc;
    };
    return rec(0);
}

std::size_t checked_rows(int rows, int N) {
    if (rows < N) throw DomainError("taylor matrix needs at least N rows");
    return static_cast<std::size_t>(rows);
}

}  // namespace

QuasiExp wronskian(const std::vector<QuasiExp>& basis) {
    const std::size_t n = basis.size();
    std::vector<std::vector<QuasiExp>> grid(n, std::vector<QuasiExp>(n));
    for (std::size_t j = 0; j < n; ++j) {
        QuasiExp f = basis[j];
        for (std::size_t i = 0; i < n; ++i) {
            grid[i][j] = f;
            f = f.derivative();
        }
    }
    QuasiExp w = quasi_determinant(grid);
    if (w.is_zero()) throw DependentBasisError("basis functions are linearly dependent (Wronskian vanishes)");
    return w;
}

QuasiExpSpace::QuasiExpSpace(std::vector<QuasiExp> basis) : basis_(std::move(basis)) {
    if (basis_.empty()) throw DomainError("a quasi-exponential space needs at least one basis function");
    if (basis_.size() > 20) throw DomainError("quasi-exponential space dimension too large");
    std::map<std::pair<Rational, std::size_t>, std::size_t> coord;
    for (const auto& f : basis_)
        for (const auto& [c, p] : f.terms())
            for (std::size_t d = 0; d < p.coeffs().size(); ++d)
                if (sgn(p.coeffs()[d]) != 0) coord.emplace(std::make_pair(c, d), coord.size());
    RationalMatrix m(basis_.size(), coord.size());
    for (std::size_t r = 0; r < basis_.size(); ++r)
        for (const auto& [c, p] : basis_[r].terms())
            for (std::size_t d = 0; d < p.coeffs().size(); ++d)
                if (sgn(p.coeffs()[d]) != 0) m(r, coord.at({c, d})) = p.coeffs()[d];
    if (rank(std::move(m)) != basis_.size()) {
        throw DependentBasisError("basis functions are linearly dependent (Wronskian vanishes)");
    }
}

const QuasiExp& QuasiExpSpace::wronskian() const {
    if (!wr_) wr_ = wronski::wronskian(basis_);
    return *wr_;
}

bool QuasiExpSpace::is_polynomial() const {
    return std::all_of(basis_.begin(), basis_.end(), [](const QuasiExp& f) { return f.is_polynomial(); });
}

bool QuasiExpSpace::is_single_exponent() const {
    return std::all_of(basis_.begin(), basis_.end(), [](const QuasiExp& f) { return f.single_exponent().has_value(); });
}

std::vector<Rational> QuasiExpSpace::exponents() const {
    std::vector<Rational> out;
    for (const auto& f : basis_) {
        auto c = f.single_exponent();
        if (!c) throw DomainError("exponents are defined for single-exponent bases only");
        out.push_back(*c);
    }
    return out;
}

long QuasiExpSpace::max_degree() const {
    long d = -1;
    for (const auto& f : basis_)
        for (const auto& [c, p] : f.terms()) d = std::max(d, p.degree());
    return d;
}

QuasiExpSpace normalize_basis(const QuasiExpSpace& V) {
    const auto ex = V.exponents();
    std::map<Rational, std::vector<RationalPoly>> groups;
    for (std::size_t j = 0; j < ex.size(); ++j) groups[ex[j]].push_back(V.basis()[j].polynomial_part());
    std::vector<QuasiExp> out;
    for (const auto& [c, polys] : groups) {
        long top = 0;
        for (const auto& p : polys) top = std::max(top, p.degree());
        // columns ordered by decreasing degree so pivots give distinct leading degrees
        RationalMatrix m(polys.size(), static_cast<std::size_t>(top + 1));
        for (std::size_t r = 0; r < polys.size(); ++r)
            for (long d = 0; d <= top; ++d) m(r, static_cast<std::size_t>(top - d)) = polys[r].coeff(static_cast<std::size_t>(d));
        auto pivots = row_reduce(m);
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            std::vector<Rational> coeffs(static_cast<std::size_t>(top + 1));
            for (long d = 0; d <= top; ++d) coeffs[static_cast<std::size_t>(d)] = m(r, static_cast<std::size_t>(top - d));
            out.push_back(QuasiExp::term(c, RationalPoly(std::move(coeffs))));
        }
    }
    return QuasiExpSpace(std::move(out));
}

long wronskian_degree_formula(const QuasiExpSpace& V) {
    const QuasiExpSpace W = normalize_basis(V);
    std::map<Rational, long> mult;
    long total = 0;
    for (const auto& f : W.basis()) {
        total += f.polynomial_part().degree();
        ++mult[*f.single_exponent()];
    }
    for (const auto& [c, m] : mult) total -= m * (m - 1) / 2;
    return total;
}

long wronskian_zero_order_bound(const QuasiExpSpace& V, const Rational& t) {
    std::map<unsigned, long> mult;
    long total = 0;
    for (const auto& f : V.basis()) {
        if (!f.single_exponent()) throw DomainError("zero orders need a single-exponent basis");
        unsigned c = f.polynomial_part().zero_order_at(t);
        total += c;
        ++mult[c];
    }
    for (const auto& [c, m] : mult) total += m * (m - 1) / 2;
    const long N = V.dim();
    return total - N * (N - 1) / 2;
}

unsigned wronskian_zero_order(const QuasiExpSpace& V, const Rational& t) {
    return V.wronskian().polynomial_part().zero_order_at(t);
}

TaylorMatrix taylor_matrix(const QuasiExpSpace& V, const Rational& t, int rows) {
    const std::size_t R = checked_rows(rows, V.dim());
    TaylorMatrix tm{RationalMatrix(R, V.basis().size()), std::vector<Rational>(V.basis().size(), Rational(0))};
    for (std::size_t j = 0; j < V.basis().size(); ++j) {
        QuasiExp f = V.basis()[j];
        if (sgn(t) != 0) {
            auto c = f.single_exponent();
            if (!c) throw DomainError("taylor matrix at t != 0 needs a single-exponent basis");
            tm.log_scale[j] = *c * t;
        }
        for (std::size_t i = 0; i < R; ++i) {
            tm.values(i, j) = f.value_at(t);
            f = f.derivative();
        }
    }
    return tm;
}

std::vector<std::size_t> plucker_rows(const Partition& lambda, int N) {
    if (lambda.length() > N) throw DomainError("partition longer than the space dimension");
    std::vector<std::size_t> rows(static_cast<std::size_t>(N));
    for (int i = 0; i < N; ++i) rows[static_cast<std::size_t>(i)] = static_cast<std::size_t>(lambda[static_cast<std::size_t>(N - 1 - i)] + i);
    return rows;
}

PlueckerVector<double> to_float(const PlueckerVector<Rational>& pv) {
    PlueckerVector<double> out(pv.N(), pv.bound());
    for (const auto& [p, x] : pv.values()) out[p] = x.get_d();
    return out;
}

bool projectively_equal(const PlueckerVector<Rational>& a, const PlueckerVector<Rational>& b) {
    if (a.bound() != b.bound()) throw DomainError("Pluecker vectors have different bounds");
    return a.normalized().values() == b.normalized().values();
}

double projective_distance(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) throw DomainError("projective distance: length mismatch");
    auto zero = [](const std::vector<double>& v) { return std::all_of(v.begin(), v.end(), [](double x) { return x == 0.0; }); };
    const bool az = zero(a), bz = zero(b);
    if (az && bz) return 0.0;
    if (az || bz) return 1.0;
    // scale a to agree with b at b's largest entry; a tiny leading entry would amplify noise
    std::size_t top = 0;
    for (std::size_t i = 1; i < b.size(); ++i)
        if (std::abs(b[i]) > std::abs(b[top])) top = i;
    if (a[top] == 0.0) return 1.0;
    const double r = b[top] / a[top];
    double diff = 0;
    for (std::size_t i = 0; i < b.size(); ++i) diff = std::max(diff, std::abs(a[i] * r - b[i]));
    return diff / std::abs(b[top]);
}

double projective_distance(const PlueckerVector<double>& a, const PlueckerVector<double>& b) {
    if (a.bound() != b.bound()) throw DomainError("Pluecker vectors have different bounds");
    std::vector<double> va, vb;
    for (const auto& [p, x] : b.values()) {
        va.push_back(a.at(p));
        vb.push_back(x);
    }
    return projective_distance(va, vb);
}

bool projectively_equal(const PlueckerVector<double>& a, const PlueckerVector<double>& b, double rel_tol) {
    return projective_distance(a, b) <= rel_tol;
}

PlueckerVector<Rational> plucker_vector(const QuasiExpSpace& V, const Rational& t, int bound) {
    if (bound < 0) throw DomainError("Pluecker bound must be >= 0");
    auto tm = taylor_matrix(V, t, bound + V.dim());
    return plucker_from_jets(tm.values, bound);
}

QuasiExpSpace translate(const QuasiExpSpace& V, const Rational& t) {
    std::vector<QuasiExp> b;
    for (const auto& f : V.basis()) b.push_back(f.translated(t));
    return QuasiExpSpace(std::move(b));
}

bool same_span(const QuasiExpSpace& a, const QuasiExpSpace& b) {
    if (a.dim() != b.dim()) return false;
    std::map<std::pair<Rational, std::size_t>, std::size_t> coord;
    for (const auto* V : {&a, &b})
        for (const auto& f : V->basis())
            for (const auto& [c, p] : f.terms())
                for (std::size_t d = 0; d < p.coeffs().size(); ++d) coord.emplace(std::make_pair(c, d), 0);
    std::size_t idx = 0;
    for (auto& [k, v] : coord) v = idx++;
    auto fill = [&](RationalMatrix& m, std::size_t offset, const QuasiExpSpace& V) {
        for (std::size_t r = 0; r < V.basis().size(); ++r)
            for (const auto& [c, p] : V.basis()[r].terms())
                for (std::size_t d = 0; d < p.coeffs().size(); ++d) m(offset + r, coord.at({c, d})) = p.coeffs()[d];
    };
    const std::size_t N = static_cast<std::size_t>(a.dim());
    RationalMatrix both(2 * N, coord.size());
    fill(both, 0, a);
    fill(both, N, b);
    return rank(both) == N;
}

// ---------------------------------------------------------------- identities

namespace {

// Delta_lambda(V) and its derivatives from a jet matrix; zero for l(lambda) > N.
Rational delta(const RationalMatrix& J, const Partition& lambda, int k = 0) { return plucker_derivative(J, lambda, k); }

Rational abs_value(const Rational& x) { return sgn(x) < 0 ? Rational(-x) : x; }

IdentityReport report(const Rational& lhs, const Rational& rhs) {
    IdentityReport r;
    r.lhs = lhs;
    r.rhs = rhs;
    r.max_discrepancy = abs_value(lhs - rhs);
    r.holds = sgn(r.max_discrepancy) == 0;
    return r;
}

// Shared Jacobi-Trudi check; `entry(a)` picks the coordinate for index a.
IdentityReport jt_check(const QuasiExpSpace& V, const Partition& lambda, const std::vector<int>& rows_of_lambda, int m,
                        const Rational& t, bool dual) {
    const int N = V.dim();
    const int width = dual ? lambda.length() : lambda[0];
    auto tm = taylor_matrix(V, t, width + 2 * m + 2 * N + 1);
    const RationalMatrix& J = tm.values;
    const Rational d0 = delta(J, Partition{});
    if (sgn(d0) == 0) throw PreconditionError("evaluation point is a zero of the Wronskian");
    auto coordinate = [&](int a, int k) -> Rational {
        if (a < 0) return Rational(0);
        return delta(J, dual ? Partition::column(a) : Partition::row(a), k);
    };
    const std::size_t M = static_cast<std::size_t>(m);
    RationalMatrix grid(M, M);
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) {
            Rational acc(0);
            for (int k = 0; k <= j - 1; ++k) {
                Rational term = Rational(binomial(j - 1, k)) * coordinate(rows_of_lambda[static_cast<std::size_t>(i - 1)] - i + j - k, k);
                if (k % 2) acc -= term;
                else acc += term;
            }
            grid(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = acc;
        }
    const Rational lhs = delta(J, lambda) * rational_pow(d0, static_cast<unsigned>(m - 1));
    return report(lhs, determinant(grid));
}

}  // namespace

IdentityReport verify_translation_identity(const QuasiExpSpace& V, const Partition& mu, const Rational& t, int bound) {
    if (mu.size() > bound) throw DomainError("|mu| exceeds the translation bound");
    const int N = V.dim();
    const auto J0 = taylor_matrix(V, Rational(0), bound + N).values;
    const long needed = V.is_polynomial() ? static_cast<long>(N) * std::max(0L, V.max_degree() - N + 1) : -1;
    if (needed >= 0 && bound >= needed) {
        const auto Jt = taylor_matrix(V, t, mu[0] + N).values;
        Rational rhs(0);
        for (const auto& lam : partitions_up_to(bound, N)) {
            if (!lam.contains(mu)) continue;
            const unsigned k = static_cast<unsigned>(lam.size() - mu.size());
            Rational c(skew_syt_count(lam, mu), factorial(k));
            c.canonicalize();
            rhs += c * rational_pow(t, k) * delta(J0, lam);
        }
        return report(delta(Jt, mu), rhs);
    }
    // power series in t, compared coefficientwise
    IdentityReport out;
    out.mode = "truncated";
    out.holds = true;
    for (int k = 0; k + mu.size() <= bound; ++k) {
        const Rational lhs = delta(J0, mu, k);
        Rational rhs(0);
        for (const auto& lam : partitions_of(mu.size() + k))
            if (lam.length() <= N && lam.contains(mu)) rhs += Rational(skew_syt_count(lam, mu)) * delta(J0, lam);
        const Rational d = abs_value(lhs - rhs);
        if (d > out.max_discrepancy || k == 0) {
            if (d > out.max_discrepancy) out.max_discrepancy = d;
            out.lhs = lhs;
            out.rhs = rhs;
        }
        if (sgn(d) != 0) out.holds = false;
    }
    return out;
}

IdentityReport verify_jacobi_trudi(const QuasiExpSpace& V, const Partition& lambda, int m, const Rational& t) {
    if (m < lambda.length() || m < 1) throw DomainError("Jacobi-Trudi size m must be >= l(lambda) and >= 1");
    std::vector<int> rows(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) rows[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)];
    return jt_check(V, lambda, rows, m, t, false);
}

IdentityReport verify_dual_jacobi_trudi(const QuasiExpSpace& V, const Partition& lambda, int m, const Rational& t) {
    if (m < lambda[0] || m < 1) throw DomainError("dual Jacobi-Trudi size m must be >= lambda_1 and >= 1");
    const Partition c = lambda.conjugate();
    std::vector<int> rows(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) rows[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(i)];
    return jt_check(V, lambda, rows, m, t, true);
}

// ---------------------------------------------------------------- g-basis and D_V

std::vector<Rational> g_series(const QuasiExpSpace& V, const Rational& t, int D) {
    if (D < 0) throw DomainError("g-series depth must be >= 0");
    const int N = V.dim();
    const auto J = taylor_matrix(V, t, N + D).values;
    std::vector<Rational> out(static_cast<std::size_t>(N + D), Rational(0));
    for (int i = 0; i <= D; ++i) {
        const unsigned q = static_cast<unsigned>(N + i - 1);
        Rational c = delta(J, Partition::row(i)) / Rational(factorial(q));
        out[q] = c;
    }
    return out;
}

namespace {

// Solves x * F = g for a row vector x; returns nullopt when inconsistent.
std::optional<std::vector<Rational>> solve_left(const RationalMatrix& F, const std::vector<Rational>& g) {
    const std::size_t n = F.rows(), len = F.cols();
    RationalMatrix aug(len, n + 1);
    for (std::size_t q = 0; q < len; ++q) {
        for (std::size_t l = 0; l < n; ++l) aug(q, l) = F(l, q);
        aug(q, n) = g[q];
    }
    auto pivots = row_reduce(aug);
    if (!pivots.empty() && pivots.back() == n) return std::nullopt;
    std::vector<Rational> x(n, Rational(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, n);
    return x;
}

}  // namespace

GBasis basis_from_g(const QuasiExpSpace& V, const Rational& t, int D) {
    const int N = V.dim();
    if (D < N - 1) throw DomainError("g-basis depth must be >= N - 1 to certify rank");
    const auto J = taylor_matrix(V, t, D + 2 * N).values;
    GBasis out;
    out.order = D;
    const std::size_t len = static_cast<std::size_t>(D + 1);
    // a_i^{(s)}: derivatives of the single-row coordinates
    auto a = [&](int i, int s) { return delta(J, Partition::row(i), s); };
    for (int j = 0; j < N; ++j) {
        std::vector<Rational> row(len, Rational(0));
        for (int q = 0; q <= D; ++q) {
            Rational acc(0);
            for (int k = 0; k <= j; ++k) {
                const int i = q + k - N + 1;
                if (i < 0 || i > D) continue;
                Rational term = Rational(binomial(j, k)) * a(i, j - k);
                if (k % 2) acc -= term;
                else acc += term;
            }
            row[static_cast<std::size_t>(q)] = acc / Rational(factorial(static_cast<unsigned>(q)));
        }
        out.series.push_back(std::move(row));
    }
    RationalMatrix F(static_cast<std::size_t>(N), len), G(static_cast<std::size_t>(N), len);
    for (std::size_t l = 0; l < static_cast<std::size_t>(N); ++l)
        for (std::size_t q = 0; q < len; ++q) {
            F(l, q) = J(q, l) / Rational(factorial(static_cast<unsigned>(q)));
            G(l, q) = out.series[l][q];
        }
    out.rank = rank(G);
    out.independent = out.rank == static_cast<std::size_t>(N);
    out.in_span = true;
    RationalMatrix C(static_cast<std::size_t>(N), static_cast<std::size_t>(N));
    for (std::size_t j = 0; j < static_cast<std::size_t>(N); ++j) {
        auto x = solve_left(F, out.series[j]);
        if (!x) {
            out.in_span = false;
            break;
        }
        for (std::size_t l = 0; l < x->size(); ++l) C(j, l) = (*x)[l];
    }
    if (out.in_span) out.change_of_basis = std::move(C);
    return out;
}

DifferentialOperator differential_operator(const QuasiExpSpace& V, const Rational& t, int margin) {
    if (margin < 0) throw DomainError("annihilation margin must be >= 0");
    const int N = V.dim();
    const auto J = taylor_matrix(V, t, 2 * N + margin + 2).values;
    const Rational d0 = delta(J, Partition{});
    if (sgn(d0) == 0) throw PreconditionError("evaluation point is a zero of the Wronskian");
    DifferentialOperator out;
    out.coefficients.assign(static_cast<std::size_t>(N + 1), Rational(0));
    for (int i = 0; i <= N; ++i) {
        Rational c = delta(J, Partition::column(i)) / d0;
        out.coefficients[static_cast<std::size_t>(N - i)] = i % 2 ? Rational(-c) : c;
    }
    out.annihilates = true;
    for (int r = 0; r <= margin; ++r)
        for (std::size_t l = 0; l < static_cast<std::size_t>(N); ++l) {
            Rational acc(0);
            for (int i = 0; i <= N; ++i)
                for (int s = 0; s <= r; ++s) {
                    Rational term = Rational(binomial(r, s)) * delta(J, Partition::column(i), s) *
                                    J(static_cast<std::size_t>(N - i + r - s), l);
                    if (i % 2) acc -= term;
                    else acc += term;
                }
            if (sgn(acc) != 0) out.annihilates = false;
        }
    out.checked_orders = margin + 1;
    return out;
}

QuasiExpSpace dual_space(const QuasiExpSpace& V, int M) {
    const int N = V.dim();
    if (!V.is_polynomial()) throw DomainError("dual space is defined for polynomial spaces");
    if (V.max_degree() > M - 1) throw DomainError("basis degree exceeds M - 1");
    if (N >= M) throw DomainError("dual space of a full space is zero-dimensional");
    const std::size_t m = static_cast<std::size_t>(M);
    RationalMatrix A(static_cast<std::size_t>(N), m);
    for (std::size_t r = 0; r < static_cast<std::size_t>(N); ++r) {
        const RationalPoly g = V.basis()[r].polynomial_part();
        for (std::size_t i = 0; i < m; ++i) {
            const std::size_t k = m - 1 - i;
            Rational v = g.coeff(k) * Rational(factorial(static_cast<unsigned>(k)));
            A(r, i) = i % 2 ? Rational(-v) : v;
        }
    }
    std::vector<QuasiExp> out;
    for (const auto& x : nullspace(A)) {
        std::vector<Rational> coeffs(m);
        for (std::size_t i = 0; i < m; ++i) coeffs[i] = x[i] / Rational(factorial(static_cast<unsigned>(i)));
        out.push_back(QuasiExp::polynomial(RationalPoly(std::move(coeffs))));
    }
    return QuasiExpSpace(std::move(out));
}

QuasiExpSpace poly_limit_family(const QuasiExpSpace& V, long k) {
    if (k < 1) throw DomainError("limit parameter k must be >= 1");
    std::vector<QuasiExp> out;
    for (const auto& f : V.basis()) {
        auto c = f.single_exponent();
        if (!c || sgn(*c) < 0 || c->get_den() != 1) {
            throw DomainError("polynomial limit needs nonnegative integer exponents");
        }
        const long e = c->get_num().get_si() * k;
        std::vector<Rational> coeffs(static_cast<std::size_t>(e + 1));
        Rational kpow(1);
        for (long i = 0; i <= e; ++i) {
            coeffs[static_cast<std::size_t>(i)] = Rational(binomial(e, i)) / kpow;
            kpow *= k;
        }
        out.push_back(QuasiExp::polynomial(RationalPoly(std::move(coeffs)) * f.polynomial_part()));
    }
    return QuasiExpSpace(std::move(out));
}

RationalMatrix exp_shift_matrix(const Rational& c, std::size_t size) {
    if (sgn(c) <= 0) throw DomainError("shift parameter c must be positive");
    RationalMatrix B(size, size);
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t k = 0; k <= i; ++k)
            B(i, k) = Rational(binomial(static_cast<long>(i), static_cast<long>(k))) * rational_pow(c, static_cast<unsigned>(i - k));
    return B;
}

MinorSampleReport sample_shift_minors(const RationalMatrix& B, std::size_t samples, std::uint64_t seed) {
    const std::size_t n = B.rows();
    if (n == 0 || B.cols() != n) throw DomainError("minor sampling needs a nonempty square matrix");
    std::mt19937_64 rng(seed);
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    MinorSampleReport rep;
    bool first = true;
    while (rep.sampled < samples) {
        const std::size_t m = 1 + rng() % n;
        std::vector<std::size_t> rows, cols;
        std::sample(all.begin(), all.end(), std::back_inserter(rows), m, rng);
        std::sample(all.begin(), all.end(), std::back_inserter(cols), m, rng);
        bool ok = true;
        for (std::size_t l = 0; l < m; ++l) ok = ok && rows[l] >= cols[l];
        if (!ok) continue;
        const Rational d = determinant(B.submatrix(rows, cols));
        ++rep.sampled;
        if (sgn(d) > 0) ++rep.positive;
        if (first || d < rep.smallest) rep.smallest = d;
        first = false;
    }
    return rep;
}

}  // namespace wronski
