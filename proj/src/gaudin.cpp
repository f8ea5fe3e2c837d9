#include "wronski/gaudin.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <random>
#include <string>

namespace wronski {

void GaudinInstance::validate() const {
    if (N < 1) throw DomainError("GaudinInstance: N must be >= 1");
    if (n < 0) throw DomainError("GaudinInstance: n must be >= 0");
    if (static_cast<int>(h.size()) != N) throw DomainError("GaudinInstance: h must have N entries");
    if (static_cast<int>(z.size()) != n) throw DomainError("GaudinInstance: z must have n entries");
}

// ---------------------------------------------------------------- OperatorPolynomial

void OperatorPolynomial::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

ExactOperator OperatorPolynomial::operator()(const Rational& t) const {
    ExactOperator acc(f_);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= t;
        acc += *it;
    }
    return acc;
}

OperatorPolynomial OperatorPolynomial::derivative() const {
    OperatorPolynomial d(f_);
    for (std::size_t i = 1; i < c_.size(); ++i) d.c_.push_back(c_[i] * Rational(static_cast<long>(i)));
    d.trim();
    return d;
}

void OperatorPolynomial::add_product(const RationalPoly& p, const ExactOperator& A) {
    if (!(A.factors() == f_)) throw DomainError("operator polynomial: factor set mismatch");
    if (p.is_zero()) return;
    while (c_.size() < p.coeffs().size()) c_.emplace_back(f_);
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) c_[i].add_scaled(A, p.coeffs()[i]);
    trim();
}

OperatorPolynomial& OperatorPolynomial::operator+=(const OperatorPolynomial& o) {
    for (std::size_t i = 0; i < o.c_.size(); ++i) add_product(RationalPoly::monomial(i), o.c_[i]);
    return *this;
}

OperatorPolynomial& OperatorPolynomial::operator-=(const OperatorPolynomial& o) {
    for (std::size_t i = 0; i < o.c_.size(); ++i) add_product(RationalPoly::monomial(i, Rational(-1)), o.c_[i]);
    return *this;
}

OperatorPolynomial operator*(const RationalPoly& p, const OperatorPolynomial& a) {
    OperatorPolynomial r(a.f_);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        std::vector<Rational> shifted(i, Rational(0));
        shifted.insert(shifted.end(), p.coeffs().begin(), p.coeffs().end());
        r.add_product(RationalPoly(std::move(shifted)), a.c_[i]);
    }
    return r;
}

OperatorPolynomial OperatorPolynomial::from_entries(const FactorSet& f, const std::vector<RationalPoly>& entries) {
    OperatorPolynomial r(f);
    const std::size_t d = f.total_dim();
    if (entries.size() != d * d) throw DomainError("from_entries: wrong number of entries");
    std::size_t deg = 0;
    for (const auto& e : entries) deg = std::max(deg, e.coeffs().size());
    r.c_.assign(deg, ExactOperator(f));
    for (std::size_t x = 0; x < entries.size(); ++x)
        for (std::size_t i = 0; i < entries[x].coeffs().size(); ++i) r.c_[i](x / d, x % d) = entries[x].coeffs()[i];
    r.trim();
    return r;
}

// ---------------------------------------------------------------- matrix derivative

namespace {

// Multilinear polynomial in eps_0..eps_{r-1}: coefficient per subset bitmask.
using EpsPoly = std::vector<Rational>;

EpsPoly eps_mul(const EpsPoly& a, const EpsPoly& b) {
    EpsPoly c(a.size(), Rational(0));
    for (std::size_t x = 0; x < a.size(); ++x) {
        if (sgn(a[x]) == 0) continue;
        for (std::size_t y = 0; y < b.size(); ++y) {
            if ((x & y) != 0 || sgn(b[y]) == 0) continue;
            c[x | y] += a[x] * b[y];
        }
    }
    return c;
}

void eps_add_mul(EpsPoly& acc, const EpsPoly& a, const EpsPoly& b) {
    for (std::size_t x = 0; x < a.size(); ++x) {
        if (sgn(a[x]) == 0) continue;
        for (std::size_t y = 0; y < b.size(); ++y) {
            if ((x & y) != 0 || sgn(b[y]) == 0) continue;
            acc[x | y] += a[x] * b[y];
        }
    }
}

std::vector<int> mask_labels(unsigned mask, int offset = 1) {
    std::vector<int> out;
    for (int b = 0; mask >> b; ++b)
        if (mask >> b & 1u) out.push_back(b + offset);
    return out;
}

std::vector<int> iota_labels(int r) {
    std::vector<int> v(static_cast<std::size_t>(r));
    std::iota(v.begin(), v.end(), 1);
    return v;
}

RationalPoly site_product(const std::vector<Rational>& z, const std::vector<int>& labels) {
    RationalPoly p = RationalPoly::constant(1);
    for (int l : labels) p *= RationalPoly::linear(z[static_cast<std::size_t>(l - 1)]);
    return p;
}

}  // namespace

ExactOperator matrix_derivative(const TraceExpression& f, const std::vector<int>& K, const EigenvalueList& h) {
    const int N = static_cast<int>(h.size());
    if (N < 1) throw DomainError("matrix derivative needs N >= 1");
    int maxp = 0;
    for (const auto& t : f)
        for (int p : t.powers) {
            if (p < 1) throw DomainError("trace expression has a power below 1");
            maxp = std::max(maxp, p);
        }
    FactorSet F(K, N);
    ExactOperator out(F);
    const std::size_t r = F.size();
    const std::size_t masks = std::size_t{1} << r;
    const std::size_t top = masks - 1;
    const std::size_t NN = static_cast<std::size_t>(N);

    // Odometer over (i_0, j_0, ..., i_{r-1}, j_{r-1}).
    std::vector<int> idx(2 * r, 0);
    std::vector<int> si(r), sj(r);
    for (;;) {
        for (std::size_t k = 0; k < r; ++k) {
            si[k] = idx[2 * k];
            sj[k] = idx[2 * k + 1];
        }
        auto ci = si, cj = sj;
        std::sort(ci.begin(), ci.end());
        std::sort(cj.begin(), cj.end());
        // Closed walks need every basis index to be entered as often as it is left.
        if (ci == cj) {
            std::vector<EpsPoly> M(NN * NN, EpsPoly(masks, Rational(0)));
            for (std::size_t a = 0; a < NN; ++a) M[a * NN + a][0] = h[a];
            for (std::size_t k = 0; k < r; ++k)
                M[static_cast<std::size_t>(sj[k]) * NN + static_cast<std::size_t>(si[k])][std::size_t{1} << k] += 1;
            std::vector<EpsPoly> tr(static_cast<std::size_t>(maxp) + 1, EpsPoly(masks, Rational(0)));
            std::vector<EpsPoly> P = M;
            for (int p = 1; p <= maxp; ++p) {
                if (p > 1) {
                    std::vector<EpsPoly> Q(NN * NN, EpsPoly(masks, Rational(0)));
                    for (std::size_t a = 0; a < NN; ++a)
                        for (std::size_t b = 0; b < NN; ++b)
                            for (std::size_t c = 0; c < NN; ++c) eps_add_mul(Q[a * NN + c], P[a * NN + b], M[b * NN + c]);
                    P = std::move(Q);
                }
                for (std::size_t a = 0; a < NN; ++a)
                    for (std::size_t x = 0; x < masks; ++x) tr[static_cast<std::size_t>(p)][x] += P[a * NN + a][x];
            }
            Rational value = 0;
            for (const auto& term : f) {
                EpsPoly prod(masks, Rational(0));
                prod[0] = term.coefficient;
                for (int p : term.powers) prod = eps_mul(prod, tr[static_cast<std::size_t>(p)]);
                value += prod[top];
            }
            if (sgn(value) != 0) {
                std::size_t row = 0, col = 0;
                for (std::size_t k = 0; k < r; ++k) {
                    row += static_cast<std::size_t>(si[k]) * F.stride(k);
                    col += static_cast<std::size_t>(sj[k]) * F.stride(k);
                }
                out(row, col) += value;
            }
        }
        std::size_t pos = 0;
        while (pos < idx.size() && ++idx[pos] == N) idx[pos++] = 0;
        if (pos == idx.size()) break;
    }
    return out;
}

// ---------------------------------------------------------------- T_lambda routes

OperatorPolynomial build_T_definitional(const Partition& lambda, const GaudinInstance& inst) {
    inst.validate();
    const FactorSet S = inst.sites();
    OperatorPolynomial T(S);
    if (lambda.length() > inst.N) return T;
    const TraceExpression f = schur_power_sum_expansion(lambda);
    const int rmax = std::min(inst.n, lambda.size());
    std::vector<ExactOperator> D;
    for (int r = 0; r <= rmax; ++r) D.push_back(matrix_derivative(f, iota_labels(r), inst.h));
    for (unsigned mask = 0; mask < (1u << inst.n); ++mask) {
        const int r = std::popcount(mask);
        if (r > rmax || D[static_cast<std::size_t>(r)].is_zero()) continue;
        auto K = mask_labels(mask);
        auto rest = mask_labels(~mask & ((1u << inst.n) - 1));
        T.add_product(site_product(inst.z, rest), D[static_cast<std::size_t>(r)].relabeled(FactorSet(K, inst.N)).embedded(S));
    }
    return T;
}

OperatorPolynomial build_T_partial_trace(const Partition& lambda, const GaudinInstance& inst, int m) {
    inst.validate();
    const int r = lambda.size();
    const int lower = std::max(inst.n, r);
    if (m == 0) m = lower;
    if (m < lower) throw DomainError("partial-trace route needs m >= max(n, |lambda|) = " + std::to_string(lower));
    const FactorSet S = inst.sites();
    OperatorPolynomial T(S);
    const ExactOperator alpha = group_algebra_operator(alpha_element(lambda, iota_labels(r)), FactorSet::range(r, inst.N));
    Integer mr = factorial(static_cast<unsigned>(m - r));
    for (unsigned Lmask = 0; Lmask < (1u << m); ++Lmask) {
        if (std::popcount(Lmask) != r) continue;
        const FactorSet FL(mask_labels(Lmask), inst.N);
        const ExactOperator A = alpha.relabeled(FL);
        const unsigned site_part = Lmask & ((1u << inst.n) - 1);
        // K ranges over subsets of L inside the sites
        for (unsigned Kmask = site_part;; Kmask = (Kmask - 1) & site_part) {
            auto K = mask_labels(Kmask);
            auto traced = mask_labels(Lmask & ~Kmask);
            ExactOperator R = partial_trace(A.left_diagonal(diagonal_h_entries(inst.h, traced, FL)), traced);
            Rational coef(mr, factorial(static_cast<unsigned>(m - static_cast<int>(K.size()))));
            coef.canonicalize();
            auto rest = mask_labels(~Kmask & ((1u << inst.n) - 1));
            T.add_product(site_product(inst.z, rest) * coef, R.embedded(S));
            if (Kmask == 0) break;
        }
    }
    return T;
}

ColumnFamily build_columns(const GaudinInstance& inst, int max_a) {
    ColumnFamily cols;
    for (int a = 0; a <= max_a; ++a) cols.emplace(a, build_T_definitional(Partition::column(a), inst));
    return cols;
}

namespace {

using OperatorGrid = std::vector<std::vector<ExactOperator>>;

// Laplace expansion along rows with memoized column-subset minors; entries commute.
ExactOperator commuting_determinant(const OperatorGrid& E, const FactorSet& F) {
    const std::size_t m = E.size();
    std::map<unsigned, ExactOperator> memo;
    std::function<ExactOperator(unsigned)> minor = [&](unsigned cols) -> ExactOperator {
        if (cols == 0) return ExactOperator::identity(F);
        if (auto it = memo.find(cols); it != memo.end()) return it->second;
        const std::size_t row = m - static_cast<std::size_t>(std::popcount(cols));
        ExactOperator acc(F);
        int below = 0;
        for (std::size_t c = 0; c < m; ++c) {
            if (!(cols >> c & 1u)) continue;
            const ExactOperator& e = E[row][c];
            if (!e.is_zero()) {
                ExactOperator sub = minor(cols & ~(1u << c));
                if (!sub.is_zero()) acc.add_scaled(e * sub, Rational(below % 2 ? -1 : 1));
            }
            ++below;
        }
        memo.emplace(cols, acc);
        return acc;
    };
    return minor((1u << m) - 1);
}

}  // namespace

OperatorPolynomial build_T_jacobi_trudi(const Partition& lambda, const GaudinInstance& inst, const ColumnFamily& columns) {
    inst.validate();
    const FactorSet S = inst.sites();
    const RationalPoly P = linear_product(inst.z);
    OperatorPolynomial result(S);
    if (lambda.empty()) {
        result.add_product(P, ExactOperator::identity(S));
        return result;
    }
    const Partition conj = lambda.conjugate();
    const int m = lambda[0];
    const int s = m * (m + 1) / 2;
    const RationalPoly dP = P.derivative();

    // numerators[a][k]: k-th u-derivative of T_{(1^a)}/P equals numerators[a][k] / P^{k+1}
    std::map<int, std::vector<OperatorPolynomial>> numerators;
    auto numerator = [&](int a, int k) -> const OperatorPolynomial& {
        auto& chain = numerators[a];
        if (chain.empty()) {
            auto it = columns.find(a);
            if (it == columns.end()) throw DomainError("missing single-column operator T_(1^" + std::to_string(a) + ")");
            chain.push_back(it->second);
        }
        while (static_cast<int>(chain.size()) <= k) {
            const std::size_t j = chain.size() - 1;
            OperatorPolynomial next = P * chain[j].derivative();
            next -= (dP * Rational(static_cast<long>(j + 1))) * chain[j];
            chain.push_back(std::move(next));
        }
        return chain[static_cast<std::size_t>(k)];
    };

    // Row i, column j of the determinant after scaling column j by P^j.
    std::vector<std::vector<OperatorPolynomial>> grid(static_cast<std::size_t>(m), std::vector<OperatorPolynomial>(static_cast<std::size_t>(m), OperatorPolynomial(S)));
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) {
            auto& cell = grid[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
            for (int k = 0; k <= j - 1; ++k) {
                const int a = conj[static_cast<std::size_t>(i - 1)] - i + j - k;
                if (a < 0) continue;
                const OperatorPolynomial& num = numerator(a, k);
                if (num.is_zero()) continue;
                RationalPoly w = P.pow(static_cast<unsigned>(j - 1 - k)) * Rational(binomial(j - 1, k) * (k % 2 ? -1 : 1));
                cell += w * num;
            }
        }

    // det is a polynomial of degree <= n*s; sample, interpolate entrywise, then divide.
    const std::size_t samples = static_cast<std::size_t>(inst.n * s) + 1;
    const std::size_t d = S.total_dim();
    std::vector<Rational> xs;
    std::vector<std::vector<Rational>> values(d * d);
    for (std::size_t t = 0; t < samples; ++t) {
        Rational x(static_cast<long>(t));
        OperatorGrid E(static_cast<std::size_t>(m));
        for (std::size_t i = 0; i < E.size(); ++i)
            for (std::size_t j = 0; j < E.size(); ++j) E[i].push_back(grid[i][j](x));
        ExactOperator det = commuting_determinant(E, S);
        xs.push_back(x);
        for (std::size_t e = 0; e < d * d; ++e) values[e].push_back(det(e / d, e % d));
    }
    const RationalPoly denom = P.pow(static_cast<unsigned>(s - 1));
    std::vector<RationalPoly> entries;
    entries.reserve(d * d);
    for (std::size_t e = 0; e < d * d; ++e) {
        auto [q, rem] = interpolate(xs, values[e]).divmod(denom);
        if (!rem.is_zero()) {
            throw IdentityViolation("Jacobi-Trudi route for " + lambda.to_string() + ": determinant not divisible by prod(u+z_k)^" + std::to_string(s - 1));
        }
        entries.push_back(std::move(q));
    }
    result = OperatorPolynomial::from_entries(S, entries);
    if (result.degree() > inst.n) {
        throw IdentityViolation("Jacobi-Trudi route for " + lambda.to_string() + ": degree exceeds n");
    }
    return result;
}

OperatorPolynomial build_T_jacobi_trudi(const Partition& lambda, const GaudinInstance& inst) {
    const int max_a = lambda.empty() ? 0 : lambda.conjugate()[0] + lambda[0] - 1;
    return build_T_jacobi_trudi(lambda, inst, build_columns(inst, max_a));
}

OperatorPolynomial build_beta(const Partition& lambda, const GaudinInstance& inst) {
    inst.validate();
    const FactorSet S = inst.sites();
    OperatorPolynomial B(S);
    const int r = lambda.size();
    if (r > inst.n) return B;
    const ExactOperator alpha = group_algebra_operator(alpha_element(lambda, iota_labels(r)), FactorSet::range(r, inst.N));
    for (unsigned mask = 0; mask < (1u << inst.n); ++mask) {
        if (std::popcount(mask) != r) continue;
        auto K = mask_labels(mask);
        // complement of K, matching the worked examples and the h = 0 specialization
        auto rest = mask_labels(~mask & ((1u << inst.n) - 1));
        B.add_product(site_product(inst.z, rest), alpha.relabeled(FactorSet(K, inst.N)).embedded(S));
    }
    return B;
}

TraceExpression trace_of_central(const GroupAlgebraElement& g) {
    TraceExpression f;
    for (const auto& [s, c] : g.terms()) f.push_back({c, cycle_type(s).parts()});
    return f;
}

namespace {

Rational nonzero_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(1, 7), den(1, 3), sign(0, 1);
    Rational q(num(rng) * (sign(rng) ? 1 : -1), den(rng));
    q.canonicalize();
    return q;
}

struct Tallies {
    std::vector<IdentityTally> items;
    void record(std::size_t i, bool ok) {
        ++items[i].checked;
        if (!ok) ++items[i].failed;
    }
};

}  // namespace

TraceIdentityReport verify_trace_identities(int max_N, int max_L, int max_K, std::uint64_t seed) {
    if (max_N < 1 || max_L < 1 || max_K < 0) throw DomainError("trace identities: bounds must be positive");
    enum { Cyc, Schur, Deriv, Commute, Factor, Mirror, FourWays, TraceSwap };
    Tallies t;
    for (const char* name : {"trace-of-permutation", "trace-of-alpha", "derivative-of-central", "traced-h-commutes",
                             "h-factors-out", "h-factors-out-mirror", "four-ways", "trace-swap"})
        t.items.push_back({name});

    std::mt19937_64 rng(seed);
    for (int N = 1; N <= max_N; ++N) {
        EigenvalueList h, hinv;
        for (int i = 0; i < N; ++i) {
            h.push_back(nonzero_rational(rng));
            hinv.push_back(1 / h.back());
        }
        for (int r = 1; r <= max_L; ++r) {
            const std::vector<int> L = iota_labels(r);
            const FactorSet FL(L, N);
            const auto hL = diagonal_h_action(h, L, FL);
            const int kmax = std::min(r, max_K);
            std::vector<ExactOperator> h_rest, h_head, hinv_head;
            for (int k = 0; k <= kmax; ++k) {
                std::vector<int> K(L.begin(), L.begin() + k), rest(L.begin() + k, L.end());
                h_rest.push_back(diagonal_h_action(h, rest, FL));
                h_head.push_back(diagonal_h_action(h, K, FactorSet(K, N)));
                hinv_head.push_back(diagonal_h_action(hinv, K, FactorSet(K, N)));
            }
            auto rest_of = [&](int k) { return std::vector<int>(L.begin() + k, L.end()); };

            for (const auto& s : all_permutations(L)) {
                const auto P = permutation_operator(s, FL);
                Rational pc = 1;
                const CycleType ct = cycle_type(s);
                for (int k : ct.parts()) pc *= power_sum(k, h);
                t.record(Cyc, (hL * P).trace() == pc);
                for (int k = 0; k <= kmax; ++k) {
                    const auto rest = rest_of(k);
                    const auto& hr = h_rest[static_cast<std::size_t>(k)];
                    const auto left = partial_trace(hr * P, rest);
                    t.record(Commute, left == partial_trace(P * hr, rest));
                    t.record(Factor, partial_trace(hL * P, rest) == h_head[static_cast<std::size_t>(k)] * left);
                    t.record(Mirror, partial_trace(P * hL, rest) == left * h_head[static_cast<std::size_t>(k)]);
                }
            }
            for (const auto& lam : partitions_of(r)) {
                const auto a = alpha_element(lam, L);
                const auto A = group_algebra_operator(a, FL);
                t.record(Schur, (hL * A).trace() == Rational(factorial(static_cast<unsigned>(r))) * schur_eval(lam, h));
                const auto f = trace_of_central(a);
                for (int k = 0; k <= kmax; ++k) {
                    const auto rest = rest_of(k);
                    const auto& hr = h_rest[static_cast<std::size_t>(k)];
                    const auto w2 = partial_trace(hr * A, rest);
                    const Rational ff(falling_factorial(r, static_cast<unsigned>(k)));
                    t.record(Deriv, matrix_derivative(f, std::vector<int>(L.begin(), L.begin() + k), h) == w2 * ff);
                    const auto& hik = hinv_head[static_cast<std::size_t>(k)];
                    t.record(FourWays, hik * partial_trace(hL * A, rest) == w2 &&
                                           partial_trace(A * hr, rest) == w2 &&
                                           partial_trace(A * hL, rest) * hik == w2);
                }
            }
        }
        // Tr_2(A (I x B)) = Tr_2((I x B) A) on random operators
        const FactorSet F = FactorSet::range(2, N), F2({2}, N);
        std::uniform_int_distribution<int> d(-4, 4);
        for (int trial = 0; trial < 4; ++trial) {
            ExactOperator A(F), B(F2);
            for (std::size_t r = 0; r < A.dim(); ++r)
                for (std::size_t c = 0; c < A.dim(); ++c) {
                    Rational q(d(rng), 1 + trial);
                    q.canonicalize();
                    A(r, c) = q;
                }
            for (std::size_t r = 0; r < B.dim(); ++r)
                for (std::size_t c = 0; c < B.dim(); ++c) B(r, c) = d(rng);
            t.record(TraceSwap, partial_trace(A * B, {2}) == partial_trace(B * A, {2}));
        }
    }

    TraceIdentityReport rep;
    rep.identities = std::move(t.items);
    for (const auto& i : rep.identities)
        if (i.failed != 0 || i.checked == 0) rep.all_ok = false;
    return rep;
}

}  // namespace wronski
