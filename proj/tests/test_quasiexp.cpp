#include "doctest.h"

#include "wronski/quasiexp.hpp"
#include "wronski/symfunc.hpp"

#include <random>

using namespace wronski;

namespace {

RationalPoly poly(std::initializer_list<long> c) {
    std::vector<Rational> v;
    for (long x : c) v.emplace_back(x);
    return RationalPoly(std::move(v));
}

QuasiExp qe(const Rational& c, std::initializer_list<long> p) { return QuasiExp::term(c, poly(p)); }

Rational frac(long a, long b) {
    Rational r(a, b);
    r.canonicalize();
    return r;
}

QuasiExpSpace exponentials(const std::vector<Rational>& h) {
    std::vector<QuasiExp> b;
    for (const auto& c : h) b.push_back(QuasiExp::exponential(c));
    return QuasiExpSpace(b);
}

RationalPoly random_poly(std::mt19937_64& rng, int degree) {
    std::uniform_int_distribution<long> d(-4, 4);
    std::vector<Rational> c(static_cast<std::size_t>(degree + 1));
    for (auto& x : c) x = d(rng);
    if (sgn(c.back()) == 0) c.back() = 1;
    return RationalPoly(std::move(c));
}

// Random single-exponent space; exponents drawn from a small pool so groups repeat.
QuasiExpSpace random_space(std::mt19937_64& rng, int N, bool polynomial, int max_degree = 3) {
    for (;;) {
        std::vector<QuasiExp> b;
        std::uniform_int_distribution<int> e(0, 2), deg(0, max_degree);
        for (int j = 0; j < N; ++j) {
            Rational c = polynomial ? Rational(0) : frac(e(rng) - 1, 2);
            c.canonicalize();
            b.push_back(QuasiExp::term(c, random_poly(rng, deg(rng))));
        }
        try {
            return QuasiExpSpace(b);
        } catch (const DependentBasisError&) {
        }
    }
}

}  // namespace

TEST_CASE("quasi-exponential arithmetic") {
    QuasiExp f = qe(2, {0, 1});  // u e^{2u}
    CHECK(f.derivative() == qe(2, {1, 2}));
    CHECK(f.derivative(2) == qe(2, {4, 4}));
    QuasiExp g = qe(-1, {3}) + QuasiExp::polynomial(poly({1, 1}));
    CHECK(g.terms().size() == 2);
    CHECK_FALSE(g.single_exponent());
    CHECK((f * g) == qe(1, {0, 3}) + qe(2, {0, 1, 1}));
    CHECK((g - g).is_zero());
    CHECK(f.translated(1) == qe(2, {1, 1}));
    CHECK(f.value_at(3) == 3);
    CHECK(g.value_at(0) == 4);
    CHECK_THROWS_AS(g.value_at(1), DomainError);
    CHECK_THROWS_AS(g.translated(1), DomainError);
}

TEST_CASE("Wronskian closed forms and dependence") {
    QuasiExpSpace mono({QuasiExp::polynomial(poly({1})), QuasiExp::polynomial(poly({0, 1})), QuasiExp::polynomial(poly({0, 0, 1}))});
    CHECK(mono.wronskian() == QuasiExp::polynomial(poly({2})));
    auto E = exponentials({Rational(1), Rational(3)});
    CHECK(E.wronskian() == qe(4, {2}));
    CHECK_THROWS_AS(QuasiExpSpace({qe(1, {1, 1}), qe(1, {2, 2})}), DependentBasisError);
    CHECK_THROWS_AS(QuasiExpSpace(std::vector<QuasiExp>{}), DomainError);
}

TEST_CASE("Wronskian degree and zero-order bookkeeping") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        auto V = random_space(rng, 1 + trial % 3, false);
        CAPTURE(trial);
        CHECK(V.wronskian().polynomial_part().degree() == wronskian_degree_formula(V));
        // basis vanishing to prescribed orders at t
        const Rational t(trial % 5 - 2);
        std::vector<QuasiExp> b;
        for (const auto& f : V.basis()) {
            auto ex = *f.single_exponent();
            b.push_back(QuasiExp::term(ex, f.polynomial_part() * RationalPoly::linear(-t).pow(static_cast<unsigned>(trial % 2 + 1))));
        }
        QuasiExpSpace W(b);
        CHECK(static_cast<long>(wronskian_zero_order(W, t)) >= wronskian_zero_order_bound(W, t));
    }
    // equality case: u^a, u^b with a < b
    QuasiExpSpace P({QuasiExp::polynomial(poly({0, 0, 1})), QuasiExp::polynomial(poly({0, 0, 0, 0, 1}))});
    CHECK(wronskian_zero_order(P, 0) == 5);
    CHECK(wronskian_zero_order_bound(P, 0) == 5);
}

TEST_CASE("Pluecker coordinates of exponentials are Schur polynomials") {
    const EigenvalueList h{Rational(-1), frac(1, 2), Rational(2)};
    auto V = exponentials(h);
    auto pv = plucker_vector(V, 0, 5);
    const Rational vdm = pv.at(Partition{});
    CHECK(vdm == (h[1] - h[0]) * (h[2] - h[0]) * (h[2] - h[1]));
    for (const auto& lam : partitions_up_to(5)) {
        CAPTURE(lam.to_string());
        CHECK(pv.at(lam) == schur_eval(lam, h) * vdm);
    }
    // translation only rescales by e^{(h_1+h_2+h_3) t}
    CHECK(projectively_equal(plucker_vector(V, 3, 5), pv));
}

TEST_CASE("Pluecker vector projective helpers") {
    PlueckerVector<Rational> a(2, 2), b(2, 2);
    a[Partition{}] = 0;
    a[Partition{1}] = 2;
    a[Partition{2}] = 4;
    b[Partition{1}] = -1;
    b[Partition{2}] = -2;
    CHECK(projectively_equal(a, b));
    CHECK(a.normalized().at(Partition{2}) == 2);
    b[Partition{1, 1}] = 1;
    CHECK_FALSE(projectively_equal(a, b));
    CHECK(projective_distance(to_float(a), to_float(a)) == 0.0);
    CHECK(projective_distance(to_float(a), to_float(b)) > 0.1);
    CHECK_THROWS_AS(a[Partition{3}], DomainError);
}

TEST_CASE("translation matches the jets at t") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        auto V = random_space(rng, 2 + trial % 2, trial % 3 != 0);
        const Rational t = frac(trial - 4, 3);
        CHECK(plucker_vector(translate(V, t), 0, 4).values() == plucker_vector(V, t, 4).values());
        CHECK(same_span(translate(translate(V, t), -t), V));
    }
}

TEST_CASE("translation identity") {
    std::mt19937_64 rng(7);
    SUBCASE("polynomial spaces, exact at t") {
        for (int trial = 0; trial < 8; ++trial) {
            auto V = random_space(rng, 2 + trial % 2, true, 4);
            const int B = static_cast<int>(V.dim() * std::max(0L, V.max_degree() - V.dim() + 1));
            for (const auto& mu : partitions_up_to(std::min(B, 3))) {
                auto r = verify_translation_identity(V, mu, frac(trial + 1, 2), B);
                CAPTURE(mu.to_string());
                CHECK(r.mode == "exact");
                CHECK(r.holds);
            }
        }
    }
    SUBCASE("quasi-exponential spaces, truncated in t") {
        for (int trial = 0; trial < 6; ++trial) {
            auto V = random_space(rng, 2 + trial % 2, false);
            for (const auto& mu : partitions_up_to(2)) {
                auto r = verify_translation_identity(V, mu, 1, 5);
                CHECK(r.mode == "truncated");
                CHECK(r.holds);
            }
        }
    }
    SUBCASE("short bound on a polynomial space falls back to series") {
        QuasiExpSpace V({QuasiExp::polynomial(poly({1, 0, 1})), QuasiExp::polynomial(poly({0, 1, 0, 1}))});
        auto r = verify_translation_identity(V, Partition{}, 2, 1);
        CHECK(r.mode == "truncated");
        CHECK(r.holds);
    }
}

TEST_CASE("Jacobi-Trudi identities for coordinates") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 6; ++trial) {
        auto V = random_space(rng, 2 + trial % 2, trial % 2 == 0);
        const Rational t = frac(trial + 1, 4);
        if (sgn(plucker_vector(V, t, 0).at(Partition{})) == 0) continue;
        for (const auto& lam : partitions_up_to(4)) {
            CAPTURE(trial);
            CAPTURE(lam.to_string());
            CHECK(verify_jacobi_trudi(V, lam, std::max(1, lam.length()), t).holds);
            CHECK(verify_jacobi_trudi(V, lam, lam.length() + 1, t).holds);
            CHECK(verify_dual_jacobi_trudi(V, lam, std::max(1, lam[0]), t).holds);
        }
    }
    // exponentials: classical Jacobi-Trudi
    auto E = exponentials({Rational(0), Rational(1), Rational(-2)});
    CHECK(verify_jacobi_trudi(E, Partition{2, 2, 1}, 3, 0).holds);
    CHECK(verify_dual_jacobi_trudi(E, Partition{3, 1}, 3, 0).holds);
    QuasiExpSpace Z({QuasiExp::polynomial(poly({1})), QuasiExp::polynomial(poly({0, 0, 1}))});
    CHECK_THROWS_AS(verify_jacobi_trudi(Z, Partition{1}, 1, 0), PreconditionError);
    CHECK_THROWS_AS(verify_jacobi_trudi(Z, Partition{1, 1}, 1, 1), DomainError);
}

TEST_CASE("g-series equals the bordered determinant") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 6; ++trial) {
        auto V = random_space(rng, 1 + trial % 3, true, 4);
        const int N = V.dim();
        const Rational t = frac(trial - 2, 2);
        const int D = static_cast<int>(V.max_degree()) + 1;
        auto g = g_series(V, t, D);
        auto J = taylor_matrix(V, t, N).values;
        for (long w = -2; w <= 2; ++w) {
            RationalMatrix M(static_cast<std::size_t>(N), static_cast<std::size_t>(N));
            for (std::size_t j = 0; j < static_cast<std::size_t>(N); ++j) {
                for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(N); ++i) M(i, j) = J(i, j);
                M(static_cast<std::size_t>(N - 1), j) = V.basis()[j].value_at(t + w);
            }
            Rational series(0);
            for (std::size_t q = 0; q < g.size(); ++q) series += g[q] * rational_pow(Rational(w), static_cast<unsigned>(q));
            CHECK(series == determinant(M));
        }
    }
}

TEST_CASE("g-basis spans V away from Wronskian zeros") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 8; ++trial) {
        auto V = random_space(rng, 1 + trial % 3, trial % 2 == 0);
        const int N = V.dim();
        const Rational t = frac(trial, 3);
        const Rational d0 = plucker_vector(V, t, 0).at(Partition{});
        auto gb = basis_from_g(V, t, N + 3);
        CHECK(gb.in_span);
        CHECK(gb.independent == (sgn(d0) != 0));
        if (!gb.independent) continue;
        CHECK(determinant(gb.change_of_basis) != 0);
        for (int j = 0; j < N; ++j) {
            const std::size_t lead = static_cast<std::size_t>(N - j - 1);
            for (std::size_t q = 0; q < lead; ++q) CHECK(gb.series[static_cast<std::size_t>(j)][q] == 0);
            Rational expect = d0 / Rational(factorial(static_cast<unsigned>(lead)));
            if (j % 2) expect = -expect;
            CHECK(gb.series[static_cast<std::size_t>(j)][lead] == expect);
        }
    }
    QuasiExpSpace Z({QuasiExp::polynomial(poly({1})), QuasiExp::polynomial(poly({0, 0, 1}))});
    auto gz = basis_from_g(Z, 0, 4);
    CHECK_FALSE(gz.independent);
    CHECK_THROWS_AS(basis_from_g(Z, 0, 0), DomainError);
}

TEST_CASE("differential operator of a space") {
    auto E = exponentials({Rational(3)});
    auto d = differential_operator(E, 1);
    CHECK(d.coefficients == std::vector<Rational>{Rational(-3), Rational(1)});
    QuasiExpSpace L({QuasiExp::polynomial(poly({1})), QuasiExp::polynomial(poly({0, 1}))});
    CHECK(differential_operator(L, 5).coefficients == std::vector<Rational>{0, 0, 1});
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 8; ++trial) {
        auto V = random_space(rng, 1 + trial % 3, trial % 2 == 1);
        const Rational t = frac(trial + 2, 3);
        if (sgn(plucker_vector(V, t, 0).at(Partition{})) == 0) continue;
        auto op = differential_operator(V, t, 4);
        CHECK(op.annihilates);
        CHECK(op.coefficients.back() == 1);
        // annihilates each basis function at t (order 0), straight from the derivatives
        for (const auto& f : V.basis()) {
            Rational acc(0);
            QuasiExp g = f;
            for (const auto& c : op.coefficients) {
                acc += c * g.value_at(t);
                g = g.derivative();
            }
            CHECK(acc == 0);
        }
    }
    QuasiExpSpace Z({QuasiExp::polynomial(poly({1})), QuasiExp::polynomial(poly({0, 0, 1}))});
    CHECK_THROWS_AS(differential_operator(Z, 0), PreconditionError);
}

TEST_CASE("dual space under the pairing") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 6; ++trial) {
        const int M = 5;
        auto V = random_space(rng, 1 + trial % 3, true, M - 1);
        auto W = dual_space(V, M);
        CHECK(W.dim() == M - V.dim());
        // pairing vanishes
        for (const auto& f : W.basis())
            for (const auto& g : V.basis()) {
                Rational acc(0);
                for (int i = 0; i < M; ++i) {
                    Rational fi = f.derivative(static_cast<unsigned>(i)).value_at(0);
                    Rational gj = g.derivative(static_cast<unsigned>(M - 1 - i)).value_at(0);
                    acc += (i % 2 ? Rational(-1) : Rational(1)) * fi * gj;
                }
                CHECK(acc == 0);
            }
        CHECK(same_span(dual_space(W, M), V));
        auto pv = plucker_vector(V, 0, 4);
        auto pw = plucker_vector(W, 0, 4);
        PlueckerVector<Rational> conj(W.dim(), 4);
        for (const auto& lam : partitions_up_to(4)) conj[lam] = pw.at(lam.conjugate());
        CHECK(projectively_equal(pv, conj));
        const Rational t = frac(trial - 1, 2);
        CHECK(same_span(dual_space(translate(V, t), M), translate(W, t)));
    }
    QuasiExpSpace full({QuasiExp::polynomial(poly({1})), QuasiExp::polynomial(poly({0, 1}))});
    CHECK_THROWS_AS(dual_space(full, 2), DomainError);
    CHECK_THROWS_AS(dual_space(exponentials({Rational(1)}), 3), DomainError);
}

TEST_CASE("polynomial limit family approaches the quasi-exponential space") {
    QuasiExpSpace V({qe(0, {1}), qe(1, {0, 1}), qe(2, {1})});
    auto target = to_float(plucker_vector(V, 0, 4));
    double prev = 1e9;
    for (long k : {10L, 100L, 1000L}) {
        auto Vk = poly_limit_family(V, k);
        CHECK(Vk.is_polynomial());
        double err = projective_distance(to_float(plucker_vector(Vk, 0, 4)), target);
        CHECK(err < prev);
        prev = err;
    }
    CHECK(prev < 1e-2);
    CHECK_THROWS_AS(poly_limit_family(exponentials({frac(1, 2)}), 10), DomainError);
}

TEST_CASE("exponential shift matrix") {
    const Rational c(3, 2);
    const std::size_t n = 6;
    auto B = exp_shift_matrix(c, n);
    // exp of the nilpotent S with S(i+1, i) = (i+1) c, as a finite series
    RationalMatrix S(n, n);
    for (std::size_t i = 0; i + 1 < n; ++i) S(i + 1, i) = Rational(static_cast<long>(i + 1)) * c;
    RationalMatrix E = RationalMatrix::identity(n), P = RationalMatrix::identity(n);
    for (unsigned k = 1; k < n; ++k) {
        P = P * S;
        RationalMatrix term = P;
        for (auto& x : term.data()) x /= Rational(factorial(k));
        for (std::size_t i = 0; i < E.data().size(); ++i) E.data()[i] += term.data()[i];
    }
    CHECK(B == E);
    // multiplying by e^{cu} acts on derivative vectors at 0 by B
    QuasiExp f = qe(0, {2, -1, 0, 3});
    QuasiExp ef = QuasiExp::exponential(c) * f;
    for (std::size_t i = 0; i < n; ++i) {
        Rational acc(0);
        for (std::size_t k = 0; k < n; ++k) acc += B(i, k) * f.derivative(static_cast<unsigned>(k)).value_at(0);
        CHECK(acc == ef.derivative(static_cast<unsigned>(i)).value_at(0));
    }
    auto rep = sample_shift_minors(B, 200, 42);
    CHECK(rep.sampled == 200);
    CHECK(rep.positive == rep.sampled);
    CHECK(rep.smallest > 0);
    CHECK_THROWS_AS(exp_shift_matrix(0, 3), DomainError);
}
