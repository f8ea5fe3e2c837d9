// Acceptance suite: one line per criterion, exit status 0 only if every criterion passes.
#include "wronski/cli.hpp"
#include "wronski/gaudin.hpp"
#include "wronski/quasiexp.hpp"
#include "wronski/spectral.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

using namespace wronski;

namespace {

struct Verdict {
    bool pass = true;
    std::string detail;
};

Rational random_rational(std::mt19937_64& rng, int lo = -7, int hi = 7) {
    std::uniform_int_distribution<int> num(lo, hi), den(1, 3);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

GaudinInstance random_instance(std::mt19937_64& rng, int N, int n) {
    GaudinInstance g{N, n, {}, {}};
    for (int i = 0; i < N; ++i) g.h.push_back(random_rational(rng));
    for (int i = 0; i < n; ++i) g.z.push_back(random_rational(rng));
    return g;
}

Rational max_neg_z(const GaudinInstance& g) {
    Rational m = -g.z[0];
    for (const auto& z : g.z) m = std::max(m, Rational(-z));
    return m;
}

ExactOperator swap_operator(int k, int l, const FactorSet& S) {
    std::vector<int> d{k, l};
    return permutation_operator(Permutation::transposition(d, k, l), S);
}

Rational z_excluding(const GaudinInstance& g, std::initializer_list<int> K) {
    Rational p = 1;
    for (int l = 1; l <= g.n; ++l)
        if (std::find(K.begin(), K.end(), l) == K.end()) p *= g.z[static_cast<std::size_t>(l - 1)];
    return p;
}

std::string fmt(const char* f, double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

// ------------------------------------------------------------------ criteria

Verdict c1_routes() {
    long checked = 0, failed = 0;
    for (int N = 1; N <= 3; ++N)
        for (int n = 1; n <= 3; ++n) {
            std::mt19937_64 rng(1000 + 10 * static_cast<unsigned>(N) + static_cast<unsigned>(n));
            for (int trial = 0; trial < 5; ++trial) {
                const auto g = random_instance(rng, N, n);
                const auto columns = build_columns(g, 4);
                for (const auto& lam : partitions_up_to(4)) {
                    const auto def = build_T_definitional(lam, g);
                    bool ok = build_T_partial_trace(lam, g) == def;
                    try {
                        ok = ok && build_T_jacobi_trudi(lam, g, columns) == def;
                    } catch (const IdentityViolation&) {
                        ok = false;
                    }
                    ++checked;
                    if (!ok) ++failed;
                }
            }
        }
    return {failed == 0, std::to_string(checked) + " (instance, lambda) triples, " + std::to_string(failed) + " mismatches"};
}

Verdict c2_examples() {
    long checked = 0, failed = 0;
    auto check = [&](bool ok) {
        ++checked;
        if (!ok) ++failed;
    };
    std::mt19937_64 rng(2002);
    for (int N = 1; N <= 3; ++N)
        for (int n = 1; n <= 3; ++n) {
            const auto g = random_instance(rng, N, n);
            const FactorSet S = g.sites();
            const auto I = ExactOperator::identity(S);
            const Rational tr = power_sum(1, g.h), tr2 = power_sum(2, g.h);

            // T_lambda(0), |lambda| <= 2
            check(build_T_definitional(Partition{}, g)(0) == I * z_excluding(g, {}));
            ExactOperator t1 = I * (z_excluding(g, {}) * tr);
            for (int k = 1; k <= n; ++k) t1 += I * z_excluding(g, {k});
            check(build_T_definitional(Partition{1}, g)(0) == t1);
            for (int sign : {1, -1}) {
                ExactOperator t(S);
                t += I * (z_excluding(g, {}) * (tr * tr + sign * tr2) / 2);
                for (int k = 1; k <= n; ++k)
                    t += (I * tr + diagonal_h_action(g.h, {k}, S) * Rational(sign)) * z_excluding(g, {k});
                for (int k = 1; k <= n; ++k)
                    for (int l = k + 1; l <= n; ++l) t += (I + swap_operator(k, l, S) * Rational(sign)) * z_excluding(g, {k, l});
                check(build_T_definitional(sign > 0 ? Partition{2} : Partition{1, 1}, g)(0) == t);
            }

            // beta_lambda(0), |lambda| <= 2
            check(build_beta(Partition{}, g)(0) == I * z_excluding(g, {}));
            ExactOperator b1(S);
            for (int k = 1; k <= n; ++k) b1 += I * z_excluding(g, {k});
            check(build_beta(Partition{1}, g)(0) == b1);
            for (int sign : {1, -1}) {
                ExactOperator b(S);
                for (int k = 1; k <= n; ++k)
                    for (int l = k + 1; l <= n; ++l) b += (I + swap_operator(k, l, S) * Rational(sign)) * z_excluding(g, {k, l});
                check(build_beta(sign > 0 ? Partition{2} : Partition{1, 1}, g)(0) == b);
            }

            // the u-dependence is z_k -> z_k + u
            const Rational u(3, 7);
            GaudinInstance shifted = g;
            for (auto& z : shifted.z) z += u;
            for (const auto& lam : partitions_up_to(2)) {
                check(build_T_definitional(lam, g)(u) == build_T_definitional(lam, shifted)(0));
                check(build_beta(lam, g)(u) == build_beta(lam, shifted)(0));
            }
        }
    return {failed == 0, std::to_string(checked) + " closed forms, " + std::to_string(failed) + " mismatches"};
}

Verdict c3_commutation() {
    long checked = 0, failed = 0;
    const std::vector<std::pair<int, int>> shapes{{2, 2}, {2, 3}, {3, 2}, {3, 3}, {1, 3}};
    std::mt19937_64 rng(3003);
    for (const auto& [N, n] : shapes) {
        const auto g = random_instance(rng, N, n);
        std::vector<OperatorPolynomial> Ts;
        for (const auto& lam : partitions_up_to(3)) Ts.push_back(build_T_definitional(lam, g));
        for (int s = 0; s < 3; ++s) {
            const Rational u = random_rational(rng), v = random_rational(rng);
            std::vector<ExactOperator> Au, Av;
            for (const auto& T : Ts) {
                Au.push_back(T(u));
                Av.push_back(T(v));
            }
            for (std::size_t a = 0; a < Ts.size(); ++a)
                for (std::size_t b = 0; b < Ts.size(); ++b) {
                    ++checked;
                    if (!(Au[a] * Av[b] == Av[b] * Au[a])) ++failed;
                }
        }
    }
    return {failed == 0, std::to_string(checked) + " products compared, " + std::to_string(failed) + " non-commuting"};
}

Verdict c4_beta() {
    long checked = 0, failed = 0;
    std::mt19937_64 rng(4004);
    for (int N = 1; N <= 3; ++N)
        for (int n = 1; n <= 4; ++n) {
            auto g = random_instance(rng, N, n);
            g.h.assign(static_cast<std::size_t>(N), Rational(0));
            for (const auto& lam : partitions_up_to(4)) {
                ++checked;
                if (!(build_T_definitional(lam, g) == build_beta(lam, g))) ++failed;
            }
        }
    return {failed == 0, std::to_string(checked) + " (N, n, lambda) cases, " + std::to_string(failed) + " mismatches"};
}

Verdict c5_traces() {
    const auto rep = verify_trace_identities(3, 4, 2, 5005);
    long checked = 0, failed = 0;
    for (const auto& i : rep.identities) {
        checked += i.checked;
        failed += i.failed;
    }
    return {rep.all_ok, std::to_string(rep.identities.size()) + " identity families, " + std::to_string(checked) +
                            " checks, " + std::to_string(failed) + " failures"};
}

Verdict c6_jacobi_trudi() {
    long checked = 0, failed = 0;
    std::mt19937_64 rng(6006);
    auto run_space = [&](const QuasiExpSpace& V, const Rational& t) {
        for (const auto& lam : partitions_up_to(4)) {
            const int a = std::max(1, lam.length()), b = std::max(1, lam[0]);
            for (int m : {a, a + 1}) {
                ++checked;
                if (!verify_jacobi_trudi(V, lam, m, t).holds) ++failed;
            }
            for (int m : {b, b + 1}) {
                ++checked;
                if (!verify_dual_jacobi_trudi(V, lam, m, t).holds) ++failed;
            }
        }
    };
    auto next_space = [&](int N, bool polynomial, Rational& t) {
        for (;;) {
            auto V = cli::random_space(rng, N, polynomial);
            t = random_rational(rng, -3, 3);
            if (sgn(plucker_vector(V, t, 0).at(Partition{})) != 0) return V;
        }
    };
    for (int i = 0; i < 15; ++i) {
        Rational t;
        const auto V = next_space(1 + i % 3, i < 10, t);
        run_space(V, t);
    }
    // pure exponentials: Delta_lambda / Delta_empty = s_lambda(h)
    long classical = 0, classical_bad = 0;
    for (const auto& h : std::vector<std::vector<Rational>>{{0, 1, -2}, {Rational(1, 2), 3}, {-1, 2, 5}}) {
        std::vector<QuasiExp> basis;
        for (const auto& c : h) basis.push_back(QuasiExp::exponential(c));
        const QuasiExpSpace E(basis);
        run_space(E, 0);
        const auto pv = plucker_vector(E, 0, 4);
        const Rational d0 = pv.at(Partition{});
        for (const auto& lam : partitions_up_to(4)) {
            ++classical;
            if (pv.at(lam) != d0 * schur_eval(lam, h)) ++classical_bad;
        }
    }
    return {failed == 0 && classical_bad == 0,
            std::to_string(checked) + " determinant identities (15 spaces + 3 exponential), " + std::to_string(failed) +
                " failures; " + std::to_string(classical) + " Schur reductions, " + std::to_string(classical_bad) +
                " failures"};
}

Verdict c7_psd() {
    long certified = 0, failed = 0, pd_cases = 0;
    const std::vector<std::pair<int, int>> shapes{{1, 2}, {2, 2}, {2, 3}, {3, 2}, {1, 3}};
    std::mt19937_64 rng(7007);
    for (int i = 0; i < 100; ++i) {
        const auto [N, n] = shapes[static_cast<std::size_t>(i) % shapes.size()];
        auto g = random_instance(rng, N, n);
        const bool strict = i % 2 == 0;
        for (auto& h : g.h) {
            h = abs(h);
            if (strict && sgn(h) == 0) h = Rational(1, 2);
            if (!strict && i % 4 == 1) h = 0;
        }
        Rational t = max_neg_z(g);
        if (strict) t += Rational(1 + i % 3, 2);
        const auto rep = verify_psd_theorem(g, t, 4);
        if (!rep.psd_hypotheses || (strict && !rep.pd_hypotheses)) ++failed;
        if (rep.pd_hypotheses) ++pd_cases;
        for (const auto& e : rep.entries) {
            ++certified;
            if (!e.ok) ++failed;
        }
    }
    return {failed == 0, std::to_string(certified) + " operators certified on 100 instances (" + std::to_string(pd_cases) +
                             " with PD hypotheses), " + std::to_string(failed) + " failures"};
}

struct SpectralInstance {
    GaudinInstance g;
    Rational t;
    bool nonnegative;
};

std::vector<SpectralInstance> spectral_instances() {
    std::vector<SpectralInstance> out;
    std::mt19937_64 rng(8008);
    for (int n : {2, 3}) {
        for (int trial = 0; trial < 5; ++trial) {
            auto g = random_instance(rng, 2, n);
            const bool nonneg = trial < 3;
            Rational t;
            if (nonneg) {
                for (auto& h : g.h) h = abs(h);
                t = max_neg_z(g) + Rational(1 + trial, 3);
            } else {
                // the theorem needs t off the Wronskian zeros -z_k
                do t = random_rational(rng);
                while (std::any_of(g.z.begin(), g.z.end(), [&](const Rational& z) { return sgn(t + z) == 0; }));
            }
            out.push_back({g, t, nonneg});
        }
        // h = 0: eigenspaces are the Gaudin-model ones
        auto g0 = random_instance(rng, 2, n);
        g0.h.assign(2, Rational(0));
        out.push_back({g0, max_neg_z(g0) + 1, true});
    }
    return out;
}

Verdict c8_universality(const std::vector<SpectralInstance>& instances) {
    std::size_t spaces = 0, bad = 0;
    double worst = 0;
    std::string notes;
    for (std::size_t i = 0; i < instances.size(); ++i) {
        const auto& s = instances[i];
        try {
            const auto rep = verify_universal_coordinates(s.g, s.t, 4, 16, 1 + i);
            for (const auto& e : rep.spaces) {
                ++spaces;
                if (!e.passed) ++bad;
                const auto& r = e.reconstruction;
                worst = std::max({worst, r.wronskian_residual, r.plucker_residual, r.fit_residual, e.link_residual});
            }
            if (!rep.passed && rep.spaces.empty()) ++bad;
        } catch (const std::exception& e) {
            ++bad;
            notes += std::string(" [instance ") + std::to_string(i) + ": " + e.what() + "]";
        }
    }
    return {bad == 0 && worst < 1e-6, std::to_string(instances.size()) + " instances, " + std::to_string(spaces) +
                                          " eigenspaces, " + std::to_string(bad) + " failed, worst residual " +
                                          fmt("%.2e", worst) + notes};
}

Verdict c9_positivity(const std::vector<SpectralInstance>& instances) {
    std::size_t spaces = 0, signed_ok = 0, runs = 0;
    double worst = 0;
    bool ok = true;
    std::string notes;
    for (std::size_t i = 0; i < instances.size(); ++i) {
        const auto& s = instances[i];
        if (!s.nonnegative) continue;
        ++runs;
        try {
            const auto rep = verify_positivity(s.g, s.t, 6, 16, 1 + i);
            spaces += rep.spaces;
            signed_ok += rep.one_signed;
            worst = std::max(worst, rep.worst_violation);
            ok = ok && rep.hypotheses && rep.passed;
        } catch (const std::exception& e) {
            ok = false;
            notes += std::string(" [instance ") + std::to_string(i) + ": " + e.what() + "]";
        }
    }
    return {ok && spaces == signed_ok && worst <= 1e-8,
            std::to_string(runs) + " instances, " + std::to_string(signed_ok) + "/" + std::to_string(spaces) +
                " eigenspaces one-signed up to |lambda| <= 6, worst violation " + fmt("%.2e", worst) + notes};
}

Verdict c10_limit() {
    auto qe = [](int c, std::vector<Rational> p) { return QuasiExp::term(Rational(c), RationalPoly(std::move(p))); };
    const std::vector<QuasiExpSpace> spaces{
        QuasiExpSpace({qe(0, {1}), qe(1, {1})}),
        QuasiExpSpace({qe(1, {1}), qe(2, {0, 1})}),
        QuasiExpSpace({qe(0, {1}), qe(1, {0, 1}), qe(2, {1})}),
        QuasiExpSpace({qe(0, {1, 1}), qe(2, {1}), qe(2, {0, 0, 1})}),
    };
    bool ok = true;
    double final_worst = 0;
    std::string trail;
    for (const auto& V : spaces) {
        const auto target = to_float(plucker_vector(V, 0, 4));
        double prev = 1e300;
        for (long k : {10L, 100L, 1000L}) {
            const double err = projective_distance(to_float(plucker_vector(poly_limit_family(V, k), 0, 4)), target);
            ok = ok && err < prev;
            prev = err;
            trail += (k == 10 ? " [" : " ") + fmt("%.3e", err) + (k == 1000 ? "]" : "");
        }
        final_worst = std::max(final_worst, prev);
    }
    ok = ok && final_worst < 1e-2;
    return {ok, std::to_string(spaces.size()) + " spaces, errors at k = 10, 100, 1000:" + trail};
}

Verdict c11_shift() {
    std::size_t sampled = 0, positive = 0;
    Rational smallest = -1;
    std::uint64_t seed = 11011;
    for (const Rational& c : {Rational(1, 2), Rational(1), Rational(3)}) {
        for (std::size_t size : {6u, 12u}) {
            const auto rep = sample_shift_minors(exp_shift_matrix(c, size), 200, seed++);
            sampled += rep.sampled;
            positive += rep.positive;
            if (smallest < 0 || rep.smallest < smallest) smallest = rep.smallest;
        }
    }
    return {sampled == positive && sampled == 6 * 200,
            std::to_string(positive) + "/" + std::to_string(sampled) + " sampled minors positive, smallest " +
                fmt("%.3e", smallest.get_d())};
}

}  // namespace

int main() {
    using Clock = std::chrono::steady_clock;
    const auto instances = spectral_instances();
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
        {"C1 route agreement", c1_routes},
        {"C2 example closed forms", c2_examples},
        {"C3 commutation", c3_commutation},
        {"C4 beta specialization", c4_beta},
        {"C5 trace identities", c5_traces},
        {"C6 Jacobi-Trudi identities", c6_jacobi_trudi},
        {"C7 PSD certification", c7_psd},
        {"C8 universality pipeline", [&] { return c8_universality(instances); }},
        {"C9 positivity end-to-end", [&] { return c9_positivity(instances); }},
        {"C10 polynomial limit", c10_limit},
        {"C11 shift-matrix positivity", c11_shift},
    };
    int failures = 0;
    for (const auto& [name, run] : criteria) {
        const auto start = Clock::now();
        Verdict v;
        try {
            v = run();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(Clock::now() - start).count();
        if (!v.pass) ++failures;
        std::printf("%s %-30s %s (%.1fs)\n", v.pass ? "PASS" : "FAIL", name.c_str(), v.detail.c_str(), secs);
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
