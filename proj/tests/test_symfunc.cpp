#include "doctest.h"
#include "wronski/symfunc.hpp"

#include <random>

using namespace wronski;

namespace {

// Sum over semistandard tableaux of shape lambda with entries 1..N.
Rational brute_schur(const Partition& lam, const EigenvalueList& h) {
    std::vector<std::pair<int, int>> cells;
    for (int r = 0; r < lam.length(); ++r)
        for (int c = 0; c < lam[static_cast<std::size_t>(r)]; ++c) cells.emplace_back(r, c);
    std::vector<std::vector<int>> t(static_cast<std::size_t>(lam.length()));
    for (int r = 0; r < lam.length(); ++r) t[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(lam[static_cast<std::size_t>(r)]), 0);
    Rational total = 0;
    const int N = static_cast<int>(h.size());
    std::function<void(std::size_t)> fill = [&](std::size_t idx) {
        if (idx == cells.size()) {
            Rational w = 1;
            for (auto& row : t)
                for (int v : row) w *= h[static_cast<std::size_t>(v)];
            total += w;
            return;
        }
        auto [r, c] = cells[idx];
        int lo = 0;
        if (c > 0) lo = std::max(lo, t[r][c - 1]);
        if (r > 0) lo = std::max(lo, t[r - 1][c] + 1);
        for (int v = lo; v < N; ++v) {
            t[r][c] = v;
            fill(idx + 1);
        }
    };
    fill(0);
    return total;
}

EigenvalueList random_h(std::mt19937& rng, int N) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
    EigenvalueList h;
    while (static_cast<int>(h.size()) < N) {
        Rational x(num(rng), den(rng));
        x.canonicalize();
        if (std::find(h.begin(), h.end(), x) == h.end()) h.push_back(x);
    }
    return h;
}

}  // namespace

TEST_CASE("Schur evaluations agree with the tableau sum") {
    std::mt19937 rng(7);
    for (int N = 1; N <= 4; ++N)
        for (int trial = 0; trial < 3; ++trial) {
            auto h = random_h(rng, N);
            for (const auto& lam : partitions_up_to(5)) {
                Rational ref = brute_schur(lam, h);
                CHECK(schur_eval(lam, h) == ref);
                CHECK(schur_eval_dual(lam, h) == ref);
                CHECK(schur_via_power_sums(lam, h) == ref);
                CHECK(schur_bialternant(lam, h) == ref);
            }
        }
}

TEST_CASE("Schur vanishes beyond N rows, repeated eigenvalues handled") {
    EigenvalueList h{Rational(2), Rational(2)};
    CHECK(schur_eval(Partition{1, 1, 1}, h) == 0);
    CHECK(schur_eval(Partition{2, 1}, h) == brute_schur(Partition{2, 1}, h));
    CHECK_THROWS_AS(schur_bialternant(Partition{1}, h), DomainError);
    CHECK(schur_eval(Partition{}, h) == 1);
}

TEST_CASE("power sums, elementary and complete") {
    EigenvalueList h{Rational(1), Rational(2), Rational(-3)};
    CHECK(power_sum(2, h) == 14);
    CHECK_THROWS_AS(power_sum(0, h), DomainError);
    CHECK(elementary(2, h) == 2 - 3 - 6);
    CHECK(elementary(4, h) == 0);
    CHECK(complete_homogeneous(0, h) == 1);
    CHECK(complete_homogeneous(-1, h) == 0);
    // Newton: sum_k (-1)^k e_k h_{m-k} = 0
    for (int m = 1; m <= 5; ++m) {
        Rational s = 0;
        for (int k = 0; k <= m; ++k) s += (k % 2 ? -1 : 1) * elementary(k, h) * complete_homogeneous(m - k, h);
        CHECK(s == 0);
    }
}
