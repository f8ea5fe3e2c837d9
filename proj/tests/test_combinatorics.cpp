#include "doctest.h"
#include "wronski/combinatorics.hpp"
#include "wronski/errors.hpp"

#include <functional>
#include <map>

using namespace wronski;

namespace {

// Count standard fillings of lambda/mu by peeling removable corners.
Integer brute_skew_syt(const std::vector<int>& lam, const std::vector<int>& mu) {
    int cells = 0;
    for (std::size_t i = 0; i < lam.size(); ++i) cells += lam[i] - (i < mu.size() ? mu[i] : 0);
    if (cells == 0) return 1;
    Integer total = 0;
    for (std::size_t i = 0; i < lam.size(); ++i) {
        int m = i < mu.size() ? mu[i] : 0;
        if (lam[i] <= m) continue;
        int next = i + 1 < lam.size() ? lam[i + 1] : 0;
        if (lam[i] - 1 < next) continue;
        auto l2 = lam;
        --l2[i];
        total += brute_skew_syt(l2, mu);
    }
    return total;
}

}  // namespace

TEST_CASE("partition canonical form and validation") {
    Partition p{3, 1, 0, 0};
    CHECK(p.length() == 2);
    CHECK(p.size() == 4);
    CHECK(p.to_string() == "[3,1]");
    CHECK(p[5] == 0);
    CHECK_THROWS_AS(Partition({1, 2}), DomainError);
    CHECK_THROWS_AS(Partition({2, -1}), DomainError);
    CHECK(Partition{3, 2, 2}.conjugate() == Partition{3, 3, 1});
    CHECK(Partition{3, 2}.contains(Partition{2, 2}));
    CHECK_FALSE(Partition{3, 2}.contains(Partition{1, 1, 1}));
}

TEST_CASE("partition enumeration counts and ordering") {
    const int p_counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22};
    for (int m = 0; m <= 8; ++m) CHECK(partitions_of(m).size() == static_cast<std::size_t>(p_counts[m]));
    auto all = partitions_up_to(6);
    for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1] < all[i]);
    CHECK(partitions_up_to(4, 2).size() == 1 + 1 + 2 + 2 + 3);
}

TEST_CASE("hook length agrees with brute-force tableau count") {
    for (int m = 0; m <= 8; ++m)
        for (const auto& lam : partitions_of(m)) CHECK(syt_count(lam) == brute_skew_syt(lam.parts(), {}));
}

TEST_CASE("Aitken determinant agrees with brute force on skew shapes") {
    for (int m = 1; m <= 7; ++m)
        for (const auto& lam : partitions_of(m))
            for (const auto& mu : partitions_up_to(m))
                if (lam.contains(mu)) CHECK(skew_syt_count(lam, mu) == brute_skew_syt(lam.parts(), mu.parts()));
    CHECK_THROWS_AS(skew_syt_count(Partition{2}, Partition{1, 1}), DomainError);
}

TEST_CASE("permutation algebra") {
    std::vector<int> d{2, 5, 7};
    Permutation s(d, {5, 7, 2});
    Permutation t = Permutation::transposition(d, 2, 5);
    CHECK((s * s.inverse()).is_identity());
    CHECK((s * t).apply(2) == s.apply(t.apply(2)));
    CHECK_THROWS_AS(Permutation(d, {2, 2, 7}), DomainError);
    CHECK(cycle_type(s) == Partition{3});
    CHECK(all_permutations(d).size() == 6);
}

TEST_CASE("class sizes match enumeration of cycle types") {
    for (int m = 1; m <= 6; ++m) {
        std::vector<int> d;
        for (int i = 1; i <= m; ++i) d.push_back(i);
        std::map<Partition, Integer> counts;
        for (const auto& s : all_permutations(d)) counts[cycle_type(s)] += 1;
        for (const auto& rho : partitions_of(m)) CHECK(counts[rho] == class_size(rho));
    }
}

TEST_CASE("character table: degrees, orthogonality, sign twist") {
    for (int m = 1; m <= 7; ++m) {
        auto ps = partitions_of(m);
        Partition id = Partition::column(m);
        for (const auto& lam : ps) {
            CHECK(irreducible_character(lam, id) == syt_count(lam));
            for (const auto& mu : ps) {
                Integer s = 0;
                for (const auto& rho : ps) s += class_size(rho) * irreducible_character(lam, rho) * irreducible_character(mu, rho);
                CHECK(s == (lam == mu ? factorial(static_cast<unsigned>(m)) : Integer(0)));
            }
            for (const auto& rho : ps)
                CHECK(irreducible_character(lam.conjugate(), rho) == sign_of(rho) * irreducible_character(lam, rho));
        }
    }
}

TEST_CASE("alpha elements are central quasi-idempotents") {
    std::vector<int> K{1, 2, 3};
    for (const auto& lam : partitions_of(3)) {
        auto a = alpha_element(lam, K);
        Rational scale(factorial(3), syt_count(lam));
        scale.canonicalize();
        CHECK(a * a == a * scale);
        for (const auto& s : all_permutations(K)) {
            auto b = GroupAlgebraElement::basis(s);
            CHECK(a * b == b * a);
        }
        for (const auto& mu : partitions_of(3))
            if (!(mu == lam)) CHECK((a * alpha_element(mu, K)).terms().empty());
    }
    CHECK_THROWS_AS(alpha_element(Partition{2}, K), DomainError);
}
