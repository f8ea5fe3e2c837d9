#pragma once

#include "wronski/rational.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace wronski {

/// Integer partition in canonical form: weakly decreasing, positive parts only.
class Partition {
public:
    Partition() = default;
    /// Accepts trailing zeros; throws DomainError if parts increase or are negative.
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    /// (1^m)
    static Partition column(int m);
    /// (m)
    static Partition row(int m);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    /// i-th part, 0-indexed; zero beyond the length.
    int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    Partition conjugate() const;
    /// Diagram containment mu ⊆ *this.
    bool contains(const Partition& mu) const;

    std::string to_string() const;

    /// Graded lexicographic: by size, then lexicographic on the parts.
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);
    friend bool operator==(const Partition& a, const Partition& b) = default;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

using CycleType = Partition;

/// All partitions of m, in graded-lex order.
std::vector<Partition> partitions_of(int m);
/// All partitions of size <= bound, graded-lex order.
std::vector<Partition> partitions_up_to(int bound);
/// Partitions of size <= bound with at most max_length parts.
std::vector<Partition> partitions_up_to(int bound, int max_length);

/// Bijection of an ordered label set K. images()[i] is the image of domain()[i].
class Permutation {
public:
    Permutation() = default;
    /// Throws DomainError if images is not a rearrangement of domain or labels repeat.
    Permutation(std::vector<int> domain, std::vector<int> images);
    static Permutation identity(std::vector<int> domain);
    /// Swap of labels a and b inside domain.
    static Permutation transposition(std::vector<int> domain, int a, int b);

    const std::vector<int>& domain() const { return domain_; }
    const std::vector<int>& images() const { return images_; }
    int apply(int label) const;
    std::size_t degree() const { return domain_.size(); }

    Permutation inverse() const;
    bool is_identity() const { return domain_ == images_; }

    /// (a * b)(x) = a(b(x)); domains must match.
    friend Permutation operator*(const Permutation& a, const Permutation& b);
    friend auto operator<=>(const Permutation& a, const Permutation& b) = default;
    friend bool operator==(const Permutation& a, const Permutation& b) = default;

private:
    std::size_t position(int label) const;
    std::vector<int> domain_;
    std::vector<int> images_;
};

/// Every permutation of the ordered label set.
std::vector<Permutation> all_permutations(const std::vector<int>& domain);

CycleType cycle_type(const Permutation& sigma);
/// Sign of any permutation with the given cycle type.
int sign_of(const CycleType& tau);
/// Number of permutations of |tau| points with cycle type tau.
Integer class_size(const CycleType& tau);

Partition conjugate(const Partition& lambda);

/// f^lambda by the hook-length formula.
Integer syt_count(const Partition& lambda);
/// f^{lambda/mu} by the Aitken determinant |lambda/mu|! det(1/(lambda_i - mu_j - i + j)!).
Integer skew_syt_count(const Partition& lambda, const Partition& mu);

/// chi^lambda on cycle type tau by Murnaghan-Nakayama; memoized and thread-safe.
Integer irreducible_character(const Partition& lambda, const CycleType& tau);

/// Finite formal rational combination of permutations of one ordered label set.
class GroupAlgebraElement {
public:
    explicit GroupAlgebraElement(std::vector<int> domain = {}) : domain_(std::move(domain)) {}
    static GroupAlgebraElement unit(std::vector<int> domain);
    static GroupAlgebraElement basis(const Permutation& sigma);

    const std::vector<int>& domain() const { return domain_; }
    const std::map<Permutation, Rational>& terms() const { return terms_; }
    Rational coefficient(const Permutation& sigma) const;

    void add_term(const Permutation& sigma, const Rational& c);

    GroupAlgebraElement& operator+=(const GroupAlgebraElement& o);
    GroupAlgebraElement& operator*=(const Rational& s);
    friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a += b; }
    friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b);
    friend GroupAlgebraElement operator*(GroupAlgebraElement a, const Rational& s) { return a *= s; }
    /// Convolution.
    friend GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
    friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b);

private:
    void check_domain(const std::vector<int>& other) const;
    std::vector<int> domain_;
    std::map<Permutation, Rational> terms_;
};

/// alpha_lambda^(K) = sum over S_K of chi^lambda(sigma) sigma. Requires |lambda| = |K|.
GroupAlgebraElement alpha_element(const Partition& lambda, const std::vector<int>& K);

}  // namespace wronski
