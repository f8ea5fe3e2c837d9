#include "wronski/combinatorics.hpp"

#include "wronski/errors.hpp"
#include "wronski/matrix.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <set>
#include <utility>

namespace wronski {

// ---------------------------------------------------------------- Partition

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0) throw DomainError("partition with a negative part");
        if (i > 0 && parts[i] > parts[i - 1]) throw DomainError("partition parts must be weakly decreasing");
    }
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    parts_ = std::move(parts);
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::column(int m) { return Partition(std::vector<int>(static_cast<std::size_t>(std::max(m, 0)), 1)); }
Partition Partition::row(int m) { return m <= 0 ? Partition() : Partition(std::vector<int>{m}); }

Partition Partition::conjugate() const {
    std::vector<int> c(parts_.empty() ? 0 : static_cast<std::size_t>(parts_[0]), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++c[static_cast<std::size_t>(j)];
    return Partition(std::move(c));
}

bool Partition::contains(const Partition& mu) const {
    if (mu.length() > length()) return false;
    for (std::size_t i = 0; i < mu.parts_.size(); ++i)
        if (mu.parts_[i] > parts_[i]) return false;
    return true;
}

std::string Partition::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + "]";
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    if (auto c = a.size_ <=> b.size_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.parts_.begin(), a.parts_.end(), b.parts_.begin(),
                                                  b.parts_.end());
}

Partition conjugate(const Partition& lambda) { return lambda.conjugate(); }

namespace {

void generate(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        generate(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int m) {
    std::vector<Partition> out;
    if (m < 0) return out;
    std::vector<int> cur;
    generate(m, m, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> partitions_up_to(int bound) {
    std::vector<Partition> out;
    for (int m = 0; m <= bound; ++m) {
        auto p = partitions_of(m);
        out.insert(out.end(), p.begin(), p.end());
    }
    return out;
}

std::vector<Partition> partitions_up_to(int bound, int max_length) {
    auto all = partitions_up_to(bound);
    std::erase_if(all, [&](const Partition& p) { return p.length() > max_length; });
    return all;
}

// -------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<int> domain, std::vector<int> images)
    : domain_(std::move(domain)), images_(std::move(images)) {
    if (domain_.size() != images_.size()) throw DomainError("permutation: image list has wrong length");
    std::vector<int> a = domain_, b = images_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (std::adjacent_find(a.begin(), a.end()) != a.end()) throw DomainError("permutation: repeated label");
    if (a != b) throw DomainError("permutation: images are not a rearrangement of the domain");
}

Permutation Permutation::identity(std::vector<int> domain) {
    auto images = domain;
    return Permutation(std::move(domain), std::move(images));
}

Permutation Permutation::transposition(std::vector<int> domain, int a, int b) {
    auto images = domain;
    for (auto& x : images) {
        if (x == a) x = b;
        else if (x == b) x = a;
    }
    Permutation p(std::move(domain), std::move(images));
    p.position(a);
    p.position(b);
    return p;
}

std::size_t Permutation::position(int label) const {
    auto it = std::find(domain_.begin(), domain_.end(), label);
    if (it == domain_.end()) throw DomainError("label " + std::to_string(label) + " not in permutation domain");
    return static_cast<std::size_t>(it - domain_.begin());
}

int Permutation::apply(int label) const { return images_[position(label)]; }

Permutation Permutation::inverse() const {
    std::vector<int> inv(domain_.size());
    for (std::size_t i = 0; i < domain_.size(); ++i) inv[position(images_[i])] = domain_[i];
    return Permutation(domain_, std::move(inv));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.domain_ != b.domain_) throw DomainError("composing permutations of different label sets");
    std::vector<int> img(a.domain_.size());
    for (std::size_t i = 0; i < img.size(); ++i) img[i] = a.apply(b.images_[i]);
    return Permutation(a.domain_, std::move(img));
}

std::vector<Permutation> all_permutations(const std::vector<int>& domain) {
    std::vector<Permutation> out;
    std::vector<int> images = domain;
    std::sort(images.begin(), images.end());
    do {
        out.emplace_back(domain, images);
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

CycleType cycle_type(const Permutation& sigma) {
    const auto& dom = sigma.domain();
    std::vector<bool> seen(dom.size(), false);
    std::vector<int> lengths;
    for (std::size_t i = 0; i < dom.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        int x = dom[i];
        std::size_t j = i;
        do {
            seen[j] = true;
            ++len;
            x = sigma.apply(x);
            j = static_cast<std::size_t>(std::find(dom.begin(), dom.end(), x) - dom.begin());
        } while (j != i);
        lengths.push_back(len);
    }
    std::sort(lengths.rbegin(), lengths.rend());
    return CycleType(std::move(lengths));
}

int sign_of(const CycleType& tau) {
    int even_cycles = 0;
    for (int p : tau.parts())
        if (p % 2 == 0) ++even_cycles;
    return even_cycles % 2 == 0 ? 1 : -1;
}

Integer class_size(const CycleType& tau) {
    // |tau|! / prod_i (i^{m_i} m_i!)
    Integer z = 1;
    std::map<int, unsigned> mult;
    for (int p : tau.parts()) ++mult[p];
    for (auto [part, m] : mult) {
        Integer ip;
        mpz_ui_pow_ui(ip.get_mpz_t(), static_cast<unsigned long>(part), m);
        z *= ip * factorial(m);
    }
    return factorial(static_cast<unsigned>(tau.size())) / z;
}

// ---------------------------------------------------------------- tableaux

Integer syt_count(const Partition& lambda) {
    const Partition conj = lambda.conjugate();
    Integer hooks = 1;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda[static_cast<std::size_t>(i)]; ++j)
            hooks *= lambda[static_cast<std::size_t>(i)] - j - 1 + conj[static_cast<std::size_t>(j)] - i;
    return factorial(static_cast<unsigned>(lambda.size())) / hooks;
}

Integer skew_syt_count(const Partition& lambda, const Partition& mu) {
    if (!lambda.contains(mu)) {
        throw DomainError("skew shape " + lambda.to_string() + "/" + mu.to_string() + ": mu not contained in lambda");
    }
    const std::size_t l = static_cast<std::size_t>(lambda.length());
    if (l == 0) return 1;
    RationalMatrix m(l, l);
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < l; ++j) {
            long e = lambda[i] - mu[j] - static_cast<long>(i) + static_cast<long>(j);
            m(i, j) = e < 0 ? Rational(0) : Rational(Integer(1), factorial(static_cast<unsigned>(e)));
        }
    Rational r = determinant(m) * factorial(static_cast<unsigned>(lambda.size() - mu.size()));
    if (r.get_den() != 1) throw IdentityViolation("skew tableau count is not an integer");
    return r.get_num();
}

// ----------------------------------------------------- Murnaghan-Nakayama

namespace {

// Beta-set (first-column hook lengths) of a partition padded to `len` parts.
std::vector<int> beta_set(const std::vector<int>& parts, std::size_t len) {
    std::vector<int> b(len);
    for (std::size_t i = 0; i < len; ++i) {
        int p = i < parts.size() ? parts[i] : 0;
        b[i] = p + static_cast<int>(len - 1 - i);
    }
    return b;  // strictly decreasing
}

std::vector<int> from_beta(std::vector<int> b) {
    std::sort(b.rbegin(), b.rend());
    const std::size_t len = b.size();
    std::vector<int> parts(len);
    for (std::size_t i = 0; i < len; ++i) parts[i] = b[i] - static_cast<int>(len - 1 - i);
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return parts;
}

using CharKey = std::pair<std::vector<int>, std::vector<int>>;

class CharacterMemo {
public:
    Integer get(const std::vector<int>& shape, const std::vector<int>& type) {
        {
            std::lock_guard lock(mu_);
            auto it = memo_.find({shape, type});
            if (it != memo_.end()) return it->second;
        }
        Integer v = compute(shape, type);
        std::lock_guard lock(mu_);
        memo_.emplace(CharKey{shape, type}, v);
        return v;
    }

private:
    Integer compute(const std::vector<int>& shape, const std::vector<int>& type) {
        if (type.empty()) return shape.empty() ? 1 : 0;
        const int r = type.front();
        std::vector<int> rest(type.begin() + 1, type.end());
        auto beta = beta_set(shape, shape.size());
        std::set<int> occupied(beta.begin(), beta.end());
        Integer total = 0;
        for (int b : beta) {
            int target = b - r;
            if (target < 0 || occupied.count(target)) continue;
            int between = 0;
            for (int o : beta)
                if (o > target && o < b) ++between;
            std::vector<int> moved = beta;
            std::replace(moved.begin(), moved.end(), b, target);
            Integer sub = get(from_beta(moved), rest);
            if (between % 2) total -= sub;
            else total += sub;
        }
        return total;
    }

    std::mutex mu_;
    std::map<CharKey, Integer> memo_;
};

CharacterMemo& character_memo() {
    static CharacterMemo memo;
    return memo;
}

}  // namespace

Integer irreducible_character(const Partition& lambda, const CycleType& tau) {
    if (lambda.size() != tau.size()) {
        throw DomainError("character chi^" + lambda.to_string() + " evaluated on cycle type " + tau.to_string() +
                          " of different size");
    }
    return character_memo().get(lambda.parts(), tau.parts());
}

// ------------------------------------------------------ GroupAlgebraElement

GroupAlgebraElement GroupAlgebraElement::unit(std::vector<int> domain) {
    GroupAlgebraElement e(domain);
    e.add_term(Permutation::identity(std::move(domain)), 1);
    return e;
}

GroupAlgebraElement GroupAlgebraElement::basis(const Permutation& sigma) {
    GroupAlgebraElement e(sigma.domain());
    e.add_term(sigma, 1);
    return e;
}

Rational GroupAlgebraElement::coefficient(const Permutation& sigma) const {
    auto it = terms_.find(sigma);
    return it == terms_.end() ? Rational(0) : it->second;
}

void GroupAlgebraElement::check_domain(const std::vector<int>& other) const {
    if (other != domain_) throw DomainError("group algebra elements over different label sets");
}

void GroupAlgebraElement::add_term(const Permutation& sigma, const Rational& c) {
    check_domain(sigma.domain());
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.emplace(sigma, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& o) {
    check_domain(o.domain_);
    for (const auto& [s, c] : o.terms_) add_term(s, c);
    return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator*=(const Rational& s) {
    if (sgn(s) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [_, c] : terms_) c *= s;
    return *this;
}

GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) {
    a.check_domain(b.domain_);
    for (const auto& [s, c] : b.terms_) a.add_term(s, -c);
    return a;
}

GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    a.check_domain(b.domain_);
    GroupAlgebraElement r(a.domain_);
    for (const auto& [s, c] : a.terms_)
        for (const auto& [t, d] : b.terms_) r.add_term(s * t, c * d);
    return r;
}

bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    return a.domain_ == b.domain_ && a.terms_ == b.terms_;
}

GroupAlgebraElement alpha_element(const Partition& lambda, const std::vector<int>& K) {
    if (static_cast<std::size_t>(lambda.size()) != K.size()) {
        throw DomainError("alpha_" + lambda.to_string() + " needs an index set of size " +
                          std::to_string(lambda.size()));
    }
    GroupAlgebraElement e(K);
    for (const auto& sigma : all_permutations(K)) e.add_term(sigma, Rational(irreducible_character(lambda, cycle_type(sigma))));
    return e;
}

}  // namespace wronski
