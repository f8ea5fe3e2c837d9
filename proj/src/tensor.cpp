#include "wronski/tensor.hpp"

#include <numeric>
#include <set>

namespace wronski {

FactorSet::FactorSet(std::vector<int> labels, int dim_per_factor) : labels_(std::move(labels)), N_(dim_per_factor) {
    if (N_ < 1) throw DomainError("factor dimension N must be >= 1");
    std::sort(labels_.begin(), labels_.end());
    if (std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end()) {
        throw DomainError("factor labels must be distinct");
    }
    strides_.assign(labels_.size(), 1);
    total_ = 1;
    for (std::size_t p = labels_.size(); p-- > 0;) {
        strides_[p] = total_;
        total_ *= static_cast<std::size_t>(N_);
    }
}

FactorSet FactorSet::range(int n, int dim_per_factor) {
    std::vector<int> l(static_cast<std::size_t>(std::max(n, 0)));
    std::iota(l.begin(), l.end(), 1);
    return FactorSet(std::move(l), dim_per_factor);
}

bool FactorSet::contains(const std::vector<int>& subset) const {
    return std::all_of(subset.begin(), subset.end(), [this](int l) { return contains(l); });
}

std::size_t FactorSet::position(int label) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label) throw DomainError("label " + std::to_string(label) + " not in factor set");
    return static_cast<std::size_t>(it - labels_.begin());
}

std::vector<int> FactorSet::unflatten(std::size_t flat) const {
    std::vector<int> d(labels_.size());
    for (std::size_t p = 0; p < labels_.size(); ++p) d[p] = static_cast<int>(digit(flat, p));
    return d;
}

std::size_t FactorSet::flatten(const std::vector<int>& digits) const {
    if (digits.size() != labels_.size()) throw DomainError("multi-index has wrong length");
    std::size_t x = 0;
    for (std::size_t p = 0; p < digits.size(); ++p) {
        if (digits[p] < 0 || digits[p] >= N_) throw DomainError("multi-index digit out of range");
        x += static_cast<std::size_t>(digits[p]) * strides_[p];
    }
    return x;
}

FactorSet FactorSet::without(const std::vector<int>& removed) const {
    std::vector<int> keep;
    for (int l : labels_)
        if (std::find(removed.begin(), removed.end(), l) == removed.end()) keep.push_back(l);
    return FactorSet(std::move(keep), N_);
}

FactorSet FactorSet::united(const FactorSet& other) const {
    if (other.N_ != N_) throw DomainError("factor sets have different local dimensions");
    std::set<int> u(labels_.begin(), labels_.end());
    u.insert(other.labels_.begin(), other.labels_.end());
    return FactorSet(std::vector<int>(u.begin(), u.end()), N_);
}

FloatOperator to_float(const ExactOperator& op) {
    FloatOperator out(op.factors());
    for (std::size_t r = 0; r < op.dim(); ++r)
        for (std::size_t c = 0; c < op.dim(); ++c) out(r, c) = op(r, c).get_d();
    return out;
}

ExactOperator elementary_unit(int i, int j, int k, const FactorSet& L) {
    const int N = L.dim_per_factor();
    if (i < 1 || i > N || j < 1 || j > N) throw DomainError("E_ij indices must lie in 1..N");
    const std::size_t p = L.position(k);
    ExactOperator out(L);
    const std::size_t s = L.stride(p);
    for (std::size_t c = 0; c < L.total_dim(); ++c) {
        if (L.digit(c, p) != static_cast<std::size_t>(j - 1)) continue;
        std::size_t r = c - static_cast<std::size_t>(j - 1) * s + static_cast<std::size_t>(i - 1) * s;
        out(r, c) = 1;
    }
    return out;
}

std::vector<Rational> diagonal_h_entries(const std::vector<Rational>& h, const std::vector<int>& K, const FactorSet& L) {
    if (static_cast<int>(h.size()) != L.dim_per_factor()) throw DomainError("h must have N entries");
    std::vector<std::size_t> pos;
    for (int k : K) pos.push_back(L.position(k));
    std::vector<Rational> d(L.total_dim(), Rational(1));
    for (std::size_t x = 0; x < d.size(); ++x)
        for (auto p : pos) d[x] *= h[L.digit(x, p)];
    return d;
}

ExactOperator diagonal_h_action(const std::vector<Rational>& h, const std::vector<int>& K, const FactorSet& L) {
    auto d = diagonal_h_entries(h, K, L);
    ExactOperator out(L);
    for (std::size_t x = 0; x < d.size(); ++x) out(x, x) = d[x];
    return out;
}

namespace {

// For each column b, the row a with a_k = b_{sigma^{-1}(k)}.
std::vector<std::size_t> permutation_image(const Permutation& sigma, const FactorSet& L) {
    if (!L.contains(sigma.domain())) throw DomainError("permutation acts on labels outside the factor set");
    const Permutation inv = sigma.inverse();
    std::vector<std::size_t> src(L.size());  // position of sigma^{-1}(k) for the factor at position p
    for (std::size_t p = 0; p < L.size(); ++p) {
        int k = L.labels()[p];
        bool moved = std::find(sigma.domain().begin(), sigma.domain().end(), k) != sigma.domain().end();
        src[p] = L.position(moved ? inv.apply(k) : k);
    }
    std::vector<std::size_t> img(L.total_dim());
    for (std::size_t b = 0; b < L.total_dim(); ++b) {
        std::size_t a = 0;
        for (std::size_t p = 0; p < L.size(); ++p) a += L.digit(b, src[p]) * L.stride(p);
        img[b] = a;
    }
    return img;
}

}  // namespace

ExactOperator permutation_operator(const Permutation& sigma, const FactorSet& L) {
    ExactOperator out(L);
    auto img = permutation_image(sigma, L);
    for (std::size_t b = 0; b < img.size(); ++b) out(img[b], b) = 1;
    return out;
}

ExactOperator group_algebra_operator(const GroupAlgebraElement& x, const FactorSet& L) {
    ExactOperator out(L);
    for (const auto& [sigma, c] : x.terms()) {
        auto img = permutation_image(sigma, L);
        for (std::size_t b = 0; b < img.size(); ++b) out(img[b], b) += c;
    }
    return out;
}

}  // namespace wronski
