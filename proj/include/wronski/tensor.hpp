#pragma once

#include "wronski/combinatorics.hpp"
#include "wronski/errors.hpp"
#include "wronski/matrix.hpp"
#include "wronski/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

namespace wronski {

/// Ordered set of distinct tensor-factor labels (kept ascending), each factor C^N.
class FactorSet {
public:
    FactorSet() = default;
    FactorSet(std::vector<int> labels, int dim_per_factor);
    /// {1, ..., n}
    static FactorSet range(int n, int dim_per_factor);

    const std::vector<int>& labels() const { return labels_; }
    int dim_per_factor() const { return N_; }
    std::size_t size() const { return labels_.size(); }
    std::size_t total_dim() const { return total_; }
    bool contains(int label) const { return std::binary_search(labels_.begin(), labels_.end(), label); }
    bool contains(const std::vector<int>& subset) const;
    /// Position of a label in the ordered list; DomainError if absent.
    std::size_t position(int label) const;
    /// Mixed-radix stride of the factor at a position (first label most significant).
    std::size_t stride(std::size_t position) const { return strides_[position]; }

    /// Digit of factor `position` inside a flat index.
    std::size_t digit(std::size_t flat, std::size_t position) const {
        return (flat / strides_[position]) % static_cast<std::size_t>(N_);
    }
    std::vector<int> unflatten(std::size_t flat) const;
    std::size_t flatten(const std::vector<int>& digits) const;

    FactorSet without(const std::vector<int>& removed) const;
    FactorSet united(const FactorSet& other) const;

    friend bool operator==(const FactorSet& a, const FactorSet& b) { return a.N_ == b.N_ && a.labels_ == b.labels_; }

private:
    std::vector<int> labels_;
    int N_ = 1;
    std::size_t total_ = 1;
    std::vector<std::size_t> strides_;
};

/// Dense square operator on (C^N)^{⊗L}, row-major over mixed-radix multi-indices.
template <typename S>
class TensorOperator {
public:
    TensorOperator() = default;
    explicit TensorOperator(FactorSet factors)
        : f_(std::move(factors)), dim_(f_.total_dim()), a_(dim_ * dim_, S(0)) {}

    static TensorOperator zero(const FactorSet& f) { return TensorOperator(f); }
    static TensorOperator identity(const FactorSet& f) {
        TensorOperator op(f);
        for (std::size_t i = 0; i < op.dim_; ++i) op(i, i) = S(1);
        return op;
    }
    static TensorOperator scalar(const FactorSet& f, const S& s) {
        TensorOperator op(f);
        for (std::size_t i = 0; i < op.dim_; ++i) op(i, i) = s;
        return op;
    }

    const FactorSet& factors() const { return f_; }
    std::size_t dim() const { return dim_; }
    S& operator()(std::size_t r, std::size_t c) { return a_[r * dim_ + c]; }
    const S& operator()(std::size_t r, std::size_t c) const { return a_[r * dim_ + c]; }
    const std::vector<S>& entries() const { return a_; }

    bool is_zero() const {
        return std::all_of(a_.begin(), a_.end(), [](const S& x) { return x == S(0); });
    }
    bool is_symmetric() const {
        for (std::size_t r = 0; r < dim_; ++r)
            for (std::size_t c = r + 1; c < dim_; ++c)
                if (!((*this)(r, c) == (*this)(c, r))) return false;
        return true;
    }
    S trace() const {
        S t(0);
        for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
        return t;
    }
    Matrix<S> to_matrix() const {
        Matrix<S> m(dim_, dim_);
        m.data() = a_;
        return m;
    }

    TensorOperator& operator+=(const TensorOperator& o) {
        require_same(o);
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
        return *this;
    }
    TensorOperator& operator-=(const TensorOperator& o) {
        require_same(o);
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
        return *this;
    }
    TensorOperator& operator*=(const S& s) {
        for (auto& x : a_) x *= s;
        return *this;
    }
    /// this += s * o
    void add_scaled(const TensorOperator& o, const S& s) {
        require_same(o);
        if (s == S(0)) return;
        for (std::size_t i = 0; i < a_.size(); ++i)
            if (!(o.a_[i] == S(0))) a_[i] += s * o.a_[i];
    }
    friend TensorOperator operator+(TensorOperator a, const TensorOperator& b) { return a += b; }
    friend TensorOperator operator-(TensorOperator a, const TensorOperator& b) { return a -= b; }
    friend TensorOperator operator*(TensorOperator a, const S& s) { return a *= s; }
    friend TensorOperator operator*(const S& s, TensorOperator a) { return a *= s; }

    /// Composition A∘B. Operands on different factor sets are first embedded into the union.
    friend TensorOperator operator*(const TensorOperator& a, const TensorOperator& b) {
        if (!(a.f_ == b.f_)) {
            FactorSet u = a.f_.united(b.f_);
            return a.embedded(u) * b.embedded(u);
        }
        TensorOperator m(a.f_);
        const std::size_t d = a.dim_;
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t k = 0; k < d; ++k) {
                const S& x = a(i, k);
                if (x == S(0)) continue;
                const S* brow = &b.a_[k * d];
                S* mrow = &m.a_[i * d];
                for (std::size_t j = 0; j < d; ++j)
                    if (!(brow[j] == S(0))) mrow[j] += x * brow[j];
            }
        return m;
    }
    friend bool operator==(const TensorOperator& a, const TensorOperator& b) {
        return a.f_ == b.f_ && a.a_ == b.a_;
    }

    /// Same matrix on another factor set of equal size (labels mapped in ascending order).
    TensorOperator relabeled(const FactorSet& target) const {
        if (target.size() != f_.size() || target.dim_per_factor() != f_.dim_per_factor()) {
            throw DomainError("relabel: factor sets differ in shape");
        }
        TensorOperator out(*this);
        out.f_ = target;
        return out;
    }

    /// Same operator on a superset of factors, acting as the identity on the new ones.
    TensorOperator embedded(const FactorSet& target) const {
        if (target.dim_per_factor() != f_.dim_per_factor() || !target.contains(f_.labels())) {
            throw DomainError("embed: target factor set must contain the source factors");
        }
        if (target == f_) return *this;
        std::vector<std::size_t> pos;  // positions of own labels inside target
        for (int l : f_.labels()) pos.push_back(target.position(l));
        std::vector<std::size_t> other;
        for (std::size_t p = 0; p < target.size(); ++p)
            if (std::find(pos.begin(), pos.end(), p) == pos.end()) other.push_back(p);
        TensorOperator out(target);
        const std::size_t D = target.total_dim();
        std::vector<std::size_t> proj(D), rest(D);
        for (std::size_t x = 0; x < D; ++x) {
            std::size_t p = 0, q = 0;
            for (std::size_t k = 0; k < pos.size(); ++k) p += target.digit(x, pos[k]) * f_.stride(k);
            for (std::size_t k = 0; k < other.size(); ++k) q += target.digit(x, other[k]) * target.stride(other[k]);
            proj[x] = p;
            rest[x] = q;
        }
        for (std::size_t r = 0; r < D; ++r)
            for (std::size_t c = 0; c < D; ++c)
                if (rest[r] == rest[c]) out(r, c) = (*this)(proj[r], proj[c]);
        return out;
    }

    /// Left multiplication by a diagonal operator given by its diagonal.
    TensorOperator left_diagonal(const std::vector<S>& diag) const {
        TensorOperator out(*this);
        for (std::size_t r = 0; r < dim_; ++r)
            for (std::size_t c = 0; c < dim_; ++c) out(r, c) *= diag[r];
        return out;
    }
    TensorOperator right_diagonal(const std::vector<S>& diag) const {
        TensorOperator out(*this);
        for (std::size_t r = 0; r < dim_; ++r)
            for (std::size_t c = 0; c < dim_; ++c) out(r, c) *= diag[c];
        return out;
    }

private:
    void require_same(const TensorOperator& o) const {
        if (!(f_ == o.f_)) throw DomainError("operators act on different factor sets");
    }

    FactorSet f_;
    std::size_t dim_ = 1;
    std::vector<S> a_ = std::vector<S>(1, S(0));
};

using ExactOperator = TensorOperator<Rational>;
using FloatOperator = TensorOperator<double>;

/// One-way conversion into the float backend.
FloatOperator to_float(const ExactOperator& op);

/// E_{i,j} on factor k (1-based i, j), identity on the other factors of L.
ExactOperator elementary_unit(int i, int j, int k, const FactorSet& L);

/// Diagonal of h^{(K)}: product of h_{i_k} over factors k in K.
std::vector<Rational> diagonal_h_entries(const std::vector<Rational>& h, const std::vector<int>& K, const FactorSet& L);
ExactOperator diagonal_h_action(const std::vector<Rational>& h, const std::vector<int>& K, const FactorSet& L);

/// Factor-permuting action sigma(⊗v_k) = ⊗v_{sigma^{-1}(k)}; sigma's domain must lie in L.
ExactOperator permutation_operator(const Permutation& sigma, const FactorSet& L);
/// Linear extension to the group algebra.
ExactOperator group_algebra_operator(const GroupAlgebraElement& x, const FactorSet& L);

/// Tr_K by summing over index pairs that agree on the traced factors.
template <typename S>
TensorOperator<S> partial_trace(const TensorOperator<S>& A, const std::vector<int>& K) {
    const FactorSet& L = A.factors();
    if (!L.contains(K)) throw DomainError("partial trace: traced factors are not a subset of the operator's factors");
    FactorSet rest = L.without(K);
    std::vector<std::size_t> kept_pos, traced_pos;
    for (std::size_t p = 0; p < L.size(); ++p) {
        if (std::find(K.begin(), K.end(), L.labels()[p]) != K.end()) traced_pos.push_back(p);
        else kept_pos.push_back(p);
    }
    const std::size_t N = static_cast<std::size_t>(L.dim_per_factor());
    std::size_t traced_dim = 1;
    for (std::size_t i = 0; i < traced_pos.size(); ++i) traced_dim *= N;
    // offsets of kept/traced digits inside a flat index of L
    std::vector<std::size_t> kept_off(rest.total_dim()), traced_off(traced_dim);
    for (std::size_t x = 0; x < rest.total_dim(); ++x) {
        std::size_t off = 0;
        for (std::size_t k = 0; k < kept_pos.size(); ++k) off += rest.digit(x, k) * L.stride(kept_pos[k]);
        kept_off[x] = off;
    }
    for (std::size_t t = 0; t < traced_dim; ++t) {
        std::size_t off = 0, rem = t;
        for (std::size_t k = traced_pos.size(); k-- > 0;) {
            off += (rem % N) * L.stride(traced_pos[k]);
            rem /= N;
        }
        traced_off[t] = off;
    }
    TensorOperator<S> out(rest);
    for (std::size_t r = 0; r < rest.total_dim(); ++r)
        for (std::size_t c = 0; c < rest.total_dim(); ++c) {
            S acc(0);
            for (std::size_t t = 0; t < traced_dim; ++t) acc += A(kept_off[r] + traced_off[t], kept_off[c] + traced_off[t]);
            out(r, c) = acc;
        }
    return out;
}

}  // namespace wronski
