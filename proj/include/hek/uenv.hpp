#ifndef HEK_UENV_HPP
#define HEK_UENV_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "hek/error.hpp"
#include "hek/lie.hpp"
#include "hek/scalar.hpp"

namespace hek {

/// Exponent vector alpha of the PBW monomial x_1^a1 ... x_d^ad.
using Monomial = std::vector<std::uint32_t>;

inline long total_degree(const Monomial& a) {
    return std::accumulate(a.begin(), a.end(), 0L);
}

/// Finite linear combination of PBW monomials. Zero coefficients are never
/// stored, so equality is table equality.
class UElement {
public:
    using Terms = std::map<Monomial, Scalar>;

    UElement() = default;
    explicit UElement(std::size_t dim) : dim_(dim) {}

    static UElement one(std::size_t dim) { return constant(dim, Scalar(1)); }
    static UElement constant(std::size_t dim, const Scalar& c) {
        UElement u(dim);
        u.add_term(Monomial(dim, 0), c);
        return u;
    }
    static UElement monomial(Monomial alpha, const Scalar& c = Scalar(1)) {
        UElement u(alpha.size());
        u.add_term(std::move(alpha), c);
        return u;
    }
    static UElement generator(std::size_t dim, std::size_t i, const Scalar& c = Scalar(1)) {
        Monomial a(dim, 0);
        a.at(i) = 1;
        return monomial(std::move(a), c);
    }

    std::size_t dim() const noexcept { return dim_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    Scalar coefficient(const Monomial& a) const {
        auto it = terms_.find(a);
        return it == terms_.end() ? Scalar(0) : it->second;
    }

    long degree() const {
        long d = -1;
        for (const auto& [a, c] : terms_) d = std::max(d, total_degree(a));
        return d;
    }

    void add_term(const Monomial& a, const Scalar& c) {
        if (a.size() != dim_) throw DimensionMismatch("monomial length does not match algebra dimension");
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(a, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    UElement& operator+=(const UElement& o) {
        check(o);
        for (const auto& [a, c] : o.terms_) add_term(a, c);
        return *this;
    }
    UElement& operator-=(const UElement& o) {
        check(o);
        for (const auto& [a, c] : o.terms_) add_term(a, -c);
        return *this;
    }
    UElement& operator*=(const Scalar& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [a, c] : terms_) c *= s;
        return *this;
    }

    friend UElement operator+(UElement a, const UElement& b) { return a += b; }
    friend UElement operator-(UElement a, const UElement& b) { return a -= b; }
    friend UElement operator-(UElement a) { return a *= Scalar(-1); }
    friend UElement operator*(const Scalar& s, UElement a) { return a *= s; }

    friend bool operator==(const UElement& a, const UElement& b) {
        return a.dim_ == b.dim_ && a.terms_ == b.terms_;
    }

private:
    void check(const UElement& o) const {
        if (o.dim_ != dim_) throw DimensionMismatch("elements over algebras of different dimension");
    }

    std::size_t dim_ = 0;
    Terms terms_;
};

/// Sup over terms of |d_alpha| r^{|alpha|}.
inline LogNorm gauss_norm(const UElement& u, const Radius& r, const Prime& p) {
    LogNorm best;
    for (const auto& [a, c] : u.terms()) best = max(best, scaled_norm(c, total_degree(a), r, p));
    return best;
}

struct PrincipalPart {
    LogNorm level;
    UElement leading;
};

/// Terms of u attaining its Gauss norm at radius r.
inline PrincipalPart principal_part(const UElement& u, const Radius& r, const Prime& p) {
    if (u.is_zero()) throw ZeroElement("principal_part of zero");
    PrincipalPart out{gauss_norm(u, r, p), UElement(u.dim())};
    for (const auto& [a, c] : u.terms()) {
        if (scaled_norm(c, total_degree(a), r, p) == out.level) out.leading.add_term(a, c);
    }
    return out;
}

/// Constant term; this is both the counit and the augmentation.
inline Scalar counit(const UElement& u) { return u.coefficient(Monomial(u.dim(), 0)); }

// ---------------------------------------------------------------------------

/// U(g) with PBW normal-ordering multiplication.
///
/// Right multiplication of a monomial by a generator is memoized on
/// (alpha, j). The memo is guarded by a shared mutex; results do not depend
/// on which thread fills it.
class UAlgebra {
public:
    explicit UAlgebra(LieAlgebra g) : g_(std::move(g)), cache_(std::make_shared<Cache>()) {}

    const LieAlgebra& lie() const noexcept { return g_; }
    std::size_t dim() const noexcept { return g_.dim(); }

    UElement one() const { return UElement::one(dim()); }
    UElement gen(std::size_t i, const Scalar& c = Scalar(1)) const { return UElement::generator(dim(), i, c); }

    /// X^alpha * x_j rewritten into PBW form.
    const UElement& monomial_times_generator(const Monomial& alpha, std::size_t j) const {
        const Key key{alpha, j};
        {
            std::shared_lock lock(cache_->mutex);
            if (auto it = cache_->table.find(key); it != cache_->table.end()) return it->second;
        }
        UElement result = compute(alpha, j);
        std::unique_lock lock(cache_->mutex);
        return cache_->table.try_emplace(key, std::move(result)).first->second;
    }

    UElement mul_generator(const UElement& u, std::size_t j) const {
        UElement out(dim());
        for (const auto& [a, c] : u.terms()) {
            for (const auto& [b, e] : monomial_times_generator(a, j).terms()) out.add_term(b, c * e);
        }
        return out;
    }

    /// u * X^beta.
    UElement mul_monomial(const UElement& u, const Monomial& beta) const {
        UElement out = u;
        for (std::size_t j = 0; j < beta.size(); ++j)
            for (std::uint32_t t = 0; t < beta[j]; ++t) out = mul_generator(out, j);
        return out;
    }

    UElement mul(const UElement& u, const UElement& v) const {
        check(u);
        check(v);
        UElement out(dim());
        for (const auto& [b, c] : v.terms()) out += c * mul_monomial(u, b);
        return out;
    }

    /// Product of generators x_{w_0} x_{w_1} ... in the given order.
    UElement word(const std::vector<std::size_t>& w) const {
        UElement out = one();
        for (std::size_t j : w) out = mul_generator(out, j);
        return out;
    }

    /// ad(x_i)(u) = x_i u - u x_i.
    UElement adjoint_action(std::size_t i, const UElement& u) const {
        return mul(gen(i), u) - mul_generator(u, i);
    }

    /// [x_i, x_j] as an element of U(g).
    UElement bracket_element(std::size_t i, std::size_t j) const {
        UElement out(dim());
        for (const auto& [k, v] : g_.bracket(i, j)) out += gen(k, v);
        return out;
    }

    /// Anti-automorphism with S(x_i) = -x_i.
    UElement antipode(const UElement& u) const {
        check(u);
        UElement out(dim());
        for (const auto& [a, c] : u.terms()) {
            std::vector<std::size_t> w;
            for (std::size_t i = a.size(); i-- > 0;)
                for (std::uint32_t t = 0; t < a[i]; ++t) w.push_back(i);
            const Scalar sign = (w.size() % 2 == 0) ? Scalar(1) : Scalar(-1);
            out += (c * sign) * word(w);
        }
        return out;
    }

    void check(const UElement& u) const {
        if (u.dim() != dim()) throw DimensionMismatch("element dimension " + std::to_string(u.dim()) +
                                                      " does not match algebra dimension " + std::to_string(dim()));
    }

private:
    using Key = std::pair<Monomial, std::size_t>;
    struct Cache {
        std::shared_mutex mutex;
        std::map<Key, UElement> table;
    };

    // X^alpha x_j with k the last occupied slot: if k <= j append, else
    // X^alpha x_j = (X^{alpha-e_k} x_j) x_k + sum_l c(k,j,l) X^{alpha-e_k} x_l.
    UElement compute(const Monomial& alpha, std::size_t j) const {
        std::size_t k = alpha.size();
        for (std::size_t i = alpha.size(); i-- > 0;) {
            if (alpha[i] != 0) {
                k = i;
                break;
            }
        }
        if (k == alpha.size() || k <= j) {
            Monomial b = alpha;
            ++b[j];
            return UElement::monomial(std::move(b));
        }
        Monomial rest = alpha;
        --rest[k];
        UElement out = mul_generator(monomial_times_generator(rest, j), k);
        for (const auto& [l, c] : g_.bracket(k, j)) {
            out += c * monomial_times_generator(rest, l);
        }
        return out;
    }

    LieAlgebra g_;
    std::shared_ptr<Cache> cache_;
};

enum class RewriteStrategy { LeftmostInversion, RightmostInversion };

/// Normal-orders a word of generators by repeated adjacent swaps
/// ab -> ba + [a,b] on one inversion at a time. Independent of UAlgebra's
/// memoized recursion; used to cross-check PBW well-definedness.
inline UElement normal_order_word(const LieAlgebra& g, const std::vector<std::size_t>& word, RewriteStrategy strategy) {
    using Word = std::vector<std::size_t>;
    std::map<Word, Scalar> pending{{word, Scalar(1)}};
    UElement out(g.dim());
    while (!pending.empty()) {
        auto node = pending.extract(std::prev(pending.end()));
        const Word& w = node.key();
        const Scalar& c = node.mapped();
        if (c == 0) continue;
        std::size_t pos = w.size();
        if (strategy == RewriteStrategy::LeftmostInversion) {
            for (std::size_t i = 0; i + 1 < w.size(); ++i)
                if (w[i] > w[i + 1]) {
                    pos = i;
                    break;
                }
        } else {
            for (std::size_t i = w.size(); i-- > 1;)
                if (w[i - 1] > w[i]) {
                    pos = i - 1;
                    break;
                }
        }
        if (pos == w.size()) {
            Monomial a(g.dim(), 0);
            for (std::size_t x : w) ++a[x];
            out.add_term(a, c);
            continue;
        }
        Word swapped = w;
        std::swap(swapped[pos], swapped[pos + 1]);
        pending[swapped] += c;
        for (const auto& [l, v] : g.bracket(w[pos], w[pos + 1])) {
            Word shorter;
            shorter.reserve(w.size() - 1);
            shorter.insert(shorter.end(), w.begin(), w.begin() + static_cast<long>(pos));
            shorter.push_back(l);
            shorter.insert(shorter.end(), w.begin() + static_cast<long>(pos) + 2, w.end());
            pending[shorter] += c * v;
        }
    }
    return out;
}

/// The word x_1^a1 ... x_d^ad for a monomial.
inline std::vector<std::size_t> monomial_word(const Monomial& a) {
    std::vector<std::size_t> w;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::uint32_t t = 0; t < a[i]; ++t) w.push_back(i);
    return w;
}

// ---------------------------------------------------------------------------

/// U(g) together with U(g (+) g), which stands in for U(g) (x) U(g): the first
/// copy uses indices 0..d-1, the second d..2d-1.
class HopfAlgebra {
public:
    explicit HopfAlgebra(const LieAlgebra& g) : base_(g), doubled_(direct_sum(g, g)) {}

    const UAlgebra& base() const noexcept { return base_; }
    const UAlgebra& doubled() const noexcept { return doubled_; }

    /// Algebra map with x_i -> x_i (x) 1 + 1 (x) x_i.
    UElement comultiply(const UElement& u) const {
        base_.check(u);
        const std::size_t d = base_.dim();
        std::vector<UElement> prim;
        for (std::size_t i = 0; i < d; ++i) prim.push_back(doubled_.gen(i) + doubled_.gen(d + i));
        UElement out(2 * d);
        for (const auto& [a, c] : u.terms()) {
            UElement term = doubled_.one();
            for (std::size_t i = 0; i < d; ++i)
                for (std::uint32_t t = 0; t < a[i]; ++t) term = doubled_.mul(term, prim[i]);
            out += c * term;
        }
        return out;
    }

    /// (counit (x) id)(w) when keep_second, (id (x) counit)(w) otherwise.
    UElement apply_counit_on(const UElement& w, bool keep_second) const {
        const std::size_t d = base_.dim();
        UElement out(d);
        for (const auto& [a, c] : w.terms()) {
            const auto killed_begin = keep_second ? a.begin() : a.begin() + static_cast<long>(d);
            if (std::any_of(killed_begin, killed_begin + static_cast<long>(d), [](auto e) { return e != 0; })) continue;
            const auto kept_begin = keep_second ? a.begin() + static_cast<long>(d) : a.begin();
            out.add_term(Monomial(kept_begin, kept_begin + static_cast<long>(d)), c);
        }
        return out;
    }

    /// mul o (S (x) id) when antipode_first, mul o (id (x) S) otherwise.
    UElement mul_with_antipode(const UElement& w, bool antipode_first) const {
        const std::size_t d = base_.dim();
        UElement out(d);
        for (const auto& [a, c] : w.terms()) {
            UElement left = UElement::monomial(Monomial(a.begin(), a.begin() + static_cast<long>(d)));
            UElement right = UElement::monomial(Monomial(a.begin() + static_cast<long>(d), a.end()));
            if (antipode_first)
                left = base_.antipode(left);
            else
                right = base_.antipode(right);
            out += c * base_.mul(left, right);
        }
        return out;
    }

private:
    UAlgebra base_;
    UAlgebra doubled_;
};

}  // namespace hek

#endif  // HEK_UENV_HPP
