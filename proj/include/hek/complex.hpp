#ifndef HEK_COMPLEX_HPP
#define HEK_COMPLEX_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hek/error.hpp"
#include "hek/scalar.hpp"
#include "hek/uenv.hpp"

namespace hek {

/// Which complex a chain belongs to: U(g) (x) Lambda g, or the Koszul complex
/// S(g) (x) Lambda g (commutative polynomial part).
enum class Side { U, S };

/// Exterior basis element x_I as a bitmask over generator indices.
using Wedge = std::uint32_t;

inline int wedge_degree(Wedge w) noexcept { return std::popcount(w); }

inline std::vector<std::size_t> wedge_indices(Wedge w) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; w != 0; ++i, w >>= 1)
        if (w & 1u) out.push_back(i);
    return out;
}

/// x_k ^ x_I = sign * x_{I+k} in canonical order; sign 0 when k is in I.
inline int wedge_insert_sign(Wedge w, std::size_t k) noexcept {
    if (w & (Wedge{1} << k)) return 0;
    const Wedge below = w & ((Wedge{1} << k) - 1);
    return (std::popcount(below) % 2 == 0) ? 1 : -1;
}

struct ChainKey {
    Wedge wedge = 0;
    Monomial alpha;

    friend bool operator==(const ChainKey&, const ChainKey&) = default;
    friend bool operator<(const ChainKey& a, const ChainKey& b) {
        const int qa = wedge_degree(a.wedge), qb = wedge_degree(b.wedge);
        if (qa != qb) return qa < qb;
        if (a.wedge != b.wedge) return a.wedge < b.wedge;
        return a.alpha < b.alpha;
    }
};

/// Graded element sum u_I (x) x_I, stored term by term as
/// (I, alpha) -> coefficient with zero coefficients dropped.
class ChainElement {
public:
    using Terms = std::map<ChainKey, Scalar>;

    ChainElement() = default;
    ChainElement(std::size_t dim, Side side) : dim_(dim), side_(side) {
        if (dim > 31) throw InputError("chain complexes support at most 31 generators");
    }

    static ChainElement basis(std::size_t dim, Side side, Wedge w, Monomial alpha, const Scalar& c = Scalar(1)) {
        ChainElement x(dim, side);
        x.add_term(w, std::move(alpha), c);
        return x;
    }
    /// u (x) x_I.
    static ChainElement from_element(const UElement& u, Wedge w, Side side = Side::U) {
        ChainElement x(u.dim(), side);
        for (const auto& [a, c] : u.terms()) x.add_term(w, a, c);
        return x;
    }

    std::size_t dim() const noexcept { return dim_; }
    Side side() const noexcept { return side_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    void add_term(Wedge w, Monomial alpha, const Scalar& c) {
        if (alpha.size() != dim_) throw DimensionMismatch("chain monomial length does not match dimension");
        if ((w >> dim_) != 0) throw DimensionMismatch("wedge index out of range");
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(ChainKey{w, std::move(alpha)}, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    /// Coefficient element u_I.
    UElement component(Wedge w) const {
        UElement u(dim_);
        for (const auto& [k, c] : terms_)
            if (k.wedge == w) u.add_term(k.alpha, c);
        return u;
    }

    /// Part of exterior degree q.
    ChainElement graded_part(int q) const {
        ChainElement out(dim_, side_);
        for (const auto& [k, c] : terms_)
            if (wedge_degree(k.wedge) == q) out.terms_.emplace(k, c);
        return out;
    }

    /// Largest |alpha| + q over terms, -1 for zero.
    long max_weight() const {
        long w = -1;
        for (const auto& [k, c] : terms_) w = std::max(w, total_degree(k.alpha) + wedge_degree(k.wedge));
        return w;
    }

    ChainElement reflagged(Side side) const {
        ChainElement out = *this;
        out.side_ = side;
        return out;
    }

    ChainElement& operator+=(const ChainElement& o) {
        check(o);
        for (const auto& [k, c] : o.terms_) add_term(k.wedge, k.alpha, c);
        return *this;
    }
    ChainElement& operator-=(const ChainElement& o) {
        check(o);
        for (const auto& [k, c] : o.terms_) add_term(k.wedge, k.alpha, -c);
        return *this;
    }
    ChainElement& operator*=(const Scalar& s) {
        if (s == 0) terms_.clear();
        for (auto& [k, c] : terms_) c *= s;
        return *this;
    }
    friend ChainElement operator+(ChainElement a, const ChainElement& b) { return a += b; }
    friend ChainElement operator-(ChainElement a, const ChainElement& b) { return a -= b; }
    friend ChainElement operator*(const Scalar& s, ChainElement a) { return a *= s; }

    friend bool operator==(const ChainElement& a, const ChainElement& b) {
        return a.dim_ == b.dim_ && a.side_ == b.side_ && a.terms_ == b.terms_;
    }

private:
    void check(const ChainElement& o) const {
        if (o.dim_ != dim_) throw DimensionMismatch("chains of different dimension");
        if (o.side_ != side_) throw DimensionMismatch("chains on different sides");
    }

    std::size_t dim_ = 0;
    Side side_ = Side::U;
    Terms terms_;
};

// ---------------------------------------------------------------------------
// Norms

/// Per-degree norms r^q sup_I ||u_I||_r and their maximum.
struct ChainNormProfile {
    std::vector<LogNorm> per_degree;
    LogNorm total;
};

inline ChainNormProfile chain_norm_profile(const ChainElement& x, const Radius& r, const Prime& p) {
    ChainNormProfile out{std::vector<LogNorm>(x.dim() + 1), LogNorm::bottom()};
    for (const auto& [k, c] : x.terms()) {
        const int q = wedge_degree(k.wedge);
        const LogNorm n = scaled_norm(c, total_degree(k.alpha) + q, r, p);
        out.per_degree[static_cast<std::size_t>(q)] = max(out.per_degree[static_cast<std::size_t>(q)], n);
        out.total = max(out.total, n);
    }
    return out;
}

inline LogNorm chain_norm(const ChainElement& x, const Radius& r, const Prime& p) {
    return chain_norm_profile(x, r, p).total;
}

// ---------------------------------------------------------------------------
// Augmentation, unit, PBW isomorphism

inline Scalar augmentation(const ChainElement& x) {
    Scalar out = 0;
    for (const auto& [k, c] : x.terms()) {
        if (k.wedge != 0) throw NonZeroDegreeInput("augmentation of a chain with exterior degree > 0");
        if (total_degree(k.alpha) == 0) out += c;
    }
    return out;
}

/// Constant-term projection eta(eps(x)) applied to the degree-0 part only.
inline ChainElement eta_epsilon(const ChainElement& x) {
    ChainElement out(x.dim(), x.side());
    const ChainKey unit_key{0, Monomial(x.dim(), 0)};
    if (auto it = x.terms().find(unit_key); it != x.terms().end()) out.add_term(0, unit_key.alpha, it->second);
    return out;
}

inline ChainElement unit(std::size_t dim, const Scalar& c, Side side = Side::U) {
    return ChainElement::basis(dim, side, 0, Monomial(dim, 0), c);
}

/// f: U-side -> S-side, identity on coefficient tables.
inline ChainElement pbw_iso(const ChainElement& x) {
    if (x.side() != Side::U) throw DimensionMismatch("pbw_iso expects a U-side chain");
    return x.reflagged(Side::S);
}

inline ChainElement pbw_iso_inv(const ChainElement& x) {
    if (x.side() != Side::S) throw DimensionMismatch("pbw_iso_inv expects an S-side chain");
    return x.reflagged(Side::U);
}

// ---------------------------------------------------------------------------
// Differentials

/// phi(u (x) x_{i1}^...^x_{iq}) = sum_s (-1)^{s+1} u x_{is} (x) (omit s).
/// On the U-side the product is normal-ordered through `U`; on the S-side it
/// is commutative and `U` may be null.
inline ChainElement phi(const ChainElement& x, const UAlgebra* U) {
    const bool commutative = x.side() == Side::S;
    if (!commutative) {
        if (!U) throw std::invalid_argument("phi on the U-side needs an algebra");
        if (U->dim() != x.dim()) throw DimensionMismatch("phi: algebra and chain dimensions differ");
    }
    ChainElement out(x.dim(), x.side());
    for (const auto& [k, c] : x.terms()) {
        const auto idx = wedge_indices(k.wedge);
        for (std::size_t s = 0; s < idx.size(); ++s) {
            const Scalar sign = (s % 2 == 0) ? Scalar(1) : Scalar(-1);
            const Wedge rest = k.wedge & ~(Wedge{1} << idx[s]);
            if (commutative || !U) {
                Monomial a = k.alpha;
                ++a[idx[s]];
                out.add_term(rest, std::move(a), sign * c);
            } else {
                for (const auto& [a, e] : U->monomial_times_generator(k.alpha, idx[s]).terms())
                    out.add_term(rest, a, sign * c * e);
            }
        }
    }
    return out;
}

/// psi(u (x) x_{i1}^...^x_{iq}) = sum_{s<t} (-1)^{s+t} u (x) [x_is, x_it] ^ (omit s,t).
/// Zero on the S-side.
inline ChainElement psi(const ChainElement& x, const LieAlgebra& g) {
    ChainElement out(x.dim(), x.side());
    if (x.side() == Side::S) return out;
    if (g.dim() != x.dim()) throw DimensionMismatch("psi: algebra and chain dimensions differ");
    for (const auto& [k, c] : x.terms()) {
        const auto idx = wedge_indices(k.wedge);
        for (std::size_t s = 0; s < idx.size(); ++s) {
            for (std::size_t t = s + 1; t < idx.size(); ++t) {
                // 1-based positions s+1, t+1 give sign (-1)^{s+t}.
                const Scalar sign = ((s + t) % 2 == 0) ? Scalar(1) : Scalar(-1);
                const Wedge rest = k.wedge & ~(Wedge{1} << idx[s]) & ~(Wedge{1} << idx[t]);
                for (const auto& [l, v] : g.bracket(idx[s], idx[t])) {
                    const int ws = wedge_insert_sign(rest, l);
                    if (ws == 0) continue;
                    out.add_term(rest | (Wedge{1} << l), k.alpha, sign * c * v * ws);
                }
            }
        }
    }
    return out;
}

/// psi + phi on the U-side, phi on the S-side.
inline ChainElement differential(const ChainElement& x, const UAlgebra& U) {
    if (x.side() == Side::S) return phi(x, nullptr);
    return psi(x, U.lie()) + phi(x, &U);
}

// ---------------------------------------------------------------------------
// Koszul contracting homotopy

namespace detail {

// s-bar on the Koszul complex of the first k variables, applied to the basis
// term (w, alpha) restricted to those variables (higher variables ride along).
// Splits off variable k-1:  s(a (x) b) = s_{<k}(a) (x) b + eta eps(a) (x) s_k(b).
inline std::optional<std::pair<Wedge, Monomial>> koszul_prefix(std::size_t k, Wedge w, const Monomial& alpha) {
    if (k == 0) return std::nullopt;
    const std::size_t v = k - 1;
    if (auto lower = koszul_prefix(v, w, alpha)) return lower;
    const Wedge prefix_mask = (Wedge{1} << v) - 1;
    const bool prefix_is_unit =
        (w & prefix_mask) == 0 && std::all_of(alpha.begin(), alpha.begin() + static_cast<long>(v), [](auto e) { return e == 0; });
    if (!prefix_is_unit) return std::nullopt;
    // base homotopy on L[x_v]: x_v^n -> x_v^{n-1} (x) x_v, zero on 1 and on degree 1
    if ((w & (Wedge{1} << v)) != 0 || alpha[v] == 0) return std::nullopt;
    Monomial a = alpha;
    --a[v];
    return std::pair{w | (Wedge{1} << v), std::move(a)};
}

}  // namespace detail

/// Contracting homotopy s-bar of the augmented Koszul complex built by the
/// recursive split S = S_{<d} (x) S_d.
inline ChainElement koszul_homotopy(const ChainElement& x) {
    if (x.side() != Side::S) throw DimensionMismatch("koszul_homotopy expects an S-side chain");
    ChainElement out(x.dim(), Side::S);
    for (const auto& [k, c] : x.terms()) {
        if (auto t = detail::koszul_prefix(x.dim(), k.wedge, k.alpha)) out.add_term(t->first, std::move(t->second), c);
    }
    return out;
}

/// sigma = f^{-1} o s-bar o f.
inline ChainElement sigma(const ChainElement& x) { return pbw_iso_inv(koszul_homotopy(pbw_iso(x))); }

// ---------------------------------------------------------------------------
// Contracting homotopy of the standard complex

struct TraceStep {
    int n;
    ChainElement iterate;  // T_n(x)
    ChainElement defect;   // (id - eta eps - d T_n - T_n d)(x)
};

struct HomotopyTrace {
    std::vector<TraceStep> steps;
    int stationary_index() const { return steps.empty() ? 0 : steps.back().n; }
    const ChainElement& result() const { return steps.back().iterate; }
};

inline constexpr int kHomotopyIterationCap = 64;

/// Builds s from sigma by correcting the defect D(T) = id - eta eps - dT - Td:
/// T_0 = sigma, T_{n+1} = T_n + sigma o D(T_n), evaluated on one input at a time
/// until D(T_n)(x) = 0. The correction terms strictly lower |alpha| + q, so the
/// iteration is stationary on every input.
class StandardComplex {
public:
    explicit StandardComplex(LieAlgebra g) : U_(std::move(g)) {}
    explicit StandardComplex(UAlgebra U) : U_(std::move(U)) {}

    const UAlgebra& algebra() const noexcept { return U_; }
    std::size_t dim() const noexcept { return U_.dim(); }

    ChainElement d(const ChainElement& x) const { return differential(x, U_); }

    /// Lower-order part of the differential: d - f^{-1} phi_S f.
    ChainElement perturbation(const ChainElement& x) const {
        return d(x) - pbw_iso_inv(phi(pbw_iso(x), nullptr));
    }

    HomotopyTrace trace(const ChainElement& x, int cap = kHomotopyIterationCap) const {
        check(x);
        const ChainElement dx = d(x);
        ChainElement on_x = sigma(x);    // T_n(x)
        ChainElement on_dx = sigma(dx);  // T_n(dx)
        HomotopyTrace out;
        for (int n = 0;; ++n) {
            ChainElement defect = x - eta_epsilon(x) - d(on_x) - on_dx;
            const bool done = defect.is_zero();
            out.steps.push_back(TraceStep{n, on_x, defect});
            if (done) return out;
            if (n >= cap) throw NonStationary(cap);
            // D(T_n)(dx) = dx - d T_n(dx), since eps(dx) = 0 and d d = 0.
            const ChainElement defect_dx = dx - d(on_dx);
            on_x += sigma(defect);
            on_dx += sigma(defect_dx);
        }
    }

    ChainElement homotopy(const ChainElement& x) const { return trace(x).result(); }

    /// Perturbation series sum_k (-1)^k sigma (delta sigma)^k x with delta the
    /// lower-order part of the differential.
    ChainElement homotopy_series(const ChainElement& x, int cap = kHomotopyIterationCap) const {
        check(x);
        ChainElement out(dim(), Side::U);
        ChainElement term = sigma(x);
        for (int k = 0; !term.is_zero(); ++k) {
            if (k > cap) throw NonStationary(cap);
            out += term;
            term = Scalar(-1) * sigma(perturbation(term));
        }
        return out;
    }

private:
    void check(const ChainElement& x) const {
        if (x.side() != Side::U) throw DimensionMismatch("standard complex expects a U-side chain");
        if (x.dim() != dim()) throw DimensionMismatch("chain dimension does not match algebra");
    }

    UAlgebra U_;
};

}  // namespace hek

#endif  // HEK_COMPLEX_HPP
