#ifndef HEK_COMPLETION_HPP
#define HEK_COMPLETION_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hek/scalar.hpp"
#include "hek/uenv.hpp"

namespace hek {

/// Coefficient family d_alpha = p^{ceil(v(|alpha|))} with v(n) = a n^2 + b n + c,
/// the same coefficient on every multi-index of a given total degree.
struct CoefficientStream {
    Scalar a, b, c;
    std::size_t dim = 1;

    Scalar law(long n) const { return a * n * n + b * n + c; }

    long valuation(long n) const {
        const Scalar v = law(n);
        Integer q;
        mpz_cdiv_q(q.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
        return q.get_si();
    }
};

/// Term norms tend to 0 at every radius.
struct AllRadii {
    bool operator==(const AllRadii&) const = default;
};
/// Term norms tend to 0 exactly for log-radius s < bound.
struct RadiiBelow {
    Scalar bound;
    bool operator==(const RadiiBelow&) const = default;
};
/// Term norms are unbounded at every radius.
struct Divergent {
    bool operator==(const Divergent&) const = default;
};

using ConvergenceVerdict = std::variant<AllRadii, RadiiBelow, Divergent>;

inline ConvergenceVerdict classify(const CoefficientStream& st) {
    if (st.dim == 0) return AllRadii{};  // U(0) = L: only the constant term exists
    if (st.a > 0) return AllRadii{};
    if (st.a == 0 && st.b > 0) return RadiiBelow{st.b};
    return Divergent{};
}

inline bool converges_at(const ConvergenceVerdict& v, const Scalar& s) {
    if (std::holds_alternative<AllRadii>(v)) return true;
    if (const auto* r = std::get_if<RadiiBelow>(&v)) return s < r->bound;
    return false;
}

inline std::string describe(const ConvergenceVerdict& v) {
    if (std::holds_alternative<AllRadii>(v)) return "AllRadii";
    if (const auto* r = std::get_if<RadiiBelow>(&v)) return "RadiiBelow(" + r->bound.get_str() + ")";
    return "Divergent";
}

/// Human-readable witness for the verdict.
inline std::string witness(const CoefficientStream& st, const ConvergenceVerdict& v) {
    const std::string law = "v(n) = " + st.a.get_str() + "n^2 + " + st.b.get_str() + "n + " + st.c.get_str();
    if (std::holds_alternative<AllRadii>(v))
        return law + "; v(n) - s n -> +inf for every s > 0 (quadratic term dominates)";
    if (const auto* r = std::get_if<RadiiBelow>(&v))
        return law + "; v(n) - s n -> +inf iff s < " + r->bound.get_str() + ", supremum of admissible s is " +
               r->bound.get_str();
    return law + "; the terms of degree n have norm p^{s n - ceil(v(n))}, unbounded for every s > 0";
}

/// All exponent vectors of total degree n in d variables, in lexicographic order.
inline std::vector<Monomial> monomials_of_degree(std::size_t d, std::uint32_t n) {
    std::vector<Monomial> out;
    if (d == 0) {
        if (n == 0) out.emplace_back();
        return out;
    }
    Monomial a(d, 0);
    auto rec = [&](auto&& self, std::size_t i, std::uint32_t left) -> void {
        if (i + 1 == d) {
            a[i] = left;
            out.push_back(a);
            return;
        }
        for (std::uint32_t e = left + 1; e-- > 0;) {
            a[i] = e;
            self(self, i + 1, left - e);
        }
    };
    rec(rec, 0, n);
    return out;
}

/// Finite approximant: every multi-index of total degree <= N.
inline UElement truncate(const CoefficientStream& st, std::uint32_t N, const Prime& p) {
    UElement u(st.dim);
    for (std::uint32_t n = 0; n <= N; ++n) {
        const Scalar coef = prime_power(p, st.valuation(n));
        for (auto& a : monomials_of_degree(st.dim, n)) u.add_term(a, coef);
    }
    return u;
}

/// Largest term norm in degree N at radius r, for N = 0..N_max.
inline std::vector<std::pair<std::uint32_t, LogNorm>> tail_norm_profile(const CoefficientStream& st, const Radius& r,
                                                                          std::uint32_t N_max) {
    std::vector<std::pair<std::uint32_t, LogNorm>> out;
    for (std::uint32_t n = 0; n <= N_max; ++n) {
        if (st.dim == 0 && n > 0) {
            out.emplace_back(n, LogNorm::bottom());
            continue;
        }
        out.emplace_back(n, LogNorm(r.s() * n - st.valuation(n)));
    }
    return out;
}

/// For a > 0: the least N0 with a(2N+1) + b >= s + 1 for all N >= N0, beyond
/// which the degree-N term norms at radius r strictly decrease.
inline std::uint32_t decay_onset(const CoefficientStream& st, const Radius& r) {
    if (st.a <= 0) throw std::domain_error("decay_onset needs a > 0");
    std::uint32_t n = 0;
    while (st.a * (2 * static_cast<long>(n) + 1) + st.b < r.s() + 1) ++n;
    return n;
}

}  // namespace hek

#endif  // HEK_COMPLETION_HPP
