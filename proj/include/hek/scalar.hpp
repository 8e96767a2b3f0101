#ifndef HEK_SCALAR_HPP
#define HEK_SCALAR_HPP

#include <gmpxx.h>

#include <cctype>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hek/error.hpp"

namespace hek {

/// Exact rational coefficient. The p-adic structure is supplied by an explicit
/// Prime at each call site; the value itself carries no prime.
using Scalar = mpq_class;
using Integer = mpz_class;

/// A prime number used as valuation context.
class Prime {
public:
    explicit Prime(std::uint64_t p) : value_(p) {
        if (!is_prime(p)) {
            throw InputError("not a prime: " + std::to_string(p));
        }
    }

    std::uint64_t value() const noexcept { return value_; }
    Integer as_integer() const { return Integer(static_cast<unsigned long>(value_)); }

    static bool is_prime(std::uint64_t n) noexcept {
        if (n < 2) return false;
        for (std::uint64_t d = 2; d * d <= n; ++d) {
            if (n % d == 0) return false;
        }
        return true;
    }

    friend bool operator==(const Prime&, const Prime&) = default;

private:
    std::uint64_t value_;
};

/// p-adic valuation of a nonzero integer.
inline long vp_integer(const Integer& n, const Prime& p) {
    if (n == 0) throw std::domain_error("vp_integer: zero");
    Integer m = abs(n);
    const Integer pz = p.as_integer();
    long v = 0;
    while (mpz_divisible_p(m.get_mpz_t(), pz.get_mpz_t())) {
        mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), pz.get_mpz_t());
        ++v;
    }
    return v;
}

/// Exact p-adic valuation; std::nullopt stands for +infinity (x = 0).
inline std::optional<long> vp(const Scalar& x, const Prime& p) {
    if (x == 0) return std::nullopt;
    return vp_integer(x.get_num(), p) - vp_integer(x.get_den(), p);
}

/// p^k as an exact rational, k of either sign.
inline Scalar prime_power(const Prime& p, long k) {
    Integer pk;
    mpz_pow_ui(pk.get_mpz_t(), p.as_integer().get_mpz_t(), static_cast<unsigned long>(k < 0 ? -k : k));
    return k >= 0 ? Scalar(pk) : Scalar(Integer(1), pk);
}

/// Render a rational as "n" or "n/d".
inline std::string to_string(const Scalar& x) { return x.get_str(); }

/// Parse "n", "-n", "n/d". Throws ParseError on malformed input or zero denominator.
inline Scalar parse_scalar(std::string_view text) {
    std::string s(text);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    if (s.empty()) throw ParseError("empty rational");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    bool seen_slash = false;
    bool digit_before = false;
    bool digit_after = false;
    for (; i < s.size(); ++i) {
        const char c = s[i];
        if (c == '/') {
            if (seen_slash || !digit_before) throw ParseError("malformed rational: " + s);
            seen_slash = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            (seen_slash ? digit_after : digit_before) = true;
        } else {
            throw ParseError("malformed rational: " + s);
        }
    }
    if (!digit_before || (seen_slash && !digit_after)) throw ParseError("malformed rational: " + s);
    if (s[0] == '+') s.erase(s.begin());
    Scalar q;
    if (q.set_str(s, 10) != 0) throw ParseError("malformed rational: " + s);
    if (q.get_den() == 0) throw ParseError("zero denominator: " + s);
    q.canonicalize();
    return q;
}

/// Element of the value group p^Q together with 0, stored on the log scale:
/// a rational exponent e meaning p^e, or bottom meaning 0.
class LogNorm {
public:
    LogNorm() = default;  // bottom
    explicit LogNorm(Scalar exponent) : exponent_(std::move(exponent)) { exponent_->canonicalize(); }

    static LogNorm bottom() { return {}; }

    bool is_bottom() const noexcept { return !exponent_.has_value(); }
    const Scalar& exponent() const {
        if (!exponent_) throw std::logic_error("LogNorm: bottom has no exponent");
        return *exponent_;
    }

    /// Product of norms: exponents add, bottom absorbs.
    friend LogNorm operator*(const LogNorm& a, const LogNorm& b) {
        if (a.is_bottom() || b.is_bottom()) return bottom();
        return LogNorm(*a.exponent_ + *b.exponent_);
    }

    friend bool operator==(const LogNorm& a, const LogNorm& b) {
        if (a.is_bottom() || b.is_bottom()) return a.is_bottom() == b.is_bottom();
        return *a.exponent_ == *b.exponent_;
    }

    friend std::strong_ordering operator<=>(const LogNorm& a, const LogNorm& b) {
        if (a.is_bottom() || b.is_bottom()) {
            return static_cast<int>(!a.is_bottom()) <=> static_cast<int>(!b.is_bottom());
        }
        const int c = cmp(*a.exponent_, *b.exponent_);
        return c <=> 0;
    }

    /// "p^2", "p^(3/2)", "0 (p^-inf)".
    std::string render() const {
        if (is_bottom()) return "0 (p^-inf)";
        if (exponent_->get_den() == 1) return "p^" + exponent_->get_str();
        return "p^(" + exponent_->get_str() + ")";
    }

    /// Exponent as string, "-inf" for bottom.
    std::string exponent_string() const { return is_bottom() ? "-inf" : exponent_->get_str(); }

private:
    std::optional<Scalar> exponent_;
};

inline LogNorm max(const LogNorm& a, const LogNorm& b) { return a < b ? b : a; }

/// Radius r = p^s > 1, held through its positive rational log s.
class Radius {
public:
    explicit Radius(Scalar s) : s_(std::move(s)) {
        s_.canonicalize();
        if (s_ <= 0) throw InputError("radius exponent must be positive, got " + s_.get_str());
    }
    const Scalar& s() const noexcept { return s_; }
    std::string render() const { return s_.get_str(); }

    friend bool operator==(const Radius&, const Radius&) = default;

private:
    Scalar s_;
};

/// |x| = p^{-v_p(x)}.
inline LogNorm norm_at(const Scalar& x, const Prime& p) {
    const auto v = vp(x, p);
    if (!v) return LogNorm::bottom();
    return LogNorm(Scalar(-*v));
}

/// |x| * r^degree.
inline LogNorm scaled_norm(const Scalar& x, long degree, const Radius& r, const Prime& p) {
    const auto v = vp(x, p);
    if (!v) return LogNorm::bottom();
    return LogNorm(Scalar(-*v) + r.s() * degree);
}

}  // namespace hek

#endif  // HEK_SCALAR_HPP
