#include <random>

#include <gtest/gtest.h>

#include "hek/completion.hpp"

using hek::CoefficientStream;
using hek::LogNorm;
using hek::Prime;
using hek::Radius;
using hek::Scalar;

namespace {

CoefficientStream stream(Scalar a, Scalar b, Scalar c, std::size_t d = 2) { return {a, b, c, d}; }

// v(n) - s n pushed to +infinity, judged from degrees 30 and 50.
bool diverges_upward(const CoefficientStream& st, const Scalar& s) {
    const auto g = [&](long n) -> Scalar { return Scalar(st.valuation(n)) - s * n; };
    return g(50) - g(30) >= 2;
}

Scalar quarter(std::mt19937_64& rng, int lo, int hi) {
    return Scalar(std::uniform_int_distribution<int>(4 * lo, 4 * hi)(rng), 4);
}

}  // namespace

TEST(Classify, CanonicalStreams) {
    EXPECT_EQ(hek::classify(stream(1, 0, 0)), hek::ConvergenceVerdict(hek::AllRadii{}));
    EXPECT_EQ(hek::classify(stream(0, 2, 0)), hek::ConvergenceVerdict(hek::RadiiBelow{Scalar(2)}));
    EXPECT_EQ(hek::classify(stream(0, 0, 0)), hek::ConvergenceVerdict(hek::Divergent{}));
    EXPECT_EQ(hek::classify(stream(-1, 5, 0)), hek::ConvergenceVerdict(hek::Divergent{}));
    EXPECT_EQ(hek::classify(stream(0, -1, 0)), hek::ConvergenceVerdict(hek::Divergent{}));
}

TEST(Classify, MatchesBruteForceOracle) {
    std::mt19937_64 rng(23);
    const std::vector<Scalar> radii = {Scalar(1, 4), Scalar(1, 2), Scalar(1), Scalar(2), Scalar(4)};
    for (int t = 0; t < 100; ++t) {
        const Scalar a = (rng() % 3 == 0) ? Scalar(0) : quarter(rng, 0, 3);
        const auto st = stream(a, quarter(rng, -3, 3), quarter(rng, -3, 3));
        const auto v = hek::classify(st);
        for (const auto& s : radii)
            EXPECT_EQ(hek::converges_at(v, s), diverges_upward(st, s)) << hek::describe(v) << " at s=" << s;
    }
}

TEST(Classify, InvariantUnderConstant) {
    std::mt19937_64 rng(24);
    for (int t = 0; t < 100; ++t) {
        const Scalar a = quarter(rng, 0, 3), b = quarter(rng, -3, 3);
        const auto v = hek::classify(stream(a, b, quarter(rng, -3, 3)));
        EXPECT_EQ(hek::classify(stream(a, b, quarter(rng, -3, 3))), v);
        EXPECT_EQ(hek::classify(stream(0, b, quarter(rng, -3, 3))), hek::classify(stream(0, b, 0)));
    }
}

TEST(Truncate, Examples) {
    const Prime p(2);
    EXPECT_EQ(hek::truncate(stream(1, 0, Scalar(1, 2), 3), 0, p), hek::UElement::constant(3, Scalar(2)));
    const auto u = hek::truncate(stream(1, 0, Scalar(1, 3), 1), 2, p);
    EXPECT_EQ(u.coefficient({0}), 2);
    EXPECT_EQ(u.coefficient({1}), 4);
    EXPECT_EQ(u.coefficient({2}), 32);
    EXPECT_EQ(u.size(), 3u);
    const auto w = hek::truncate(stream(0, -1, 0, 2), 2, Prime(3));
    EXPECT_EQ(w.size(), 6u);
    EXPECT_EQ(w.coefficient({1, 1}), Scalar(1, 9));
}

TEST(Monomials, CountMatchesBinomial) {
    EXPECT_EQ(hek::monomials_of_degree(3, 4).size(), 15u);
    EXPECT_EQ(hek::monomials_of_degree(1, 7).size(), 1u);
    EXPECT_EQ(hek::monomials_of_degree(0, 0).size(), 1u);
    EXPECT_TRUE(hek::monomials_of_degree(0, 2).empty());
}

TEST(TailProfile, Regimes) {
    const Radius r3(Scalar(3));
    const auto below = hek::tail_norm_profile(stream(0, 2, 0), r3, 20);
    for (std::size_t i = 0; i + 1 < below.size(); ++i) EXPECT_LT(below[i].second, below[i + 1].second);
    const auto div = hek::tail_norm_profile(stream(0, 0, 0), Radius(Scalar(1, 2)), 20);
    for (const auto& [n, e] : div) EXPECT_EQ(e, LogNorm(Scalar(n, 2)));
    const auto all = hek::tail_norm_profile(stream(1, 0, 0), Radius(Scalar(4)), 40);
    EXPECT_LT(all.back().second, LogNorm(Scalar(-1000)));
}

TEST(TailProfile, DecayBeyondOnset) {
    std::mt19937_64 rng(25);
    for (int t = 0; t < 100; ++t) {
        const auto st = stream(quarter(rng, 0, 3) + Scalar(1, 4), quarter(rng, -3, 3), quarter(rng, -3, 3));
        const Radius r(Scalar(std::uniform_int_distribution<int>(1, 16)(rng), 4));
        const auto n0 = hek::decay_onset(st, r);
        const auto prof = hek::tail_norm_profile(st, r, n0 + 30);
        for (std::size_t n = n0; n + 1 < prof.size(); ++n) ASSERT_LT(prof[n + 1].second, prof[n].second);
    }
}

TEST(Truncate, CauchyForAllRadiiStreams) {
    const Prime p(2);
    const auto st = stream(1, -2, 0, 2);
    for (const auto& s : {Scalar(1, 2), Scalar(2), Scalar(5)}) {
        const Radius r(s);
        const auto n0 = hek::decay_onset(st, r);
        LogNorm prev = hek::gauss_norm(hek::truncate(st, n0 + 1, p) - hek::truncate(st, n0, p), r, p);
        for (std::uint32_t n = n0 + 1; n < n0 + 12; ++n) {
            const LogNorm step = hek::gauss_norm(hek::truncate(st, n + 1, p) - hek::truncate(st, n, p), r, p);
            EXPECT_LT(step, prev);
            prev = step;
        }
    }
}
