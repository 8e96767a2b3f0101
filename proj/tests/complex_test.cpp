#include <random>

#include <gtest/gtest.h>

#include "hek/complex.hpp"
#include "hek/io.hpp"
#include "hek/verify.hpp"

using hek::ChainElement;
using hek::LogNorm;
using hek::Monomial;
using hek::Prime;
using hek::Radius;
using hek::Scalar;
using hek::Side;
using hek::StandardComplex;
using hek::UAlgebra;
using hek::Wedge;

namespace {

ChainElement chain(std::size_t d, Wedge w, Monomial a, long c = 1, Side side = Side::U) {
    return ChainElement::basis(d, side, w, std::move(a), Scalar(c));
}

// Lowest occupied variable moves from the polynomial part into the wedge; zero
// if that variable is already a wedge factor.
ChainElement lowest_index_homotopy(const ChainElement& x) {
    ChainElement out(x.dim(), Side::S);
    for (const auto& [k, c] : x.terms()) {
        for (std::size_t v = 0; v < x.dim(); ++v) {
            if (k.wedge & (Wedge{1} << v)) break;
            if (k.alpha[v] > 0) {
                Monomial a = k.alpha;
                --a[v];
                out.add_term(k.wedge | (Wedge{1} << v), a, c);
                break;
            }
        }
    }
    return out;
}

const std::vector<std::string> kPresets = {"abelian(1)", "abelian(3)", "heisenberg", "sl2", "borel2"};

}  // namespace

TEST(Phi, Examples) {
    const UAlgebra U(hek::presets::abelian(2));
    EXPECT_EQ(hek::phi(chain(2, 0b01, {0, 0}), &U), chain(2, 0, {1, 0}));
    EXPECT_TRUE(hek::phi(chain(2, 0, {3, 1}), &U).is_zero());
    EXPECT_EQ(hek::phi(chain(2, 0b01, {0, 1}, 1, Side::S), nullptr), chain(2, 0, {1, 1}, 1, Side::S));
}

TEST(Psi, Examples) {
    const auto h = hek::presets::heisenberg();
    EXPECT_EQ(hek::psi(chain(3, 0b011, {0, 0, 0}), h), chain(3, 0b100, {0, 0, 0}, -1));
    EXPECT_EQ(hek::psi(chain(3, 0b101, {0, 0, 0}), hek::presets::sl2()), chain(3, 0b010, {0, 0, 0}, -1));
    EXPECT_TRUE(hek::psi(chain(3, 0b111, {1, 2, 0}), hek::presets::abelian(3)).is_zero());
}

TEST(Differential, HeisenbergExample) {
    const StandardComplex C(hek::presets::heisenberg());
    const ChainElement x = chain(3, 0b011, {0, 0, 0});
    const ChainElement expected = chain(3, 0b100, {0, 0, 0}, -1) + chain(3, 0b010, {1, 0, 0}) + chain(3, 0b001, {0, 1, 0}, -1);
    EXPECT_EQ(C.d(x), expected);
    EXPECT_TRUE(C.d(C.d(x)).is_zero());
    EXPECT_TRUE(C.d(chain(3, 0, {2, 1, 0})).is_zero());
}

TEST(Differential, SquaresToZero) {
    const Prime p(3);
    for (const auto& name : kPresets) {
        const StandardComplex C(hek::preset(name));
        std::mt19937_64 rng(5);
        for (int i = 0; i < 60; ++i) {
            const ChainElement x = hek::random_chain(rng, C.dim(), Side::U, 3, p);
            ASSERT_TRUE(C.d(C.d(x)).is_zero()) << name << ": " << hek::render(x);
            const ChainElement y = hek::pbw_iso(x);
            ASSERT_TRUE(hek::phi(hek::phi(y, nullptr), nullptr).is_zero());
        }
    }
}

TEST(Differential, NormDecreasing) {
    const Prime p(2);
    for (const auto& name : kPresets) {
        const StandardComplex C(hek::preset(name));
        std::mt19937_64 rng(6);
        for (int i = 0; i < 60; ++i) {
            const ChainElement x = hek::random_chain(rng, C.dim(), Side::U, 3, p);
            for (const auto& s : {Scalar(1, 2), Scalar(1), Scalar(3)}) {
                const Radius r(s);
                EXPECT_LE(hek::chain_norm(C.d(x), r, p), hek::chain_norm(x, r, p));
            }
        }
    }
}

TEST(ChainNorm, Examples) {
    const Prime p(2);
    const Radius one(Scalar(1));
    EXPECT_EQ(hek::chain_norm(chain(2, 0b01, {1, 0}), one, p), LogNorm(Scalar(2)));
    EXPECT_TRUE(hek::chain_norm(ChainElement(2, Side::U), one, p).is_bottom());
    EXPECT_EQ(hek::chain_norm(chain(2, 0, {1, 0}) + chain(2, 0b11, {0, 0}), one, p), LogNorm(Scalar(2)));
}

TEST(Augmentation, Examples) {
    EXPECT_EQ(hek::augmentation(hek::unit(3, Scalar(5))), 5);
    EXPECT_EQ(hek::augmentation(chain(3, 0, {1, 0, 0})), 0);
    EXPECT_EQ(hek::augmentation(hek::unit(3, Scalar(3)) + chain(3, 0, {0, 0, 1})), 3);
    EXPECT_THROW(hek::augmentation(chain(3, 0b1, {0, 0, 0})), hek::NonZeroDegreeInput);
}

TEST(PbwIso, RoundTripAndIsometry) {
    const ChainElement x = chain(2, 0b01, {1, 1});
    EXPECT_EQ(hek::pbw_iso(x), chain(2, 0b01, {1, 1}, 1, Side::S));
    EXPECT_EQ(hek::pbw_iso_inv(hek::pbw_iso(x)), x);
    const Prime p(5);
    std::mt19937_64 rng(8);
    for (int i = 0; i < 50; ++i) {
        const ChainElement y = hek::random_chain(rng, 3, Side::U, 4, p);
        EXPECT_EQ(hek::pbw_iso_inv(hek::pbw_iso(y)), y);
        EXPECT_EQ(hek::chain_norm(hek::pbw_iso(y), Radius(Scalar(2)), p), hek::chain_norm(y, Radius(Scalar(2)), p));
    }
}

TEST(KoszulHomotopy, Examples) {
    for (std::uint32_t n = 1; n <= 5; ++n)
        EXPECT_EQ(hek::koszul_homotopy(chain(1, 0, {n}, 1, Side::S)), chain(1, 0b1, {n - 1}, 1, Side::S));
    EXPECT_TRUE(hek::koszul_homotopy(hek::unit(1, Scalar(1), Side::S)).is_zero());
    EXPECT_EQ(hek::koszul_homotopy(chain(2, 0, {1, 1}, 1, Side::S)), chain(2, 0b01, {0, 1}, 1, Side::S));
    EXPECT_EQ(hek::koszul_homotopy(chain(2, 0b10, {1, 0}, 1, Side::S)), chain(2, 0b11, {0, 0}, 1, Side::S));
    EXPECT_THROW(hek::koszul_homotopy(chain(2, 0, {1, 0})), hek::DimensionMismatch);
}

TEST(KoszulHomotopy, LowestIndexClosedForm) {
    for (std::size_t d = 1; d <= 4; ++d)
        for (const auto& [w, a] : hek::basis_chains(d, 4)) {
            const ChainElement y = chain(d, w, a, 1, Side::S);
            ASSERT_EQ(hek::koszul_homotopy(y), lowest_index_homotopy(y));
        }
}

TEST(KoszulHomotopy, Contracts) {
    for (std::size_t d = 1; d <= 4; ++d)
        for (const auto& [w, a] : hek::basis_chains(d, 4)) {
            const ChainElement y = chain(d, w, a, 1, Side::S);
            const ChainElement lhs = hek::phi(hek::koszul_homotopy(y), nullptr) + hek::koszul_homotopy(hek::phi(y, nullptr));
            ASSERT_EQ(lhs, y - hek::eta_epsilon(y)) << hek::render(y);
            ASSERT_TRUE(hek::koszul_homotopy(hek::koszul_homotopy(y)).is_zero());
        }
}

TEST(Sigma, Examples) {
    EXPECT_EQ(hek::sigma(chain(3, 0, {0, 0, 1})), chain(3, 0b100, {0, 0, 0}));
    EXPECT_TRUE(hek::sigma(hek::unit(3, Scalar(7))).is_zero());
}

TEST(Homotopy, AbelianEqualsSigma) {
    const StandardComplex C(hek::presets::abelian(2));
    EXPECT_EQ(C.homotopy(chain(2, 0, {1, 1})), chain(2, 0b01, {0, 1}));
    const Prime p(3);
    std::mt19937_64 rng(9);
    for (int i = 0; i < 30; ++i) {
        const ChainElement x = hek::random_chain(rng, 2, Side::U, 4, p);
        const auto tr = C.trace(x);
        EXPECT_EQ(tr.stationary_index(), 0);
        EXPECT_EQ(tr.result(), hek::sigma(x));
    }
}

TEST(Homotopy, UnitIsContracted) {
    const StandardComplex C(hek::presets::sl2());
    const ChainElement u = hek::unit(3, Scalar(4));
    EXPECT_TRUE(C.homotopy(u).is_zero());
    EXPECT_EQ(C.trace(u).steps.back().defect, ChainElement(3, Side::U));
}

TEST(Homotopy, HeisenbergTrace) {
    const StandardComplex C(hek::presets::heisenberg());
    const auto tr = C.trace(chain(3, 0b011, {0, 0, 0}));
    EXPECT_EQ(tr.stationary_index(), 0);
    EXPECT_TRUE(tr.result().is_zero());
}

TEST(Homotopy, ContractsAndMatchesSeries) {
    const Prime p(2);
    for (const auto& name : kPresets) {
        const StandardComplex C(hek::preset(name));
        std::mt19937_64 rng(10);
        for (int i = 0; i < 40; ++i) {
            const ChainElement x = hek::random_chain(rng, C.dim(), Side::U, 3, p);
            const auto tr = C.trace(x);
            const ChainElement& s = tr.result();
            ASSERT_EQ(C.d(s) + C.homotopy(C.d(x)), x - hek::eta_epsilon(x)) << name << ": " << hek::render(x);
            EXPECT_EQ(C.homotopy_series(x), s);
            EXPECT_LE(tr.stationary_index(), x.max_weight() + 1);
            for (const auto& r : {Scalar(1, 2), Scalar(1), Scalar(2)})
                EXPECT_LE(hek::chain_norm(s, Radius(r), p), hek::chain_norm(x, Radius(r), p));
        }
    }
}

TEST(Homotopy, IterationCapRaises) {
    const StandardComplex C(hek::presets::sl2());
    // find an input whose iteration needs at least one correction step
    std::mt19937_64 rng(11);
    const Prime p(2);
    for (int i = 0; i < 200; ++i) {
        const ChainElement x = hek::random_chain(rng, 3, Side::U, 3, p);
        if (C.trace(x).stationary_index() > 0) {
            EXPECT_THROW(C.trace(x, 0), hek::NonStationary);
            return;
        }
    }
    GTEST_SKIP() << "no input needing a correction step";
}
