#include <random>

#include <gtest/gtest.h>

#include "hek/cohomology.hpp"
#include "hek/io.hpp"

using hek::BettiTable;
using hek::Matrix;
using hek::Scalar;

namespace {

// Textbook elimination over the rationals, kept independent of the Bareiss code.
std::size_t rational_rank(Matrix a) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t piv = r;
        while (piv < a.rows() && a(piv, c) == 0) ++piv;
        if (piv == a.rows()) continue;
        for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(piv, j));
        for (std::size_t i = r + 1; i < a.rows(); ++i) {
            const Scalar f = a(i, c) / a(r, c);
            for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
        }
        ++r;
    }
    return r;
}

Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, std::size_t rank_bound) {
    std::uniform_int_distribution<int> entry(-4, 4);
    Matrix l(rows, rank_bound), r(rank_bound, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < rank_bound; ++k) l(i, k) = Scalar(entry(rng), 1 + (entry(rng) + 4) % 3);
    for (std::size_t k = 0; k < rank_bound; ++k)
        for (std::size_t j = 0; j < cols; ++j) r(k, j) = entry(rng);
    return l * r;
}

BettiTable table(std::vector<std::size_t> b) { return BettiTable{std::move(b)}; }

std::size_t choose(std::size_t n, std::size_t k) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

}  // namespace

TEST(Rank, MatchesRationalElimination) {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 300; ++t) {
        const std::size_t rows = 1 + rng() % 7, cols = 1 + rng() % 7, k = rng() % 6;
        const Matrix m = random_matrix(rng, rows, cols, k);
        ASSERT_EQ(hek::rank(m), rational_rank(m));
        EXPECT_LE(hek::rank(m), k);
    }
    EXPECT_EQ(hek::rank(Matrix(3, 4)), 0u);
    EXPECT_EQ(hek::rank(Matrix::identity(5)), 5u);
}

TEST(Nullspace, EchelonBasisOfKernel) {
    std::mt19937_64 rng(14);
    for (int t = 0; t < 100; ++t) {
        const std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 6;
        const Matrix m = random_matrix(rng, rows, cols, rng() % 4);
        const auto basis = hek::nullspace_basis(m);
        ASSERT_EQ(basis.size(), cols - hek::rank(m));
        std::size_t last_lead = 0;
        for (std::size_t b = 0; b < basis.size(); ++b) {
            Matrix v(cols, 1);
            for (std::size_t j = 0; j < cols; ++j) v(j, 0) = basis[b][j];
            EXPECT_TRUE((m * v).is_zero());
            std::size_t lead = 0;
            while (basis[b][lead] == 0) ++lead;
            EXPECT_EQ(basis[b][lead], 1);
            if (b > 0) {
                EXPECT_GT(lead, last_lead);
            }
            last_lead = lead;
        }
    }
}

TEST(CochainDifferential, Examples) {
    const auto ab = hek::presets::abelian(3);
    for (std::size_t q = 0; q < 3; ++q) EXPECT_TRUE(hek::cochain_differential(ab, hek::trivial_module(ab), q).is_zero());
    const auto sl2 = hek::presets::sl2();
    EXPECT_EQ(hek::rank(hek::cochain_differential(sl2, hek::trivial_module(sl2), 1)), 3u);
}

TEST(Betti, Examples) {
    const auto sl2 = hek::presets::sl2();
    const auto h = hek::presets::heisenberg();
    EXPECT_EQ(hek::lie_cohomology(sl2, hek::trivial_module(sl2)), table({1, 0, 0, 1}));
    EXPECT_EQ(hek::lie_cohomology(h, hek::trivial_module(h)), table({1, 2, 2, 1}));
    EXPECT_EQ(hek::lie_homology(sl2, hek::trivial_module(sl2)), table({1, 0, 0, 1}));
    EXPECT_EQ(hek::lie_homology(sl2, hek::adjoint_module(sl2)), table({0, 0, 0, 0}));
    EXPECT_EQ(hek::lie_cohomology(sl2, hek::adjoint_module(sl2)), table({0, 0, 0, 0}));
    const auto b = hek::presets::borel2();
    EXPECT_EQ(hek::lie_cohomology(b, hek::trivial_module(b)), table({1, 1, 0}));
    for (std::size_t d = 1; d <= 4; ++d) {
        const auto ab = hek::presets::abelian(d);
        std::vector<std::size_t> row;
        for (std::size_t q = 0; q <= d; ++q) row.push_back(choose(d, q));
        EXPECT_EQ(hek::lie_cohomology(ab, hek::trivial_module(ab)), table(row));
        EXPECT_EQ(hek::lie_homology(ab, hek::trivial_module(ab)), table(row));
    }
}

TEST(Betti, Sl2StandardRepresentationIsAcyclic) {
    const auto g = hek::presets::sl2();
    const auto V = hek::load_module(g, HEK_DATA_DIR "/sl2_standard.json");
    EXPECT_FALSE(hek::validate_module(g, V).has_value());
    EXPECT_EQ(hek::lie_cohomology(g, V), table({0, 0, 0, 0}));
    EXPECT_EQ(hek::lie_homology(g, V), table({0, 0, 0, 0}));
}

TEST(HomModule, Examples) {
    const auto g = hek::presets::sl2();
    const auto ad = hek::adjoint_module(g);
    const auto triv = hek::trivial_module(g);
    const auto hom1 = hek::hom_module(g, triv, ad);
    for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(hom1.rho(i), ad.rho(i));
    const auto hom2 = hek::hom_module(g, ad, triv);
    for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(hom2.rho(i), Scalar(-1) * ad.rho(i).transpose());
    const auto end = hek::hom_module(g, ad, ad);
    EXPECT_FALSE(hek::validate_module(g, end).has_value());
    EXPECT_EQ(hek::lie_cohomology(g, end).betti.at(0), 1u);
    EXPECT_EQ(hek::lie_ext(g, ad, ad).betti.at(0), 1u);
}

TEST(TensorModule, ValidatesAndTorOfTrivials) {
    const auto h = hek::presets::heisenberg();
    const auto ad = hek::adjoint_module(h);
    EXPECT_FALSE(hek::validate_module(h, hek::tensor_module(h, ad, ad)).has_value());
    const auto triv = hek::trivial_module(h);
    EXPECT_EQ(hek::lie_tor(h, triv, triv), hek::lie_homology(h, triv));
    EXPECT_EQ(hek::lie_ext(h, triv, triv), hek::lie_cohomology(h, triv));
}

TEST(Invariants, DifferentialsSquareToZero) {
    for (const auto& name : hek::preset_names()) {
        const auto g = hek::preset(name);
        for (const auto& M : {hek::trivial_module(g), hek::adjoint_module(g), hek::hom_module(g, hek::adjoint_module(g), hek::adjoint_module(g))}) {
            for (std::size_t q = 0; q + 1 < g.dim(); ++q)
                EXPECT_TRUE((hek::cochain_differential(g, M, q + 1) * hek::cochain_differential(g, M, q)).is_zero()) << name << " q=" << q;
            for (std::size_t q = 2; q <= g.dim(); ++q)
                EXPECT_TRUE((hek::chain_differential(g, M, q - 1) * hek::chain_differential(g, M, q)).is_zero()) << name << " q=" << q;
        }
    }
}

TEST(Invariants, EulerCharacteristicAndDuality) {
    for (const auto& name : hek::preset_names()) {
        const auto g = hek::preset(name);
        const auto triv = hek::trivial_module(g);
        const BettiTable c = hek::lie_cohomology(g, triv);
        EXPECT_EQ(c.euler_characteristic(), 0) << name;
        EXPECT_EQ(hek::lie_cohomology(g, hek::adjoint_module(g)).euler_characteristic(), 0) << name;
        EXPECT_EQ(hek::lie_homology(g, hek::adjoint_module(g)).euler_characteristic(), 0) << name;
        EXPECT_EQ(hek::lie_homology(g, triv), c) << name;
        EXPECT_EQ(c.betti.at(0), 1u);
        Matrix bracket(g.dim(), g.dim() * g.dim());
        for (std::size_t i = 0; i < g.dim(); ++i)
            for (std::size_t j = 0; j < g.dim(); ++j)
                for (std::size_t k = 0; k < g.dim(); ++k) bracket(k, i * g.dim() + j) = g.c(i, j, k);
        EXPECT_EQ(c.betti.at(1), g.dim() - hek::rank(bracket)) << name;
    }
    for (const auto& name : {"abelian(3)", "heisenberg", "sl2"}) {
        const auto g = hek::preset(name);
        auto b = hek::lie_cohomology(g, hek::trivial_module(g)).betti;
        EXPECT_TRUE(std::equal(b.begin(), b.end(), b.rbegin())) << name;
    }
}

TEST(Cocycles, BasisSpansKernel) {
    const auto h = hek::presets::heisenberg();
    const auto triv = hek::trivial_module(h);
    const auto z1 = hek::cocycle_basis(h, triv, 1);
    // Z^1 = H^1 here (no coboundaries from degree 0), dual to span{x1, x2}
    ASSERT_EQ(z1.size(), 2u);
    EXPECT_EQ(z1[0], (std::vector<Scalar>{1, 0, 0}));
    EXPECT_EQ(z1[1], (std::vector<Scalar>{0, 1, 0}));
}

TEST(Cohomology, RejectsMismatchedModule) {
    const auto g = hek::presets::sl2();
    const auto bad = hek::trivial_module(hek::presets::abelian(2));
    EXPECT_THROW(hek::lie_cohomology(g, bad), hek::DimensionMismatch);
}
