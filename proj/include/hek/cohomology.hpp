#ifndef HEK_COHOMOLOGY_HPP
#define HEK_COHOMOLOGY_HPP

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "hek/complex.hpp"
#include "hek/error.hpp"
#include "hek/lie.hpp"
#include "hek/scalar.hpp"

namespace hek {

/// Rank by fraction-free (Bareiss) elimination. Rows are first scaled to
/// integers; every division in the elimination is exact.
inline std::size_t rank(const Matrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < cols; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
    }
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[r], a[piv]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                Integer t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                if (!mpz_divisible_p(t.get_mpz_t(), prev.get_mpz_t())) throw std::logic_error("Bareiss: inexact division");
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

/// Reduced row echelon basis of the null space {v : m v = 0}.
inline std::vector<std::vector<Scalar>> nullspace_basis(const Matrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    Matrix a = m;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a(piv, c) == 0) ++piv;
        if (piv == rows) continue;
        for (std::size_t j = 0; j < cols; ++j) std::swap(a(r, j), a(piv, j));
        const Scalar inv = 1 / a(r, c);
        for (std::size_t j = 0; j < cols; ++j) a(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a(i, c) == 0) continue;
            const Scalar f = a(i, c);
            for (std::size_t j = 0; j < cols; ++j) a(i, j) -= f * a(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    std::vector<std::vector<Scalar>> basis;
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Scalar> v(cols);
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a(i, free);
        basis.push_back(std::move(v));
    }
    // reduced row echelon form of the basis itself: distinct increasing leads, each 1
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < basis.size(); ++c) {
        std::size_t piv = row;
        while (piv < basis.size() && basis[piv][c] == 0) ++piv;
        if (piv == basis.size()) continue;
        std::swap(basis[row], basis[piv]);
        const Scalar inv = 1 / basis[row][c];
        for (auto& x : basis[row]) x *= inv;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (i == row || basis[i][c] == 0) continue;
            const Scalar f = basis[i][c];
            for (std::size_t j = 0; j < cols; ++j) basis[i][j] -= f * basis[row][j];
        }
        ++row;
    }
    return basis;
}

/// q-subsets of {0..d-1} as wedge masks in lexicographic order of index lists.
inline std::vector<Wedge> wedges_of_degree(std::size_t d, std::size_t q) {
    std::vector<Wedge> out;
    if (q > d) return out;
    std::vector<std::size_t> idx(q);
    for (std::size_t i = 0; i < q; ++i) idx[i] = i;
    while (true) {
        Wedge w = 0;
        for (auto i : idx) w |= Wedge{1} << i;
        out.push_back(w);
        std::size_t i = q;
        while (i > 0 && idx[i - 1] == d - q + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < q; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

namespace detail {

inline std::size_t wedge_position(const std::vector<Wedge>& ws, Wedge w) {
    auto it = std::find(ws.begin(), ws.end(), w);
    if (it == ws.end()) throw std::logic_error("wedge not in basis");
    return static_cast<std::size_t>(it - ws.begin());
}

inline void check_inputs(const LieAlgebra& g, const GModule& M) {
    if (M.action.size() != g.dim()) throw DimensionMismatch("module action count does not match algebra dimension");
    for (const auto& a : M.action)
        if (a.rows() != M.dim || a.cols() != M.dim) throw DimensionMismatch("module action matrix has wrong shape");
}

}  // namespace detail

/// dim Hom(Lambda^q g, M) = C(d,q) m.
inline std::size_t cochain_dimension(const LieAlgebra& g, const GModule& M, std::size_t q) {
    return wedges_of_degree(g.dim(), q).size() * M.dim;
}

/// d_q : Hom(Lambda^q g, M) -> Hom(Lambda^{q+1} g, M), basis (I, e_j) at index pos(I) m + j,
/// (dc)(x_{i0}^..^x_{iq}) = sum_s (-1)^s rho(x_is) c(..^s..) + sum_{s<t} (-1)^{s+t} c([x_is,x_it]^..^s..^t..).
inline Matrix cochain_differential(const LieAlgebra& g, const GModule& M, std::size_t q) {
    detail::check_inputs(g, M);
    const std::size_t d = g.dim(), m = M.dim;
    const auto src = wedges_of_degree(d, q);
    const auto dst = wedges_of_degree(d, q + 1);
    Matrix out(dst.size() * m, src.size() * m);
    for (std::size_t row = 0; row < dst.size(); ++row) {
        const auto idx = wedge_indices(dst[row]);
        for (std::size_t s = 0; s < idx.size(); ++s) {
            const Scalar sign = (s % 2 == 0) ? Scalar(1) : Scalar(-1);
            const std::size_t col = detail::wedge_position(src, dst[row] & ~(Wedge{1} << idx[s]));
            const Matrix& rho = M.rho(idx[s]);
            for (std::size_t a = 0; a < m; ++a)
                for (std::size_t b = 0; b < m; ++b)
                    if (rho(a, b) != 0) out(row * m + a, col * m + b) += sign * rho(a, b);
        }
        for (std::size_t s = 0; s < idx.size(); ++s) {
            for (std::size_t t = s + 1; t < idx.size(); ++t) {
                const Scalar sign = ((s + t) % 2 == 0) ? Scalar(1) : Scalar(-1);
                const Wedge rest = dst[row] & ~(Wedge{1} << idx[s]) & ~(Wedge{1} << idx[t]);
                for (const auto& [l, v] : g.bracket(idx[s], idx[t])) {
                    const int ws = wedge_insert_sign(rest, l);
                    if (ws == 0) continue;
                    const std::size_t col = detail::wedge_position(src, rest | (Wedge{1} << l));
                    for (std::size_t a = 0; a < m; ++a) out(row * m + a, col * m + a) += sign * v * ws;
                }
            }
        }
    }
    return out;
}

/// del_q : M (x) Lambda^q g -> M (x) Lambda^{q-1} g, using the right action
/// m.x = -rho(x) m in M (x)_U (U (x) Lambda g).
inline Matrix chain_differential(const LieAlgebra& g, const GModule& M, std::size_t q) {
    detail::check_inputs(g, M);
    const std::size_t d = g.dim(), m = M.dim;
    const auto src = wedges_of_degree(d, q);
    const auto dst = q == 0 ? std::vector<Wedge>{} : wedges_of_degree(d, q - 1);
    Matrix out(dst.size() * m, src.size() * m);
    for (std::size_t col = 0; col < src.size(); ++col) {
        const auto idx = wedge_indices(src[col]);
        for (std::size_t s = 0; s < idx.size(); ++s) {
            // (-1)^{(s+1)+1} for 1-based position s+1, times the minus sign of the right action
            const Scalar sign = (s % 2 == 0) ? Scalar(-1) : Scalar(1);
            const std::size_t row = detail::wedge_position(dst, src[col] & ~(Wedge{1} << idx[s]));
            const Matrix& rho = M.rho(idx[s]);
            for (std::size_t a = 0; a < m; ++a)
                for (std::size_t b = 0; b < m; ++b)
                    if (rho(a, b) != 0) out(row * m + a, col * m + b) += sign * rho(a, b);
        }
        for (std::size_t s = 0; s < idx.size(); ++s) {
            for (std::size_t t = s + 1; t < idx.size(); ++t) {
                const Scalar sign = ((s + t) % 2 == 0) ? Scalar(1) : Scalar(-1);
                const Wedge rest = src[col] & ~(Wedge{1} << idx[s]) & ~(Wedge{1} << idx[t]);
                for (const auto& [l, v] : g.bracket(idx[s], idx[t])) {
                    const int ws = wedge_insert_sign(rest, l);
                    if (ws == 0) continue;
                    const std::size_t row = detail::wedge_position(dst, rest | (Wedge{1} << l));
                    for (std::size_t b = 0; b < m; ++b) out(row * m + b, col * m + b) += sign * v * ws;
                }
            }
        }
    }
    return out;
}

/// Dimensions of (co)homology in degrees 0..d.
struct BettiTable {
    std::vector<std::size_t> betti;

    long euler_characteristic() const {
        long e = 0;
        for (std::size_t q = 0; q < betti.size(); ++q) e += (q % 2 == 0 ? 1 : -1) * static_cast<long>(betti[q]);
        return e;
    }
    bool operator==(const BettiTable&) const = default;
};

/// H^q(g, M) = dim ker d_q - rank d_{q-1}.
inline BettiTable lie_cohomology(const LieAlgebra& g, const GModule& M) {
    const std::size_t d = g.dim();
    std::vector<std::size_t> ranks(d + 1);
    for (std::size_t q = 0; q < d; ++q) ranks[q] = rank(cochain_differential(g, M, q));
    BettiTable t;
    for (std::size_t q = 0; q <= d; ++q) {
        const std::size_t prev = q == 0 ? 0 : ranks[q - 1];
        t.betti.push_back(cochain_dimension(g, M, q) - ranks[q] - prev);
    }
    return t;
}

/// H_q(g, M) = dim ker del_q - rank del_{q+1}.
inline BettiTable lie_homology(const LieAlgebra& g, const GModule& M) {
    const std::size_t d = g.dim();
    std::vector<std::size_t> ranks(d + 2, 0);
    for (std::size_t q = 1; q <= d; ++q) ranks[q] = rank(chain_differential(g, M, q));
    BettiTable t;
    for (std::size_t q = 0; q <= d; ++q) t.betti.push_back(cochain_dimension(g, M, q) - ranks[q] - ranks[q + 1]);
    return t;
}

/// Kernel of d_q in reduced echelon form, coordinates in the cochain basis.
inline std::vector<std::vector<Scalar>> cocycle_basis(const LieAlgebra& g, const GModule& M, std::size_t q) {
    return nullspace_basis(cochain_differential(g, M, q));
}

/// Hom(M, N) with (x.f) = rho_N(x) f - f rho_M(x); f(a, b) sits at index a m_M + b.
inline GModule hom_module(const LieAlgebra& g, const GModule& M, const GModule& N) {
    detail::check_inputs(g, M);
    detail::check_inputs(g, N);
    const std::size_t mm = M.dim, mn = N.dim;
    GModule out{mn * mm, {}};
    for (std::size_t i = 0; i < g.dim(); ++i) {
        Matrix act(mn * mm, mn * mm);
        for (std::size_t a = 0; a < mn; ++a)
            for (std::size_t b = 0; b < mm; ++b) {
                for (std::size_t a2 = 0; a2 < mn; ++a2) act(a * mm + b, a2 * mm + b) += N.rho(i)(a, a2);
                for (std::size_t b2 = 0; b2 < mm; ++b2) act(a * mm + b, a * mm + b2) -= M.rho(i)(b2, b);
            }
        out.action.push_back(std::move(act));
    }
    return out;
}

/// M (x) N with the diagonal action rho_M (x) 1 + 1 (x) rho_N; index a m_N + b.
inline GModule tensor_module(const LieAlgebra& g, const GModule& M, const GModule& N) {
    detail::check_inputs(g, M);
    detail::check_inputs(g, N);
    const std::size_t mm = M.dim, mn = N.dim;
    GModule out{mm * mn, {}};
    for (std::size_t i = 0; i < g.dim(); ++i) {
        Matrix act(mm * mn, mm * mn);
        for (std::size_t a = 0; a < mm; ++a)
            for (std::size_t b = 0; b < mn; ++b) {
                for (std::size_t a2 = 0; a2 < mm; ++a2) act(a * mn + b, a2 * mn + b) += M.rho(i)(a, a2);
                for (std::size_t b2 = 0; b2 < mn; ++b2) act(a * mn + b, a * mn + b2) += N.rho(i)(b, b2);
            }
        out.action.push_back(std::move(act));
    }
    return out;
}

/// Ext^*_U(M, N) = H^*(g, Hom(M, N)).
inline BettiTable lie_ext(const LieAlgebra& g, const GModule& M, const GModule& N) {
    return lie_cohomology(g, hom_module(g, M, N));
}

/// Tor^U_*(M, N) = H_*(g, M (x) N), M turned into a right module by the antipode.
inline BettiTable lie_tor(const LieAlgebra& g, const GModule& M, const GModule& N) {
    return lie_homology(g, tensor_module(g, M, N));
}

}  // namespace hek

#endif  // HEK_COHOMOLOGY_HPP
