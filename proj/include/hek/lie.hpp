#ifndef HEK_LIE_HPP
#define HEK_LIE_HPP

#include <cstddef>
#include <optional>
#include <string_view>
#include <string>
#include <utility>
#include <vector>

#include "hek/error.hpp"
#include "hek/scalar.hpp"

namespace hek {

/// Finite-dimensional Lie algebra given by an ordered basis x_1..x_d and
/// structure constants [x_i, x_j] = sum_k c(i,j,k) x_k. Indices are 0-based
/// in the API and 1-based in files and messages.
///
/// The basis order is the PBW order used everywhere downstream.
class LieAlgebra {
public:
    LieAlgebra() = default;
    explicit LieAlgebra(std::size_t dim, std::vector<std::string> names = {})
        : dim_(dim), constants_(dim * dim * dim), names_(std::move(names)) {
        if (names_.empty()) {
            for (std::size_t i = 0; i < dim_; ++i) names_.push_back("x" + std::to_string(i + 1));
        }
        if (names_.size() != dim_) throw InputError("generator name count does not match dimension");
    }

    std::size_t dim() const noexcept { return dim_; }
    const std::vector<std::string>& names() const noexcept { return names_; }

    const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const { return constants_[index(i, j, k)]; }
    void set(std::size_t i, std::size_t j, std::size_t k, Scalar value) { constants_[index(i, j, k)] = std::move(value); }

    /// Sets [x_i, x_j] = sum coeffs and [x_j, x_i] to the negative.
    void set_bracket(std::size_t i, std::size_t j, const std::vector<std::pair<std::size_t, Scalar>>& coeffs) {
        for (std::size_t k = 0; k < dim_; ++k) {
            set(i, j, k, 0);
            set(j, i, k, 0);
        }
        for (const auto& [k, v] : coeffs) {
            set(i, j, k, v);
            set(j, i, k, -v);
        }
    }

    /// Nonzero terms of [x_i, x_j].
    std::vector<std::pair<std::size_t, Scalar>> bracket(std::size_t i, std::size_t j) const {
        std::vector<std::pair<std::size_t, Scalar>> out;
        for (std::size_t k = 0; k < dim_; ++k) {
            if (const auto& v = c(i, j, k); v != 0) out.emplace_back(k, v);
        }
        return out;
    }

    /// [u, v] for coordinate vectors.
    std::vector<Scalar> bracket(const std::vector<Scalar>& u, const std::vector<Scalar>& v) const {
        std::vector<Scalar> out(dim_);
        for (std::size_t i = 0; i < dim_; ++i) {
            if (u[i] == 0) continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                if (v[j] == 0) continue;
                for (std::size_t k = 0; k < dim_; ++k) out[k] += u[i] * v[j] * c(i, j, k);
            }
        }
        return out;
    }

    bool operator==(const LieAlgebra& o) const { return dim_ == o.dim_ && constants_ == o.constants_; }

private:
    std::size_t index(std::size_t i, std::size_t j, std::size_t k) const {
        if (i >= dim_ || j >= dim_ || k >= dim_) throw std::out_of_range("structure constant index");
        return (i * dim_ + j) * dim_ + k;
    }

    std::size_t dim_ = 0;
    std::vector<Scalar> constants_;
    std::vector<std::string> names_;
};

enum class ViolationKind { Antisymmetry, NonIntegralConstant, Jacobi, BracketCompatibility };

inline const char* to_string(ViolationKind k) {
    switch (k) {
        case ViolationKind::Antisymmetry: return "AntisymmetryViolation";
        case ViolationKind::NonIntegralConstant: return "NonIntegralConstant";
        case ViolationKind::Jacobi: return "JacobiViolation";
        case ViolationKind::BracketCompatibility: return "BracketCompatibilityViolation";
    }
    return "?";
}

/// First failing index tuple, 1-based.
struct Violation {
    ViolationKind kind;
    std::vector<std::size_t> indices;

    std::string message() const {
        std::string s = std::string(to_string(kind)) + " at (";
        for (std::size_t i = 0; i < indices.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(indices[i]);
        }
        return s + ")";
    }
};

/// Checks antisymmetry, integrality (denominator 1), and Jacobi on i<j<k.
inline std::optional<Violation> validate(const LieAlgebra& g) {
    const std::size_t d = g.dim();
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i; j < d; ++j) {
            for (std::size_t k = 0; k < d; ++k) {
                if (g.c(i, j, k) != -g.c(j, i, k)) {
                    return Violation{ViolationKind::Antisymmetry, {i + 1, j + 1, k + 1}};
                }
            }
        }
    }
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i + 1; j < d; ++j) {
            for (std::size_t k = 0; k < d; ++k) {
                if (g.c(i, j, k).get_den() != 1) {
                    return Violation{ViolationKind::NonIntegralConstant, {i + 1, j + 1, k + 1}};
                }
            }
        }
    }
    auto unit = [d](std::size_t i) {
        std::vector<Scalar> v(d);
        v[i] = 1;
        return v;
    };
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i + 1; j < d; ++j) {
            for (std::size_t k = j + 1; k < d; ++k) {
                const auto xi = unit(i), xj = unit(j), xk = unit(k);
                auto a = g.bracket(xi, g.bracket(xj, xk));
                const auto b = g.bracket(xj, g.bracket(xk, xi));
                const auto c = g.bracket(xk, g.bracket(xi, xj));
                for (std::size_t l = 0; l < d; ++l) {
                    if (a[l] + b[l] + c[l] != 0) return Violation{ViolationKind::Jacobi, {i + 1, j + 1, k + 1}};
                }
            }
        }
    }
    return std::nullopt;
}

/// Block-diagonal sum: a's generators first, then b's.
inline LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
    std::vector<std::string> names = a.names();
    for (const auto& n : b.names()) names.push_back(n + "'");
    LieAlgebra out(a.dim() + b.dim(), std::move(names));
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            for (std::size_t k = 0; k < a.dim(); ++k) out.set(i, j, k, a.c(i, j, k));
    const std::size_t o = a.dim();
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j)
            for (std::size_t k = 0; k < b.dim(); ++k) out.set(o + i, o + j, o + k, b.c(i, j, k));
    return out;
}

namespace presets {

inline LieAlgebra abelian(std::size_t d) { return LieAlgebra(d); }

/// [x1,x2] = x3.
inline LieAlgebra heisenberg() {
    LieAlgebra g(3);
    g.set_bracket(0, 1, {{2, Scalar(1)}});
    return g;
}

/// Basis e, h, f: [e,h] = -2e, [e,f] = h, [h,f] = -2f.
inline LieAlgebra sl2() {
    LieAlgebra g(3, {"e", "h", "f"});
    g.set_bracket(0, 1, {{0, Scalar(-2)}});
    g.set_bracket(0, 2, {{1, Scalar(1)}});
    g.set_bracket(1, 2, {{2, Scalar(-2)}});
    return g;
}

/// [x1,x2] = x2.
inline LieAlgebra borel2() {
    LieAlgebra g(2);
    g.set_bracket(0, 1, {{1, Scalar(1)}});
    return g;
}

}  // namespace presets

/// "abelian(d)", "heisenberg", "sl2", "borel2".
inline LieAlgebra preset(std::string_view name) {
    if (name == "heisenberg") return presets::heisenberg();
    if (name == "sl2") return presets::sl2();
    if (name == "borel2") return presets::borel2();
    if (name.starts_with("abelian(") && name.ends_with(")") && name.size() > 9) {
        const auto inner = name.substr(8, name.size() - 9);
        std::size_t d = 0;
        for (char ch : inner) {
            if (!std::isdigit(static_cast<unsigned char>(ch))) throw UnknownPreset(std::string(name));
            d = d * 10 + static_cast<std::size_t>(ch - '0');
            if (d > 16) throw UnknownPreset(std::string(name));
        }
        return presets::abelian(d);
    }
    throw UnknownPreset("unknown preset: " + std::string(name));
}

inline const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names{"abelian(1)", "abelian(2)", "abelian(3)", "heisenberg", "sl2", "borel2"};
    return names;
}

// ---------------------------------------------------------------------------

/// Dense square matrix of exact rationals, row-major.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape");
        Matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k) == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
            }
        return out;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix sum shape");
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
        return a;
    }
    friend Matrix operator-(Matrix a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix difference shape");
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
        return a;
    }
    friend Matrix operator*(const Scalar& s, Matrix a) {
        for (auto& x : a.data_) x *= s;
        return a;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_zero() const {
        for (const auto& x : data_)
            if (x != 0) return false;
        return true;
    }

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

/// Finite-dimensional left g-module: one m x m matrix rho(x_i) per generator.
struct GModule {
    std::size_t dim = 0;
    std::vector<Matrix> action;

    const Matrix& rho(std::size_t i) const { return action.at(i); }
};

inline GModule trivial_module(const LieAlgebra& g, std::size_t m = 1) {
    return GModule{m, std::vector<Matrix>(g.dim(), Matrix(m, m))};
}

/// ad(x_i)_{k,j} = c(i, j, k).
inline GModule adjoint_module(const LieAlgebra& g) {
    const std::size_t d = g.dim();
    GModule m{d, {}};
    for (std::size_t i = 0; i < d; ++i) {
        Matrix a(d, d);
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) a(k, j) = g.c(i, j, k);
        m.action.push_back(std::move(a));
    }
    return m;
}

/// Checks rho([x_i,x_j]) = [rho(x_i), rho(x_j)] for i < j.
inline std::optional<Violation> validate_module(const LieAlgebra& g, const GModule& M) {
    if (M.action.size() != g.dim()) throw DimensionMismatch("module has wrong number of action matrices");
    for (const auto& a : M.action) {
        if (a.rows() != M.dim || a.cols() != M.dim) throw DimensionMismatch("action matrix has wrong shape");
    }
    for (std::size_t i = 0; i < g.dim(); ++i) {
        for (std::size_t j = i + 1; j < g.dim(); ++j) {
            Matrix lhs(M.dim, M.dim);
            for (const auto& [k, v] : g.bracket(i, j)) lhs = lhs + v * M.rho(k);
            const Matrix rhs = M.rho(i) * M.rho(j) - M.rho(j) * M.rho(i);
            if (!(lhs == rhs)) return Violation{ViolationKind::BracketCompatibility, {i + 1, j + 1}};
        }
    }
    return std::nullopt;
}

}  // namespace hek

#endif  // HEK_LIE_HPP
