#ifndef HEK_IO_HPP
#define HEK_IO_HPP

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hek/complex.hpp"
#include "hek/error.hpp"
#include "hek/lie.hpp"
#include "hek/scalar.hpp"
#include "hek/uenv.hpp"

namespace hek {

namespace detail {

inline Scalar json_scalar(const nlohmann::json& j) {
    if (j.is_number_integer()) return Scalar(Integer(j.dump()));
    if (j.is_string()) return parse_scalar(j.get<std::string>());
    throw ParseError("expected an integer or a rational string, got " + j.dump());
}

inline std::size_t json_index(const nlohmann::json& obj, const char* key, std::size_t dim) {
    if (!obj.contains(key) || !obj[key].is_number_integer()) throw ParseError(std::string("missing integer field '") + key + "'");
    const auto v = obj[key].get<long long>();
    if (v < 1 || static_cast<std::size_t>(v) > dim) throw ParseError(std::string("index '") + key + "' out of range 1.." + std::to_string(dim));
    return static_cast<std::size_t>(v - 1);
}

inline nlohmann::json parse_json_text(const std::string& text) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace detail

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// {"dim": d, "brackets": [{"i": i, "j": j, "coeffs": {"k": c}}], "names": [...]}
/// with 1-based i < j; the antisymmetric half is filled in. No validation here.
inline LieAlgebra lie_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ParseError("Lie spec must be a JSON object");
    if (!j.contains("dim") || !j["dim"].is_number_integer() || j["dim"].get<long long>() < 0)
        throw ParseError("Lie spec needs a nonnegative integer 'dim'");
    const auto dim = static_cast<std::size_t>(j["dim"].get<long long>());
    std::vector<std::string> names;
    if (j.contains("names")) {
        if (!j["names"].is_array()) throw ParseError("'names' must be an array");
        for (const auto& n : j["names"]) {
            if (!n.is_string()) throw ParseError("generator names must be strings");
            names.push_back(n.get<std::string>());
        }
        if (names.size() != dim) throw ParseError("'names' length does not match 'dim'");
    }
    LieAlgebra g(dim, names);
    if (j.contains("brackets")) {
        if (!j["brackets"].is_array()) throw ParseError("'brackets' must be an array");
        for (const auto& b : j["brackets"]) {
            if (!b.is_object()) throw ParseError("bracket entries must be objects");
            const auto i = detail::json_index(b, "i", dim);
            const auto jj = detail::json_index(b, "j", dim);
            if (!(i < jj)) throw ParseError("bracket entries need i < j");
            if (!b.contains("coeffs") || !b["coeffs"].is_object()) throw ParseError("bracket entry needs a 'coeffs' object");
            std::vector<std::pair<std::size_t, Scalar>> coeffs;
            for (const auto& [key, val] : b["coeffs"].items()) {
                std::size_t k = 0;
                try {
                    std::size_t used = 0;
                    const long kk = std::stol(key, &used);
                    if (used != key.size() || kk < 1 || static_cast<std::size_t>(kk) > dim) throw ParseError("");
                    k = static_cast<std::size_t>(kk - 1);
                } catch (const std::exception&) {
                    throw ParseError("bad coefficient index '" + key + "'");
                }
                coeffs.emplace_back(k, detail::json_scalar(val));
            }
            g.set_bracket(i, jj, coeffs);
        }
    }
    return g;
}

inline nlohmann::json lie_to_json(const LieAlgebra& g) {
    nlohmann::json brackets = nlohmann::json::array();
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = i + 1; j < g.dim(); ++j) {
            const auto br = g.bracket(i, j);
            if (br.empty()) continue;
            nlohmann::json coeffs = nlohmann::json::object();
            for (const auto& [k, v] : br) {
                if (v.get_den() == 1 && v.get_num().fits_slong_p())
                    coeffs[std::to_string(k + 1)] = v.get_num().get_si();
                else
                    coeffs[std::to_string(k + 1)] = v.get_str();
            }
            brackets.push_back({{"i", i + 1}, {"j", j + 1}, {"coeffs", coeffs}});
        }
    return {{"dim", g.dim()}, {"brackets", brackets}, {"names", g.names()}};
}

/// {"dim": m, "action": [matrix per generator]} with entries "num/den" or integers.
inline GModule module_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ParseError("module file must be a JSON object");
    if (!j.contains("dim") || !j["dim"].is_number_integer() || j["dim"].get<long long>() < 1)
        throw ParseError("module needs a positive integer 'dim'");
    GModule M{static_cast<std::size_t>(j["dim"].get<long long>()), {}};
    if (!j.contains("action") || !j["action"].is_array()) throw ParseError("module needs an 'action' array");
    for (const auto& mat : j["action"]) {
        if (!mat.is_array() || mat.size() != M.dim) throw ParseError("action matrix must have 'dim' rows");
        Matrix a(M.dim, M.dim);
        for (std::size_t r = 0; r < M.dim; ++r) {
            if (!mat[r].is_array() || mat[r].size() != M.dim) throw ParseError("action matrix must have 'dim' columns");
            for (std::size_t c = 0; c < M.dim; ++c) a(r, c) = detail::json_scalar(mat[r][c]);
        }
        M.action.push_back(std::move(a));
    }
    return M;
}

inline nlohmann::json module_to_json(const GModule& M) {
    nlohmann::json action = nlohmann::json::array();
    for (const auto& a : M.action) {
        nlohmann::json mat = nlohmann::json::array();
        for (std::size_t r = 0; r < a.rows(); ++r) {
            nlohmann::json row = nlohmann::json::array();
            for (std::size_t c = 0; c < a.cols(); ++c) row.push_back(a(r, c).get_str());
            mat.push_back(row);
        }
        action.push_back(mat);
    }
    return {{"dim", M.dim}, {"action", action}};
}

/// A preset name or a path to a JSON spec.
inline LieAlgebra load_lie(const std::string& name_or_path) {
    try {
        return preset(name_or_path);
    } catch (const UnknownPreset&) {
        if (!std::filesystem::exists(name_or_path)) throw;
    }
    return lie_from_json(detail::parse_json_text(read_file(name_or_path)));
}

/// "trivial", "adjoint", or a path to a module JSON file.
inline GModule load_module(const LieAlgebra& g, const std::string& name_or_path) {
    if (name_or_path == "trivial") return trivial_module(g);
    if (name_or_path == "adjoint") return adjoint_module(g);
    if (!std::filesystem::exists(name_or_path)) throw InputError("unknown module '" + name_or_path + "'");
    return module_from_json(detail::parse_json_text(read_file(name_or_path)));
}

// ---------------------------------------------------------------------------
// Element expressions

/// Parses sums of terms "c*x1^2*x3", "- 1/2", "x2" over d generators x1..xd.
/// Factors inside a term must already be in PBW order.
inline UElement parse_element(std::string_view text, std::size_t dim) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw ParseError("empty expression");
    UElement out(dim);
    std::size_t pos = 0;
    auto read_uint = [&](const char* what) {
        const std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw ParseError(std::string("expected ") + what + " at position " + std::to_string(start) + " in '" + s + "'");
        if (pos - start > 18) throw ParseError("number too long in '" + s + "'");
        return std::stoull(s.substr(start, pos - start));
    };
    bool first = true;
    while (pos < s.size()) {
        Scalar sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            if (s[pos] == '-') sign = -1;
            ++pos;
        } else if (!first) {
            throw ParseError("expected '+' or '-' at position " + std::to_string(pos) + " in '" + s + "'");
        }
        first = false;
        Scalar coef = 1;
        bool have_coef = false;
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            const std::size_t start = pos;
            while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/')) ++pos;
            coef = parse_scalar(s.substr(start, pos - start));
            have_coef = true;
        }
        Monomial alpha(dim, 0);
        long last = -1;
        bool have_factor = false;
        while (pos < s.size() && s[pos] != '+' && s[pos] != '-') {
            if (have_coef || have_factor) {
                if (s[pos] != '*') throw ParseError("expected '*' at position " + std::to_string(pos) + " in '" + s + "'");
                ++pos;
            }
            if (pos >= s.size() || s[pos] != 'x') throw ParseError("expected generator 'x<i>' at position " + std::to_string(pos) + " in '" + s + "'");
            ++pos;
            const auto i = read_uint("generator index");
            if (i < 1 || i > dim) throw ParseError("generator x" + std::to_string(i) + " out of range 1.." + std::to_string(dim));
            unsigned long long e = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                e = read_uint("exponent");
            }
            const long idx = static_cast<long>(i) - 1;
            if (idx <= last) throw ParseError("factors out of PBW order in '" + s + "' (use the mul command for products)");
            last = idx;
            alpha[static_cast<std::size_t>(idx)] += static_cast<std::uint32_t>(e);
            have_factor = true;
        }
        if (!have_coef && !have_factor) throw ParseError("empty term in '" + s + "'");
        out.add_term(alpha, sign * coef);
    }
    return out;
}

inline std::string render_monomial(const Monomial& a) {
    std::string s;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += "x" + std::to_string(i + 1);
        if (a[i] > 1) s += "^" + std::to_string(a[i]);
    }
    return s;
}

/// Terms by decreasing total degree, then x1-heavy first: "x1*x2 - x3".
inline std::string render(const UElement& u) {
    if (u.is_zero()) return "0";
    std::vector<std::pair<Monomial, Scalar>> terms(u.terms().begin(), u.terms().end());
    std::stable_sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
        const long dx = total_degree(x.first), dy = total_degree(y.first);
        if (dx != dy) return dx > dy;
        return x.first > y.first;
    });
    std::string out;
    bool first = true;
    for (const auto& [a, c] : terms) {
        const bool neg = c < 0;
        const Scalar mag = abs(c);
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        first = false;
        const std::string mono = render_monomial(a);
        if (mono.empty())
            out += mag.get_str();
        else if (mag == 1)
            out += mono;
        else
            out += mag.get_str() + "*" + mono;
    }
    return out;
}

inline std::string render_wedge(Wedge w) {
    if (w == 0) return "1";
    std::string s;
    for (auto i : wedge_indices(w)) {
        if (!s.empty()) s += "/\\";
        s += "x" + std::to_string(i + 1);
    }
    return s;
}

/// "(x1*x2 - x3) (x) x1/\x2 + (1) (x) 1".
inline std::string render(const ChainElement& x) {
    if (x.is_zero()) return "0";
    std::vector<Wedge> wedges;
    for (const auto& [k, c] : x.terms())
        if (wedges.empty() || wedges.back() != k.wedge) wedges.push_back(k.wedge);
    std::string out;
    for (auto w : wedges) {
        if (!out.empty()) out += " + ";
        out += "(" + render(x.component(w)) + ") (x) " + render_wedge(w);
    }
    return out;
}

inline nlohmann::ordered_json trace_to_json(const HomotopyTrace& t, const std::vector<Radius>& radii, const Prime& p) {
    nlohmann::ordered_json steps = nlohmann::ordered_json::array();
    for (const auto& st : t.steps) {
        nlohmann::ordered_json norms = nlohmann::ordered_json::object();
        for (const auto& r : radii) norms[r.render()] = chain_norm(st.defect, r, p).exponent_string();
        steps.push_back({{"n", st.n}, {"iterate", render(st.iterate)}, {"defect_norm_exponent", norms}});
    }
    return steps;
}

}  // namespace hek

#endif  // HEK_IO_HPP
