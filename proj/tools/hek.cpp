// hek: command-line front end for the enveloping-algebra toolkit.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hek/hek.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitInput = 2;

/// Thrown when a spec or module fails validation; exit code 1.
struct ValidationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::optional<std::uint64_t> prime;
    std::string format = "text";
    std::string out;
    bool allow_invalid = false;

    hek::Prime resolve_prime() const {
        if (prime) return hek::Prime(*prime);
        if (const char* env = std::getenv("HEK_PRIME")) {
            try {
                std::size_t used = 0;
                const auto v = std::stoull(env, &used);
                if (used != std::string(env).size()) throw std::invalid_argument("");
                return hek::Prime(v);
            } catch (const hek::InputError&) {
                throw;
            } catch (const std::exception&) {
                throw hek::InputError(std::string("HEK_PRIME is not an integer: ") + env);
            }
        }
        return hek::Prime(2);
    }

    void emit(const std::string& text) const {
        if (out.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream f(out);
        if (!f) throw hek::InputError("cannot write " + out);
        f << text;
    }
};

std::vector<hek::Radius> parse_radii(const std::vector<std::string>& items, std::vector<hek::Radius> fallback) {
    if (items.empty()) return fallback;
    std::vector<hek::Radius> out;
    for (const auto& s : items) out.emplace_back(hek::parse_scalar(s));
    return out;
}

hek::LieAlgebra load_checked(const std::string& name, bool allow_invalid) {
    auto g = hek::load_lie(name);
    if (auto v = hek::validate(g); v && !allow_invalid) throw ValidationFailure(name + ": " + v->message());
    return g;
}

std::string betti_line(const hek::BettiTable& t) {
    std::string s;
    for (std::size_t q = 0; q < t.betti.size(); ++q) s += (q ? "," : "") + std::to_string(t.betti[q]);
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hek - exact PBW norms, Chevalley-Eilenberg complexes and Lie algebra cohomology"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--prime", opt.prime, "prime p (default: $HEK_PRIME or 2)");
    app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--out", opt.out, "write output to PATH");
    app.add_flag("--allow-invalid", opt.allow_invalid, "accept specs that fail validation");

    // lie validate
    auto* lie = app.add_subcommand("lie", "Lie algebra specs");
    lie->require_subcommand(1);
    std::string lie_path;
    auto* lie_validate = lie->add_subcommand("validate", "check antisymmetry, integrality and Jacobi");
    lie_validate->add_option("spec", lie_path, "preset name or JSON file")->required();

    // u mul / u norm
    auto* u = app.add_subcommand("u", "arithmetic in U(g)");
    u->require_subcommand(1);
    std::string u_lie;
    std::vector<std::string> exprs;
    std::vector<std::string> radii_args;
    auto* u_mul = u->add_subcommand("mul", "normal-ordered product of PBW expressions");
    u_mul->add_option("lie", u_lie, "preset name or JSON file")->required();
    u_mul->add_option("exprs", exprs, "factors, left to right")->required();
    auto* u_norm = u->add_subcommand("norm", "Gauss norm exponents");
    u_norm->add_option("lie", u_lie, "preset name or JSON file")->required();
    u_norm->add_option("expr", exprs, "element in PBW form")->required();
    u_norm->add_option("--s", radii_args, "log_p of the radius (repeatable)");

    // verify
    auto* verify = app.add_subcommand("verify", "seeded property suites");
    std::string suite, preset_name, lie_file;
    hek::RunConfig cfg;
    std::optional<std::uint32_t> max_degree;
    bool no_timing = false;
    verify->add_option("suite", suite, "norms | complex | homotopy | hopf")
        ->required()
        ->check(CLI::IsMember({"norms", "complex", "homotopy", "hopf"}));
    verify->add_option("--preset", preset_name, "preset Lie algebra");
    verify->add_option("--lie", lie_file, "Lie spec JSON file");
    verify->add_option("--seed", cfg.seed, "64-bit seed");
    verify->add_option("--samples", cfg.samples, "random samples per phase");
    verify->add_option("--max-degree", max_degree, "degree cap (default 4 for chains, 5 for products)");
    verify->add_option("--s", radii_args, "log_p radii (repeatable, default 1/2 1 2)");
    verify->add_option("--threads", cfg.threads, "worker threads");
    verify->add_flag("--no-timing", no_timing, "report elapsed_ms as 0");

    // cohomology
    auto* coh = app.add_subcommand("cohomology", "Betti numbers of Lie algebra (co)homology");
    std::string coh_lie;
    std::vector<std::string> modules;
    std::string kind = "cohomology";
    bool cocycles = false;
    coh->add_option("lie", coh_lie, "preset name or JSON file")->required();
    coh->add_option("modules", modules, "trivial | adjoint | module JSON (two for ext/tor)")->required();
    coh->add_option("--kind", kind, "cohomology | homology | ext | tor")
        ->check(CLI::IsMember({"cohomology", "homology", "ext", "tor"}));
    coh->add_flag("--cocycles", cocycles, "also emit cocycle bases (json)");

    // converge
    auto* conv = app.add_subcommand("converge", "classify p^{ceil(a n^2 + b n + c)} coefficient streams");
    std::vector<std::string> stream_args;
    bool profile = false;
    std::uint32_t profile_degree = 20;
    conv->add_option("abcdp", stream_args, "a b c [d] [p]")->required()->expected(3, 5);
    conv->add_flag("--profile", profile, "emit the tail norm profile as CSV");
    conv->add_option("--s", radii_args, "log_p radius for the profile");
    conv->add_option("--max-degree", profile_degree, "profile degree cap");

    // trace
    auto* trace = app.add_subcommand("trace", "iterates of the contracting homotopy on u (x) x_I");
    std::string trace_lie, trace_expr;
    std::vector<std::size_t> trace_wedge;
    trace->add_option("lie", trace_lie, "preset name or JSON file")->required();
    trace->add_option("expr", trace_expr, "coefficient element in PBW form")->required();
    trace->add_option("--wedge", trace_wedge, "1-based exterior indices")->delimiter(',');
    trace->add_option("--s", radii_args, "log_p radii for defect norms");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        const hek::Prime p = opt.resolve_prime();

        if (lie_validate->parsed()) {
            const auto g = hek::load_lie(lie_path);
            if (auto v = hek::validate(g)) {
                std::cout << v->message() << "\n";
                return kExitFailure;
            }
            std::cout << "ok\n";
            return kExitOk;
        }

        if (u_mul->parsed() || u_norm->parsed()) {
            const auto g = load_checked(u_lie, opt.allow_invalid);
            const hek::UAlgebra U(g);
            if (u_mul->parsed()) {
                hek::UElement acc = U.one();
                for (const auto& e : exprs) acc = U.mul(acc, hek::parse_element(e, g.dim()));
                opt.emit(hek::render(acc) + "\n");
                return kExitOk;
            }
            if (exprs.size() != 1) throw hek::InputError("u norm takes exactly one expression");
            const auto x = hek::parse_element(exprs[0], g.dim());
            const auto radii = parse_radii(radii_args, {hek::Radius(hek::Scalar(1))});
            std::string text;
            for (const auto& r : radii) {
                const auto n = hek::gauss_norm(x, r, p);
                text += (radii.size() > 1 ? "s=" + r.render() + " " : std::string()) + n.render() + "\n";
            }
            opt.emit(text);
            return kExitOk;
        }

        if (verify->parsed()) {
            if (preset_name.empty() == lie_file.empty()) throw hek::InputError("verify needs exactly one of --preset or --lie");
            const std::string label = preset_name.empty() ? lie_file : preset_name;
            const auto g = load_checked(label, opt.allow_invalid);
            cfg.prime = p;
            cfg.timing = !no_timing;
            cfg.radii = parse_radii(radii_args, cfg.radii);
            if (max_degree) cfg.chain_degree = cfg.product_degree = *max_degree;
            const auto rep = hek::run_suite(suite, g, label, cfg, opt.allow_invalid);
            if (opt.format == "json")
                opt.emit(rep.to_json().dump(2) + "\n");
            else if (opt.format == "csv")
                opt.emit(rep.to_csv());
            else
                opt.emit(rep.to_text());
            return rep.passed() ? kExitOk : kExitFailure;
        }

        if (coh->parsed()) {
            const auto g = load_checked(coh_lie, opt.allow_invalid);
            const bool two = kind == "ext" || kind == "tor";
            if (modules.size() != (two ? 2u : 1u))
                throw hek::InputError(kind + " takes " + std::string(two ? "two modules" : "one module"));
            std::vector<hek::GModule> ms;
            for (const auto& m : modules) {
                ms.push_back(hek::load_module(g, m));
                if (auto v = hek::validate_module(g, ms.back()); v && !opt.allow_invalid)
                    throw ValidationFailure(m + ": " + v->message());
            }
            hek::BettiTable t;
            std::optional<hek::GModule> coefficients;
            if (kind == "cohomology") {
                t = hek::lie_cohomology(g, ms[0]);
                coefficients = ms[0];
            } else if (kind == "homology") {
                t = hek::lie_homology(g, ms[0]);
            } else if (kind == "ext") {
                coefficients = hek::hom_module(g, ms[0], ms[1]);
                t = hek::lie_cohomology(g, *coefficients);
            } else {
                t = hek::lie_tor(g, ms[0], ms[1]);
            }
            if (opt.format == "csv") {
                std::string s = "degree,betti\n";
                for (std::size_t q = 0; q < t.betti.size(); ++q) s += std::to_string(q) + "," + std::to_string(t.betti[q]) + "\n";
                opt.emit(s);
            } else if (opt.format == "json") {
                nlohmann::ordered_json j;
                j["kind"] = kind;
                j["betti"] = t.betti;
                j["euler_characteristic"] = t.euler_characteristic();
                if (cocycles && coefficients) {
                    nlohmann::ordered_json all = nlohmann::ordered_json::array();
                    for (std::size_t q = 0; q <= g.dim(); ++q) {
                        nlohmann::ordered_json deg = nlohmann::ordered_json::array();
                        for (const auto& v : hek::cocycle_basis(g, *coefficients, q)) {
                            nlohmann::ordered_json vec = nlohmann::ordered_json::array();
                            for (const auto& x : v) vec.push_back(x.get_str());
                            deg.push_back(vec);
                        }
                        all.push_back(deg);
                    }
                    j["cocycles"] = all;
                }
                opt.emit(j.dump(2) + "\n");
            } else {
                opt.emit(betti_line(t) + "\n");
            }
            return kExitOk;
        }

        if (conv->parsed()) {
            hek::CoefficientStream st{hek::parse_scalar(stream_args[0]), hek::parse_scalar(stream_args[1]),
                                      hek::parse_scalar(stream_args[2]), 1};
            if (stream_args.size() >= 4) {
                const auto dq = hek::parse_scalar(stream_args[3]);
                if (dq.get_den() != 1 || dq < 0) throw hek::InputError("d must be a nonnegative integer");
                st.dim = dq.get_num().get_ui();
            }
            hek::Prime pp = p;
            if (stream_args.size() == 5) {
                const auto pq = hek::parse_scalar(stream_args[4]);
                if (pq.get_den() != 1 || pq < 2) throw hek::InputError("p must be a prime");
                pp = hek::Prime(pq.get_num().get_ui());
            }
            const auto verdict = hek::classify(st);
            if (profile) {
                const auto r = parse_radii(radii_args, {hek::Radius(hek::Scalar(1))}).front();
                std::string s = "N,exponent\n";
                for (const auto& [n, e] : hek::tail_norm_profile(st, r, profile_degree))
                    s += std::to_string(n) + "," + e.exponent_string() + "\n";
                std::cout << hek::describe(verdict) << "\n";
                opt.emit(s);
            } else if (opt.format == "json") {
                nlohmann::ordered_json j;
                j["verdict"] = hek::describe(verdict);
                j["witness"] = hek::witness(st, verdict);
                j["prime"] = pp.value();
                opt.emit(j.dump(2) + "\n");
            } else {
                opt.emit(hek::describe(verdict) + "\n" + hek::witness(st, verdict) + "\n");
            }
            return kExitOk;
        }

        if (trace->parsed()) {
            const auto g = load_checked(trace_lie, opt.allow_invalid);
            hek::Wedge w = 0;
            for (auto i : trace_wedge) {
                if (i < 1 || i > g.dim()) throw hek::InputError("wedge index out of range");
                w |= hek::Wedge{1} << (i - 1);
            }
            const hek::StandardComplex C(g);
            const auto x = hek::ChainElement::from_element(hek::parse_element(trace_expr, g.dim()), w);
            const auto tr = C.trace(x);
            const auto radii = parse_radii(radii_args, hek::RunConfig{}.radii);
            nlohmann::ordered_json j;
            j["input"] = hek::render(x);
            j["stationary_index"] = tr.stationary_index();
            j["result"] = hek::render(tr.result());
            j["steps"] = hek::trace_to_json(tr, radii, p);
            opt.emit(j.dump(2) + "\n");
            return kExitOk;
        }
    } catch (const ValidationFailure& e) {
        std::cerr << "validation failed: " << e.what() << "\n";
        return kExitFailure;
    } catch (const hek::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitOk;
}
