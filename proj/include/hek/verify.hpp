#ifndef HEK_VERIFY_HPP
#define HEK_VERIFY_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <map>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "hek/complex.hpp"
#include "hek/io.hpp"
#include "hek/lie.hpp"
#include "hek/scalar.hpp"
#include "hek/uenv.hpp"

namespace hek {

struct RunConfig {
    Prime prime{2};
    std::uint64_t seed = 0;
    std::size_t samples = 200;
    std::uint32_t chain_degree = 4;    // |alpha| cap for chains
    std::uint32_t product_degree = 5;  // degree cap for random U(g) factors
    std::vector<Radius> radii{Radius(Scalar(1, 2)), Radius(Scalar(1)), Radius(Scalar(2))};
    std::size_t threads = 1;
    bool timing = true;
};

struct PropertyResult {
    PropertyResult() = default;
    PropertyResult(std::string n) : name(std::move(n)) {}  // NOLINT(google-explicit-constructor)

    std::string name;
    std::size_t checked = 0;
    std::size_t failures = 0;
    std::optional<std::string> first_counterexample;
};

struct VerificationReport {
    std::string suite;
    std::string lie_label;
    bool allow_invalid = false;
    RunConfig config;
    std::vector<PropertyResult> properties;
    nlohmann::ordered_json stats = nlohmann::ordered_json::object();
    long long elapsed_ms = 0;

    bool passed() const {
        return std::all_of(properties.begin(), properties.end(), [](const auto& p) { return p.failures == 0; });
    }
    std::size_t total_failures() const {
        std::size_t n = 0;
        for (const auto& p : properties) n += p.failures;
        return n;
    }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json radii = nlohmann::ordered_json::array();
        for (const auto& r : config.radii) radii.push_back(r.render());
        nlohmann::ordered_json props = nlohmann::ordered_json::array();
        for (const auto& p : properties) {
            nlohmann::ordered_json e;
            e["name"] = p.name;
            e["checked"] = p.checked;
            e["failures"] = p.failures;
            e["first_counterexample"] = p.first_counterexample ? nlohmann::ordered_json(*p.first_counterexample) : nullptr;
            props.push_back(e);
        }
        nlohmann::ordered_json out;
        out["suite"] = suite;
        out["config"] = {{"lie", lie_label},
                         {"prime", config.prime.value()},
                         {"seed", config.seed},
                         {"samples", config.samples},
                         {"max_degree_chains", config.chain_degree},
                         {"max_degree_products", config.product_degree},
                         {"radii", radii},
                         {"allow_invalid", allow_invalid}};
        out["properties"] = props;
        if (!stats.empty()) out["stats"] = stats;
        out["elapsed_ms"] = elapsed_ms;
        return out;
    }

    std::string to_text() const {
        std::string s = "suite " + suite + " on " + lie_label + " (p=" + std::to_string(config.prime.value()) +
                        ", seed=" + std::to_string(config.seed) + ")\n";
        for (const auto& p : properties) {
            s += (p.failures == 0 ? "PASS " : "FAIL ") + p.name + "  checked=" + std::to_string(p.checked) +
                 " failures=" + std::to_string(p.failures) + "\n";
            if (p.first_counterexample) s += "  first counterexample: " + *p.first_counterexample + "\n";
        }
        for (const auto& [k, v] : stats.items()) s += "stat " + k + " = " + v.dump() + "\n";
        return s;
    }

    std::string to_csv() const {
        auto quote = [](const std::string& x) {
            std::string q = "\"";
            for (char c : x) q += (c == '"') ? std::string("\"\"") : std::string(1, c);
            return q + "\"";
        };
        std::string s = "name,checked,failures,first_counterexample\n";
        for (const auto& p : properties)
            s += quote(p.name) + "," + std::to_string(p.checked) + "," + std::to_string(p.failures) + "," +
                 (p.first_counterexample ? quote(*p.first_counterexample) : std::string()) + "\n";
        return s;
    }
};

// ---------------------------------------------------------------------------
// Sampling

/// Independent generator for sample k of a phase of a suite.
inline std::mt19937_64 sample_rng(std::uint64_t seed, std::string_view suite, std::size_t phase, std::size_t k) {
    std::uint32_t suite_hash = 2166136261u;  // FNV-1a
    for (char c : suite) suite_hash = (suite_hash ^ static_cast<unsigned char>(c)) * 16777619u;
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), suite_hash,
                      static_cast<std::uint32_t>(phase), static_cast<std::uint32_t>(k),
                      static_cast<std::uint32_t>(static_cast<std::uint64_t>(k) >> 32)};
    return std::mt19937_64(seq);
}

inline long uniform(std::mt19937_64& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

/// p^k m with k in [-5, 5] and m in [-9, 9] prime to p.
inline Scalar random_coefficient(std::mt19937_64& rng, const Prime& p) {
    const long k = uniform(rng, -5, 5);
    long m = 0;
    const long pv = static_cast<long>(p.value());
    do {
        m = uniform(rng, -9, 9);
    } while (m == 0 || m % pv == 0);
    return prime_power(p, k) * m;
}

inline Monomial random_monomial(std::mt19937_64& rng, std::size_t dim, std::uint32_t max_degree) {
    Monomial a(dim, 0);
    if (dim == 0) return a;
    const long deg = uniform(rng, 0, max_degree);
    for (long t = 0; t < deg; ++t) ++a[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(dim) - 1))];
    return a;
}

/// Nonzero element with at most 6 terms of degree <= max_degree.
inline UElement random_element(std::mt19937_64& rng, std::size_t dim, std::uint32_t max_degree, const Prime& p) {
    UElement u(dim);
    while (u.is_zero()) {
        const long n = uniform(rng, 1, 6);
        for (long t = 0; t < n; ++t) u.add_term(random_monomial(rng, dim, max_degree), random_coefficient(rng, p));
    }
    return u;
}

/// Nonzero chain with at most 6 terms.
inline ChainElement random_chain(std::mt19937_64& rng, std::size_t dim, Side side, std::uint32_t max_degree, const Prime& p) {
    ChainElement x(dim, side);
    while (x.is_zero()) {
        const long n = uniform(rng, 1, 6);
        for (long t = 0; t < n; ++t) {
            const Wedge w = dim == 0 ? 0 : static_cast<Wedge>(uniform(rng, 0, (1L << dim) - 1));
            x.add_term(w, random_monomial(rng, dim, max_degree), random_coefficient(rng, p));
        }
    }
    return x;
}

/// All basis chains (I, alpha) with |alpha| <= max_degree.
inline std::vector<std::pair<Wedge, Monomial>> basis_chains(std::size_t dim, std::uint32_t max_degree) {
    std::vector<Monomial> monos;
    Monomial a(dim, 0);
    auto rec = [&](auto&& self, std::size_t i, std::uint32_t left) -> void {
        if (i == dim) {
            monos.push_back(a);
            return;
        }
        for (std::uint32_t e = 0; e <= left; ++e) {
            a[i] = e;
            self(self, i + 1, left - e);
        }
        a[i] = 0;
    };
    rec(rec, 0, max_degree);
    std::vector<std::pair<Wedge, Monomial>> out;
    for (Wedge w = 0; w < (Wedge{1} << dim); ++w)
        for (const auto& m : monos) out.emplace_back(w, m);
    return out;
}

// ---------------------------------------------------------------------------
// Runner

/// Outcomes collected for one sample; merged in sample order.
class SampleRecorder {
public:
    struct Outcome {
        std::size_t property;
        bool ok;
        std::string counterexample;
    };

    void check(std::size_t property, bool ok, const std::function<std::string()>& describe) {
        outcomes_.push_back(Outcome{property, ok, ok ? std::string() : describe()});
    }
    void stat_max(const std::string& key, long value) {
        auto [it, inserted] = max_stats_.try_emplace(key, value);
        if (!inserted) it->second = std::max(it->second, value);
    }
    void stat_count(const std::string& key, long value) { sum_stats_[key] += value; }

    const std::vector<Outcome>& outcomes() const { return outcomes_; }
    const std::map<std::string, long>& max_stats() const { return max_stats_; }
    const std::map<std::string, long>& sum_stats() const { return sum_stats_; }

private:
    std::vector<Outcome> outcomes_;
    std::map<std::string, long> max_stats_;
    std::map<std::string, long> sum_stats_;
};

struct Phase {
    std::size_t count;
    std::function<void(std::size_t k, std::mt19937_64& rng, SampleRecorder& rec)> run;
};

/// Runs all phases, fanning samples out over config.threads, and assembles
/// results in (phase, sample) order.
inline void run_phases(const std::string& suite, const RunConfig& config, const std::vector<Phase>& phases,
                       VerificationReport& report) {
    std::map<std::string, long> max_stats, sum_stats;
    for (std::size_t ph = 0; ph < phases.size(); ++ph) {
        const Phase& phase = phases[ph];
        std::vector<SampleRecorder> records(phase.count);
        std::vector<std::exception_ptr> errors(phase.count);
        auto work = [&](std::size_t k) {
            try {
                auto rng = sample_rng(config.seed, suite, ph, k);
                phase.run(k, rng, records[k]);
            } catch (...) {
                errors[k] = std::current_exception();
            }
        };
        const std::size_t nthreads = std::max<std::size_t>(1, std::min(config.threads, phase.count));
        if (nthreads == 1) {
            for (std::size_t k = 0; k < phase.count; ++k) work(k);
        } else {
            std::atomic<std::size_t> next{0};
            std::vector<std::jthread> pool;
            for (std::size_t t = 0; t < nthreads; ++t)
                pool.emplace_back([&] {
                    for (std::size_t k = next++; k < phase.count; k = next++) work(k);
                });
        }
        for (std::size_t k = 0; k < phase.count; ++k) {
            if (errors[k]) std::rethrow_exception(errors[k]);
            for (const auto& o : records[k].outcomes()) {
                auto& prop = report.properties.at(o.property);
                ++prop.checked;
                if (!o.ok) {
                    ++prop.failures;
                    if (!prop.first_counterexample) prop.first_counterexample = o.counterexample;
                }
            }
            for (const auto& [key, v] : records[k].max_stats()) {
                auto [it, inserted] = max_stats.try_emplace(key, v);
                if (!inserted) it->second = std::max(it->second, v);
            }
            for (const auto& [key, v] : records[k].sum_stats()) sum_stats[key] += v;
        }
    }
    for (const auto& [k, v] : max_stats) report.stats[k] = v;
    for (const auto& [k, v] : sum_stats) report.stats[k] = v;
}

inline std::string radius_note(const Radius& r) { return "s=" + r.render(); }

// ---------------------------------------------------------------------------
// Suites

/// Multiplicativity of the Gauss norms and the estimates in its proof.
inline VerificationReport verify_norms(const LieAlgebra& g, const RunConfig& cfg) {
    const UAlgebra U(g);
    const Prime& p = cfg.prime;
    VerificationReport rep{"norms", "", false, cfg, {}, {}, 0};
    const std::size_t d = g.dim();
    for (const auto& r : cfg.radii) rep.properties.push_back({"multiplicativity " + radius_note(r)});
    const std::size_t kStructure = rep.properties.size();
    rep.properties.push_back({"structure_coefficient_bound"});
    const std::size_t kCommutator = rep.properties.size();
    rep.properties.push_back({"commutator_estimate"});
    const std::size_t kSymbol = rep.properties.size();
    rep.properties.push_back({"principal_symbol_homomorphism"});
    const std::size_t kRewrite = rep.properties.size();
    rep.properties.push_back({"pbw_rewriting_independence"});

    std::vector<Phase> phases;
    phases.push_back({cfg.samples, [&](std::size_t, std::mt19937_64& rng, SampleRecorder& rec) {
                          const UElement u = random_element(rng, d, cfg.product_degree, p);
                          const UElement v = random_element(rng, d, cfg.product_degree, p);
                          const UElement uv = U.mul(u, v);
                          for (std::size_t ri = 0; ri < cfg.radii.size(); ++ri) {
                              const Radius& r = cfg.radii[ri];
                              const LogNorm lhs = gauss_norm(uv, r, p);
                              const LogNorm rhs = gauss_norm(u, r, p) * gauss_norm(v, r, p);
                              rec.check(ri, lhs == rhs, [&] {
                                  return "u = " + render(u) + ", v = " + render(v) + ", " + radius_note(r) +
                                         ": ||uv|| = " + lhs.render() + " but ||u||*||v|| = " + rhs.render();
                              });
                              const auto pu = principal_part(u, r, p);
                              const auto pv = principal_part(v, r, p);
                              const UElement w = U.mul(pu.leading, pv.leading);
                              // equality in the associated graded ring: the leading parts differ by
                              // terms of norm strictly below the product level
                              const LogNorm level = pu.level * pv.level;
                              bool ok = !w.is_zero() && gauss_norm(w, r, p) == level && !uv.is_zero();
                              if (ok) ok = gauss_norm(principal_part(uv, r, p).leading - principal_part(w, r, p).leading, r, p) < level;
                              rec.check(kSymbol, ok, [&] {
                                  return "u = " + render(u) + ", v = " + render(v) + ", " + radius_note(r);
                              });
                          }
                      }});
    phases.push_back({cfg.samples, [&](std::size_t, std::mt19937_64& rng, SampleRecorder& rec) {
                          const Monomial a = random_monomial(rng, d, 3);
                          const Monomial b = random_monomial(rng, d, 3);
                          const UElement prod = U.mul(UElement::monomial(a), UElement::monomial(b));
                          const long top = total_degree(a) + total_degree(b);
                          bool ok = true;
                          for (const auto& r : cfg.radii)
                              for (const auto& [c, coef] : prod.terms())
                                  if (norm_at(coef, p) > LogNorm(r.s() * (top - total_degree(c)))) ok = false;
                          rec.check(kStructure, ok, [&] {
                              return "X^a = " + render(UElement::monomial(a)) + ", X^b = " + render(UElement::monomial(b)) +
                                     ", product = " + render(prod);
                          });
                          std::vector<std::size_t> w = monomial_word(a);
                          const auto wb = monomial_word(b);
                          w.insert(w.end(), wb.begin(), wb.end());
                          const UElement left = normal_order_word(g, w, RewriteStrategy::LeftmostInversion);
                          const UElement right = normal_order_word(g, w, RewriteStrategy::RightmostInversion);
                          rec.check(kRewrite, left == prod && right == prod, [&] {
                              return "X^a = " + render(UElement::monomial(a)) + ", X^b = " + render(UElement::monomial(b)) +
                                     ": memoized " + render(prod) + ", leftmost " + render(left) + ", rightmost " + render(right);
                          });
                      }});
    phases.push_back({d * d, [&](std::size_t k, std::mt19937_64&, SampleRecorder& rec) {
                          const std::size_t i = k / d, j = k % d;
                          const UElement c = U.adjoint_action(i, U.gen(j));
                          for (const auto& r : cfg.radii) {
                              const LogNorm n = gauss_norm(c, r, p);
                              rec.check(kCommutator, n <= LogNorm(r.s()) && n < LogNorm(2 * r.s()), [&] {
                                  return "[x" + std::to_string(i + 1) + ",x" + std::to_string(j + 1) + "] = " + render(c) +
                                         ", " + radius_note(r) + ": norm " + n.render();
                              });
                          }
                      }});
    run_phases("norms", cfg, phases, rep);
    return rep;
}

/// Complex axioms and the norm-decreasing differential.
inline VerificationReport verify_complex(const LieAlgebra& g, const RunConfig& cfg) {
    const StandardComplex C(g);
    const Prime& p = cfg.prime;
    const std::size_t d = g.dim();
    VerificationReport rep{"complex", "", false, cfg, {}, {}, 0};
    rep.properties = {{"d_squared_zero"}, {"phi_squared_zero_koszul"}};
    const std::size_t kNorm = rep.properties.size();
    for (const auto& r : cfg.radii) rep.properties.push_back({"d_norm_decreasing " + radius_note(r)});
    const std::size_t kIso = rep.properties.size();
    rep.properties.push_back({"pbw_iso_isometry"});
    rep.properties.push_back({"pbw_iso_roundtrip"});

    const auto basis = basis_chains(d, cfg.chain_degree);
    std::vector<Phase> phases;
    phases.push_back({basis.size(), [&](std::size_t k, std::mt19937_64&, SampleRecorder& rec) {
                          const auto x = ChainElement::basis(d, Side::U, basis[k].first, basis[k].second);
                          const auto dd = C.d(C.d(x));
                          rec.check(0, dd.is_zero(), [&] { return "chain " + render(x) + ": dd = " + render(dd); });
                          const auto y = pbw_iso(x);
                          const auto pp = phi(phi(y, nullptr), nullptr);
                          rec.check(1, pp.is_zero(), [&] { return "Koszul chain " + render(y) + ": phi phi = " + render(pp); });
                      }});
    phases.push_back({cfg.samples, [&](std::size_t, std::mt19937_64& rng, SampleRecorder& rec) {
                          const auto x = random_chain(rng, d, Side::U, cfg.chain_degree, p);
                          const auto dx = C.d(x);
                          for (std::size_t ri = 0; ri < cfg.radii.size(); ++ri) {
                              const Radius& r = cfg.radii[ri];
                              rec.check(kNorm + ri, chain_norm(dx, r, p) <= chain_norm(x, r, p), [&] {
                                  return "chain " + render(x) + ", " + radius_note(r) + ": ||d x|| = " +
                                         chain_norm(dx, r, p).render() + " > " + chain_norm(x, r, p).render();
                              });
                          }
                          const auto fx = pbw_iso(x);
                          bool iso = true;
                          for (const auto& r : cfg.radii) iso = iso && chain_norm(fx, r, p) == chain_norm(x, r, p);
                          rec.check(kIso, iso, [&] { return "chain " + render(x); });
                          rec.check(kIso + 1, pbw_iso_inv(fx) == x, [&] { return "chain " + render(x); });
                      }});
    run_phases("complex", cfg, phases, rep);
    return rep;
}

/// Koszul homotopy, the corrected homotopy s, and their norm bounds.
inline VerificationReport verify_homotopy(const LieAlgebra& g, const RunConfig& cfg) {
    const StandardComplex C(g);
    const Prime& p = cfg.prime;
    const std::size_t d = g.dim();
    bool abelian = true;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            if (!g.bracket(i, j).empty()) abelian = false;

    VerificationReport rep{"homotopy", "", false, cfg, {}, {}, 0};
    enum : std::size_t {
        kKoszulContract,
        kKoszulNorm,
        kContractBasis,
        kContractRandom,
        kStationary,
        kNormS,
        kNormIterates,
        kDefectMonotone,
        kSeries,
        kAbelian
    };
    rep.properties = {{"koszul_contract"},
                      {"koszul_homotopy_norm_decreasing"},
                      {"homotopy_contract_basis"},
                      {"homotopy_contract_random"},
                      {"stationarity_bound"},
                      {"homotopy_norm_decreasing"},
                      {"iterates_norm_decreasing"},
                      {"defect_norms_nonincreasing"},
                      {"perturbation_series_agreement"}};
    if (abelian) rep.properties.push_back({"abelian_agreement_with_sigma"});

    auto check_s = [&](const ChainElement& x, SampleRecorder& rec, std::size_t contract_prop) {
        const HomotopyTrace tr = C.trace(x);
        const ChainElement& sx = tr.result();
        const ChainElement lhs = C.d(sx) + C.homotopy(C.d(x));
        const ChainElement rhs = x - eta_epsilon(x);
        rec.check(contract_prop, lhs == rhs, [&] {
            return "chain " + render(x) + ": ds + sd = " + render(lhs) + ", expected " + render(rhs);
        });
        const long bound = std::max(0L, x.max_weight()) + 1;
        rec.check(kStationary, tr.stationary_index() <= bound, [&] {
            return "chain " + render(x) + ": stationary at n = " + std::to_string(tr.stationary_index()) + " > " + std::to_string(bound);
        });
        rec.stat_max("max_iterations", tr.stationary_index());
        bool norm_s = true, norm_it = true, monotone = true;
        for (const auto& r : cfg.radii) {
            const LogNorm nx = chain_norm(x, r, p);
            norm_s = norm_s && chain_norm(sx, r, p) <= nx;
            for (std::size_t n = 0; n < tr.steps.size(); ++n) {
                norm_it = norm_it && chain_norm(tr.steps[n].iterate, r, p) <= nx;
                if (n > 0) monotone = monotone && chain_norm(tr.steps[n].defect, r, p) <= chain_norm(tr.steps[n - 1].defect, r, p);
            }
        }
        rec.check(kNormS, norm_s, [&] { return "chain " + render(x) + ": s x = " + render(sx); });
        rec.check(kNormIterates, norm_it, [&] { return "chain " + render(x); });
        rec.check(kDefectMonotone, monotone, [&] { return "chain " + render(x); });
        const ChainElement series = C.homotopy_series(x);
        rec.check(kSeries, series == sx, [&] {
            return "chain " + render(x) + ": iteration " + render(sx) + ", series " + render(series);
        });
        if (abelian) rec.check(kAbelian, sx == sigma(x), [&] { return "chain " + render(x); });
        rec.stat_count("s_squared_zero_checked", 1);
        rec.stat_count("s_squared_zero_holds", C.homotopy(sx).is_zero() ? 1 : 0);
    };

    const auto basis = basis_chains(d, cfg.chain_degree);
    std::vector<Phase> phases;
    phases.push_back({basis.size(), [&](std::size_t k, std::mt19937_64&, SampleRecorder& rec) {
                          const auto y = ChainElement::basis(d, Side::S, basis[k].first, basis[k].second);
                          const auto sb = koszul_homotopy(y);
                          const auto lhs = phi(sb, nullptr) + koszul_homotopy(phi(y, nullptr));
                          const auto rhs = y - eta_epsilon(y);
                          rec.check(kKoszulContract, lhs == rhs, [&] {
                              return "Koszul chain " + render(y) + ": phi s + s phi = " + render(lhs);
                          });
                          check_s(pbw_iso_inv(y), rec, kContractBasis);
                      }});
    phases.push_back({cfg.samples, [&](std::size_t, std::mt19937_64& rng, SampleRecorder& rec) {
                          const auto y = random_chain(rng, d, Side::S, cfg.chain_degree, p);
                          const auto sb = koszul_homotopy(y);
                          bool ok = true;
                          for (const auto& r : cfg.radii) ok = ok && chain_norm(sb, r, p) <= chain_norm(y, r, p);
                          rec.check(kKoszulNorm, ok, [&] { return "Koszul chain " + render(y); });
                          check_s(random_chain(rng, d, Side::U, cfg.chain_degree, p), rec, kContractRandom);
                      }});
    run_phases("homotopy", cfg, phases, rep);
    return rep;
}

/// Counit, antipode and comultiplication axioms and isometries.
inline VerificationReport verify_hopf(const LieAlgebra& g, const RunConfig& cfg) {
    const HopfAlgebra H(g);
    const UAlgebra& U = H.base();
    const Prime& p = cfg.prime;
    const std::size_t d = g.dim();
    VerificationReport rep{"hopf", "", false, cfg, {}, {}, 0};
    rep.properties = {{"counit_left"},          {"counit_right"},         {"antipode_left"},
                      {"antipode_right"},       {"antipode_involution"},  {"antipode_isometry"},
                      {"comultiply_isometry"},  {"comultiply_multiplicative"}};
    const std::uint32_t deg = std::min<std::uint32_t>(cfg.product_degree, 4);
    std::vector<Phase> phases;
    phases.push_back({cfg.samples, [&](std::size_t, std::mt19937_64& rng, SampleRecorder& rec) {
                          const UElement u = random_element(rng, d, deg, p);
                          const UElement du = H.comultiply(u);
                          auto ctx = [&] { return "u = " + render(u); };
                          rec.check(0, H.apply_counit_on(du, true) == u, ctx);
                          rec.check(1, H.apply_counit_on(du, false) == u, ctx);
                          const UElement unit_counit = UElement::constant(d, counit(u));
                          rec.check(2, H.mul_with_antipode(du, true) == unit_counit, ctx);
                          rec.check(3, H.mul_with_antipode(du, false) == unit_counit, ctx);
                          const UElement su = U.antipode(u);
                          rec.check(4, U.antipode(su) == u, ctx);
                          bool iso_s = true, iso_d = true;
                          for (const auto& r : cfg.radii) {
                              iso_s = iso_s && gauss_norm(su, r, p) == gauss_norm(u, r, p);
                              iso_d = iso_d && gauss_norm(du, r, p) == gauss_norm(u, r, p);
                          }
                          rec.check(5, iso_s, ctx);
                          rec.check(6, iso_d, ctx);
                          const UElement a = random_element(rng, d, 2, p);
                          const UElement b = random_element(rng, d, 2, p);
                          rec.check(7, H.comultiply(U.mul(a, b)) == H.doubled().mul(H.comultiply(a), H.comultiply(b)),
                                    [&] { return "a = " + render(a) + ", b = " + render(b); });
                      }});
    run_phases("hopf", cfg, phases, rep);
    return rep;
}

/// Dispatches on suite name and stamps labels and timing.
inline VerificationReport run_suite(const std::string& suite, const LieAlgebra& g, const std::string& lie_label,
                                    const RunConfig& cfg, bool allow_invalid = false) {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport rep;
    if (suite == "norms")
        rep = verify_norms(g, cfg);
    else if (suite == "complex")
        rep = verify_complex(g, cfg);
    else if (suite == "homotopy")
        rep = verify_homotopy(g, cfg);
    else if (suite == "hopf")
        rep = verify_hopf(g, cfg);
    else
        throw InputError("unknown suite '" + suite + "' (expected norms, complex, homotopy or hopf)");
    rep.lie_label = lie_label;
    rep.allow_invalid = allow_invalid;
    if (cfg.timing)
        rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

}  // namespace hek

#endif  // HEK_VERIFY_HPP
