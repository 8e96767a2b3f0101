#include <gtest/gtest.h>

#include "hek/verify.hpp"

using hek::RunConfig;
using hek::Scalar;

namespace {

RunConfig small_config(std::uint64_t seed, std::size_t threads) {
    RunConfig cfg;
    cfg.seed = seed;
    cfg.samples = 25;
    cfg.chain_degree = 2;
    cfg.product_degree = 3;
    cfg.threads = threads;
    cfg.timing = false;
    return cfg;
}

const char* kSuites[] = {"norms", "complex", "homotopy", "hopf"};

}  // namespace

TEST(Sampling, SeededAndIndependentOfOrder) {
    auto a = hek::sample_rng(7, "norms", 0, 3), b = hek::sample_rng(7, "norms", 0, 3);
    EXPECT_EQ(a(), b());
    EXPECT_NE(hek::sample_rng(7, "norms", 0, 3)(), hek::sample_rng(7, "norms", 0, 4)());
    EXPECT_NE(hek::sample_rng(7, "norms", 0, 3)(), hek::sample_rng(7, "hopf", 0, 3)());
    EXPECT_NE(hek::sample_rng(7, "norms", 0, 3)(), hek::sample_rng(8, "norms", 0, 3)());
}

TEST(Sampling, CoefficientsAreNonzero) {
    std::mt19937_64 rng(1);
    const hek::Prime p(5);
    for (int i = 0; i < 500; ++i) {
        const Scalar c = hek::random_coefficient(rng, p);
        ASSERT_NE(c, 0);
        const auto v = hek::vp(c, p);
        ASSERT_TRUE(v.has_value());
        EXPECT_LE(std::abs(*v), 5);
    }
}

TEST(Suites, AllPassOnPresets) {
    for (const auto& name : {"abelian(2)", "heisenberg", "sl2", "borel2"})
        for (const char* suite : kSuites) {
            const auto rep = hek::run_suite(suite, hek::preset(name), name, small_config(3, 1));
            EXPECT_TRUE(rep.passed()) << suite << " on " << name << "\n" << rep.to_text();
            for (const auto& p : rep.properties) EXPECT_GT(p.checked, 0u) << suite << "/" << p.name;
        }
}

TEST(Suites, ThreadCountDoesNotChangeReports) {
    for (const char* suite : kSuites) {
        const auto g = hek::presets::sl2();
        const auto one = hek::run_suite(suite, g, "sl2", small_config(11, 1)).to_json().dump();
        const auto four = hek::run_suite(suite, g, "sl2", small_config(11, 4)).to_json().dump();
        EXPECT_EQ(one, four) << suite;
        EXPECT_EQ(one, hek::run_suite(suite, g, "sl2", small_config(11, 3)).to_json().dump()) << suite;
    }
}

TEST(Suites, NonIntegralConstantProducesCounterexample) {
    hek::LieAlgebra g(2);
    g.set_bracket(0, 1, {{1, Scalar(1, 2)}});
    const auto rep = hek::run_suite("norms", g, "nonintegral", small_config(5, 1), true);
    EXPECT_FALSE(rep.passed());
    bool found = false;
    for (const auto& p : rep.properties)
        if (p.name.rfind("multiplicativity", 0) == 0 && p.failures > 0) {
            found = true;
            EXPECT_TRUE(p.first_counterexample.has_value());
        }
    EXPECT_TRUE(found) << rep.to_text();
}

TEST(Suites, HomotopyReportsIterationStats) {
    const auto rep = hek::run_suite("homotopy", hek::presets::heisenberg(), "heisenberg", small_config(2, 1));
    const auto j = rep.to_json();
    ASSERT_TRUE(j.contains("stats"));
    EXPECT_TRUE(j["stats"].contains("max_iterations"));
    EXPECT_LE(j["stats"]["max_iterations"].get<long>(), 2 + 3 + 1);
}

TEST(Report, JsonSchema) {
    const auto rep = hek::run_suite("hopf", hek::presets::abelian(1), "abelian(1)", small_config(1, 1));
    const auto j = rep.to_json();
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    EXPECT_EQ(keys, (std::vector<std::string>{"suite", "config", "properties", "elapsed_ms"}));
    EXPECT_EQ(j["suite"], "hopf");
    EXPECT_EQ(j["config"]["lie"], "abelian(1)");
    EXPECT_EQ(j["config"]["radii"], nlohmann::ordered_json::parse(R"(["1/2","1","2"])"));
    EXPECT_EQ(j["elapsed_ms"], 0);
    for (const auto& p : j["properties"]) {
        EXPECT_TRUE(p.contains("name"));
        EXPECT_TRUE(p["first_counterexample"].is_null());
    }
    const std::string csv = rep.to_csv();
    EXPECT_EQ(csv.rfind("name,checked,failures,first_counterexample\n", 0), 0u);
}

TEST(Report, UnknownSuiteIsInputError) {
    EXPECT_THROW(hek::run_suite("bogus", hek::presets::sl2(), "sl2", small_config(1, 1)), hek::InputError);
}
