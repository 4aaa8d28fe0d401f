#include <cmath>
#include <set>

#include <doctest.h>

#include "harnack/harness.hpp"

using namespace harnack;

namespace {

TrialConfig small_config(std::uint64_t seed = 1, std::int64_t trials = 500) {
    TrialConfig cfg;
    cfg.seed = seed;
    cfg.trials = trials;
    return cfg;
}

}  // namespace

TEST_CASE("splitmix64 streams") {
    SUBCASE("same key, same draws") {
        auto a = SplitMix64::substream(1, 42);
        auto b = SplitMix64::substream(1, 42);
        for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
    }
    SUBCASE("different keys diverge") {
        auto a = SplitMix64::substream(1, 0);
        auto b = SplitMix64::substream(1, 1);
        CHECK(a.next() != b.next());
    }
    SUBCASE("unit draws live in [0, 1)") {
        SplitMix64 rng(99);
        for (int i = 0; i < 10000; ++i) {
            const double u = rng.next_unit();
            CHECK(u >= 0.0);
            CHECK(u < 1.0);
        }
    }
}

TEST_CASE("measure sampling") {
    SUBCASE("deterministic for a fixed stream position") {
        auto a = SplitMix64::substream(7, 3);
        auto b = SplitMix64::substream(7, 3);
        const HerglotzMeasure ma = sample_measure(a, 8, 0.1, 10.0);
        const HerglotzMeasure mb = sample_measure(b, 8, 0.1, 10.0);
        REQUIRE(ma.size() == mb.size());
        for (std::size_t j = 0; j < ma.size(); ++j) {
            CHECK(ma.atoms()[j].theta == mb.atoms()[j].theta);
            CHECK(ma.atoms()[j].weight == mb.atoms()[j].weight);
        }
    }
    SUBCASE("max_atoms = 1 always yields a single atom") {
        SplitMix64 rng(5);
        for (int i = 0; i < 200; ++i) CHECK(sample_measure(rng, 1, 0.1, 10.0).size() == 1);
    }
    SUBCASE("degenerate weight range pins the weights") {
        SplitMix64 rng(6);
        for (int i = 0; i < 200; ++i) {
            const HerglotzMeasure m = sample_measure(rng, 8, 1.0, 1.0);
            for (const auto& a : m.atoms()) CHECK(a.weight == 1.0);
        }
    }
    SUBCASE("atom count spans 1..max_atoms") {
        SplitMix64 rng(8);
        std::set<std::size_t> seen;
        for (int i = 0; i < 2000; ++i) seen.insert(sample_measure(rng, 4, 0.1, 1.0).size());
        CHECK(seen == std::set<std::size_t>({1, 2, 3, 4}));
    }
}

TEST_CASE("disc point sampling") {
    SUBCASE("respects the radius cap") {
        SplitMix64 rng(10);
        for (int i = 0; i < 10000; ++i) {
            CHECK(sample_disc_point(rng, 0.75).abs() <= 0.75 + 1e-15);
        }
    }
    SUBCASE("area-uniform: mean of |z|^2 is rmax^2/2") {
        SplitMix64 rng(12);
        const double rmax = 0.99;
        double acc = 0.0;
        const int n = 100000;
        for (int i = 0; i < n; ++i) acc += std::norm(sample_disc_point(rng, rmax).value);
        const double expected = rmax * rmax / 2.0;
        CHECK(std::fabs(acc / n - expected) <= 0.01 * expected);
    }
}

TEST_CASE("config validation") {
    TrialConfig cfg = small_config();
    CHECK_NOTHROW(cfg.validate());

    cfg.trials = 0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = small_config();
    cfg.rmax = 1.0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = small_config();
    cfg.weight_min = 0.0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = small_config();
    cfg.weight_max = 0.05;  // below weight_min
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = small_config();
    cfg.max_atoms = 0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = small_config();
    cfg.workers = 0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = small_config();
    cfg.tolerance_overrides["no_such_suite"] = 1e-9;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = small_config();
    cfg.tolerance_overrides["main_theorem"] = -1.0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("suite registry") {
    const auto& names = suite_names();
    CHECK(names.size() == 25);
    CHECK(default_tolerance("main_theorem") == 1e-9);
    CHECK(default_tolerance("lemma2_identity") == 1e-12);
    CHECK(default_tolerance("schwarz_pick_gradient") == 1e-12);
    CHECK_THROWS_AS(default_tolerance("bogus"), std::invalid_argument);
    CHECK_THROWS_AS(run_suite("bogus", small_config()), std::invalid_argument);
}

TEST_CASE("single suites run clean") {
    const TrialConfig cfg = small_config();
    const SuiteResult lemma2 = run_suite("lemma2_identity", cfg);
    CHECK(lemma2.violations == 0);
    CHECK(lemma2.worst_slack >= -1e-12);
    CHECK(lemma2.trials == 200 * 101);

    const SuiteResult main = run_suite("main_theorem", cfg);
    CHECK(main.violations == 0);
    CHECK(main.trials == cfg.trials);
    CHECK(main.witness.contains("measure"));

    const SuiteResult sharp = run_suite("extremal_sharpness", cfg);
    CHECK(sharp.violations == 0);
}

TEST_CASE("full run passes and serializes deterministically") {
    const TrialConfig cfg = small_config(1, 300);
    const VerificationReport a = run_all(cfg);
    CHECK(a.pass);
    CHECK(a.suites.size() == suite_names().size());
    for (std::size_t i = 0; i < a.suites.size(); ++i) {
        CHECK(a.suites[i].suite == suite_names()[i]);
        CHECK(a.suites[i].violations == 0);
    }
    const VerificationReport b = run_all(cfg);
    CHECK(a.serialize(cfg) == b.serialize(cfg));

    SUBCASE("report JSON carries the contract fields") {
        const auto j = nlohmann::json::parse(a.serialize(cfg));
        CHECK(j.at("rng") == "splitmix64");
        CHECK(j.at("pass") == true);
        CHECK(j.at("seed") == 1);
        for (const auto& s : j.at("suites")) {
            CHECK(s.contains("suite"));
            CHECK(s.contains("trials"));
            CHECK(s.contains("violations"));
            CHECK(s.contains("worst_slack"));
            CHECK(s.contains("witness"));
        }
    }
}

TEST_CASE("parallel run merges to the serial result") {
    TrialConfig serial = small_config(3, 400);
    TrialConfig parallel = serial;
    parallel.workers = 4;
    const std::string a = run_all(serial).serialize(serial);
    const std::string b = run_all(parallel).serialize(parallel);
    CHECK(a == b);
}

TEST_CASE("zero tolerances surface violations with witnesses") {
    TrialConfig cfg = small_config(1, 200);
    for (const auto& name : suite_names()) cfg.tolerance_overrides[name] = 0.0;
    const VerificationReport report = run_all(cfg);
    CHECK_FALSE(report.pass);

    bool saw_violation = false;
    for (const auto& s : report.suites) {
        if (s.violations > 0) {
            saw_violation = true;
            CHECK(s.worst_slack < 0.0);
            CHECK_FALSE(s.witness.is_null());
        }
    }
    CHECK(saw_violation);
}

TEST_CASE("witnesses replay standalone") {
    // run with tolerances forced to zero so that violations get recorded,
    // then reproduce every worst slack from the serialized witness alone
    TrialConfig cfg = small_config(11, 250);
    for (const auto& name : suite_names()) cfg.tolerance_overrides[name] = 0.0;
    const VerificationReport report = run_all(cfg);
    const auto parsed = nlohmann::json::parse(report.serialize(cfg));
    for (const auto& s : parsed.at("suites")) {
        const std::string name = s.at("suite").get<std::string>();
        const double recorded = s.at("worst_slack").get<double>();
        const double replayed = replay_slack(name, s.at("witness"));
        CHECK(replayed == recorded);
    }
}
