#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "harnack/bounds.hpp"
#include "harnack/herglotz.hpp"
#include "harnack/rng.hpp"

namespace harnack {

/// Configuration of a verification campaign. Random suites run
/// `trials` checks (the gradient oracle runs trials/10 and the mean-value
/// oracle trials/100, matching their heavier per-check cost); grid suites
/// have fixed deterministic sizes.
struct TrialConfig {
    std::uint64_t seed = 1;
    std::int64_t trials = 100000;
    int max_atoms = 8;
    double rmax = 0.99;
    double weight_min = 0.1;
    double weight_max = 10.0;
    int workers = 1;
    std::map<std::string, double> tolerance_overrides;

    /// Throws std::invalid_argument on out-of-range values or unknown
    /// suite names among the overrides.
    void validate() const;
};

struct SuiteResult {
    std::string suite;
    std::int64_t trials = 0;      // checks performed
    std::int64_t violations = 0;  // checks with slack < -tolerance
    double worst_slack = 0.0;     // minimum slack seen
    double tolerance = 0.0;
    nlohmann::ordered_json witness;  // inputs and values at the worst slack

    bool pass() const { return violations == 0; }
    nlohmann::ordered_json to_json() const;
};

struct VerificationReport {
    std::uint64_t seed = 0;
    std::vector<SuiteResult> suites;
    bool pass = false;

    nlohmann::ordered_json to_json(const TrialConfig& config) const;
    std::string serialize(const TrialConfig& config) const;
};

/// Registry of property suites, in fixed execution order.
const std::vector<std::string>& suite_names();

/// Default tolerance of a suite; throws std::invalid_argument if unknown.
double default_tolerance(const std::string& suite);

/// 1 to max_atoms atoms; angles uniform on [0, 2*pi), weights uniform in
/// [weight_min, weight_max].
HerglotzMeasure sample_measure(SplitMix64& rng, int max_atoms, double weight_min,
                               double weight_max);

/// Area-uniform point with |z| <= rmax (radius rmax*sqrt(U), angle uniform).
DiscPoint sample_disc_point(SplitMix64& rng, double rmax);

/// Runs one named suite. Pure in (name, config); the result does not depend
/// on config.workers.
SuiteResult run_suite(const std::string& name, const TrialConfig& config);

/// Runs every suite; pass iff all of them pass.
VerificationReport run_all(const TrialConfig& config);

/// Recomputes the slack of a recorded witness from its serialized inputs
/// alone. Used to confirm that violations reproduce standalone.
double replay_slack(const std::string& suite, const nlohmann::json& witness);

}  // namespace harnack
