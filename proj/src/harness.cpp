#include "harnack/harness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <thread>

namespace harnack {

namespace {

using Json = nlohmann::ordered_json;

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Suite ordinals; part of the substream keying, so the order is fixed.
enum SuiteOrdinal : int {
    kIsometry = 0,
    kCayleyIsometry,
    kRoundTrip,
    kRadialClosedForm,
    kRadialIntegration,
    kDiscImageBoundary,
    kDiscImageInterval,
    kPositivity,
    kNormalizationZero,
    kGradientConsistency,
    kSchwarzPickGradient,
    kSchwarzPickEquality,
    kDerivativeBound,
    kHarmonicity,
    kMainTheorem,
    kContainment,
    kContainmentC1,
    kExtremalSharpness,
    kExtremalGradient,
    kLemma2Identity,
    kMonotonicity,
    kMarkovic,
    kBeardonCarne,
    kMarkovicEquality,
    kBeardonCarneEquality,
    kSuiteCount
};

SplitMix64 trial_rng(const TrialConfig& cfg, int ordinal, std::int64_t i) {
    const std::uint64_t key =
        (static_cast<std::uint64_t>(ordinal) << 40) | static_cast<std::uint64_t>(i);
    return SplitMix64::substream(cfg.seed, key);
}

Json complex_json(Complex v) { return Json{{"re", v.real()}, {"im", v.imag()}}; }

Complex complex_from(const nlohmann::json& j) {
    return Complex{j.at("re").get<double>(), j.at("im").get<double>()};
}

Json measure_json(const HerglotzMeasure& m) {
    Json arr = Json::array();
    for (const auto& a : m.atoms()) arr.push_back(Json{{"theta", a.theta}, {"w", a.weight}});
    return arr;
}

HerglotzMeasure measure_from(const nlohmann::json& arr) {
    std::vector<HerglotzAtom> atoms;
    for (const auto& it : arr)
        atoms.push_back(HerglotzAtom{it.at("theta").get<double>(), it.at("w").get<double>()});
    return HerglotzMeasure(std::move(atoms));
}

// ---------------------------------------------------------------------------
// Oracles.

template <typename F>
double simpson(F&& f, double a, double b, int panels) {
    const int n = 2 * panels;
    const double h = (b - a) / n;
    double s = f(a) + f(b);
    for (int k = 1; k < n; ++k) s += f(a + k * h) * ((k & 1) ? 4.0 : 2.0);
    return s * h / 3.0;
}

// Geodesic-definition distance oracle: integrate the disc density along the
// radial segment [0, t]; independent of the closed form used by dist_disc.
double radial_distance_by_quadrature(double t) {
    return simpson([](double s) { return density_disc(DiscPoint(s)); }, 0.0, t, 4096);
}

// Image of the disc point r*e^{i phi} under the isometry sending 0 to b.
Complex halfplane_circle_sample(double b, double r, double phi) {
    const Complex a = cayley_to_disc(HalfPlanePoint(b)).value;
    const DiscPoint mapped{disc_automorphism(a, DiscPoint(std::polar(r, phi)))};
    return cayley_to_halfplane(mapped).value;
}

// ---------------------------------------------------------------------------
// Grids.

constexpr int kTGridN = 200;   // |z| in [0, 0.99]
constexpr int kCGridN = 101;   // c in [0, 1]
double t_grid(int j) { return 0.99 * j / (kTGridN - 1); }
double c_grid(int k) { return k / 100.0; }

constexpr double kDiscB[3] = {0.5, 1.0, 2.0};
constexpr int kDiscRN = 9;  // r in {0.1, ..., 0.9}
constexpr int kCircleSamples = 4096;
double disc_r(int i) { return 0.1 * (i + 1); }

constexpr int kRadialIntN = 18;  // t in {0.10, 0.15, ..., 0.95}
double radial_int_t(int i) { return 0.1 + 0.05 * i; }

constexpr double kSharpC[5] = {0.0, 0.25, 0.5, 0.75, 1.0};
constexpr int kSharpXN = 100;  // x in {0, 0.01, ..., 0.99}

constexpr int kEqAngles = 24;
double eq_angle(int i) { return kTwoPi * i / kEqAngles; }
constexpr double kEqX[7] = {-0.9, -0.6, -0.3, 0.0, 0.3, 0.6, 0.9};

// ---------------------------------------------------------------------------
// Per-suite slack functions on typed inputs (shared with witness replay).

double isometry_gap(Complex c, const DiscPoint& z1, const DiscPoint& z2) {
    const DiscPoint m1{disc_automorphism(c, z1)};
    const DiscPoint m2{disc_automorphism(c, z2)};
    return std::fabs(dist_disc(m1, m2) - dist_disc(z1, z2));
}

double cayley_isometry_gap(const DiscPoint& z1, const DiscPoint& z2) {
    return std::fabs(dist_disc(z1, z2) -
                     dist_halfplane(cayley_to_halfplane(z1), cayley_to_halfplane(z2)));
}

double round_trip_gap(const DiscPoint& z) {
    return std::abs(cayley_to_disc(cayley_to_halfplane(z)).value - z.value);
}

double radial_closed_form_gap(double t) {
    return std::fabs(dist_disc(DiscPoint(t), DiscPoint(0.0)) - std::log((1.0 + t) / (1.0 - t)));
}

double radial_integration_gap(double t) {
    return std::fabs(dist_disc(DiscPoint(t), DiscPoint(0.0)) - radial_distance_by_quadrature(t));
}

double disc_boundary_gap(double b, double r, double phi) {
    const EuclideanDisc disc = halfplane_disc_image(b, r);
    const Complex w = halfplane_circle_sample(b, r, phi);
    return std::fabs(std::abs(w - disc.center) - disc.radius);
}

double disc_interval_relgap(double b, double r) {
    double mn = kInf, mx = -kInf;
    for (int k = 0; k < kCircleSamples; ++k) {
        const double re = halfplane_circle_sample(b, r, kTwoPi * k / kCircleSamples).real();
        mn = std::min(mn, re);
        mx = std::max(mx, re);
    }
    const RealInterval iv = halfplane_disc_re_interval(b, r);
    return std::max(std::fabs(mn - iv.lo) / iv.lo, std::fabs(mx - iv.hi) / iv.hi);
}

double normalization_gap(const HerglotzMeasure& m) {
    const Complex f0 = eval_f(m, DiscPoint(0.0)).value;
    return std::max(std::fabs(f0.real() - m.total_weight()), std::fabs(f0.imag()));
}

// Returns the relative deviation, or -1 when the gradient is too small to
// compare against the stencil (|grad u| <= 1e-8; the check is skipped).
double gradient_relgap(const HerglotzMeasure& m, const DiscPoint& z) {
    const GradientVector g = grad_u(m, z);
    const double scale = g.norm();
    if (scale <= 1e-8) return -1.0;
    const GradientVector fd = grad_u_fd(m, z, 1e-5);
    return std::hypot(g.ux - fd.ux, g.uy - fd.uy) / scale;
}

double schwarz_equality_relgap(double theta, const DiscPoint& z) {
    const HerglotzMeasure m = HerglotzMeasure::single(theta);
    const double lhs = grad_u(m, z).norm();
    const double rhs = eval_u(m, z) * density_disc(z);
    return std::fabs(rhs - lhs) / rhs;
}

double main_theorem_slack(const HerglotzMeasure& m, const DiscPoint& z) {
    const BoundInterval b = stronger_harnack(z, hyperbolic_derivative_zero(m));
    const double ratio = eval_u(m, z) / eval_u(m, DiscPoint(0.0));
    return std::min((b.upper - ratio) / b.upper, (ratio - b.lower) / b.lower);
}

double containment_slack(double t, double c) {
    const DiscPoint z{t};
    const BoundInterval s = stronger_harnack(z, c);
    const BoundInterval cl = classical_harnack(z);
    return std::min(cl.upper - s.upper, s.lower - cl.lower);
}

double containment_c1_gap(double t) {
    const DiscPoint z{t};
    const BoundInterval s = stronger_harnack(z, 1.0);
    const BoundInterval cl = classical_harnack(z);
    return std::max(std::fabs(s.upper - cl.upper), std::fabs(s.lower - cl.lower));
}

double sharpness_relgap(double c, double x) {
    const DiscPoint z{x};
    const BoundInterval b = stronger_harnack(z, c);
    return std::max(std::fabs(extremal_u1(c, z) - b.upper) / b.upper,
                    std::fabs(extremal_u2(c, z) - b.lower) / b.lower);
}

double extremal_gradient_gap(double c, ExtremalKind which) {
    return std::fabs(gradient_norm_extremal(c, which) - 2.0 * c);
}

double monotonicity_diff_c(double t, double c0, double c1) {
    const DiscPoint z{t};
    return stronger_harnack(z, c1).upper - stronger_harnack(z, c0).upper;
}

double monotonicity_diff_t(double c, double t0, double t1) {
    return stronger_harnack(DiscPoint(t1), c).upper - stronger_harnack(DiscPoint(t0), c).upper;
}

double markovic_equality_abs_slack(double theta, double x1, double x2) {
    const HerglotzMeasure m = HerglotzMeasure::single(theta);
    const Complex dir = std::polar(1.0, theta);
    return std::fabs(markovic_slack(m, DiscPoint(x1 * dir), DiscPoint(x2 * dir)).slack);
}

double beardon_carne_equality_abs_slack(double theta, double x) {
    const HerglotzMeasure m = HerglotzMeasure::single(theta);
    return std::fabs(beardon_carne_slack(m, DiscPoint(x * std::polar(1.0, theta))).slack);
}

// ---------------------------------------------------------------------------
// Suite registry.

struct SuiteSpec {
    const char* name;
    double tol;
    std::int64_t (*count)(const TrialConfig&);
    double (*slack)(std::int64_t, const TrialConfig&);
    Json (*witness)(std::int64_t, const TrialConfig&);
};

std::int64_t count_trials(const TrialConfig& c) { return c.trials; }
std::int64_t count_trials_10th(const TrialConfig& c) { return std::max<std::int64_t>(1, c.trials / 10); }
std::int64_t count_trials_100th(const TrialConfig& c) { return std::max<std::int64_t>(1, c.trials / 100); }

HerglotzMeasure sample_cfg_measure(SplitMix64& rng, const TrialConfig& cfg) {
    return sample_measure(rng, cfg.max_atoms, cfg.weight_min, cfg.weight_max);
}

const std::vector<SuiteSpec>& registry() {
    static const std::vector<SuiteSpec> suites = {
        {"isometry_invariance", 1e-10, count_trials,
         [](std::int64_t i, const TrialConfig& cfg) {
             auto rng = trial_rng(cfg, kIsometry, i);
             const Complex c = sample_disc_point(rng, cfg.rmax).value;
             const DiscPoint z1 = sample_disc_point(rng, cfg.rmax);
             const DiscPoint z2 = sample_disc_point(rng, cfg.rmax);
             return -isometry_gap(c, z1, z2);
         },
         [](std::int64_t i, const TrialConfig& cfg) {
             auto rng = trial_rng(cfg, kIsometry, i);
             const Complex c = sample_disc_point(rng, cfg.rmax).value;
             const DiscPoint z1 = sample_disc_point(rng, cfg.rmax);
             const DiscPoint z2 = sample_disc_point(rng, cfg.rmax);
             const double gap = isometry_gap(c, z1, z2);
             return Json{{"trial", i},
                         {"c", complex_json(c)},
                         {"z1", complex_json(z1.value)},
                         {"z2", complex_json(z2.value)},
                         {"gap", gap},
                         {"slack", -gap}};
         }},
        {"cayley_isometry", 1e-10, count_trials,
         [](std::int64_t i, const TrialConfig& cfg) {
             auto rng = trial_rng(cfg, kCayleyIsometry, i);
             const DiscPoint z1 = sample_disc_point(rng, cfg.rmax);
             const DiscPoint z2 = sample_disc_point(rng, cfg.rmax);
             return -cayley_isometry_gap(z1, z2);
         },
         [](std::int64_t i, const TrialConfig& cfg) {
             auto rng = trial_rng(cfg, kCayleyIsometry, i);
             const DiscPoint z1 = sample_disc_point(rng, cfg.rmax);
             const DiscPoint z2 = sample_disc_point(rng, cfg.rmax);
             const double gap = cayley_isometry_gap(z1, z2);
             return Json{{"trial", i},
                         {"z1", complex_json(z1.value)},
                         {"z2", complex_json(z2.value)},
                         {"gap", gap},
                         {"slack", -gap}};
         }},
        {"cayley_round_trip", 1e-14, count_trials,
         [](std::int64_t i, const TrialConfig& cfg) {
             auto rng = trial_rng(cfg, kRoundTrip, i);
             const DiscPoint z = sample_disc_point(rng, std::min(cfg.rmax, 0.999));
             return -round_trip_gap(z);
         },
         [](std::int64_t i, const TrialConfig& cfg) {
             auto rng = trial_rng(cfg, kRoundTrip, i);
             const DiscPoint z = sample_disc_point(rng, std::min(cfg.rmax, 0.999));
             const double gap = round_trip_gap(z);
             return Json{{"trial", i}, {"z", complex_json(z.value)}, {"gap", gap}, {"slack", -gap}};
         }},
        {"radial_closed_form", 1e-10, count_trials,
         [](std::int64_t i, const TrialConfig& cfg) {
             auto rng = trial_rng(cfg, kRadialClosedForm, i);
             return -radial_closed_form_gap(cfg.rmax * rng.next_unit());
         },
         [](std::int64_t i, const TrialConfig& cfg) {
             auto rng = trial_rng(cfg, kRadialClosedForm, i);
             const double t = cfg.rmax * rng.next_unit();
             const double gap = radial_closed_form_gap(t);
             return Json{{"trial", i}, {"t", t}, {"gap", gap}, {"slack", -gap}};
         }},
        {"radial_integration", 1e-6,
         [](const TrialConfig&) { return static_cast<std::int64_t>(kRadialIntN); },
         [](std::int64_t i, const TrialConfig&) {
             return -radial_integration_gap(radial_int_t(static_cast<int>(i)));
         },
         [](std::int64_t i, const TrialConfig&) {
             const double t = radial_int_t(static_cast<int>(i));
             const double gap = radial_integration_gap(t);
             return Json{{"t", t}, {"gap", gap}, {"slack", -gap}};
         }},
        {"disc_image_boundary", 1e-9,
         [](const TrialConfig&) {
             return static_cast<std::int64_t>(3 * kDiscRN * kCircleSamples);
         },
         [](std::int64_t i, const TrialConfig&) {
             const int bi = static_cast<int>(i / (kDiscRN * kCircleSamples));
             const int rem = static_cast<int>(i % (kDiscRN * kCircleSamples));
             const double phi = kTwoPi * (rem % kCircleSamples) / kCircleSamples;
             return -disc_boundary_gap(kDiscB[bi], disc_r(rem / kCircleSamples), phi);
         },
         [](std::int64_t i, const TrialConfig&) {
             const int bi = static_cast<int>(i / (kDiscRN * kCircleSamples));
             const int rem = static_cast<int>(i % (kDiscRN * kCircleSamples));
             const double b = kDiscB[bi];
             const double r = disc_r(rem / kCircleSamples);
             const double phi = kTwoPi * (rem % kCircleSamples) / kCircleSamples;
             const double gap = disc_boundary_gap(b, r, phi);
             return Json{{"b", b}, {"r", r}, {"angle", phi}, {"gap", gap}, {"slack", -gap}};
         }},
        {"disc_image_interval", 1e-6,
         [](const TrialConfig&) { return static_cast<std::int64_t>(3 * kDiscRN); },
         [](std::int64_t i, const TrialConfig&) {
             return -disc_interval_relgap(kDiscB[i / kDiscRN], disc_r(static_cast<int>(i % kDiscRN)));
         },
         [](std::int64_t i, const TrialConfig&) {
             const double b = kDiscB[i / kDiscRN];
             const double r = disc_r(static_cast<int>(i % kDiscRN));
             const double gap = disc_interval_relgap(b, r);
             return Json{{"b", b}, {"r", r}, {"relative_gap", gap}, {"slack", -gap}};
         }},
        {"positivity", 0.0, count_trials,
         [](std::int64_t i, const TrialConfig& cfg) {
             auto rng = trial_rng(cfg, kPositivity, i);
             const HerglotzMeasure m = sample_cfg_measure(rng, cfg);
             const DiscPoint z = sample_disc_point(rng, cfg.rmax);
             return eval_u(m, z);
         },
         [](std::int64_t i, const TrialConfig& cfg) {
             auto rng = trial_rng(cfg, kPositivity, i);
             const HerglotzMeasure m = sample_cfg_measure(rng, cfg);
             const DiscPoint z = sample_disc_point(rng, cfg.rmax);
             const double u = eval_u(m, z);
             return Json{{"trial", i},
                         {"measure", measure_json(m)},
                         {"z", complex_json(z.value)},
                         {"u", u},
                         {"slack", u}};
         }},
        {"normalization_zero", 1e-12, count_trials,
         [](std::int64_t i, const TrialConfig& cfg) {
             auto rng = trial_rng(cfg, kNormalizationZero, i);
             return -normalization_gap(sample_cfg_measure(rng, cfg));
         },
         [](std::int64_t i, const TrialConfig& cfg) {
             auto rng = trial_rng(cfg, kNormalizationZero, i);
             const HerglotzMeasure m = sample_cfg_measure(rng, cfg);
             const double gap = normalization_gap(m);
             return Json{{"trial", i}, {"measure", measure_json(m)}, {"gap", gap}, {"slack", -gap}};
         }},
        {"gradient_consistency", 1e-6, count_trials_10th,
         [](std::int64_t i, const TrialConfig& cfg) {
             auto rng = trial_rng(cfg, kGradientConsistency, i);
             const HerglotzMeasure m = sample_cfg_measure(rng, cfg);
             const DiscPoint z = sample_disc_point(rng, std::min(cfg.rmax, 0.9));
             const double g = gradient_relgap(m, z);
             return g < 0.0 ? kInf : -g;
         },
         [](std::int64_t i, const TrialConfig& cfg) {
             auto rng = trial_rng(cfg, kGradientConsistency, i);
             const HerglotzMeasure m = sample_cfg_measure(rng, cfg);
             const DiscPoint z = sample_disc_point(rng, std::min(cfg.rmax, 0.9));
             const double g = gradient_relgap(m, z);
             Json w{{"trial", i}, {"measure", measure_json(m)}, {"z", complex_json(z.value)}};
             if (g < 0.0) {
                 w["skipped"] = true;
             } else {
                 w["relative_gap"] = g;
             }
             w["slack"] = g < 0.0 ? kInf : -g;
             return w;
         }},
        {"schwarz_pick_gradient", 1e-12, count_trials,
         [](std::int64_t i, const TrialConfig& cfg) {
             auto rng = trial_rng(cfg, kSchwarzPickGradient, i);
             const HerglotzMeasure m = sample_cfg_measure(rng, cfg);
             const DiscPoint z = sample_disc_point(rng, cfg.rmax);
             return schwarz_pick_gradient_slack(m, z).slack;
         },
         [](std::int64_t i, const TrialConfig& cfg) {
             auto rng = trial_rng(cfg, kSchwarzPickGradient, i);
             const HerglotzMeasure m = sample_cfg_measure(rng, cfg);
             const DiscPoint z = sample_disc_point(rng, cfg.rmax);
             const InequalitySlack s = schwarz_pick_gradient_slack(m, z);
             return Json{{"trial", i},
                         {"measure", measure_json(m)},
                         {"z", complex_json(z.value)},
                         {"lhs", s.lhs},
                         {"rhs", s.rhs},
                         {"slack", s.slack}};
         }},
        {"schwarz_pick_equality", 1e-10,
         [](const TrialConfig&) { return static_cast<std::int64_t>(kEqAngles * 12 * 16); },
         [](std::int64_t i, const TrialConfig&) {
             const double theta = eq_angle(static_cast<int>(i / (12 * 16)));
             const int rem = static_cast<int>(i % (12 * 16));
             const double rho = 0.09 * (rem / 16);
             const double psi = kTwoPi * (rem % 16) / 16;
             return -schwarz_equality_relgap(theta, DiscPoint(std::polar(rho, psi)));
         },
         [](std::int64_t i, const TrialConfig&) {
             const double theta = eq_angle(static_cast<int>(i / (12 * 16)));
             const int rem = static_cast<int>(i % (12 * 16));
             const double rho = 0.09 * (rem / 16);
             const double psi = kTwoPi * (rem % 16) / 16;
             const DiscPoint z{std::polar(rho, psi)};
             const double gap = schwarz_equality_relgap(theta, z);
             return Json{{"theta", theta},
                         {"z", complex_json(z.value)},
                         {"relative_gap", gap},
                         {"slack", -gap}};
         }},
        {"hyperbolic_derivative_bound", 1e-14, count_trials,
         [](std::int64_t i, const TrialConfig& cfg) {
             auto rng = trial_rng(cfg, kDerivativeBound, i);
             return 1.0 - hyperbolic_derivative_zero(sample_cfg_measure(rng, cfg));
         },
         [](std::int64_t i, const TrialConfig& cfg) {
             auto rng = trial_rng(cfg, kDerivativeBound, i);
             const HerglotzMeasure m = sample_cfg_measure(rng, cfg);
             const double v = hyperbolic_derivative_zero(m);
             return Json{{"trial", i}, {"measure", measure_json(m)}, {"value", v}, {"slack", 1.0 - v}};
         }},
        {"harmonicity", 1e-9, count_trials_100th,
         [](std::int64_t i, const TrialConfig& cfg) {
             auto rng = trial_rng(cfg, kHarmonicity, i);
             const HerglotzMeasure m = sample_cfg_measure(rng, cfg);
             const DiscPoint z0 = sample_disc_point(rng, std::min(cfg.rmax, 0.5));
             const double rho = 0.3 * (0.5 + 0.5 * rng.next_unit());
             return -mean_value_check(m, z0, rho, 512);
         },
         [](std::int64_t i, const TrialConfig& cfg) {
             auto rng = trial_rng(cfg, kHarmonicity, i);
             const HerglotzMeasure m = sample_cfg_measure(rng, cfg);
             const DiscPoint z0 = sample_disc_point(rng, std::min(cfg.rmax, 0.5));
             const double rho = 0.3 * (0.5 + 0.5 * rng.next_unit());
             const double gap = mean_value_check(m, z0, rho, 512);
             return Json{{"trial", i},
                         {"measure", measure_json(m)},
                         {"z0", complex_json(z0.value)},
                         {"rho", rho},
                         {"n", 512},
                         {"gap", gap},
                         {"slack", -gap}};
         }},
        {"main_theorem", 1e-9, count_trials,
         [](std::int64_t i, const TrialConfig& cfg) {
             auto rng = trial_rng(cfg, kMainTheorem, i);
             const HerglotzMeasure m = sample_cfg_measure(rng, cfg);
             const DiscPoint z = sample_disc_point(rng, cfg.rmax);
             return main_theorem_slack(m, z);
         },
         [](std::int64_t i, const TrialConfig& cfg) {
             auto rng = trial_rng(cfg, kMainTheorem, i);
             const HerglotzMeasure m = sample_cfg_measure(rng, cfg);
             const DiscPoint z = sample_disc_point(rng, cfg.rmax);
             const double c = hyperbolic_derivative_zero(m);
             const BoundInterval b = stronger_harnack(z, c);
             const double ratio = eval_u(m, z) / eval_u(m, DiscPoint(0.0));
             return Json{{"trial", i},
                         {"measure", measure_json(m)},
                         {"z", complex_json(z.value)},
                         {"c", c},
                         {"ratio", ratio},
                         {"lower", b.lower},
                         {"upper", b.upper},
                         {"slack", main_theorem_slack(m, z)}};
         }},
        {"containment", 0.0,
         [](const TrialConfig&) { return static_cast<std::int64_t>(kTGridN * kCGridN); },
         [](std::int64_t i, const TrialConfig&) {
             return containment_slack(t_grid(static_cast<int>(i / kCGridN)),
                                      c_grid(static_cast<int>(i % kCGridN)));
         },
         [](std::int64_t i, const TrialConfig&) {
             const double t = t_grid(static_cast<int>(i / kCGridN));
             const double c = c_grid(static_cast<int>(i % kCGridN));
             return Json{{"t", t}, {"c", c}, {"slack", containment_slack(t, c)}};
         }},
        {"containment_c1_equality", 1e-12,
         [](const TrialConfig&) { return static_cast<std::int64_t>(kTGridN); },
         [](std::int64_t i, const TrialConfig&) {
             return -containment_c1_gap(t_grid(static_cast<int>(i)));
         },
         [](std::int64_t i, const TrialConfig&) {
             const double t = t_grid(static_cast<int>(i));
             const double gap = containment_c1_gap(t);
             return Json{{"t", t}, {"gap", gap}, {"slack", -gap}};
         }},
        {"extremal_sharpness", 1e-9,
         [](const TrialConfig&) { return static_cast<std::int64_t>(5 * kSharpXN); },
         [](std::int64_t i, const TrialConfig&) {
             return -sharpness_relgap(kSharpC[i / kSharpXN], 0.01 * (i % kSharpXN));
         },
         [](std::int64_t i, const TrialConfig&) {
             const double c = kSharpC[i / kSharpXN];
             const double x = 0.01 * (i % kSharpXN);
             const BoundInterval b = stronger_harnack(DiscPoint(x), c);
             return Json{{"c", c},
                         {"x", x},
                         {"u1", extremal_u1(c, DiscPoint(x))},
                         {"u2", extremal_u2(c, DiscPoint(x))},
                         {"lower", b.lower},
                         {"upper", b.upper},
                         {"slack", -sharpness_relgap(c, x)}};
         }},
        {"extremal_gradient", 1e-6,
         [](const TrialConfig&) { return static_cast<std::int64_t>(10); },
         [](std::int64_t i, const TrialConfig&) {
             const ExtremalKind which = (i % 2 == 0) ? ExtremalKind::u1 : ExtremalKind::u2;
             return -extremal_gradient_gap(kSharpC[i / 2], which);
         },
         [](std::int64_t i, const TrialConfig&) {
             const double c = kSharpC[i / 2];
             const ExtremalKind which = (i % 2 == 0) ? ExtremalKind::u1 : ExtremalKind::u2;
             const double v = gradient_norm_extremal(c, which);
             return Json{{"c", c},
                         {"which", i % 2 == 0 ? "u1" : "u2"},
                         {"value", v},
                         {"expected", 2.0 * c},
                         {"gap", std::fabs(v - 2.0 * c)},
                         {"slack", -std::fabs(v - 2.0 * c)}};
         }},
        {"lemma2_identity", 1e-12,
         [](const TrialConfig&) { return static_cast<std::int64_t>(kTGridN * kCGridN); },
         [](std::int64_t i, const TrialConfig&) {
             return -lemma2_identity_gap(c_grid(static_cast<int>(i % kCGridN)),
                                         t_grid(static_cast<int>(i / kCGridN)));
         },
         [](std::int64_t i, const TrialConfig&) {
             const double t = t_grid(static_cast<int>(i / kCGridN));
             const double c = c_grid(static_cast<int>(i % kCGridN));
             const double gap = lemma2_identity_gap(c, t);
             return Json{{"c", c}, {"t", t}, {"gap", gap}, {"slack", -gap}};
         }},
        {"monotonicity", 0.0,
         [](const TrialConfig&) { return static_cast<std::int64_t>(900 + 5 * (kTGridN - 1)); },
         [](std::int64_t i, const TrialConfig&) {
             if (i < 900) {
                 const double t = 0.1 * (i / 100 + 1);
                 const int k = static_cast<int>(i % 100);
                 return monotonicity_diff_c(t, c_grid(k), c_grid(k + 1));
             }
             const std::int64_t j = i - 900;
             const double c = kSharpC[j / (kTGridN - 1)];
             const int k = static_cast<int>(j % (kTGridN - 1));
             return monotonicity_diff_t(c, t_grid(k), t_grid(k + 1));
         },
         [](std::int64_t i, const TrialConfig&) {
             if (i < 900) {
                 const double t = 0.1 * (i / 100 + 1);
                 const int k = static_cast<int>(i % 100);
                 const double d = monotonicity_diff_c(t, c_grid(k), c_grid(k + 1));
                 return Json{{"axis", "c"},   {"t", t},          {"from", c_grid(k)},
                             {"to", c_grid(k + 1)}, {"difference", d}, {"slack", d}};
             }
             const std::int64_t j = i - 900;
             const double c = kSharpC[j / (kTGridN - 1)];
             const int k = static_cast<int>(j % (kTGridN - 1));
             const double d = monotonicity_diff_t(c, t_grid(k), t_grid(k + 1));
             return Json{{"axis", "t"},   {"c", c},          {"from", t_grid(k)},
                         {"to", t_grid(k + 1)}, {"difference", d}, {"slack", d}};
         }},
        {"markovic", 1e-10, count_trials,
         [](std::int64_t i, const TrialConfig& cfg) {
             auto rng = trial_rng(cfg, kMarkovic, i);
             const HerglotzMeasure m = sample_cfg_measure(rng, cfg);
             const DiscPoint z1 = sample_disc_point(rng, cfg.rmax);
             const DiscPoint z2 = sample_disc_point(rng, cfg.rmax);
             return markovic_slack(m, z1, z2).slack;
         },
         [](std::int64_t i, const TrialConfig& cfg) {
             auto rng = trial_rng(cfg, kMarkovic, i);
             const HerglotzMeasure m = sample_cfg_measure(rng, cfg);
             const DiscPoint z1 = sample_disc_point(rng, cfg.rmax);
             const DiscPoint z2 = sample_disc_point(rng, cfg.rmax);
             const InequalitySlack s = markovic_slack(m, z1, z2);
             return Json{{"trial", i},
                         {"measure", measure_json(m)},
                         {"z1", complex_json(z1.value)},
                         {"z2", complex_json(z2.value)},
                         {"lhs", s.lhs},
                         {"rhs", s.rhs},
                         {"slack", s.slack}};
         }},
        {"beardon_carne", 1e-10, count_trials,
         [](std::int64_t i, const TrialConfig& cfg) {
             auto rng = trial_rng(cfg, kBeardonCarne, i);
             const HerglotzMeasure m = sample_cfg_measure(rng, cfg);
             const DiscPoint z = sample_disc_point(rng, cfg.rmax);
             return beardon_carne_slack(m, z).slack;
         },
         [](std::int64_t i, const TrialConfig& cfg) {
             auto rng = trial_rng(cfg, kBeardonCarne, i);
             const HerglotzMeasure m = sample_cfg_measure(rng, cfg);
             const DiscPoint z = sample_disc_point(rng, cfg.rmax);
             const InequalitySlack s = beardon_carne_slack(m, z);
             return Json{{"trial", i},
                         {"measure", measure_json(m)},
                         {"z", complex_json(z.value)},
                         {"lhs", s.lhs},
                         {"rhs", s.rhs},
                         {"slack", s.slack}};
         }},
        {"markovic_equality", 1e-10,
         [](const TrialConfig&) { return static_cast<std::int64_t>(kEqAngles * 49); },
         [](std::int64_t i, const TrialConfig&) {
             const double theta = eq_angle(static_cast<int>(i / 49));
             const int p = static_cast<int>(i % 49);
             return -markovic_equality_abs_slack(theta, kEqX[p / 7], kEqX[p % 7]);
         },
         [](std::int64_t i, const TrialConfig&) {
             const double theta = eq_angle(static_cast<int>(i / 49));
             const int p = static_cast<int>(i % 49);
             const double x1 = kEqX[p / 7];
             const double x2 = kEqX[p % 7];
             const double gap = markovic_equality_abs_slack(theta, x1, x2);
             return Json{{"theta", theta}, {"x1", x1}, {"x2", x2}, {"abs_slack", gap}, {"slack", -gap}};
         }},
        {"beardon_carne_equality", 1e-10,
         [](const TrialConfig&) { return static_cast<std::int64_t>(kEqAngles * 19); },
         [](std::int64_t i, const TrialConfig&) {
             const double theta = eq_angle(static_cast<int>(i / 19));
             const double x = -0.9 + 0.1 * (i % 19);
             return -beardon_carne_equality_abs_slack(theta, x);
         },
         [](std::int64_t i, const TrialConfig&) {
             const double theta = eq_angle(static_cast<int>(i / 19));
             const double x = -0.9 + 0.1 * (i % 19);
             const double gap = beardon_carne_equality_abs_slack(theta, x);
             return Json{{"theta", theta}, {"x", x}, {"abs_slack", gap}, {"slack", -gap}};
         }},
    };
    return suites;
}

const SuiteSpec& find_suite(const std::string& name) {
    for (const auto& s : registry())
        if (name == s.name) return s;
    throw std::invalid_argument("unknown suite: " + name);
}

SuiteResult run_suite_impl(const SuiteSpec& spec, const TrialConfig& cfg) {
    const std::int64_t n = spec.count(cfg);
    double tol = spec.tol;
    if (auto it = cfg.tolerance_overrides.find(spec.name); it != cfg.tolerance_overrides.end())
        tol = it->second;

    struct Acc {
        std::int64_t violations = 0;
        double worst = 0.0;
        std::int64_t worst_index = -1;
    };
    auto run_range = [&spec, &cfg, tol](std::int64_t lo, std::int64_t hi, Acc& acc) {
        for (std::int64_t i = lo; i < hi; ++i) {
            const double s = spec.slack(i, cfg);
            if (!(s >= -tol)) ++acc.violations;
            if (acc.worst_index < 0 || s < acc.worst) {
                acc.worst = s;
                acc.worst_index = i;
            }
        }
    };

    const int workers = static_cast<int>(
        std::min<std::int64_t>(std::max(cfg.workers, 1), std::max<std::int64_t>(n, 1)));
    Acc total;
    if (workers <= 1) {
        run_range(0, n, total);
    } else {
        std::vector<Acc> accs(workers);
        std::vector<std::thread> threads;
        threads.reserve(workers);
        for (int w = 0; w < workers; ++w) {
            const std::int64_t lo = n * w / workers;
            const std::int64_t hi = n * (w + 1) / workers;
            threads.emplace_back([&run_range, &accs, w, lo, hi] { run_range(lo, hi, accs[w]); });
        }
        for (auto& t : threads) t.join();
        // Accumulation is associative and commutative (sum + lexicographic
        // minimum), so the merged result matches the single-worker run.
        for (const auto& a : accs) {
            total.violations += a.violations;
            if (a.worst_index < 0) continue;
            if (total.worst_index < 0 || a.worst < total.worst) {
                total.worst = a.worst;
                total.worst_index = a.worst_index;
            }
        }
    }

    SuiteResult result;
    result.suite = spec.name;
    result.trials = n;
    result.violations = total.violations;
    result.worst_slack = total.worst_index >= 0 ? total.worst : 0.0;
    result.tolerance = tol;
    result.witness = total.worst_index >= 0 ? spec.witness(total.worst_index, cfg)
                                            : Json{{"note", "no checks executed"}};
    return result;
}

}  // namespace

void TrialConfig::validate() const {
    if (trials < 1 || trials > 1000000000)
        throw std::invalid_argument("config: trials must lie in [1, 1e9]");
    if (max_atoms < 1 || max_atoms > 4096)
        throw std::invalid_argument("config: max_atoms must lie in [1, 4096]");
    if (!(rmax > 0.0 && rmax <= 1.0 - 1e-9))
        throw std::invalid_argument("config: rmax must lie in (0, 1), at most 1 - 1e-9");
    if (!(weight_min > 0.0) || !(weight_max >= weight_min) || !std::isfinite(weight_max))
        throw std::invalid_argument("config: weight range must satisfy 0 < min <= max, finite");
    if (workers < 1 || workers > 256)
        throw std::invalid_argument("config: workers must lie in [1, 256]");
    for (const auto& [name, tol] : tolerance_overrides) {
        find_suite(name);  // throws on unknown suite
        if (!(tol >= 0.0) || !std::isfinite(tol))
            throw std::invalid_argument("config: tolerance for " + name +
                                        " must be >= 0 and finite");
    }
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& s : registry()) v.emplace_back(s.name);
        return v;
    }();
    return names;
}

double default_tolerance(const std::string& suite) { return find_suite(suite).tol; }

HerglotzMeasure sample_measure(SplitMix64& rng, int max_atoms, double weight_min,
                               double weight_max) {
    const int n = 1 + static_cast<int>(rng.next_unit() * max_atoms);
    std::vector<HerglotzAtom> atoms;
    atoms.reserve(n);
    for (int j = 0; j < n; ++j) {
        const double theta = rng.next_in(0.0, kTwoPi);
        const double w = rng.next_in(weight_min, weight_max);
        atoms.push_back(HerglotzAtom{theta, w});
    }
    return HerglotzMeasure(std::move(atoms));
}

DiscPoint sample_disc_point(SplitMix64& rng, double rmax) {
    const double r = rmax * std::sqrt(rng.next_unit());
    const double phi = rng.next_in(0.0, kTwoPi);
    return DiscPoint(std::polar(r, phi));
}

SuiteResult run_suite(const std::string& name, const TrialConfig& config) {
    config.validate();
    return run_suite_impl(find_suite(name), config);
}

VerificationReport run_all(const TrialConfig& config) {
    config.validate();
    VerificationReport report;
    report.seed = config.seed;
    report.pass = true;
    for (const auto& spec : registry()) {
        report.suites.push_back(run_suite_impl(spec, config));
        report.pass = report.pass && report.suites.back().pass();
    }
    return report;
}

nlohmann::ordered_json SuiteResult::to_json() const {
    return Json{{"suite", suite},
                {"trials", trials},
                {"violations", violations},
                {"worst_slack", worst_slack},
                {"tolerance", tolerance},
                {"witness", witness}};
}

nlohmann::ordered_json VerificationReport::to_json(const TrialConfig& config) const {
    Json suites_json = Json::array();
    for (const auto& s : suites) suites_json.push_back(s.to_json());
    return Json{{"rng", "splitmix64"},
                {"seed", seed},
                {"config", Json{{"trials", config.trials},
                                {"max_atoms", config.max_atoms},
                                {"rmax", config.rmax},
                                {"weight_range", Json::array({config.weight_min, config.weight_max})}}},
                {"suites", suites_json},
                {"pass", pass}};
}

std::string VerificationReport::serialize(const TrialConfig& config) const {
    return to_json(config).dump(2) + "\n";
}

double replay_slack(const std::string& suite, const nlohmann::json& w) {
    if (suite == "isometry_invariance")
        return -isometry_gap(complex_from(w.at("c")), DiscPoint(complex_from(w.at("z1"))),
                             DiscPoint(complex_from(w.at("z2"))));
    if (suite == "cayley_isometry")
        return -cayley_isometry_gap(DiscPoint(complex_from(w.at("z1"))),
                                    DiscPoint(complex_from(w.at("z2"))));
    if (suite == "cayley_round_trip")
        return -round_trip_gap(DiscPoint(complex_from(w.at("z"))));
    if (suite == "radial_closed_form")
        return -radial_closed_form_gap(w.at("t").get<double>());
    if (suite == "radial_integration")
        return -radial_integration_gap(w.at("t").get<double>());
    if (suite == "disc_image_boundary")
        return -disc_boundary_gap(w.at("b").get<double>(), w.at("r").get<double>(),
                                  w.at("angle").get<double>());
    if (suite == "disc_image_interval")
        return -disc_interval_relgap(w.at("b").get<double>(), w.at("r").get<double>());
    if (suite == "positivity")
        return eval_u(measure_from(w.at("measure")), DiscPoint(complex_from(w.at("z"))));
    if (suite == "normalization_zero")
        return -normalization_gap(measure_from(w.at("measure")));
    if (suite == "gradient_consistency") {
        if (w.contains("skipped")) return kInf;
        const double g =
            gradient_relgap(measure_from(w.at("measure")), DiscPoint(complex_from(w.at("z"))));
        return g < 0.0 ? kInf : -g;
    }
    if (suite == "schwarz_pick_gradient")
        return schwarz_pick_gradient_slack(measure_from(w.at("measure")),
                                           DiscPoint(complex_from(w.at("z"))))
            .slack;
    if (suite == "schwarz_pick_equality")
        return -schwarz_equality_relgap(w.at("theta").get<double>(),
                                        DiscPoint(complex_from(w.at("z"))));
    if (suite == "hyperbolic_derivative_bound")
        return 1.0 - hyperbolic_derivative_zero(measure_from(w.at("measure")));
    if (suite == "harmonicity")
        return -mean_value_check(measure_from(w.at("measure")), DiscPoint(complex_from(w.at("z0"))),
                                 w.at("rho").get<double>(), w.at("n").get<int>());
    if (suite == "main_theorem")
        return main_theorem_slack(measure_from(w.at("measure")), DiscPoint(complex_from(w.at("z"))));
    if (suite == "containment")
        return containment_slack(w.at("t").get<double>(), w.at("c").get<double>());
    if (suite == "containment_c1_equality")
        return -containment_c1_gap(w.at("t").get<double>());
    if (suite == "extremal_sharpness")
        return -sharpness_relgap(w.at("c").get<double>(), w.at("x").get<double>());
    if (suite == "extremal_gradient")
        return -extremal_gradient_gap(w.at("c").get<double>(),
                                      w.at("which").get<std::string>() == "u1" ? ExtremalKind::u1
                                                                               : ExtremalKind::u2);
    if (suite == "lemma2_identity")
        return -lemma2_identity_gap(w.at("c").get<double>(), w.at("t").get<double>());
    if (suite == "monotonicity") {
        if (w.at("axis").get<std::string>() == "c")
            return monotonicity_diff_c(w.at("t").get<double>(), w.at("from").get<double>(),
                                       w.at("to").get<double>());
        return monotonicity_diff_t(w.at("c").get<double>(), w.at("from").get<double>(),
                                   w.at("to").get<double>());
    }
    if (suite == "markovic")
        return markovic_slack(measure_from(w.at("measure")), DiscPoint(complex_from(w.at("z1"))),
                              DiscPoint(complex_from(w.at("z2"))))
            .slack;
    if (suite == "beardon_carne")
        return beardon_carne_slack(measure_from(w.at("measure")), DiscPoint(complex_from(w.at("z"))))
            .slack;
    if (suite == "markovic_equality")
        return -markovic_equality_abs_slack(w.at("theta").get<double>(), w.at("x1").get<double>(),
                                            w.at("x2").get<double>());
    if (suite == "beardon_carne_equality")
        return -beardon_carne_equality_abs_slack(w.at("theta").get<double>(),
                                                 w.at("x").get<double>());
    throw std::invalid_argument("unknown suite: " + suite);
}

}  // namespace harnack
