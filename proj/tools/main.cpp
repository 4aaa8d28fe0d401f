#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "harnack/bounds.hpp"
#include "harnack/harness.hpp"

namespace {

// Exit codes: 0 pass, 1 verification failure, 2 usage error, 3 I/O failure.
constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

std::string fmt17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// Writes to the given path, or to stdout when the path is empty or "-".
int write_output(const std::string& path, const std::string& data) {
    if (path.empty() || path == "-") {
        std::fwrite(data.data(), 1, data.size(), stdout);
        return std::fflush(stdout) == 0 ? kExitPass : kExitIo;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open " << path << " for writing\n";
        return kExitIo;
    }
    out << data;
    out.flush();
    if (!out) {
        std::cerr << "error: write to " << path << " failed\n";
        return kExitIo;
    }
    return kExitPass;
}

struct VerifyOptions {
    harnack::TrialConfig config;
    std::vector<std::string> tol_overrides;
    std::string out;
};

int run_verify(VerifyOptions& opt) {
    for (const auto& spec : opt.tol_overrides) {
        const auto eq = spec.find('=');
        if (eq == std::string::npos) {
            std::cerr << "error: --tol expects suite=value, got \"" << spec << "\"\n";
            return kExitUsage;
        }
        const std::string name = spec.substr(0, eq);
        try {
            opt.config.tolerance_overrides[name] = std::stod(spec.substr(eq + 1));
        } catch (const std::exception&) {
            std::cerr << "error: --tol " << name << ": value is not a number\n";
            return kExitUsage;
        }
    }
    harnack::VerificationReport report;
    try {
        report = harnack::run_all(opt.config);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    const int io = write_output(opt.out, report.serialize(opt.config));
    if (io != kExitPass) return io;
    if (!report.pass) {
        for (const auto& s : report.suites)
            if (!s.pass())
                std::cerr << "violation: suite " << s.suite << " (" << s.violations << " of "
                          << s.trials << " checks, worst slack " << fmt17(s.worst_slack) << ")\n";
        return kExitViolation;
    }
    return kExitPass;
}

struct SweepOptions {
    double c = 0.0;
    double t_min = 0.0;
    double t_max = 0.99;
    double step = 0.01;
    std::string out;
};

int run_sweep(const SweepOptions& opt) {
    if (!(opt.c >= 0.0 && opt.c <= 1.0) || !(opt.t_min >= 0.0) || !(opt.t_min < opt.t_max) ||
        !(opt.t_max < 1.0) || !(opt.step > 0.0)) {
        std::cerr << "error: need 0 <= c <= 1, 0 <= t-min < t-max < 1, step > 0\n";
        return kExitUsage;
    }
    std::ostringstream csv;
    csv << "t,classical_lo,classical_hi,strong_lo,strong_hi,u1,u2\n";
    const auto rows =
        static_cast<long>(std::floor((opt.t_max - opt.t_min) / opt.step + 1e-9)) + 1;
    for (long i = 0; i < rows; ++i) {
        const double t = opt.t_min + static_cast<double>(i) * opt.step;
        const harnack::DiscPoint z{t};
        const auto classical = harnack::classical_harnack(z);
        const auto strong = harnack::stronger_harnack(z, opt.c);
        csv << fmt17(t) << ',' << fmt17(classical.lower) << ',' << fmt17(classical.upper) << ','
            << fmt17(strong.lower) << ',' << fmt17(strong.upper) << ','
            << fmt17(harnack::extremal_u1(opt.c, z)) << ',' << fmt17(harnack::extremal_u2(opt.c, z))
            << '\n';
    }
    return write_output(opt.out, csv.str());
}

struct ExtremalOptions {
    double c = 0.0;
    double x = 0.0;
};

int run_extremal(const ExtremalOptions& opt) {
    if (!(opt.c >= 0.0 && opt.c <= 1.0) || !(opt.x >= 0.0 && opt.x < 1.0)) {
        std::cerr << "error: need 0 <= c <= 1 and 0 <= x < 1\n";
        return kExitUsage;
    }
    const harnack::DiscPoint z{opt.x};
    const auto strong = harnack::stronger_harnack(z, opt.c);
    const double u1 = harnack::extremal_u1(opt.c, z);
    const double u2 = harnack::extremal_u2(opt.c, z);
    const double g1 = harnack::gradient_norm_extremal(opt.c, harnack::ExtremalKind::u1);
    const double g2 = harnack::gradient_norm_extremal(opt.c, harnack::ExtremalKind::u2);
    std::ostringstream txt;
    txt << "extremal pair at c = " << fmt17(opt.c) << ", x = " << fmt17(opt.x) << "\n";
    const auto row = [&txt](const char* label, double v) {
        char buf[96];
        std::snprintf(buf, sizeof(buf), "  %-22s %s\n", label, fmt17(v).c_str());
        txt << buf;
    };
    row("u1(x)", u1);
    row("u2(x)", u2);
    row("strong_lower", strong.lower);
    row("strong_upper", strong.upper);
    row("grad_norm_u1_at_0", g1);
    row("grad_norm_u2_at_0", g2);
    row("expected_grad_norm", 2.0 * opt.c);
    row("sharpness_gap_u1", std::fabs(u1 - strong.upper));
    row("sharpness_gap_u2", std::fabs(u2 - strong.lower));
    return write_output("", txt.str());
}

struct DiscImageOptions {
    double b = 0.0;
    double r = 0.0;
    bool json = false;
};

int run_disc_image(const DiscImageOptions& opt) {
    harnack::EuclideanDisc disc{};
    harnack::RealInterval iv{};
    try {
        disc = harnack::halfplane_disc_image(opt.b, opt.r);
        iv = harnack::halfplane_disc_re_interval(opt.b, opt.r);
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    std::ostringstream out;
    if (opt.json) {
        nlohmann::ordered_json j{{"center", disc.center.real()},
                                 {"radius", disc.radius},
                                 {"re_interval", nlohmann::ordered_json::array({iv.lo, iv.hi})}};
        out << j.dump(2) << "\n";
    } else {
        out << "center      " << fmt17(disc.center.real()) << "\n"
            << "radius      " << fmt17(disc.radius) << "\n"
            << "re_interval [" << fmt17(iv.lo) << ", " << fmt17(iv.hi) << "]\n";
    }
    return write_output("", out.str());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verified Harnack bounds for positive harmonic functions on the unit disc"};
    app.require_subcommand(1);

    VerifyOptions verify_opt;
    auto* verify = app.add_subcommand("verify", "Run every property suite and emit a JSON report");
    verify->add_option("--seed", verify_opt.config.seed, "PRNG seed")->capture_default_str();
    verify->add_option("--trials", verify_opt.config.trials, "Trials per randomized suite")
        ->capture_default_str();
    verify->add_option("--max-atoms", verify_opt.config.max_atoms, "Atoms per sampled measure")
        ->capture_default_str();
    verify->add_option("--rmax", verify_opt.config.rmax, "Radius cap for sampled points")
        ->capture_default_str();
    verify->add_option("--tol", verify_opt.tol_overrides,
                       "Per-suite tolerance override, suite=value (repeatable)");
    verify->add_option("--out", verify_opt.out, "Report path (default: stdout)");

    SweepOptions sweep_opt;
    auto* sweep = app.add_subcommand("sweep", "Emit CSV of the bound envelopes over |z|");
    sweep->add_option("--c", sweep_opt.c, "Gradient ratio |grad u(0)|/(2u(0))")->required();
    sweep->add_option("--t-min", sweep_opt.t_min, "First |z|")->capture_default_str();
    sweep->add_option("--t-max", sweep_opt.t_max, "Last |z|")->capture_default_str();
    sweep->add_option("--step", sweep_opt.step, "Grid step")->capture_default_str();
    sweep->add_option("--out", sweep_opt.out, "CSV path (default: stdout)");

    ExtremalOptions extremal_opt;
    auto* extremal = app.add_subcommand("extremal", "Inspect the extremal pair at one point");
    extremal->add_option("--c", extremal_opt.c, "Gradient ratio")->required();
    extremal->add_option("--x", extremal_opt.x, "Evaluation point on [0, 1)")->required();

    DiscImageOptions disc_opt;
    auto* disc = app.add_subcommand("disc-image", "Euclidean image of a hyperbolic disc in Re > 0");
    disc->add_option("--b", disc_opt.b, "Centre on the positive real axis")->required();
    disc->add_option("--r", disc_opt.r, "Euclidean radius parameter in (0, 1)")->required();
    disc->add_flag("--json", disc_opt.json, "Emit JSON instead of text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (verify->parsed()) return run_verify(verify_opt);
        if (sweep->parsed()) return run_sweep(sweep_opt);
        if (extremal->parsed()) return run_extremal(extremal_opt);
        if (disc->parsed()) return run_disc_image(disc_opt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitUsage;
}
