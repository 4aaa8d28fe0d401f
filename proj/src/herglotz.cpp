#include "harnack/herglotz.hpp"

#include <cmath>
#include <numbers>

#include <json.hpp>

namespace harnack {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double normalize_angle(double theta) {
    double t = std::fmod(theta, kTwoPi);
    if (t < 0.0) t += kTwoPi;
    return t;
}

}  // namespace

HerglotzMeasure::HerglotzMeasure(std::vector<HerglotzAtom> atoms) : atoms_(std::move(atoms)) {
    if (atoms_.empty())
        throw std::invalid_argument("HerglotzMeasure: at least one atom required");
    for (auto& a : atoms_) {
        if (!std::isfinite(a.theta))
            throw std::invalid_argument("HerglotzMeasure: atom angle must be finite");
        if (!(a.weight > 0.0) || !std::isfinite(a.weight))
            throw std::invalid_argument("HerglotzMeasure: atom weight must be positive and finite");
        a.theta = normalize_angle(a.theta);
    }
}

double HerglotzMeasure::total_weight() const {
    double s = 0.0;
    for (const auto& a : atoms_) s += a.weight;
    return s;
}

HalfPlanePoint eval_f(const HerglotzMeasure& m, const DiscPoint& z) {
    Complex f{0.0, 0.0};
    for (const auto& a : m.atoms()) {
        const Complex e = std::polar(1.0, a.theta);
        f += a.weight * ((e + z.value) / (e - z.value));
    }
    return HalfPlanePoint(f);
}

double eval_u(const HerglotzMeasure& m, const DiscPoint& z) {
    return eval_f(m, z).value.real();
}

Complex eval_f_prime(const HerglotzMeasure& m, const DiscPoint& z) {
    Complex d{0.0, 0.0};
    for (const auto& a : m.atoms()) {
        const Complex e = std::polar(1.0, a.theta);
        const Complex q = e - z.value;
        d += 2.0 * a.weight * e / (q * q);
    }
    return d;
}

GradientVector grad_u(const HerglotzMeasure& m, const DiscPoint& z) {
    const Complex d = eval_f_prime(m, z);
    return GradientVector{d.real(), -d.imag()};
}

GradientVector grad_u_fd(const HerglotzMeasure& m, const DiscPoint& z, double h) {
    if (!(h > 0.0) || !std::isfinite(h))
        throw std::domain_error("grad_u_fd: step must be positive and finite");
    if (!(z.abs() + h < 1.0))
        throw std::domain_error("grad_u_fd: stencil leaves the unit disc");
    const Complex v = z.value;
    const double ux = (eval_u(m, DiscPoint(v + Complex{h, 0.0})) -
                       eval_u(m, DiscPoint(v - Complex{h, 0.0}))) / (2.0 * h);
    const double uy = (eval_u(m, DiscPoint(v + Complex{0.0, h})) -
                       eval_u(m, DiscPoint(v - Complex{0.0, h}))) / (2.0 * h);
    return GradientVector{ux, uy};
}

double hyperbolic_derivative_zero(const HerglotzMeasure& m) {
    // f'(0) = 2 sum_j w_j e^{i theta_j}, u(0) = sum_j w_j; the 2s cancel.
    Complex s{0.0, 0.0};
    for (const auto& a : m.atoms()) s += a.weight * std::polar(1.0, a.theta);
    return std::abs(s) / m.total_weight();
}

double mean_value_check(const HerglotzMeasure& m, const DiscPoint& z0, double rho, int n) {
    if (n < 8)
        throw std::invalid_argument("mean_value_check: need n >= 8 circle samples");
    if (!(rho > 0.0) || !(z0.abs() + rho < 1.0))
        throw std::domain_error("mean_value_check: circle leaves the unit disc");
    // Neumaier-compensated sum; the deviation being measured is far below
    // the error of a plain sum of n terms.
    double sum = 0.0, comp = 0.0;
    for (int k = 0; k < n; ++k) {
        const double phi = kTwoPi * static_cast<double>(k) / static_cast<double>(n);
        const double term = eval_u(m, DiscPoint(z0.value + std::polar(rho, phi)));
        const double t = sum + term;
        if (std::fabs(sum) >= std::fabs(term))
            comp += (sum - t) + term;
        else
            comp += (term - t) + sum;
        sum = t;
    }
    const double mean = (sum + comp) / static_cast<double>(n);
    return std::fabs(eval_u(m, z0) - mean);
}

std::string to_json(const HerglotzMeasure& m) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& a : m.atoms())
        arr.push_back({{"theta", a.theta}, {"w", a.weight}});
    return arr.dump();
}

HerglotzMeasure measure_from_json(const std::string& text) {
    nlohmann::json parsed;
    try {
        parsed = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("measure_from_json: ") + e.what());
    }
    if (!parsed.is_array())
        throw std::invalid_argument("measure_from_json: expected a JSON array of atoms");
    std::vector<HerglotzAtom> atoms;
    for (const auto& item : parsed) {
        if (!item.is_object() || !item.contains("theta") || !item.contains("w"))
            throw std::invalid_argument("measure_from_json: atom needs fields \"theta\" and \"w\"");
        atoms.push_back(HerglotzAtom{item["theta"].get<double>(), item["w"].get<double>()});
    }
    return HerglotzMeasure(std::move(atoms));
}

}  // namespace harnack
