#include "harnack/bounds.hpp"

#include <cmath>

namespace harnack {

namespace {

double checked_ratio(double c, const char* who) {
    if (!(c >= 0.0) || !(c <= 1.0 + kDerivativeSlack))
        throw std::domain_error(std::string(who) + ": c must lie in [0, 1]");
    return std::min(c, 1.0);
}

}  // namespace

BoundInterval classical_harnack(const DiscPoint& z) {
    const double t = z.abs();
    const double upper = (1.0 + t) / (1.0 - t);
    return BoundInterval{1.0 / upper, upper};
}

BoundInterval stronger_harnack(const DiscPoint& z, double c) {
    // Radius form of the bound: R = t*phi_c(t) <= t holds in floating point
    // (every step is monotone under rounding), so the interval is contained
    // in the classical one and reproduces it bit-exactly at c = 1.
    const double r = lemma2_radius(checked_ratio(c, "stronger_harnack"), z.abs());
    const double upper = (1.0 + r) / (1.0 - r);
    return BoundInterval{1.0 / upper, upper};
}

double beardon_carne_rhs(double d, double hd) {
    if (!(d >= 0.0) || !std::isfinite(d))
        throw std::domain_error("beardon_carne_rhs: distance must be >= 0 and finite");
    const double h = checked_ratio(hd, "beardon_carne_rhs");
    return std::log(std::cosh(d) + h * std::sinh(d));
}

double lemma2_radius(double c, double t) {
    const double cc = checked_ratio(c, "lemma2_radius");
    if (!(t >= 0.0 && t < 1.0))
        throw std::domain_error("lemma2_radius: t must lie in [0, 1)");
    return t * ((cc + t) / (1.0 + cc * t));
}

double lemma2_identity_gap(double c, double t) {
    const double d = dist_disc(DiscPoint(t), DiscPoint(0.0));
    const double lhs = beardon_carne_rhs(d, c);
    const double rhs = dist_disc(DiscPoint(lemma2_radius(c, t)), DiscPoint(0.0));
    return std::fabs(lhs - rhs);
}

InequalitySlack schwarz_pick_gradient_slack(const HerglotzMeasure& m, const DiscPoint& z) {
    // Per atom xi_j = w_j e_j/(e_j - z)^2, so that
    //   |grad u(z)|          = 2 |sum xi_j|,
    //   2 u(z)/(1 - |z|^2)   = 2 sum |xi_j|,
    // and the inequality is the triangle inequality on the computed xi_j.
    // A single atom therefore yields slack exactly 0, and lhs, rhs, slack
    // stay consistent to the last bit (scaling by 2 is exact).
    Complex total{0.0, 0.0};
    double mods = 0.0;
    for (const auto& a : m.atoms()) {
        const Complex e = std::polar(1.0, a.theta);
        const Complex q = e - z.value;
        const Complex xi = a.weight * e / (q * q);
        total += xi;
        mods += std::abs(xi);
    }
    const double lhs = 2.0 * std::abs(total);
    const double rhs = 2.0 * mods;
    return InequalitySlack{lhs, rhs, 2.0 * (mods - std::abs(total))};
}

InequalitySlack markovic_slack(const HerglotzMeasure& m, const DiscPoint& z1, const DiscPoint& z2) {
    // u takes positive real values, and on the positive reals the
    // half-plane distance is |log(a/b)|.
    const double u1 = eval_u(m, z1);
    const double u2 = eval_u(m, z2);
    const double lhs = std::fabs(std::log(u1 / u2));
    const double rhs = dist_disc(z1, z2);
    return InequalitySlack{lhs, rhs, rhs - lhs};
}

InequalitySlack beardon_carne_slack(const HerglotzMeasure& m, const DiscPoint& z) {
    const double d = dist_disc(z, DiscPoint(0.0));
    const double lhs = dist_halfplane(eval_f(m, z), eval_f(m, DiscPoint(0.0)));
    const double rhs = beardon_carne_rhs(d, hyperbolic_derivative_zero(m));
    return InequalitySlack{lhs, rhs, rhs - lhs};
}

namespace {

double extremal_value(double c, const DiscPoint& z, ExtremalKind which) {
    checked_ratio(c, "extremal");
    const Complex g = z.value * disc_automorphism(Complex{std::min(c, 1.0), 0.0}, z);
    const Complex ratio = (which == ExtremalKind::u1) ? (1.0 + g) / (1.0 - g)
                                                      : (1.0 - g) / (1.0 + g);
    return ratio.real();
}

}  // namespace

double extremal_u1(double c, const DiscPoint& z) {
    return extremal_value(c, z, ExtremalKind::u1);
}

double extremal_u2(double c, const DiscPoint& z) {
    return extremal_value(c, z, ExtremalKind::u2);
}

double gradient_norm_extremal(double c, ExtremalKind which, double h) {
    if (!(h > 0.0 && h < 0.5))
        throw std::domain_error("gradient_norm_extremal: step must lie in (0, 0.5)");
    const auto at = [&](Complex v) { return extremal_value(c, DiscPoint(v), which); };
    const double ux = (at(Complex{h, 0.0}) - at(Complex{-h, 0.0})) / (2.0 * h);
    const double uy = (at(Complex{0.0, h}) - at(Complex{0.0, -h})) / (2.0 * h);
    return std::hypot(ux, uy);
}

}  // namespace harnack
