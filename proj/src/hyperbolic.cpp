#include "harnack/hyperbolic.hpp"

#include <cmath>

namespace harnack {

double artanh(double x) {
    if (!(x > -1.0 && x < 1.0))
        throw std::domain_error("artanh: argument must lie in (-1, 1)");
    return 0.5 * (std::log1p(x) - std::log1p(-x));
}

HyperbolicRadius hyperbolic_radius_from_euclidean(double r) {
    if (!(r >= 0.0 && r < 1.0))
        throw std::domain_error("hyperbolic_radius_from_euclidean: r must lie in [0, 1)");
    return HyperbolicRadius{2.0 * artanh(r)};
}

Complex disc_automorphism(Complex c, const DiscPoint& z) {
    const double ac = std::abs(c);
    if (!(ac <= 1.0))
        throw std::domain_error("disc_automorphism: |c| must be <= 1");
    if (ac == 1.0)
        return c;  // the map collapses to the constant boundary value c
    return (z.value + c) / (1.0 + std::conj(c) * z.value);
}

DiscPoint cayley_to_disc(const HalfPlanePoint& w) {
    return DiscPoint((w.value - 1.0) / (w.value + 1.0));
}

HalfPlanePoint cayley_to_halfplane(const DiscPoint& z) {
    return HalfPlanePoint((1.0 + z.value) / (1.0 - z.value));
}

double density_disc(const DiscPoint& z) {
    const double a = z.abs();
    return 2.0 / ((1.0 - a) * (1.0 + a));
}

double density_halfplane(const HalfPlanePoint& w) {
    return 1.0 / w.value.real();
}

double dist_disc(const DiscPoint& z1, const DiscPoint& z2) {
    if (z1.value == z2.value) return 0.0;
    // Reduced point w = num/den with |w| = s/m; then
    //   d = log((m+s)/(m-s)) = log1p(2 s (m+s) / ((m-s)(m+s)))
    // and (m-s)(m+s) = (1-|z1|^2)(1-|z2|^2), which avoids the cancellation
    // in m - s when both points sit near the boundary.
    const Complex num = z2.value - z1.value;
    const Complex den = 1.0 - std::conj(z1.value) * z2.value;
    const double s = std::abs(num);
    const double m = std::abs(den);
    const double a1 = z1.abs();
    const double a2 = z2.abs();
    const double q1 = (1.0 - a1) * (1.0 + a1);
    const double q2 = (1.0 - a2) * (1.0 + a2);
    return std::log1p(2.0 * s * (m + s) / (q1 * q2));
}

double dist_halfplane(const HalfPlanePoint& w1, const HalfPlanePoint& w2) {
    return dist_disc(cayley_to_disc(w1), cayley_to_disc(w2));
}

static void check_disc_params(double b, double r, const char* who) {
    if (!(b > 0.0) || !std::isfinite(b))
        throw std::domain_error(std::string(who) + ": b must be positive and finite");
    if (!(r > 0.0 && r < 1.0))
        throw std::domain_error(std::string(who) + ": r must lie in (0, 1)");
}

EuclideanDisc halfplane_disc_image(double b, double r) {
    check_disc_params(b, r, "halfplane_disc_image");
    const double q = (1.0 - r) * (1.0 + r);
    return EuclideanDisc{Complex{(1.0 + r * r) * b / q, 0.0}, 2.0 * r * b / q};
}

RealInterval halfplane_disc_re_interval(double b, double r) {
    check_disc_params(b, r, "halfplane_disc_re_interval");
    return RealInterval{(1.0 - r) / (1.0 + r) * b, (1.0 + r) / (1.0 - r) * b};
}

}  // namespace harnack
