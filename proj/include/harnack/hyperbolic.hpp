#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

namespace harnack {

using Complex = std::complex<double>;

// Points whose distance to the unit circle falls below this margin are
// rejected: every bound in this library blows up at the boundary and
// float cancellation dominates long before |z| = 1.
inline constexpr double kBoundaryMargin = 1e-12;

/// Point of the open unit disc, |value| < 1.
struct DiscPoint {
    Complex value;

    explicit DiscPoint(Complex v) : value(v) {
        if (!(1.0 - std::abs(v) >= kBoundaryMargin))
            throw std::domain_error("DiscPoint: |z| must be < 1 (away from the boundary)");
    }
    DiscPoint(double re, double im) : DiscPoint(Complex{re, im}) {}
    explicit DiscPoint(double re) : DiscPoint(Complex{re, 0.0}) {}

    double abs() const { return std::abs(value); }
};

/// Point of the open right half-plane, Re value > 0.
struct HalfPlanePoint {
    Complex value;

    explicit HalfPlanePoint(Complex v) : value(v) {
        if (!(v.real() > 0.0) || !std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw std::domain_error("HalfPlanePoint: Re(w) must be > 0 and finite");
    }
    explicit HalfPlanePoint(double re) : HalfPlanePoint(Complex{re, 0.0}) {}
};

struct EuclideanDisc {
    Complex center;
    double radius;  // >= 0
};

/// Radius measured in hyperbolic length units.
struct HyperbolicRadius {
    double value;  // >= 0, finite
};

struct RealInterval {
    double lo;
    double hi;
};

/// artanh via 0.5*(log1p(x) - log1p(-x)); accurate near 0 and near 1.
double artanh(double x);

/// Hyperbolic radius of the Euclidean disc {|z| <= r} around 0, i.e. 2*artanh(r).
HyperbolicRadius hyperbolic_radius_from_euclidean(double r);

/// Mobius self-map of the disc sending 0 to c: (z + c)/(1 + conj(c) z).
/// For |c| = 1 exactly the map degenerates to the constant c, so the
/// result may be a boundary point; it has modulus < 1 whenever |c| < 1.
Complex disc_automorphism(Complex c, const DiscPoint& z);

/// Cayley transform (w - 1)/(w + 1), half-plane onto disc.
DiscPoint cayley_to_disc(const HalfPlanePoint& w);

/// Inverse Cayley transform (1 + z)/(1 - z), disc onto half-plane.
HalfPlanePoint cayley_to_halfplane(const DiscPoint& z);

/// Hyperbolic metric density on the disc, 2/(1 - |z|^2). Minimum 2 at z = 0.
double density_disc(const DiscPoint& z);

/// Hyperbolic metric density on the right half-plane, 1/Re w.
double density_halfplane(const HalfPlanePoint& w);

/// Hyperbolic distance on the disc. Reduces the pair by the automorphism
/// w = (z2 - z1)/(1 - conj(z1) z2) and evaluates 2*artanh|w| in a
/// cancellation-free form.
double dist_disc(const DiscPoint& z1, const DiscPoint& z2);

/// Hyperbolic distance on the half-plane, transported through the Cayley map.
double dist_halfplane(const HalfPlanePoint& w1, const HalfPlanePoint& w2);

/// Euclidean picture of the hyperbolic disc of centre b > 0 and radius
/// 2*artanh(r): centre (1+r^2) b/(1-r^2), radius 2 r b/(1-r^2).
EuclideanDisc halfplane_disc_image(double b, double r);

/// Range of Re over that disc: [(1-r)/(1+r) b, (1+r)/(1-r) b].
RealInterval halfplane_disc_re_interval(double b, double r);

}  // namespace harnack
