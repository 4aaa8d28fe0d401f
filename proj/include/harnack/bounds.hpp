#pragma once

#include "harnack/herglotz.hpp"
#include "harnack/hyperbolic.hpp"

namespace harnack {

/// Two-sided bound on u(z)/u(0). For both Harnack intervals lower = 1/upper.
struct BoundInterval {
    double lower;
    double upper;
};

/// Carrier for a verified inequality lhs <= rhs; slack = rhs - lhs.
struct InequalitySlack {
    double lhs;
    double rhs;
    double slack;
};

/// Measured Schwarz-Pick ratios may exceed 1 by float noise; values in
/// (1, 1 + kDerivativeSlack] are accepted and treated as 1.
inline constexpr double kDerivativeSlack = 1e-12;

/// Classical Harnack interval [(1-|z|)/(1+|z|), (1+|z|)/(1-|z|)].
BoundInterval classical_harnack(const DiscPoint& z);

/// Sharpened Harnack interval with c = |grad u(0)|/(2 u(0)):
///   upper = (1 + |z|^2 + 2 c |z|)/(1 - |z|^2), lower = 1/upper.
/// Contained in the classical interval for every c in [0, 1]; degenerates
/// to it exactly at c = 1.
BoundInterval stronger_harnack(const DiscPoint& z, double c);

/// Refined distance bound log(cosh d + hd * sinh d); at hd = 1 this is d.
double beardon_carne_rhs(double d, double hd);

/// Radius R = t (c + t)/(1 + c t) with dist_disc(R, 0) =
/// log((1 + t^2 + 2 c t)/(1 - t^2)).
double lemma2_radius(double c, double t);

/// |log(cosh d + c sinh d) - dist_disc(lemma2_radius(c, t), 0)| with
/// d = dist_disc(t, 0); an identity, so the gap is float noise only.
double lemma2_identity_gap(double c, double t);

/// |grad u(z)| <= 2 u(z)/(1 - |z|^2), with equality for single-atom
/// measures. Computed through the per-atom triangle inequality so the
/// single-atom slack is exactly zero.
InequalitySlack schwarz_pick_gradient_slack(const HerglotzMeasure& m, const DiscPoint& z);

/// Distance contraction of u into the half-plane:
/// d_halfplane(u(z1), u(z2)) <= d_disc(z1, z2). On positive reals the
/// left side is |log(u(z1)/u(z2))|.
InequalitySlack markovic_slack(const HerglotzMeasure& m, const DiscPoint& z1, const DiscPoint& z2);

/// d_halfplane(f(z), f(0)) <= log(cosh d + c sinh d) with d = d_disc(z, 0)
/// and c = hyperbolic_derivative_zero(m).
InequalitySlack beardon_carne_slack(const HerglotzMeasure& m, const DiscPoint& z);

/// Extremal pair attaining the sharpened bounds on the real axis:
///   u1(z) = Re (1 + z phi_c(z))/(1 - z phi_c(z)),   u1(x) = upper bound,
///   u2(z) = Re (1 - z phi_c(z))/(1 + z phi_c(z)),   u2(x) = lower bound,
/// with u1(0) = u2(0) = 1 and |grad u(0)| = 2c for both.
double extremal_u1(double c, const DiscPoint& z);
double extremal_u2(double c, const DiscPoint& z);

enum class ExtremalKind { u1, u2 };

/// |grad u(0)| of the chosen extremal, measured by central differences;
/// equals 2c up to the O(h^2) stencil error.
double gradient_norm_extremal(double c, ExtremalKind which, double h = 1e-5);

}  // namespace harnack
