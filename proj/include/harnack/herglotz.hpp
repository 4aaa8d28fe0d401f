#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "harnack/hyperbolic.hpp"

namespace harnack {

/// One boundary atom: a point e^{i theta} of the unit circle carrying
/// positive mass w.
struct HerglotzAtom {
    double theta;   // radians, normalized to [0, 2*pi)
    double weight;  // > 0
};

/// Finite atomic boundary measure representing the positive harmonic function
///   u(z) = sum_j w_j * Re((e^{i theta_j} + z)/(e^{i theta_j} - z)).
/// Atoms with equal angles are kept as-is (their contributions add); the
/// class never merges or reorders them.
class HerglotzMeasure {
public:
    explicit HerglotzMeasure(std::vector<HerglotzAtom> atoms);

    static HerglotzMeasure single(double theta, double weight = 1.0) {
        return HerglotzMeasure({HerglotzAtom{theta, weight}});
    }

    const std::vector<HerglotzAtom>& atoms() const { return atoms_; }
    std::size_t size() const { return atoms_.size(); }

    /// Total mass = u(0) = f(0).
    double total_weight() const;

private:
    std::vector<HerglotzAtom> atoms_;
};

struct GradientVector {
    double ux;
    double uy;
    double norm() const { return std::hypot(ux, uy); }
};

/// Analytic completion f with Re f = u and f(0) = u(0):
///   f(z) = sum_j w_j (e^{i theta_j} + z)/(e^{i theta_j} - z).
HalfPlanePoint eval_f(const HerglotzMeasure& m, const DiscPoint& z);

/// u(z) = Re f(z) > 0.
double eval_u(const HerglotzMeasure& m, const DiscPoint& z);

/// f'(z) = sum_j 2 w_j e^{i theta_j}/(e^{i theta_j} - z)^2.
Complex eval_f_prime(const HerglotzMeasure& m, const DiscPoint& z);

/// Gradient of u read off f' = u_x - i u_y.
GradientVector grad_u(const HerglotzMeasure& m, const DiscPoint& z);

/// Central-difference gradient oracle, error O(h^2). The stencil must stay
/// inside the disc: requires |z| + h < 1.
GradientVector grad_u_fd(const HerglotzMeasure& m, const DiscPoint& z, double h = 1e-5);

/// |f^h(0)| = |grad u(0)| / (2 u(0)); lies in [0, 1] up to float noise,
/// and equals 1 exactly for a single atom.
double hyperbolic_derivative_zero(const HerglotzMeasure& m);

/// Harmonicity oracle: |u(z0) - mean of u over n equispaced points of the
/// circle of radius rho around z0|. Spectrally small for any valid measure.
double mean_value_check(const HerglotzMeasure& m, const DiscPoint& z0, double rho, int n);

/// JSON array of {"theta": ..., "w": ...}, the wire format used by the CLI
/// report witnesses.
std::string to_json(const HerglotzMeasure& m);
HerglotzMeasure measure_from_json(const std::string& text);

}  // namespace harnack
