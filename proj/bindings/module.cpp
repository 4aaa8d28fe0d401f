#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <utility>
#include <vector>

#include "harnack/bounds.hpp"
#include "harnack/harness.hpp"

namespace py = pybind11;
using namespace harnack;

namespace {

HerglotzMeasure measure_from_pairs(const std::vector<std::pair<double, double>>& atoms) {
    std::vector<HerglotzAtom> converted;
    converted.reserve(atoms.size());
    for (const auto& [theta, w] : atoms) converted.push_back(HerglotzAtom{theta, w});
    return HerglotzMeasure(std::move(converted));
}

ExtremalKind kind_from_string(const std::string& which) {
    if (which == "u1") return ExtremalKind::u1;
    if (which == "u2") return ExtremalKind::u2;
    throw std::invalid_argument("which must be \"u1\" or \"u2\"");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Sharpened Harnack bounds and hyperbolic-geometry utilities on the unit disc";

    py::class_<HerglotzMeasure>(m, "HerglotzMeasure",
                                "Finite atomic boundary measure; each (theta, weight) atom "
                                "contributes a positive multiple of a Poisson kernel.")
        .def(py::init(&measure_from_pairs), py::arg("atoms"))
        .def_static("single", &HerglotzMeasure::single, py::arg("theta"), py::arg("weight") = 1.0)
        .def_static("from_json", &measure_from_json, py::arg("text"))
        .def_property_readonly("atoms",
                               [](const HerglotzMeasure& self) {
                                   std::vector<std::pair<double, double>> out;
                                   for (const auto& a : self.atoms())
                                       out.emplace_back(a.theta, a.weight);
                                   return out;
                               })
        .def("total_weight", &HerglotzMeasure::total_weight)
        .def("to_json", [](const HerglotzMeasure& self) { return to_json(self); })
        .def("__len__", &HerglotzMeasure::size)
        .def("__repr__", [](const HerglotzMeasure& self) {
            return "HerglotzMeasure(" + to_json(self) + ")";
        });

    py::class_<InequalitySlack>(m, "InequalitySlack")
        .def_readonly("lhs", &InequalitySlack::lhs)
        .def_readonly("rhs", &InequalitySlack::rhs)
        .def_readonly("slack", &InequalitySlack::slack)
        .def("__repr__", [](const InequalitySlack& s) {
            return "InequalitySlack(lhs=" + std::to_string(s.lhs) +
                   ", rhs=" + std::to_string(s.rhs) + ", slack=" + std::to_string(s.slack) + ")";
        });

    m.def(
        "disc_automorphism",
        [](Complex c, Complex z) { return disc_automorphism(c, DiscPoint(z)); }, py::arg("c"),
        py::arg("z"), "Mobius self-map of the disc sending 0 to c: (z + c)/(1 + conj(c) z).");
    m.def(
        "cayley_to_disc", [](Complex w) { return cayley_to_disc(HalfPlanePoint(w)).value; },
        py::arg("w"), "(w - 1)/(w + 1), right half-plane onto the unit disc.");
    m.def(
        "cayley_to_halfplane", [](Complex z) { return cayley_to_halfplane(DiscPoint(z)).value; },
        py::arg("z"), "(1 + z)/(1 - z), unit disc onto the right half-plane.");
    m.def(
        "density_disc", [](Complex z) { return density_disc(DiscPoint(z)); }, py::arg("z"),
        "Hyperbolic density 2/(1 - |z|^2).");
    m.def(
        "density_halfplane", [](Complex w) { return density_halfplane(HalfPlanePoint(w)); },
        py::arg("w"), "Hyperbolic density 1/Re(w).");
    m.def(
        "dist_disc", [](Complex a, Complex b) { return dist_disc(DiscPoint(a), DiscPoint(b)); },
        py::arg("z1"), py::arg("z2"), "Hyperbolic distance on the unit disc.");
    m.def(
        "dist_halfplane",
        [](Complex a, Complex b) { return dist_halfplane(HalfPlanePoint(a), HalfPlanePoint(b)); },
        py::arg("w1"), py::arg("w2"), "Hyperbolic distance on the right half-plane.");
    m.def(
        "halfplane_disc_image",
        [](double b, double r) {
            const EuclideanDisc d = halfplane_disc_image(b, r);
            return std::make_pair(d.center, d.radius);
        },
        py::arg("b"), py::arg("r"),
        "Euclidean (center, radius) of the hyperbolic disc of centre b and radius 2 artanh r.");
    m.def(
        "halfplane_disc_re_interval",
        [](double b, double r) {
            const RealInterval iv = halfplane_disc_re_interval(b, r);
            return std::make_pair(iv.lo, iv.hi);
        },
        py::arg("b"), py::arg("r"), "Range of Re over that disc: ((1-r)/(1+r) b, (1+r)/(1-r) b).");
    m.def("artanh", &artanh, py::arg("x"));

    m.def(
        "classical_harnack",
        [](Complex z) {
            const BoundInterval b = classical_harnack(DiscPoint(z));
            return std::make_pair(b.lower, b.upper);
        },
        py::arg("z"), "Classical two-sided bound on u(z)/u(0).");
    m.def(
        "stronger_harnack",
        [](Complex z, double c) {
            const BoundInterval b = stronger_harnack(DiscPoint(z), c);
            return std::make_pair(b.lower, b.upper);
        },
        py::arg("z"), py::arg("c"),
        "Sharpened two-sided bound on u(z)/u(0) with c = |grad u(0)|/(2 u(0)).");
    m.def("beardon_carne_rhs", &beardon_carne_rhs, py::arg("d"), py::arg("hd"),
          "log(cosh d + hd sinh d).");
    m.def("lemma2_radius", &lemma2_radius, py::arg("c"), py::arg("t"));
    m.def("lemma2_identity_gap", &lemma2_identity_gap, py::arg("c"), py::arg("t"));
    m.def(
        "extremal_u1", [](double c, Complex z) { return extremal_u1(c, DiscPoint(z)); },
        py::arg("c"), py::arg("z"), "Extremal function attaining the upper bound on [0, 1).");
    m.def(
        "extremal_u2", [](double c, Complex z) { return extremal_u2(c, DiscPoint(z)); },
        py::arg("c"), py::arg("z"), "Extremal function attaining the lower bound on [0, 1).");
    m.def(
        "gradient_norm_extremal",
        [](double c, const std::string& which, double h) {
            return gradient_norm_extremal(c, kind_from_string(which), h);
        },
        py::arg("c"), py::arg("which"), py::arg("h") = 1e-5,
        "|grad u(0)| of the chosen extremal (\"u1\" or \"u2\") by central differences.");

    m.def(
        "eval_u", [](const HerglotzMeasure& m_, Complex z) { return eval_u(m_, DiscPoint(z)); },
        py::arg("m"), py::arg("z"), "Positive harmonic value u(z).");
    m.def(
        "eval_f", [](const HerglotzMeasure& m_, Complex z) { return eval_f(m_, DiscPoint(z)).value; },
        py::arg("m"), py::arg("z"), "Analytic completion with Re f = u, f(0) = u(0).");
    m.def(
        "eval_f_prime",
        [](const HerglotzMeasure& m_, Complex z) { return eval_f_prime(m_, DiscPoint(z)); },
        py::arg("m"), py::arg("z"));
    m.def(
        "grad_u",
        [](const HerglotzMeasure& m_, Complex z) {
            const GradientVector g = grad_u(m_, DiscPoint(z));
            return std::make_pair(g.ux, g.uy);
        },
        py::arg("m"), py::arg("z"), "(du/dx, du/dy) at z.");
    m.def(
        "grad_u_fd",
        [](const HerglotzMeasure& m_, Complex z, double h) {
            const GradientVector g = grad_u_fd(m_, DiscPoint(z), h);
            return std::make_pair(g.ux, g.uy);
        },
        py::arg("m"), py::arg("z"), py::arg("h") = 1e-5,
        "Central-difference gradient oracle, error O(h^2).");
    m.def(
        "hyperbolic_derivative_zero",
        [](const HerglotzMeasure& m_) { return hyperbolic_derivative_zero(m_); }, py::arg("m"),
        "|grad u(0)|/(2 u(0)), in [0, 1].");
    m.def(
        "mean_value_check",
        [](const HerglotzMeasure& m_, Complex z0, double rho, int n) {
            return mean_value_check(m_, DiscPoint(z0), rho, n);
        },
        py::arg("m"), py::arg("z0"), py::arg("rho"), py::arg("n") = 512,
        "Deviation of u(z0) from its circle mean; near zero for harmonic u.");

    m.def(
        "schwarz_pick_gradient_slack",
        [](const HerglotzMeasure& m_, Complex z) {
            return schwarz_pick_gradient_slack(m_, DiscPoint(z));
        },
        py::arg("m"), py::arg("z"), "|grad u(z)| <= 2 u(z)/(1 - |z|^2).");
    m.def(
        "markovic_slack",
        [](const HerglotzMeasure& m_, Complex z1, Complex z2) {
            return markovic_slack(m_, DiscPoint(z1), DiscPoint(z2));
        },
        py::arg("m"), py::arg("z1"), py::arg("z2"),
        "d_halfplane(u(z1), u(z2)) <= d_disc(z1, z2).");
    m.def(
        "beardon_carne_slack",
        [](const HerglotzMeasure& m_, Complex z) { return beardon_carne_slack(m_, DiscPoint(z)); },
        py::arg("m"), py::arg("z"),
        "d_halfplane(f(z), f(0)) <= log(cosh d + c sinh d) at d = d_disc(z, 0).");

    m.def("suite_names", [] { return suite_names(); },
          "Property suites run by verify, in execution order.");
    m.def(
        "verify_report_json",
        [](std::uint64_t seed, std::int64_t trials, int max_atoms, double rmax, int workers,
           const std::map<std::string, double>& tolerances) {
            TrialConfig cfg;
            cfg.seed = seed;
            cfg.trials = trials;
            cfg.max_atoms = max_atoms;
            cfg.rmax = rmax;
            cfg.workers = workers;
            cfg.tolerance_overrides = tolerances;
            return run_all(cfg).serialize(cfg);
        },
        py::arg("seed") = 1, py::arg("trials") = 100000, py::arg("max_atoms") = 8,
        py::arg("rmax") = 0.99, py::arg("workers") = 1,
        py::arg("tolerances") = std::map<std::string, double>{},
        "Run every property suite and return the JSON report.");
}
