#include <cmath>
#include <limits>
#include <numbers>

#include <doctest.h>

#include "harnack/harness.hpp"
#include "harnack/hyperbolic.hpp"
#include "harnack/rng.hpp"
#include "oracles.hpp"

using namespace harnack;

namespace {
constexpr double kPi = std::numbers::pi;
const double kLog3 = std::log(3.0);
}  // namespace

TEST_CASE("domain guards") {
    CHECK_NOTHROW(DiscPoint(0.999));
    CHECK_NOTHROW(DiscPoint(1.0 - 1e-11));
    CHECK_THROWS_AS(DiscPoint(1.0 - 1e-13), std::domain_error);
    CHECK_THROWS_AS(DiscPoint(1.0), std::domain_error);
    CHECK_THROWS_AS(DiscPoint(-1.2), std::domain_error);
    CHECK_THROWS_AS(DiscPoint(std::nan("")), std::domain_error);

    CHECK_NOTHROW(HalfPlanePoint(1e-15));
    CHECK_THROWS_AS(HalfPlanePoint(0.0), std::domain_error);
    CHECK_THROWS_AS(HalfPlanePoint(Complex{-2.0, 1.0}), std::domain_error);
    CHECK_THROWS_AS(HalfPlanePoint(std::numeric_limits<double>::infinity()), std::domain_error);
}

TEST_CASE("disc automorphism") {
    SUBCASE("c = 0 is the identity") {
        const Complex z{0.3, 0.1};
        CHECK(disc_automorphism(Complex{0.0, 0.0}, DiscPoint(z)) == z);
    }
    SUBCASE("real substitution") {
        CHECK(disc_automorphism(Complex{0.5, 0.0}, DiscPoint(0.5)).real() ==
              doctest::Approx(0.8).epsilon(1e-15));
    }
    SUBCASE("|c| = 1 collapses to the constant c") {
        CHECK(disc_automorphism(Complex{1.0, 0.0}, DiscPoint(Complex{0.0, 0.7})) ==
              Complex{1.0, 0.0});
        CHECK(disc_automorphism(Complex{0.0, 1.0}, DiscPoint(0.2)) == Complex{0.0, 1.0});
        CHECK(disc_automorphism(Complex{0.0, -1.0}, DiscPoint(-0.4)) == Complex{0.0, -1.0});
    }
    SUBCASE("stays in the disc for |c| < 1") {
        SplitMix64 rng(11);
        for (int i = 0; i < 1000; ++i) {
            const Complex c = sample_disc_point(rng, 0.99).value;
            const DiscPoint z = sample_disc_point(rng, 0.99);
            CHECK(std::abs(disc_automorphism(c, z)) < 1.0);
        }
    }
    SUBCASE("rejects |c| > 1") {
        CHECK_THROWS_AS(disc_automorphism(Complex{1.0, 1.0}, DiscPoint(0.0)), std::domain_error);
    }
}

TEST_CASE("cayley transforms") {
    CHECK(cayley_to_disc(HalfPlanePoint(1.0)).value == Complex{0.0, 0.0});
    CHECK(cayley_to_disc(HalfPlanePoint(3.0)).value.real() == doctest::Approx(0.5).epsilon(1e-15));

    const DiscPoint img = cayley_to_disc(HalfPlanePoint(Complex{1.0, 1.0}));
    CHECK(std::abs(img.value - Complex{0.2, 0.4}) < 1e-15);
    // re-applying the inverse map recovers the input
    CHECK(std::abs(cayley_to_halfplane(img).value - Complex{1.0, 1.0}) < 1e-14);

    CHECK(cayley_to_halfplane(DiscPoint(0.0)).value == Complex{1.0, 0.0});
    CHECK(cayley_to_halfplane(DiscPoint(0.5)).value.real() == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(cayley_to_halfplane(DiscPoint(-0.5)).value.real() ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("round trip disc -> half-plane -> disc") {
    SplitMix64 rng(5);
    for (int i = 0; i < 20000; ++i) {
        const DiscPoint z = sample_disc_point(rng, 0.999);
        const DiscPoint back = cayley_to_disc(cayley_to_halfplane(z));
        CHECK(std::abs(back.value - z.value) <= 1e-14);
    }
}

TEST_CASE("densities") {
    CHECK(density_disc(DiscPoint(0.0)) == 2.0);
    CHECK(density_disc(DiscPoint(0.5)) == doctest::Approx(8.0 / 3.0).epsilon(1e-15));
    CHECK(density_disc(DiscPoint(Complex{0.0, 0.8})) == doctest::Approx(2.0 / 0.36).epsilon(1e-15));

    SplitMix64 rng(17);
    for (int i = 0; i < 1000; ++i) {
        CHECK(density_disc(sample_disc_point(rng, 0.99)) >= 2.0);
    }

    CHECK(density_halfplane(HalfPlanePoint(1.0)) == 1.0);
    CHECK(density_halfplane(HalfPlanePoint(Complex{0.5, 7.0})) == 2.0);
    CHECK(density_halfplane(HalfPlanePoint(4.0)) == 0.25);
}

TEST_CASE("disc distance") {
    SUBCASE("identity of indiscernibles") {
        CHECK(dist_disc(DiscPoint(0.3), DiscPoint(0.3)) == 0.0);
        const DiscPoint z{Complex{0.12, -0.77}};
        CHECK(dist_disc(z, z) == 0.0);
    }
    SUBCASE("radial value against the quadrature oracle") {
        const double d = dist_disc(DiscPoint(0.0), DiscPoint(0.5));
        CHECK(std::fabs(d - kLog3) < 1e-13);
        const double quad =
            test::simpson([](double s) { return density_disc(DiscPoint(s)); }, 0.0, 0.5, 4096);
        CHECK(std::fabs(d - quad) < 1e-9);
    }
    SUBCASE("additivity through the origin") {
        const double d = dist_disc(DiscPoint(0.5), DiscPoint(-0.5));
        CHECK(std::fabs(d - 2.0 * kLog3) < 1e-12);
        CHECK(std::fabs(d - dist_disc(DiscPoint(0.5), DiscPoint(0.0)) -
                        dist_disc(DiscPoint(0.0), DiscPoint(-0.5))) < 1e-12);
    }
    SUBCASE("symmetric, positive, equal to 2 artanh of the reduced point") {
        SplitMix64 rng(23);
        for (int i = 0; i < 20000; ++i) {
            const DiscPoint z1 = sample_disc_point(rng, 0.99);
            const DiscPoint z2 = sample_disc_point(rng, 0.99);
            const double d12 = dist_disc(z1, z2);
            CHECK(d12 == dist_disc(z2, z1));  // bitwise symmetric
            if (z1.value != z2.value) CHECK(d12 > 0.0);
            const Complex w = (z2.value - z1.value) / (1.0 - std::conj(z1.value) * z2.value);
            CHECK(std::fabs(d12 - 2.0 * artanh(std::abs(w))) <= 1e-9);
        }
    }
    SUBCASE("closed form on the radius") {
        for (double t = 0.05; t < 0.996; t += 0.05) {
            CHECK(std::fabs(dist_disc(DiscPoint(t), DiscPoint(0.0)) -
                            std::log((1.0 + t) / (1.0 - t))) <= 1e-10);
        }
    }
}

TEST_CASE("half-plane distance") {
    CHECK(dist_halfplane(HalfPlanePoint(Complex{2.0, 1.0}), HalfPlanePoint(Complex{2.0, 1.0})) ==
          0.0);

    const double d13 = dist_halfplane(HalfPlanePoint(1.0), HalfPlanePoint(3.0));
    CHECK(std::fabs(d13 - kLog3) < 1e-13);
    // quadrature of the half-plane density along the geodesic segment [1, 3]
    const double quad = test::simpson([](double x) { return 1.0 / x; }, 1.0, 3.0, 4096);
    CHECK(std::fabs(d13 - quad) < 1e-9);

    // the interval endpoint (1+r)/(1-r) b sits at distance 2 artanh r from b
    const double b = 1.0, r = 0.5;
    const double dend =
        dist_halfplane(HalfPlanePoint(b), HalfPlanePoint((1.0 + r) / (1.0 - r) * b));
    CHECK(std::fabs(dend - 2.0 * artanh(r)) < 1e-13);
    CHECK(std::fabs(dend - kLog3) < 1e-13);

    SplitMix64 rng(31);
    for (int i = 0; i < 5000; ++i) {
        const DiscPoint z1 = sample_disc_point(rng, 0.99);
        const DiscPoint z2 = sample_disc_point(rng, 0.99);
        CHECK(std::fabs(dist_disc(z1, z2) -
                        dist_halfplane(cayley_to_halfplane(z1), cayley_to_halfplane(z2))) <=
              1e-10);
    }
}

TEST_CASE("distance is invariant under automorphisms") {
    SplitMix64 rng(41);
    for (int i = 0; i < 20000; ++i) {
        const Complex c = sample_disc_point(rng, 0.99).value;
        const DiscPoint z1 = sample_disc_point(rng, 0.99);
        const DiscPoint z2 = sample_disc_point(rng, 0.99);
        const DiscPoint m1{disc_automorphism(c, z1)};
        const DiscPoint m2{disc_automorphism(c, z2)};
        CHECK(std::fabs(dist_disc(m1, m2) - dist_disc(z1, z2)) <= 1e-10);
    }
}

TEST_CASE("half-plane image of a hyperbolic disc") {
    SUBCASE("substitution values") {
        const EuclideanDisc d = halfplane_disc_image(1.0, 0.5);
        CHECK(d.center.real() == doctest::Approx(5.0 / 3.0).epsilon(1e-15));
        CHECK(d.center.imag() == 0.0);
        CHECK(d.radius == doctest::Approx(4.0 / 3.0).epsilon(1e-15));

        const EuclideanDisc d2 = halfplane_disc_image(2.0, 0.5);
        CHECK(d2.center.real() == doctest::Approx(10.0 / 3.0).epsilon(1e-15));
        CHECK(d2.radius == doctest::Approx(8.0 / 3.0).epsilon(1e-15));
    }
    SUBCASE("degenerates to the centre as r -> 0") {
        const EuclideanDisc d = halfplane_disc_image(1.0, 1e-9);
        CHECK(d.center.real() == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(d.radius == doctest::Approx(2e-9).epsilon(1e-9));
    }
    SUBCASE("lies inside the half-plane") {
        SplitMix64 rng(3);
        for (int i = 0; i < 1000; ++i) {
            const double b = rng.next_in(1e-3, 50.0);
            const double r = rng.next_in(1e-3, 0.999);
            const EuclideanDisc d = halfplane_disc_image(b, r);
            CHECK(d.center.real() - d.radius > 0.0);
        }
    }
    SUBCASE("rejects bad parameters") {
        CHECK_THROWS_AS(halfplane_disc_image(0.0, 0.5), std::domain_error);
        CHECK_THROWS_AS(halfplane_disc_image(-1.0, 0.5), std::domain_error);
        CHECK_THROWS_AS(halfplane_disc_image(1.0, 0.0), std::domain_error);
        CHECK_THROWS_AS(halfplane_disc_image(1.0, 1.0), std::domain_error);
    }
}

TEST_CASE("real-part interval of the image disc") {
    const RealInterval iv = halfplane_disc_re_interval(1.0, 0.5);
    CHECK(iv.lo == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(iv.hi == doctest::Approx(3.0).epsilon(1e-15));

    const RealInterval iv9 = halfplane_disc_re_interval(1.0, 0.9);
    CHECK(iv9.lo == doctest::Approx(1.0 / 19.0).epsilon(1e-14));
    CHECK(iv9.hi == doctest::Approx(19.0).epsilon(1e-14));

    SplitMix64 rng(9);
    for (int i = 0; i < 1000; ++i) {
        const double b = rng.next_in(1e-3, 50.0);
        const double r = rng.next_in(1e-3, 0.99);
        const RealInterval v = halfplane_disc_re_interval(b, r);
        const EuclideanDisc d = halfplane_disc_image(b, r);
        CHECK(v.lo > 0.0);
        CHECK(v.lo == doctest::Approx(d.center.real() - d.radius).epsilon(1e-11));
        CHECK(v.hi == doctest::Approx(d.center.real() + d.radius).epsilon(1e-13));
    }
}

TEST_CASE("mapped circle samples trace the image boundary") {
    const double b = 2.0, r = 0.7;
    const EuclideanDisc d = halfplane_disc_image(b, r);
    const RealInterval iv = halfplane_disc_re_interval(b, r);
    const Complex a = cayley_to_disc(HalfPlanePoint(b)).value;
    const double hyp_r = hyperbolic_radius_from_euclidean(r).value;

    double mn = 1e300, mx = -1e300;
    for (int k = 0; k < 4096; ++k) {
        const double phi = 2.0 * kPi * k / 4096;
        const DiscPoint pre{std::polar(r, phi)};
        const HalfPlanePoint w = cayley_to_halfplane(DiscPoint(disc_automorphism(a, pre)));
        // on the Euclidean boundary ...
        CHECK(std::fabs(std::abs(w.value - d.center) - d.radius) <= 1e-9);
        // ... and on the hyperbolic circle of radius 2 artanh r around b
        CHECK(std::fabs(dist_halfplane(w, HalfPlanePoint(b)) - hyp_r) <= 1e-11);
        mn = std::min(mn, w.value.real());
        mx = std::max(mx, w.value.real());
    }
    CHECK(std::fabs(mn - iv.lo) / iv.lo <= 1e-6);
    CHECK(std::fabs(mx - iv.hi) / iv.hi <= 1e-6);
}

TEST_CASE("artanh and hyperbolic radius") {
    CHECK(artanh(0.0) == 0.0);
    CHECK(std::fabs(artanh(0.5) - 0.5 * kLog3) < 1e-15);
    CHECK(std::fabs(artanh(-0.5) + 0.5 * kLog3) < 1e-15);
    CHECK_THROWS_AS(artanh(1.0), std::domain_error);
    CHECK_THROWS_AS(artanh(-1.0), std::domain_error);

    CHECK(hyperbolic_radius_from_euclidean(0.0).value == 0.0);
    CHECK(std::fabs(hyperbolic_radius_from_euclidean(0.5).value - kLog3) < 1e-15);
    CHECK_THROWS_AS(hyperbolic_radius_from_euclidean(1.0), std::domain_error);
    CHECK_THROWS_AS(hyperbolic_radius_from_euclidean(-0.1), std::domain_error);
}
