#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "ebp/blaschke.hpp"
#include "ebp/disc.hpp"

using namespace ebp;
using cplx = std::complex<double>;

namespace {

ZeroSequence single(double eps, double theta = 0.0, bool allow_origin = false) {
    return ZeroSequence::from_entries({{eps, theta}}, allow_origin);
}

// central finite difference along a complex direction; B is analytic, so a
// real step suffices
cplx fd_derivative(const BlaschkeProduct& b, cplx z, double h = 1e-6) {
    return (evaluate(b, z + h) - evaluate(b, z - h)) / (2.0 * h);
}

double uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1p-53; }

}  // namespace

TEST_CASE("stable disc primitives agree with naive arithmetic at moderate scales") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const double eps = 1e-4 + 0.99 * uniform(rng);
        const double theta_z = two_pi * uniform(rng);
        const double gap = 0.5 * uniform(rng);
        const double theta = two_pi * uniform(rng);

        const cplx z = std::polar(1.0 - eps, theta_z);
        const cplx w = std::polar(1.0 - gap, theta);
        const cplx naive_den = 1.0 - std::conj(z) * w;
        const cplx stable_den = one_minus_zconj_w(eps, theta_z, gap, theta);
        CHECK(std::abs(stable_den - naive_den) < 1e-14 * (1.0 + std::abs(naive_den)));

        const cplx naive_num = z - w;
        const cplx stable_num = zero_minus_w(eps, theta_z, gap, theta);
        CHECK(std::abs(stable_num - naive_num) < 1e-12 * (1.0 + std::abs(naive_num)));

        // compare the distance forms only where the naive one is trustworthy
        const double naive_dist = std::norm(std::polar(1.0, theta) - z);
        if (naive_dist > 1e-4)
            CHECK(boundary_dist_sq(eps, theta - theta_z) ==
                  doctest::Approx(naive_dist).epsilon(1e-11));
    }
}

TEST_CASE("stable disc primitives keep relative accuracy at the spike center") {
    // at theta = theta_z the exact values are eps^2 and eps; the stable
    // forms reproduce them bit for bit however small the gap
    for (double eps : {0x1p-20, 0x1p-40, 0x1p-60, 0x1p-80}) {
        CHECK(boundary_dist_sq(eps, 0.0) == eps * eps);
        const cplx den = one_minus_zconj_w(eps, 1.25, 0.0, 1.25);
        CHECK(den.real() == eps);
        CHECK(den.imag() == 0.0);
    }
}

TEST_CASE("single-factor values") {
    const BlaschkeProduct half{single(0.5)};
    CHECK(std::abs(evaluate(half, 0.0) - cplx{0.5, 0.0}) < 1e-15);

    const BlaschkeProduct origin{single(1.0, 0.0, true)};
    CHECK(std::abs(evaluate(origin, cplx{0.5, 0.0}) - cplx{-0.5, 0.0}) < 1e-15);
    CHECK(std::abs(derivative(origin, cplx{0.3, 0.2}) - cplx{-1.0, 0.0}) < 1e-15);
}

TEST_CASE("empty product is the constant") {
    const BlaschkeProduct trivial{ZeroSequence{}, cplx{0.0, 1.0}};
    CHECK(std::abs(evaluate(trivial, cplx{0.3, 0.1}) - cplx{0.0, 1.0}) < 1e-15);
    CHECK(std::abs(derivative(trivial, cplx{0.3, 0.1})) == 0.0);
}

TEST_CASE("psi must be unimodular") {
    CHECK_THROWS_AS(BlaschkeProduct(single(0.5), cplx{0.5, 0.0}), std::invalid_argument);
}

TEST_CASE("boundary modulus is 1") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        const auto zeros =
            generate_geometric(1.0, 0.3 + 0.45 * uniform(rng), 5 + static_cast<int>(rng() % 30),
                               AngleRule::uniform_random(trial));
        const BlaschkeProduct b{zeros, std::polar(1.0, uniform(rng))};
        for (int i = 0; i < 100; ++i) {
            const double theta = two_pi * uniform(rng);
            CHECK(std::abs(std::abs(evaluate_boundary(b, theta)) - 1.0) < 1e-10);
            // the generic path stays close too, just not to machine precision
            CHECK(std::abs(std::abs(evaluate(b, unit(theta))) - 1.0) < 1e-8);
        }
    }
}

TEST_CASE("the product vanishes exactly at its zeros") {
    const auto zeros = generate_geometric(1.0, 0.5, 12, AngleRule::uniform_random(30));
    const BlaschkeProduct b{zeros};
    for (const Zero& z : zeros) {
        const auto at = std::polar(1.0 - z.eps, z.theta);
        CHECK(std::abs(evaluate(b, at)) < 1e-13);
    }
}

TEST_CASE("maximum principle inside the disc") {
    std::mt19937_64 rng(12);
    const auto zeros = generate_geometric(1.0, 0.5, 12, AngleRule::uniform_random(3));
    const BlaschkeProduct b{zeros};
    for (int i = 0; i < 200; ++i) {
        const double r = 0.98 * uniform(rng);
        const double theta = two_pi * uniform(rng);
        CHECK(std::abs(evaluate(b, std::polar(r, theta))) < 1.0);
    }
}

TEST_CASE("evaluation domain ends just past the circle") {
    const BlaschkeProduct b{single(0.5)};
    CHECK_THROWS_AS(evaluate(b, cplx{1.5, 0.0}), std::domain_error);
    CHECK_THROWS_AS(derivative(b, cplx{0.0, -2.0}), std::domain_error);
    CHECK_NOTHROW(evaluate(b, cplx{1.0, 0.0}));
}

TEST_CASE("derivative closed form for one factor") {
    const BlaschkeProduct half{single(0.5)};
    // b'(z) = -(1-a^2)/(1-az)^2 at z=0 -> -3/4
    CHECK(std::abs(derivative(half, 0.0) - cplx{-0.75, 0.0}) < 1e-15);
}

TEST_CASE("derivative matches finite differences") {
    const auto zeros = generate_geometric(1.0, 0.5, 5, AngleRule::uniform_random(17));
    const BlaschkeProduct b{zeros};
    const cplx z = std::polar(0.9, 0.3);
    const cplx exact = derivative(b, z);
    CHECK(std::abs(exact - fd_derivative(b, z)) < 1e-7 * std::abs(exact));

    // also at a zero itself, where the product rule must stay exact
    const cplx at_zero = std::polar(1.0 - zeros[2].eps, zeros[2].theta);
    const cplx d = derivative(b, at_zero);
    CHECK(std::abs(d - fd_derivative(b, at_zero)) < 1e-6 * std::abs(d));
}

TEST_CASE("derivative at a zero, stable route vs generic route") {
    const auto zeros = generate_geometric(1.0, 0.5, 10, AngleRule::uniform_random(19));
    const BlaschkeProduct b{zeros};
    for (std::size_t n = 0; n < zeros.size(); ++n) {
        const cplx generic = derivative(b, std::polar(1.0 - zeros[n].eps, zeros[n].theta));
        const cplx stable = derivative_at_zero(b, n);
        CHECK(std::abs(stable - generic) < 1e-9 * std::abs(stable));
    }
    CHECK_THROWS_AS(derivative_at_zero(b, 10), std::out_of_range);

    // gaps below machine epsilon: the generic route cannot even represent
    // the point, the stable route still produces the spike scale 1/eps
    const auto deep = generate_geometric(1.0, 0.25, 40, AngleRule::uniform_random(20));
    const BlaschkeProduct bd{deep};
    const double inf = std::abs(derivative_at_zero(bd, 39)) * deep[39].eps;
    CHECK(std::isfinite(inf));
    CHECK(inf > 0.01);
    CHECK(inf < 100.0);
}

TEST_CASE("boundary derivative modulus closed forms") {
    const BlaschkeProduct origin{single(1.0, 0.0, true)};
    for (double theta : {0.0, 1.0, 2.5, 6.0})
        CHECK(boundary_derivative_modulus(origin, theta) == doctest::Approx(1.0).epsilon(1e-14));

    const BlaschkeProduct half{single(0.5)};
    CHECK(boundary_derivative_modulus(half, 0.0) == doctest::Approx(3.0).epsilon(1e-14));
}

TEST_CASE("radial limit of |B'| reaches the boundary formula") {
    std::mt19937_64 rng(2025);
    for (int trial = 0; trial < 20; ++trial) {
        const int count = 5 + static_cast<int>(rng() % 16);
        const auto zeros = generate_geometric(1.0, 0.5, count, AngleRule::uniform_random(trial));
        const BlaschkeProduct b{zeros};
        int tested = 0;
        while (tested < 20) {
            const double theta = two_pi * uniform(rng);
            double dist = two_pi;
            for (const Zero& z : zeros) {
                const double d = std::abs(std::remainder(theta - z.theta, two_pi));
                dist = std::min(dist, d);
            }
            if (dist < 1e-3) continue;
            ++tested;
            const double exact = boundary_derivative_modulus(b, theta);
            const double radial = std::abs(derivative(b, std::polar(1.0 - 1e-8, theta)));
            CHECK(std::abs(exact - radial) < 1e-4 * exact);
        }
    }
}

TEST_CASE("radial consistency improves monotonically") {
    const auto zeros = generate_geometric(1.0, 0.5, 10, AngleRule::uniform_random(8));
    const BlaschkeProduct b{zeros};
    const double theta = 2.0;  // away from every zero angle for this seed
    const double exact = boundary_derivative_modulus(b, theta);
    double previous = std::numeric_limits<double>::infinity();
    for (int k = 2; k <= 8; ++k) {
        const double r = 1.0 - std::pow(10.0, -k);
        const double gap = std::abs(exact - std::abs(derivative(b, std::polar(r, theta))));
        CHECK(gap <= previous * (1.0 + 1e-9));
        previous = gap;
    }
    CHECK(previous < 1e-6 * exact);
}

TEST_CASE("spike lower bound near each zero") {
    const auto zeros = generate_geometric(1.0, 0.5, 20, AngleRule::uniform_random(21));
    const BlaschkeProduct b{zeros};
    std::mt19937_64 rng(77);
    for (const Zero& z : zeros) {
        // angles with |e^{i t} - z_n| <= 2 eps_n; the angular half-width is
        // at least eps_n for eps <= 1/2, sample within that
        for (int i = 0; i < 10; ++i) {
            const double t = z.theta + z.eps * (2.0 * uniform(rng) - 1.0);
            if (boundary_dist_sq(z.eps, t - z.theta) > 4.0 * z.eps * z.eps) continue;
            CHECK(boundary_derivative_modulus(b, t) >= 1.0 / (4.0 * z.eps));
        }
    }
}

TEST_CASE("frostman shift closed forms") {
    const BlaschkeProduct origin{single(1.0, 0.0, true)};
    for (double a : {0.1, 0.5, 0.9}) {
        const double got = frostman_shift_boundary(origin, cplx{a, 0.0}, 3.141592653589793);
        CHECK(got == doctest::Approx((1.0 + a) / (1.0 - a)).epsilon(1e-13));
    }
}

TEST_CASE("frostman shift at a=0 is the identity") {
    const auto zeros = generate_geometric(1.0, 0.5, 15, AngleRule::uniform_random(4));
    const BlaschkeProduct b{zeros};
    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
        const double theta = two_pi * uniform(rng);
        const double shifted = frostman_shift_boundary(b, cplx{0.0, 0.0}, theta);
        const double plain = boundary_derivative_modulus(b, theta);
        CHECK(std::abs(shifted - plain) <= 1e-14 * plain);
    }
    CHECK_THROWS_AS(frostman_shift_boundary(b, cplx{1.0, 0.0}, 0.0), std::domain_error);
}
