#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "ebp/blaschke.hpp"
#include "ebp/boundary.hpp"
#include "ebp/disc.hpp"
#include "ebp/sweep.hpp"

using namespace ebp;

namespace {

double uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1p-53; }

std::vector<double> constant_samples(const BoundaryGrid& grid, double value) {
    return std::vector<double>(grid.size(), value);
}

}  // namespace

TEST_CASE("uniform grid") {
    const auto grid = make_grid(ZeroSequence{}, 256, 8);
    CHECK(grid.kind() == BoundaryGrid::Kind::Uniform);
    REQUIRE(grid.size() == 256);
    for (const auto& node : grid.nodes())
        CHECK(node.weight == doctest::Approx(two_pi / 256).epsilon(1e-15));
    CHECK(grid.total_weight() == doctest::Approx(two_pi).epsilon(1e-14));
    CHECK_THROWS_AS(make_grid(ZeroSequence{}, 32, 8), std::invalid_argument);
}

TEST_CASE("window refinement resolves the spike scale") {
    const auto zeros = ZeroSequence::from_entries({{1e-4, 2.0}});
    const auto grid = make_grid(zeros, 256, 64);
    CHECK(grid.kind() == BoundaryGrid::Kind::Stratified);
    const double half_width = 4.0 * 3.141592653589793 * 1e-4;
    bool saw_window_node = false;
    for (const auto& node : grid.nodes()) {
        if (std::abs(node.theta - 2.0) < half_width * 0.9) {
            saw_window_node = true;
            CHECK(node.weight <= 1e-4);
        }
    }
    CHECK(saw_window_node);
}

TEST_CASE("weights partition the circle") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        const auto zeros = generate_geometric(
            1.0, 0.3 + 0.5 * uniform(rng), 3 + static_cast<int>(rng() % 25),
            AngleRule::uniform_random(trial));
        const auto grid = make_grid(zeros, 64 << (rng() % 5), 1 + static_cast<int>(rng() % 64));
        CHECK(std::abs(grid.total_weight() - two_pi) < 1e-10);
        for (std::size_t i = 1; i < grid.size(); ++i)
            CHECK(grid[i - 1].theta < grid[i].theta);
    }
}

TEST_CASE("degenerate windows keep their analytic mass") {
    // gaps far below the double-angle resolution: one node per zero, weight
    // 8*pi*eps
    std::vector<Zero> entries;
    for (int k = 1; k <= 5; ++k) entries.push_back({std::ldexp(1.0, -70 - k), 0.3 * k});
    const auto zeros = ZeroSequence::from_entries(std::move(entries));
    const auto grid = make_grid(zeros, 128, 4);
    for (const Zero& z : zeros) {
        bool found = false;
        for (const auto& node : grid.nodes())
            if (node.theta == z.theta) {
                found = true;
                CHECK(node.weight == doctest::Approx(8.0 * 3.141592653589793 * z.eps).epsilon(1e-12));
            }
        CHECK(found);
    }
    CHECK(std::abs(grid.total_weight() - two_pi) < 1e-10);
}

TEST_CASE("windows that wrap or coincide stay well formed") {
    // window at theta ~ 0 wraps across 2 pi; duplicate zeros share a window;
    // a deep zero collapses to a point node; construction must still yield
    // strictly increasing nodes partitioning the circle
    const auto zeros = ZeroSequence::from_entries({
        {0.2, 0.01},
        {0.2, 0.01},
        {0.05, 6.28},
        {1e-20, 3.0},
        {1e-20, 3.0},
    });
    const auto grid = make_grid(zeros, 128, 8);
    CHECK(std::abs(grid.total_weight() - two_pi) < 1e-10);
    for (std::size_t i = 1; i < grid.size(); ++i) CHECK(grid[i - 1].theta < grid[i].theta);
}

TEST_CASE("distribution of constant samples") {
    const auto grid = make_uniform_grid(512);
    const auto ones = constant_samples(grid, 1.0);
    const std::vector<double> lambdas{0.5, 2.0};
    const auto profile = distribution(ones, grid, lambdas);
    CHECK(profile.measure[0] == doctest::Approx(two_pi).epsilon(1e-12));
    CHECK(profile.measure[1] == 0.0);

    CHECK_THROWS_AS(distribution(std::vector<double>(3, 1.0), grid, lambdas),
                    std::invalid_argument);
}

TEST_CASE("single-zero level set against the closed form") {
    // |B'(e^{i t})| = (3/4)/(5/4 - cos t) exceeds 1 exactly on |t| < pi/3
    const auto zeros = ZeroSequence::from_entries({{0.5, 0.0}});
    const BlaschkeProduct b{zeros};
    const auto grid = make_grid(zeros, 1 << 14, 16);
    const auto samples = boundary_derivative_sweep(b, grid);
    const std::vector<double> lambdas{1.0};
    const auto profile = distribution(samples, grid, lambdas);
    CHECK(profile.measure[0] == doctest::Approx(two_pi / 3.0).epsilon(0.01));
}

TEST_CASE("weak quasinorm of constant samples") {
    const auto grid = make_uniform_grid(256);
    const auto profile = weak_quasinorm(constant_samples(grid, 1.0), grid, 1.0);
    // sup sits at the largest grid lambda below 1
    double best = 0.0;
    for (std::size_t i = 0; i < profile.lambda_grid.size(); ++i)
        if (profile.lambda_grid[i] < 1.0) best = std::max(best, profile.lambda_grid[i]);
    CHECK(profile.quasinorm == doctest::Approx(two_pi * best).epsilon(1e-12));
    CHECK(profile.quasinorm == doctest::Approx(two_pi).epsilon(0.02));

    const auto zero_profile = weak_quasinorm(constant_samples(grid, 0.0), grid, 1.0);
    CHECK(zero_profile.quasinorm == 0.0);

    CHECK_THROWS_AS(weak_quasinorm(constant_samples(grid, 1.0), grid, 2.5),
                    std::invalid_argument);
}

TEST_CASE("measure is nonincreasing and collapses outside the sample range") {
    std::mt19937_64 rng(8);
    const auto zeros = generate_geometric(1.0, 0.5, 12, AngleRule::uniform_random(2));
    const BlaschkeProduct b{zeros};
    const auto grid = make_grid(zeros, 4096, 16);
    const auto samples = boundary_derivative_sweep(b, grid);
    const auto profile = weak_quasinorm(samples, grid, 1.0);
    for (std::size_t i = 1; i < profile.measure.size(); ++i)
        CHECK(profile.measure[i] <= profile.measure[i - 1]);
    CHECK(profile.measure.back() == 0.0);  // at the max sample, strict >
    // the grid extends one step below the least sample, where m is full
    CHECK(profile.measure.front() == doctest::Approx(two_pi).epsilon(1e-12));

    double lo = 1e300, hi = 0.0;
    for (double s : samples) {
        lo = std::min(lo, s);
        hi = std::max(hi, s);
    }
    (void)lo;
    CHECK(profile.lambda_grid.back() == hi);
}

TEST_CASE("grid refinement stability of the weak quasinorm") {
    const auto zeros = generate_geometric(1.0, 0.5, 40, AngleRule::uniform_random(13));
    const BlaschkeProduct b{zeros};
    const auto coarse_grid = make_grid(zeros, 1 << 13, 64);
    const auto fine_grid = make_grid(zeros, 1 << 14, 64);
    const double coarse =
        weak_quasinorm(boundary_derivative_sweep(b, coarse_grid), coarse_grid, 1.0).quasinorm;
    const double fine =
        weak_quasinorm(boundary_derivative_sweep(b, fine_grid), fine_grid, 1.0).quasinorm;
    CHECK(std::abs(fine - coarse) < 0.05 * coarse);
}

TEST_CASE("hardy quasinorm basics") {
    const auto grid = make_uniform_grid(512);
    for (double p : {0.3, 0.5, 0.9})
        CHECK(hardy_quasinorm(constant_samples(grid, 1.0), grid, p) ==
              doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(hardy_quasinorm(constant_samples(grid, 1.0), grid, 1.0),
                    std::invalid_argument);

    // reference: plain 2^14-node uniform quadrature of |B'|^1/2
    const auto zeros = ZeroSequence::from_entries({{0.5, 0.0}});
    const BlaschkeProduct b{zeros};
    const auto ref_grid = make_uniform_grid(1 << 14);
    double ref = 0.0;
    for (const auto& node : ref_grid.nodes())
        ref += node.weight * std::sqrt(boundary_derivative_modulus(b, node.theta));
    ref = std::pow(ref / two_pi, 2.0);

    const auto grid2 = make_grid(zeros, 4096, 16);
    const double got =
        hardy_quasinorm(boundary_derivative_sweep(b, grid2), grid2, 0.5);
    CHECK(got == doctest::Approx(ref).epsilon(0.005));
}

TEST_CASE("hardy quasinorm contrast between generators") {
    // geometric gaps: the H^0.9 values converge along truncations (tail
    // increments die off); power gaps keep growing
    std::vector<double> geo;
    for (int n : {10, 20, 30, 40}) {
        const auto zg = generate_geometric(1.0, 0.5, n, AngleRule::uniform_random(6));
        const BlaschkeProduct bg{zg};
        const auto gg = make_grid(zg, 4096, 32);
        geo.push_back(hardy_quasinorm(boundary_derivative_sweep(bg, gg), gg, 0.9));
    }
    std::vector<double> pow_;
    for (int n : {100, 400, 1600}) {
        const auto zp = generate_power(2.0, n, AngleRule::uniform_random(6));
        const BlaschkeProduct bp{zp};
        const auto gp = make_grid(zp, 4096, 32);
        pow_.push_back(hardy_quasinorm(boundary_derivative_sweep(bp, gp), gp, 0.9));
    }
    // tail of the geometric table flattens out ...
    CHECK(geo[3] / geo[2] < geo[1] / geo[0]);
    CHECK(geo[3] / geo[2] < 1.1);
    // ... while the power table keeps climbing at a steady clip
    CHECK(pow_[1] / pow_[0] > 1.5);
    CHECK(pow_[2] / pow_[1] > 1.5);
}
