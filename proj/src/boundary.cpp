#include "ebp/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "ebp/disc.hpp"

namespace ebp {

namespace {

// Finest spacing the angle axis can hold distinct nodes at.
const double kSpacingFloor = 64.0 * std::numeric_limits<double>::epsilon() * two_pi;

struct Interval {
    double lo, hi;
    double target;
};

}  // namespace

BoundaryGrid::BoundaryGrid(Kind kind, std::vector<GridNode> nodes)
    : kind_(kind), nodes_(std::move(nodes)) {
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (!(nodes_[i].theta >= 0.0 && nodes_[i].theta < two_pi))
            throw std::invalid_argument("grid: node angle outside [0, 2pi)");
        if (!(nodes_[i].weight >= 0.0)) throw std::invalid_argument("grid: negative weight");
        if (i > 0 && !(nodes_[i - 1].theta < nodes_[i].theta))
            throw std::invalid_argument("grid: node angles must be strictly increasing");
    }
}

double BoundaryGrid::total_weight() const {
    double sum = 0.0, comp = 0.0;
    for (const GridNode& n : nodes_) {
        const double y = n.weight - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum;
}

BoundaryGrid make_uniform_grid(int count) {
    if (count < 1) throw std::invalid_argument("make_uniform_grid: count must be >= 1");
    std::vector<GridNode> nodes;
    nodes.reserve(static_cast<std::size_t>(count));
    const double h = two_pi / count;
    for (int j = 0; j < count; ++j) nodes.push_back({(j + 0.5) * h, h});
    return BoundaryGrid(BoundaryGrid::Kind::Uniform, std::move(nodes));
}

BoundaryGrid make_grid(const ZeroSequence& zeros, int base_count, int refine_factor) {
    if (base_count < 64) throw std::invalid_argument("make_grid: base_count must be >= 64");
    if (refine_factor < 1) throw std::invalid_argument("make_grid: refine_factor must be >= 1");

    const double h = two_pi / base_count;
    double background = h;  // tightened if a window spans the whole circle

    std::vector<Interval> windows;
    std::vector<GridNode> point_nodes;  // windows too thin to resolve in angles
    for (const Zero& z : zeros) {
        const double width = 4.0 * two_pi * z.eps;  // 8*pi*eps
        const double target = std::max(std::min(h / refine_factor, z.eps), kSpacingFloor);
        if (width >= two_pi) {
            background = std::min(background, target);
            continue;
        }
        if (width < kSpacingFloor) {
            point_nodes.push_back({wrap_angle(z.theta), width});
            continue;
        }
        const double center = wrap_angle(z.theta);
        double lo = center - 0.5 * width;
        double hi = center + 0.5 * width;
        if (lo < 0.0) {
            windows.push_back({lo + two_pi, two_pi, target});
            lo = 0.0;
        }
        if (hi > two_pi) {
            windows.push_back({0.0, hi - two_pi, target});
            hi = two_pi;
        }
        windows.push_back({lo, hi, target});
    }

    // Elementary segments between the window breakpoints, each at the finest
    // target among the windows covering it.
    std::vector<double> cuts{0.0, two_pi};
    for (const Interval& w : windows) {
        cuts.push_back(w.lo);
        cuts.push_back(w.hi);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    std::vector<GridNode> nodes;
    nodes.reserve(static_cast<std::size_t>(base_count));
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double lo = cuts[i], hi = cuts[i + 1];
        const double len = hi - lo;
        if (!(len > 0.0)) continue;
        const double mid = lo + 0.5 * len;
        double target = background;
        for (const Interval& w : windows)
            if (w.lo <= mid && mid < w.hi) target = std::min(target, w.target);
        const auto m = static_cast<std::size_t>(std::max(1.0, std::ceil(len / target)));
        const double s = len / static_cast<double>(m);
        for (std::size_t j = 0; j < m; ++j) {
            double theta = lo + (static_cast<double>(j) + 0.5) * s;
            if (theta >= two_pi) theta = std::nextafter(two_pi, 0.0);
            nodes.push_back({theta, s});
        }
    }

    // Degenerate windows ride on top of the covering segment; their weight
    // (~8*pi*eps below the spacing floor) is a negligible double count.
    if (!point_nodes.empty()) {
        std::sort(point_nodes.begin(), point_nodes.end(),
                  [](const GridNode& a, const GridNode& b) { return a.theta < b.theta; });
        std::vector<GridNode> merged;
        for (const GridNode& p : point_nodes) {
            if (!merged.empty() && merged.back().theta == p.theta)
                merged.back().weight += p.weight;
            else
                merged.push_back(p);
        }
        std::vector<GridNode> combined;
        combined.reserve(nodes.size() + merged.size());
        std::size_t a = 0, b = 0;
        while (a < nodes.size() || b < merged.size()) {
            if (b == merged.size() || (a < nodes.size() && nodes[a].theta < merged[b].theta)) {
                combined.push_back(nodes[a++]);
            } else if (a == nodes.size() || merged[b].theta < nodes[a].theta) {
                combined.push_back(merged[b++]);
            } else {  // exact tie with a segment midpoint
                nodes[a].weight += merged[b].weight;
                combined.push_back(nodes[a++]);
                ++b;
            }
        }
        nodes = std::move(combined);
    }

    // fold any ulp-scale angle collisions from adjacent micro-segments
    std::vector<GridNode> strict;
    strict.reserve(nodes.size());
    for (const GridNode& n : nodes) {
        if (!strict.empty() && n.theta <= strict.back().theta)
            strict.back().weight += n.weight;
        else
            strict.push_back(n);
    }
    nodes = std::move(strict);

    const bool plain = windows.empty() && point_nodes.empty() && background == h;
    return BoundaryGrid(plain ? BoundaryGrid::Kind::Uniform : BoundaryGrid::Kind::Stratified,
                        std::move(nodes));
}

DistributionProfile distribution(std::span<const double> samples, const BoundaryGrid& grid,
                                 std::span<const double> lambda_grid) {
    if (samples.size() != grid.size())
        throw std::invalid_argument("distribution: samples not aligned with grid (" +
                                    std::to_string(samples.size()) + " vs " +
                                    std::to_string(grid.size()) + " nodes)");

    // Sort samples descending once; m(lambda) is then a prefix weight.
    std::vector<std::pair<double, double>> ranked(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) ranked[i] = {samples[i], grid[i].weight};
    std::sort(ranked.begin(), ranked.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    std::vector<double> prefix(ranked.size() + 1, 0.0);
    {
        double sum = 0.0, comp = 0.0;
        for (std::size_t i = 0; i < ranked.size(); ++i) {
            const double y = ranked[i].second - comp;
            const double t = sum + y;
            comp = (t - sum) - y;
            sum = t;
            prefix[i + 1] = sum;
        }
    }

    DistributionProfile profile;
    profile.lambda_grid.assign(lambda_grid.begin(), lambda_grid.end());
    profile.measure.reserve(lambda_grid.size());
    for (double lambda : lambda_grid) {
        // count of samples strictly above lambda
        auto it = std::partition_point(ranked.begin(), ranked.end(),
                                       [lambda](const auto& s) { return s.first > lambda; });
        profile.measure.push_back(prefix[static_cast<std::size_t>(it - ranked.begin())]);
    }
    return profile;
}

DistributionProfile weak_quasinorm(std::span<const double> samples, const BoundaryGrid& grid,
                                   double p, int points_per_decade) {
    if (!(p > 0.0 && p <= 2.0)) throw std::invalid_argument("weak_quasinorm: p must lie in (0,2]");
    if (points_per_decade < 1)
        throw std::invalid_argument("weak_quasinorm: points_per_decade must be >= 1");

    double max_sample = 0.0;
    double min_positive = std::numeric_limits<double>::infinity();
    for (double s : samples) {
        if (s > max_sample) max_sample = s;
        if (s > 0.0 && s < min_positive) min_positive = s;
    }
    if (max_sample <= 0.0) {
        DistributionProfile zero;
        zero.p = p;
        return zero;
    }

    const double ratio = std::pow(10.0, 1.0 / points_per_decade);
    std::vector<double> lambdas;
    double lambda = max_sample;
    // one extra point below the min positive sample so a constant-sample
    // profile still sees a level with full measure
    while (lambda * ratio > min_positive) {
        lambdas.push_back(lambda);
        lambda /= ratio;
    }
    lambdas.push_back(lambda);
    std::reverse(lambdas.begin(), lambdas.end());  // ascending

    DistributionProfile profile = distribution(samples, grid, lambdas);
    profile.p = p;
    for (std::size_t i = 0; i < profile.lambda_grid.size(); ++i) {
        const double value = std::pow(profile.lambda_grid[i], p) * profile.measure[i];
        if (value > profile.quasinorm) {
            profile.quasinorm = value;
            profile.argmax_lambda = profile.lambda_grid[i];
        }
    }
    return profile;
}

double hardy_quasinorm(std::span<const double> samples, const BoundaryGrid& grid, double p) {
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("hardy_quasinorm: p must lie in (0,1)");
    if (samples.size() != grid.size())
        throw std::invalid_argument("hardy_quasinorm: samples not aligned with grid");
    double sum = 0.0, comp = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double y = grid[i].weight * std::pow(samples[i], p) - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return std::pow(sum / two_pi, 1.0 / p);
}

}  // namespace ebp
