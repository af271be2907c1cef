#pragma once

#include <span>
#include <vector>

#include "ebp/zeroseq.hpp"

namespace ebp {

struct GridNode {
    double theta;
    double weight;
};

/// Quadrature grid on the unit circle: midpoint nodes with their local
/// spacings as weights. Weights sum to 2*pi up to rounding; nodes are
/// strictly increasing in [0, 2*pi).
class BoundaryGrid {
public:
    enum class Kind { Uniform, Stratified };

    BoundaryGrid(Kind kind, std::vector<GridNode> nodes);

    Kind kind() const { return kind_; }
    std::size_t size() const { return nodes_.size(); }
    const GridNode& operator[](std::size_t i) const { return nodes_[i]; }
    const std::vector<GridNode>& nodes() const { return nodes_; }
    double total_weight() const;  // compensated sum

private:
    Kind kind_;
    std::vector<GridNode> nodes_;
};

/// Plain uniform grid of count midpoint nodes, weight 2*pi/count each.
BoundaryGrid make_uniform_grid(int count);

/// Uniform grid of base_count nodes refined near the zero angles: each zero
/// contributes a window of width 8*pi*eps centered at its angle, subdivided
/// at spacing min(h/refine_factor, eps) where h is the base spacing.
/// Overlapping windows merge, taking the finest spacing where they overlap.
///
/// Refined spacing is floored at ~64 ulps of 2*pi; a window too thin for
/// that floor degenerates to a single node at the zero angle whose weight is
/// the analytic window width 8*pi*eps, so the spike mass it carries stays in
/// the quadrature even when the window is unresolvable in double angles.
BoundaryGrid make_grid(const ZeroSequence& zeros, int base_count, int refine_factor);

/// Level-set profile of a sampled boundary function: m(lambda) is the
/// weighted arclength of {theta : sample > lambda}, and when p is set the
/// quasinorm is sup over the grid of lambda^p * m(lambda).
struct DistributionProfile {
    std::vector<double> lambda_grid;
    std::vector<double> measure;
    double p = 0.0;  // 0 = unset
    double quasinorm = 0.0;
    double argmax_lambda = 0.0;
};

/// Measures m(lambda) for an explicit lambda grid. Samples must align with
/// the grid nodes.
DistributionProfile distribution(std::span<const double> samples, const BoundaryGrid& grid,
                                 std::span<const double> lambda_grid);

/// Weak-L^p quasinorm sup lambda^p m(lambda) over a log-spaced lambda grid
/// spanning [min positive sample, max sample], extended one step below the
/// minimum so constant samples still attain their sup. points_per_decade
/// defaults to 200, resolving the sup to about 2% relative. All-zero samples
/// give a zero profile. p must lie in (0, 2].
DistributionProfile weak_quasinorm(std::span<const double> samples, const BoundaryGrid& grid,
                                   double p, int points_per_decade = 200);

/// H^p quasinorm of sampled boundary values, (sum w |g|^p / 2pi)^{1/p},
/// p in (0,1).
double hardy_quasinorm(std::span<const double> samples, const BoundaryGrid& grid, double p);

}  // namespace ebp
