#pragma once

#include "logcoef/families.hpp"
#include "logcoef/objective.hpp"
#include "logcoef/polynomial.hpp"

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace logcoef {

/// Boundary pieces of E: {y = 0}, {x = 0} and {y = 1 - x^2}.
enum class Edge { Bottom, Left, Top };

inline constexpr std::array<Edge, 3> kAllEdges{Edge::Bottom, Edge::Left, Edge::Top};

std::string_view edge_name(Edge edge) noexcept;
/// "bottom", "left", "top"; throws UnknownEdge otherwise.
Edge parse_edge(std::string_view text);

/// Maps the edge parameter t in [0, 1] to a point of E: bottom (t, 0),
/// left (0, t), top (t, 1 - t^2).
RegionPoint edge_point(Edge edge, double t);

/// The objective restricted to an edge, as a polynomial in the edge
/// parameter. Built by substituting the edge parametrization into the
/// bivariate form; the y^2/(1+x) term divides exactly on every edge.
Polynomial edge_restriction(Family family, Edge edge);

/// The edge restriction and its maximum as stated in the published proofs.
/// Kept next to the computed values so that transcription differences are
/// reported instead of silently reproduced.
struct PublishedEdge {
    double value;
    Polynomial restriction;
};
PublishedEdge published_edge(Family family, Edge edge);

struct EdgeMaximum {
    Edge edge = Edge::Bottom;
    double parameter = 0.0;  // argmax in the edge parameter
    RegionPoint argmax;
    double value = 0.0;
    Polynomial restriction;
};

/// Exact maximum of the objective on one edge: endpoints plus the real roots
/// of the restriction's derivative inside [0, 1]. Throws UnknownEdge for an
/// out-of-range edge value.
EdgeMaximum edge_maximum(Family family, Edge edge);

struct InteriorPoint {
    RegionPoint point;
    double value = 0.0;
    /// Row-major [fxx, fxy, fyx, fyy] from central differences of the gradient.
    std::array<double, 4> hessian{};
    bool negative_definite = false;
};

/// Newton's method on grad f = 0 from every grid seed strictly inside E.
/// Limits with |grad| <= tol inside the open region are deduplicated and
/// returned by decreasing value. Non-convergent seeds are dropped.
std::vector<InteriorPoint> interior_critical_points(Family family, double grid_step,
                                                    double tol);

/// Central-difference Hessian of the analytic gradient.
std::array<double, 4> objective_hessian(Family family, RegionPoint p);

struct GridSweep {
    double value = 0.0;
    RegionPoint argmax;
    long points = 0;
};

/// Objective maximum over a grid of step `step` on E, including the curved
/// boundary points (x, 1 - x^2). Runs over x-strips concurrently.
GridSweep dense_grid_max(Family family, double step);

/// (x, y, value) samples of the objective on a grid over E.
std::vector<std::array<double, 3>> grid_samples(Family family, double step);

struct BoundReport {
    Family family = Family::F1;
    std::vector<InteriorPoint> interior_points;
    std::array<EdgeMaximum, 3> edge_maxima;
    std::array<PublishedEdge, 3> published_edges;
    double global_max = 0.0;
    RegionPoint global_argmax;
    double gamma3_bound = 0.0;
    double grid_max = 0.0;
    /// Differences between computed and published edge data.
    std::vector<std::string> notes;
};

/// Throws CertificationMismatch when `sweep` exceeds report.global_max by
/// more than 1e-6; otherwise records the sweep value as report.grid_max.
void certify_against_grid(BoundReport& report, const GridSweep& sweep);

/// Interior and boundary case analysis combined into the |gamma_3| bound,
/// cross-checked by a dense grid sweep of step `sweep_step`. Throws
/// CertificationMismatch when the sweep beats the analytic maximum by more
/// than 1e-6.
BoundReport global_bound(Family family, double grid_step = 0.05, double tol = 1e-12,
                         double sweep_step = 1e-3);

}  // namespace logcoef
