#include "logcoef/optimize.hpp"

#include "logcoef/errors.hpp"
#include "logcoef/tolerances.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <limits>
#include <stdexcept>
#include <thread>

namespace logcoef {

namespace {

/// Exact quotient num / den for a divisor of degree <= 1.
Polynomial divide_exact(const Polynomial& num, const Polynomial& den)
{
    if (den.degree() == 0) {
        return (1.0 / den.coefficient(0)) * num;
    }
    if (den.degree() != 1) {
        throw std::logic_error("edge substitution produced a non-linear divisor");
    }
    // Synthetic division by (b t + a): q_{k-1} = (n_k - a q_k) / b.
    const double a = den.coefficient(0);
    const double b = den.coefficient(1);
    const int n = num.degree();
    std::vector<double> q(static_cast<std::size_t>(n) + 1, 0.0);
    for (int k = n; k >= 1; --k) {
        q[static_cast<std::size_t>(k - 1)] =
            (num.coefficient(k) - a * q[static_cast<std::size_t>(k)]) / b;
    }
    const double remainder = num.coefficient(0) - a * q[0];
    if (std::abs(remainder) > 1e-12) {
        throw std::logic_error("edge substitution left a non-zero remainder");
    }
    return Polynomial(std::move(q));
}

bool better(double value, RegionPoint p, double best_value, RegionPoint best)
{
    if (value > best_value + Tolerances::value_tie) {
        return true;
    }
    if (value < best_value - Tolerances::value_tie) {
        return false;
    }
    return p.x < best.x || (p.x == best.x && p.y < best.y);
}

std::string format12(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

}  // namespace

std::string_view edge_name(Edge edge) noexcept
{
    switch (edge) {
    case Edge::Bottom:
        return "bottom";
    case Edge::Left:
        return "left";
    case Edge::Top:
        return "top";
    }
    return "unknown";
}

Edge parse_edge(std::string_view text)
{
    for (Edge e : kAllEdges) {
        if (edge_name(e) == text) {
            return e;
        }
    }
    throw UnknownEdge("unknown edge '" + std::string(text) + "' (expected bottom, left or top)");
}

RegionPoint edge_point(Edge edge, double t)
{
    switch (edge) {
    case Edge::Bottom:
        return {t, 0.0};
    case Edge::Left:
        return {0.0, t};
    case Edge::Top:
        return {t, 1.0 - t * t};
    }
    throw UnknownEdge("unknown edge id " + std::to_string(static_cast<int>(edge)));
}

Polynomial edge_restriction(Family family, Edge edge)
{
    const Polynomial t({0.0, 1.0});
    const Polynomial one({1.0});
    Polynomial x;
    Polynomial y;
    switch (edge) {
    case Edge::Bottom:
        x = t;
        y = Polynomial({0.0});
        break;
    case Edge::Left:
        x = Polynomial({0.0});
        y = t;
        break;
    case Edge::Top:
        x = t;
        y = one - t * t;
        break;
    default:
        throw UnknownEdge("unknown edge id " + std::to_string(static_cast<int>(edge)));
    }
    const ObjectiveForm& f = objective_form(family);
    const Polynomial carlson_term = one - x * x - divide_exact(y * y, one + x);
    return Polynomial({f.constant}) + f.lin_x * x + f.lin_y * y + f.carlson * carlson_term +
           f.cross * (x * y) + f.cubic * (x * x * x);
}

PublishedEdge published_edge(Family family, Edge edge)
{
    const double s30 = 10.0 * std::sqrt(30.0) / 9.0;
    switch (family) {
    case Family::F1:
        switch (edge) {
        case Edge::Bottom:
            return {9.0 + s30, Polynomial({15.0, 2.0, -12.0, 4.0})};
        case Edge::Left:
            return {46.0 / 3.0, Polynomial({15.0, 4.0, -12.0})};
        case Edge::Top:
            return {15.304035, Polynomial({7.0, 22.0, -4.0, -16.0})};
        }
        break;
    case Family::F2:
        switch (edge) {
        case Edge::Bottom:
            return {2.0 + 4.0 * std::sqrt(6.0) / 9.0, Polynomial({3.0, 1.0, -3.0, 1.0})};
        case Edge::Left:
            return {3.0, Polynomial({3.0, 0.0, -3.0})};
        case Edge::Top:
            return {2.0 * std::sqrt(2.0), Polynomial({0.0, 6.0, 0.0, -4.0})};
        }
        break;
    case Family::F3:
        switch (edge) {
        case Edge::Bottom:
            return {11.0 + s30, Polynomial({17.0, 2.0, -12.0, 4.0})};
        case Edge::Left:
            return {52.0 / 3.0, Polynomial({17.0, 4.0, -12.0})};
        case Edge::Top:
            return {16.56455, Polynomial({9.0, 22.0, -4.0, -20.0})};
        }
        break;
    }
    throw UnknownEdge("unknown edge id " + std::to_string(static_cast<int>(edge)));
}

EdgeMaximum edge_maximum(Family family, Edge edge)
{
    EdgeMaximum best;
    best.edge = edge;
    best.restriction = edge_restriction(family, edge);

    std::vector<double> candidates{0.0, 1.0};
    const Polynomial slope = best.restriction.derivative();
    if (slope.degree() > 0 || slope.coefficient(0) != 0.0) {
        for (double r : real_roots_in(slope, 0.0, 1.0)) {
            candidates.push_back(r);
        }
    }

    bool first = true;
    for (double t : candidates) {
        const RegionPoint p = edge_point(edge, t);
        const double v = best.restriction(t);
        if (first || better(v, p, best.value, best.argmax)) {
            best.parameter = t;
            best.argmax = p;
            best.value = v;
            first = false;
        }
    }
    return best;
}

std::array<double, 4> objective_hessian(Family family, RegionPoint p)
{
    const ObjectiveForm& f = objective_form(family);
    const double h = Tolerances::jacobian_step;
    const Gradient gxp = f.gradient(p.x + h, p.y);
    const Gradient gxm = f.gradient(p.x - h, p.y);
    const Gradient gyp = f.gradient(p.x, p.y + h);
    const Gradient gym = f.gradient(p.x, p.y - h);
    return {
        (gxp.dx - gxm.dx) / (2.0 * h),
        (gyp.dx - gym.dx) / (2.0 * h),
        (gxp.dy - gxm.dy) / (2.0 * h),
        (gyp.dy - gym.dy) / (2.0 * h),
    };
}

std::vector<InteriorPoint> interior_critical_points(Family family, double grid_step, double tol)
{
    if (!(grid_step > 0.0 && grid_step <= 0.1)) {
        throw std::invalid_argument("grid_step must lie in (0, 0.1]");
    }
    if (!(tol >= 1e-15)) {
        throw std::invalid_argument("Newton tolerance must be >= 1e-15");
    }
    const ObjectiveForm& f = objective_form(family);
    constexpr int kMaxIterations = 100;

    std::vector<InteriorPoint> found;
    const int steps = static_cast<int>(std::ceil(1.0 / grid_step));
    for (int i = 1; i < steps; ++i) {
        const double x0 = i * grid_step;
        for (int j = 1; j < steps; ++j) {
            const double y0 = j * grid_step;
            if (!(x0 < 1.0 && y0 < 1.0 - x0 * x0)) {
                continue;
            }
            double x = x0;
            double y = y0;
            bool converged = false;
            for (int it = 0; it < kMaxIterations; ++it) {
                const Gradient g = f.gradient(x, y);
                if (std::hypot(g.dx, g.dy) <= tol) {
                    converged = true;
                    break;
                }
                const auto jac = objective_hessian(family, {x, y});
                const double det = jac[0] * jac[3] - jac[1] * jac[2];
                if (det == 0.0 || !std::isfinite(det)) {
                    break;
                }
                x -= (jac[3] * g.dx - jac[1] * g.dy) / det;
                y -= (-jac[2] * g.dx + jac[0] * g.dy) / det;
                if (!std::isfinite(x) || !std::isfinite(y) || x <= -0.5 || std::abs(x) > 10.0 ||
                    std::abs(y) > 10.0) {
                    break;
                }
            }
            if (!converged) {
                continue;
            }
            const double s = Tolerances::region_slack;
            if (!(x > s && x < 1.0 - s && y > s && y < 1.0 - x * x - s)) {
                continue;
            }
            const bool duplicate = std::any_of(found.begin(), found.end(), [&](const auto& q) {
                return std::hypot(q.point.x - x, q.point.y - y) < Tolerances::dedup_distance;
            });
            if (duplicate) {
                continue;
            }
            InteriorPoint point;
            point.point = {x, y};
            point.value = f.value(x, y);
            point.hessian = objective_hessian(family, point.point);
            const double fxy = 0.5 * (point.hessian[1] + point.hessian[2]);
            point.negative_definite =
                point.hessian[0] < 0.0 && point.hessian[0] * point.hessian[3] - fxy * fxy > 0.0;
            found.push_back(point);
        }
    }
    std::sort(found.begin(), found.end(), [](const InteriorPoint& a, const InteriorPoint& b) {
        return better(a.value, a.point, b.value, b.point);
    });
    return found;
}

namespace {

template <typename Visit>
void visit_grid_column(double x, double step, Visit&& visit)
{
    const double top = std::max(0.0, 1.0 - x * x);
    const long count = static_cast<long>(std::floor(top / step + 1e-9));
    for (long j = 0; j <= count; ++j) {
        visit(x, std::min(j * step, top));
    }
    if (count * step < top) {
        visit(x, top);
    }
}

std::vector<double> grid_columns(double step)
{
    std::vector<double> xs;
    const long count = static_cast<long>(std::floor(1.0 / step + 1e-9));
    for (long i = 0; i <= count; ++i) {
        xs.push_back(std::min(i * step, 1.0));
    }
    if (xs.back() < 1.0) {
        xs.push_back(1.0);
    }
    return xs;
}

}  // namespace

GridSweep dense_grid_max(Family family, double step)
{
    if (!(step > 0.0 && step <= 0.5)) {
        throw std::invalid_argument("grid sweep step must lie in (0, 0.5]");
    }
    const ObjectiveForm& f = objective_form(family);
    const std::vector<double> xs = grid_columns(step);
    const std::size_t workers =
        std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 8);
    const std::size_t chunk = (xs.size() + workers - 1) / workers;

    std::vector<std::future<GridSweep>> parts;
    for (std::size_t begin = 0; begin < xs.size(); begin += chunk) {
        const std::size_t end = std::min(xs.size(), begin + chunk);
        parts.push_back(std::async(std::launch::async, [&f, &xs, step, begin, end] {
            GridSweep local;
            local.value = -std::numeric_limits<double>::infinity();
            for (std::size_t i = begin; i < end; ++i) {
                visit_grid_column(xs[i], step, [&](double x, double y) {
                    const double v = f.value(x, y);
                    ++local.points;
                    if (better(v, {x, y}, local.value, local.argmax)) {
                        local.value = v;
                        local.argmax = {x, y};
                    }
                });
            }
            return local;
        }));
    }
    // Chunks are merged in index order, so the result does not depend on scheduling.
    GridSweep total;
    total.value = -std::numeric_limits<double>::infinity();
    for (auto& part : parts) {
        const GridSweep local = part.get();
        total.points += local.points;
        if (better(local.value, local.argmax, total.value, total.argmax)) {
            total.value = local.value;
            total.argmax = local.argmax;
        }
    }
    return total;
}

std::vector<std::array<double, 3>> grid_samples(Family family, double step)
{
    if (!(step > 0.0 && step <= 0.5)) {
        throw std::invalid_argument("grid step must lie in (0, 0.5]");
    }
    const ObjectiveForm& f = objective_form(family);
    std::vector<std::array<double, 3>> rows;
    for (double x : grid_columns(step)) {
        visit_grid_column(x, step, [&](double px, double py) {
            rows.push_back({px, py, f.value(px, py)});
        });
    }
    return rows;
}

void certify_against_grid(BoundReport& report, const GridSweep& sweep)
{
    if (sweep.value > report.global_max + Tolerances::certification) {
        throw CertificationMismatch(
            std::string(family_name(report.family)) + ": grid sweep reached " +
            format12(sweep.value) + " at (" + format12(sweep.argmax.x) + ", " +
            format12(sweep.argmax.y) + ") above the analytic maximum " +
            format12(report.global_max));
    }
    report.grid_max = sweep.value;
}

BoundReport global_bound(Family family, double grid_step, double tol, double sweep_step)
{
    BoundReport report;
    report.family = family;
    report.interior_points = interior_critical_points(family, grid_step, tol);

    bool have_max = false;
    for (const auto& p : report.interior_points) {
        if (!have_max || better(p.value, p.point, report.global_max, report.global_argmax)) {
            report.global_max = p.value;
            report.global_argmax = p.point;
            have_max = true;
        }
    }
    for (std::size_t k = 0; k < kAllEdges.size(); ++k) {
        const Edge edge = kAllEdges[k];
        report.edge_maxima[k] = edge_maximum(family, edge);
        report.published_edges[k] = published_edge(family, edge);
        const EdgeMaximum& e = report.edge_maxima[k];
        if (!have_max || better(e.value, e.argmax, report.global_max, report.global_argmax)) {
            report.global_max = e.value;
            report.global_argmax = e.argmax;
            have_max = true;
        }
    }
    report.gamma3_bound = bound_from_value(family, report.global_max);

    certify_against_grid(report, dense_grid_max(family, sweep_step));

    for (std::size_t k = 0; k < kAllEdges.size(); ++k) {
        const EdgeMaximum& e = report.edge_maxima[k];
        const PublishedEdge& pub = report.published_edges[k];
        const char var = e.edge == Edge::Left ? 'y' : 'x';
        if (!(e.restriction == pub.restriction) || std::abs(e.value - pub.value) > 1e-4) {
            std::string note = std::string(family_name(family)) + " " +
                               std::string(edge_name(e.edge)) + " edge: substitution gives " +
                               e.restriction.to_string(var) + " with maximum " +
                               format12(e.value) + "; published restriction " +
                               pub.restriction.to_string(var) + " with maximum " +
                               format12(pub.value) + ".";
            if (std::max(e.value, pub.value) < report.global_max) {
                note += " Both lie below the global maximum " + format12(report.global_max) +
                        ", so the bound is unaffected.";
            } else {
                note += " The difference affects the global maximum.";
            }
            report.notes.push_back(std::move(note));
        }
    }
    return report;
}

}  // namespace logcoef
