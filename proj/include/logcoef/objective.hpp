#pragma once

#include "logcoef/families.hpp"

namespace logcoef {

/// A point (x, y) = (|c1|, |c2|) of the region E = {0 <= x <= 1, 0 <= y <= 1 - x^2}.
struct RegionPoint {
    double x = 0.0;
    double y = 0.0;
};

/// True when p lies in E up to `slack` on every constraint.
bool in_region(RegionPoint p, double slack) noexcept;

struct Gradient {
    double dx = 0.0;
    double dy = 0.0;
};

/// The majorant of scale * |gamma_3| obtained from the triangle inequality
/// and Carlson's bound on |c3|:
///
///   constant + lin_x x + lin_y y + carlson (1 - x^2 - y^2/(1+x)) + cross x y + cubic x^3
///
/// The member functions skip the region check so that iterative solvers can
/// step outside E; they need x > -1.
struct ObjectiveForm {
    double constant;
    double lin_x;
    double lin_y;
    double carlson;
    double cross;
    double cubic;

    double value(double x, double y) const noexcept;
    Gradient gradient(double x, double y) const noexcept;
};

const ObjectiveForm& objective_form(Family family) noexcept;

/// f_i(p); throws OutsideRegion when p is not in E (1e-12 slack).
double objective_value(Family family, RegionPoint p);

/// (df_i/dx, df_i/dy) at p; throws OutsideRegion.
Gradient objective_gradient(Family family, RegionPoint p);

/// |gamma_3| bound implied by an objective value: v / scale.
double bound_from_value(Family family, double v);

}  // namespace logcoef
