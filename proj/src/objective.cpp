#include "logcoef/objective.hpp"

#include "logcoef/errors.hpp"
#include "logcoef/tolerances.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace logcoef {

namespace {

//                                       const lin_x lin_y carlson cross cubic
constexpr std::array<ObjectiveForm, 3> kForms{{
    {3.0, 2.0, 4.0, 12.0, 8.0, 4.0},
    {0.0, 1.0, 0.0, 3.0, 2.0, 1.0},
    {5.0, 2.0, 4.0, 12.0, 8.0, 4.0},
}};

void require_region(RegionPoint p)
{
    if (!in_region(p, Tolerances::region_slack)) {
        throw OutsideRegion("point (" + std::to_string(p.x) + ", " + std::to_string(p.y) +
                            ") is outside E");
    }
}

}  // namespace

bool in_region(RegionPoint p, double slack) noexcept
{
    return p.x >= -slack && p.x <= 1.0 + slack && p.y >= -slack &&
           p.y <= 1.0 - p.x * p.x + slack;
}

double ObjectiveForm::value(double x, double y) const noexcept
{
    return constant + lin_x * x + lin_y * y + carlson * (1.0 - x * x - y * y / (1.0 + x)) +
           cross * x * y + cubic * x * x * x;
}

Gradient ObjectiveForm::gradient(double x, double y) const noexcept
{
    const double ratio = y / (1.0 + x);
    return {
        lin_x - 2.0 * carlson * x + carlson * ratio * ratio + cross * y + 3.0 * cubic * x * x,
        lin_y - 2.0 * carlson * ratio + cross * x,
    };
}

const ObjectiveForm& objective_form(Family family) noexcept
{
    return kForms[static_cast<std::size_t>(family)];
}

double objective_value(Family family, RegionPoint p)
{
    require_region(p);
    return objective_form(family).value(p.x, p.y);
}

Gradient objective_gradient(Family family, RegionPoint p)
{
    require_region(p);
    return objective_form(family).gradient(p.x, p.y);
}

double bound_from_value(Family family, double v)
{
    if (v < 0.0) {
        throw std::invalid_argument("objective values are non-negative on E");
    }
    return v / family_info(family).scale;
}

}  // namespace logcoef
