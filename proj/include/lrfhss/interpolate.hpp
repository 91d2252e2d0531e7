#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <string>
#include <string_view>

#include "lrfhss/errors.hpp"
#include "lrfhss/format.hpp"

namespace lrfhss {

struct CurvePoint {
    double x = 0.0;
    double y = 0.0;
    bool operator==(const CurvePoint&) const = default;
};

/// Piecewise-linear lookup over knots sorted by strictly increasing x.
/// Exact at knots, monotone between knots, and refuses any query outside
/// [front.x, back.x].
inline double piecewise_linear(std::span<const CurvePoint> points, double x,
                               std::string_view curve_name) {
    if (points.empty()) {
        throw MissingCalibrationError(std::string(curve_name) + ": no calibration points");
    }
    if (x < points.front().x || x > points.back().x) {
        throw SpanError(std::string(curve_name) + ": query " + format_number(x) +
                        " outside calibrated span [" + format_number(points.front().x) +
                        ", " + format_number(points.back().x) + "]; extrapolation refused");
    }
    const auto it = std::lower_bound(
        points.begin(), points.end(), x,
        [](const CurvePoint& p, double value) { return p.x < value; });
    if (it->x == x) {
        return it->y;
    }
    const CurvePoint& hi = *it;
    const CurvePoint& lo = *(it - 1);
    return std::lerp(lo.y, hi.y, (x - lo.x) / (hi.x - lo.x));
}

}  // namespace lrfhss
