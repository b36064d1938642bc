#pragma once

#include <limits>

#include "cloud.hpp"

namespace geofit
{

/// Least-squares line y = slope * x + intercept, together with the centered
/// data it came from and the fitted centered responses j = slope * i.
struct FitResult
{
    double slope = 0.0;
    double intercept = 0.0;
    CenteredCloud centered;
    Vector j_vec;
};

/**
 * Slope of the regression line of a centered cloud.
 *
 * The residual u - a*i is shortest when it is orthogonal to i, i.e. when
 * a*i is the projection of u onto i, which gives a = (u . i) / |i|^2.
 * Throws DegenerateX when every x is the same (|i|^2 is zero up to rounding).
 */
inline double fit_slope_centered(const CenteredCloud& c)
{
    const double ii = norm_sq(c.i_vec);
    const double n = static_cast<double>(c.size());
    const double floor =
        n * std::numeric_limits<double>::epsilon() * raw_scale_sq(c.centroid.x, c.i_vec);
    if (ii <= floor)
        throw Error(ErrorKind::DegenerateX, "all x values are identical; slope is undefined");
    return dot(c.u_vec, c.i_vec) / ii;
}

inline FitResult fit(const PointCloud& cloud)
{
    if (cloud.size() < 2)
        throw Error(ErrorKind::TooFewPoints, "a line fit needs at least two points");
    CenteredCloud c = center(cloud);
    const double a = fit_slope_centered(c);
    const double b = c.centroid.y - a * c.centroid.x;
    Vector j = scale(a, c.i_vec);
    return {a, b, std::move(c), std::move(j)};
}

inline double predict(const FitResult& f, double x) { return f.slope * x + f.intercept; }

} // namespace geofit
