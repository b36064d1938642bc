#pragma once

// Brute-force checks of the projection fit. Nothing here calls into the
// centering or projection code: the objective is evaluated from raw data.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>

#include "cloud.hpp"

namespace geofit::oracle
{

struct SearchBox
{
    double a_min = -1.0;
    double a_max = 1.0;
    double b_min = -1.0;
    double b_max = 1.0;
    int grid_steps = 101;
    int refinement_rounds = 12;
    double shrink = 0.2;

    void validate() const
    {
        if (!(a_min < a_max) || !(b_min < b_max))
            throw Error(ErrorKind::InvalidArgument, "search box bounds must satisfy min < max");
        if (grid_steps < 3)
            throw Error(ErrorKind::InvalidArgument, "grid_steps must be at least 3");
        if (refinement_rounds < 1)
            throw Error(ErrorKind::InvalidArgument, "refinement_rounds must be positive");
        if (!(shrink > 0.0 && shrink < 1.0))
            throw Error(ErrorKind::InvalidArgument, "shrink must lie in (0, 1)");
    }

    /// Box around a seed (a, b), half-width max(50% of |v|, 1) per axis.
    static SearchBox around(double a, double b)
    {
        const double ha = std::max(0.5 * std::abs(a), 1.0);
        const double hb = std::max(0.5 * std::abs(b), 1.0);
        return {a - ha, a + ha, b - hb, b + hb};
    }
};

struct LineParams
{
    double slope = 0.0;
    double intercept = 0.0;
};

struct Gradient
{
    double d_slope = 0.0;
    double d_intercept = 0.0;
};

/// S(a, b) = sum (y_k - a x_k - b)^2, accumulated in extended precision.
inline double sse_of(const PointCloud& cloud, double a, double b)
{
    long double s = 0.0L;
    const long double la = a, lb = b;
    for (std::size_t k = 0; k < cloud.size(); ++k)
    {
        const long double d = static_cast<long double>(cloud.ys()[k]) -
                              la * static_cast<long double>(cloud.xs()[k]) - lb;
        s += d * d;
    }
    return static_cast<double>(s);
}

namespace detail
{

struct GridBest
{
    double a;
    double b;
    double s;
};

inline GridBest scan(const PointCloud& cloud, double a0, double a1, double b0, double b1, int steps)
{
    GridBest best{a0, b0, std::numeric_limits<double>::infinity()};
    const double da = (a1 - a0) / (steps - 1);
    const double db = (b1 - b0) / (steps - 1);
    // Strict comparison keeps the first minimum met: lowest a, then lowest b.
    for (int ia = 0; ia < steps; ++ia)
    {
        const double a = ia == steps - 1 ? a1 : a0 + ia * da;
        for (int ib = 0; ib < steps; ++ib)
        {
            const double b = ib == steps - 1 ? b1 : b0 + ib * db;
            const double s = sse_of(cloud, a, b);
            if (s < best.s)
                best = {a, b, s};
        }
    }
    return best;
}

} // namespace detail

/**
 * Nested grid search for the (slope, intercept) minimizing sse_of.
 *
 * Each round scans a grid_steps x grid_steps lattice, then recenters a box
 * `shrink` times as wide on the best node (clipped to the original box).
 * Throws BoxTooSmall when the final minimizer sits on the original box
 * boundary, since a convex objective then has its optimum outside.
 */
inline LineParams grid_search_fit(const PointCloud& cloud, const SearchBox& box)
{
    box.validate();
    double a0 = box.a_min, a1 = box.a_max, b0 = box.b_min, b1 = box.b_max;
    detail::GridBest best{};
    for (int round = 0; round < box.refinement_rounds; ++round)
    {
        best = detail::scan(cloud, a0, a1, b0, b1, box.grid_steps);
        const double half_a = 0.5 * box.shrink * (a1 - a0);
        const double half_b = 0.5 * box.shrink * (b1 - b0);
        a0 = std::max(box.a_min, best.a - half_a);
        a1 = std::min(box.a_max, best.a + half_a);
        b0 = std::max(box.b_min, best.b - half_b);
        b1 = std::min(box.b_max, best.b + half_b);
        if (!(a0 < a1) || !(b0 < b1))
            break;
    }
    if (best.a <= box.a_min || best.a >= box.a_max || best.b <= box.b_min || best.b >= box.b_max)
        throw Error(ErrorKind::BoxTooSmall, "minimizer lies on the search box boundary");
    return {best.a, best.b};
}

/// Central finite differences of sse_of in slope and intercept.
inline Gradient gradient_check(const PointCloud& cloud, double a, double b, double h)
{
    if (!(h > 0.0))
        throw Error(ErrorKind::InvalidArgument, "step h must be positive");
    return {(sse_of(cloud, a + h, b) - sse_of(cloud, a - h, b)) / (2.0 * h),
            (sse_of(cloud, a, b + h) - sse_of(cloud, a, b - h)) / (2.0 * h)};
}

} // namespace geofit::oracle
