#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string_view>

#include "cloud.hpp"

namespace geofit
{

enum class CorrelationClass
{
    TotalPositive,
    StrongPositive,
    WeakPositive,
    Null,
    WeakNegative,
    StrongNegative,
    TotalNegative,
};

inline std::string_view to_string(CorrelationClass c)
{
    switch (c)
    {
    case CorrelationClass::TotalPositive: return "TotalPositive";
    case CorrelationClass::StrongPositive: return "StrongPositive";
    case CorrelationClass::WeakPositive: return "WeakPositive";
    case CorrelationClass::Null: return "Null";
    case CorrelationClass::WeakNegative: return "WeakNegative";
    case CorrelationClass::StrongNegative: return "StrongNegative";
    case CorrelationClass::TotalNegative: return "TotalNegative";
    }
    return "Unknown";
}

/// Band edges on |r| = |cos theta|.
struct ClassThresholds
{
    double total = 0.999; // |r| >= total
    double strong = 0.8;  // strong <= |r| < total
    double null = 0.005;  // |r| <= null
};

struct CorrelationResult
{
    double theta_deg = 90.0;
    double r = 0.0;
    CorrelationClass cls = CorrelationClass::Null;
};

inline double deg_to_rad(double deg) { return deg * (std::numbers::pi / 180.0); }
inline double rad_to_deg(double rad) { return rad * (180.0 / std::numbers::pi); }

namespace detail
{

inline void require_spread(const CenteredCloud& c)
{
    const double n = static_cast<double>(c.size());
    const double eps = std::numeric_limits<double>::epsilon();
    if (norm_sq(c.i_vec) <= n * eps * raw_scale_sq(c.centroid.x, c.i_vec))
        throw Error(ErrorKind::DegenerateX, "all x values are identical; angle is undefined");
    if (norm_sq(c.u_vec) <= n * eps * raw_scale_sq(c.centroid.y, c.u_vec))
        throw Error(ErrorKind::DegenerateY, "all y values are identical; angle is undefined");
}

/// Cosine of the angle between u and i before clamping.
inline double raw_cosine(const CenteredCloud& c)
{
    require_spread(c);
    // sqrt(uu * ii) rather than |u| |i|: exact when u == i.
    return dot(c.u_vec, c.i_vec) / std::sqrt(norm_sq(c.u_vec) * norm_sq(c.i_vec));
}

} // namespace detail

/// r = (u . i) / (|u| |i|), clamped into [-1, 1].
inline double r_cosine(const CenteredCloud& c)
{
    return std::clamp(detail::raw_cosine(c), -1.0, 1.0);
}

/// Angle between u and i in degrees, in [0, 180].
inline double theta(const CenteredCloud& c) { return rad_to_deg(std::acos(r_cosine(c))); }

/**
 * Pearson's r from raw (uncentered) sums:
 *
 *   (Sxy - Sx*Sy/n) / sqrt((Sxx - Sx^2/n) (Syy - Sy^2/n))
 *
 * Shares no code with the centered route besides the accumulator.
 */
inline double r_textbook(const PointCloud& cloud)
{
    const std::size_t count = cloud.size();
    if (count < 2)
        throw Error(ErrorKind::TooFewPoints, "correlation needs at least two points");
    const double n = static_cast<double>(count);
    const Vector& xs = cloud.xs();
    const Vector& ys = cloud.ys();

    CompensatedSum sx, sy, sxx, syy, sxy;
    double max_x2 = 1.0, max_y2 = 1.0;
    for (std::size_t k = 0; k < count; ++k)
    {
        sx.add(xs[k]);
        sy.add(ys[k]);
        sxx.add_product(xs[k], xs[k]);
        syy.add_product(ys[k], ys[k]);
        sxy.add_product(xs[k], ys[k]);
        max_x2 = std::max(max_x2, xs[k] * xs[k]);
        max_y2 = std::max(max_y2, ys[k] * ys[k]);
    }

    const double vx = sxx.value() - sx.value() * sx.value() / n;
    const double vy = syy.value() - sy.value() * sy.value() / n;
    const double eps = std::numeric_limits<double>::epsilon();
    if (vx <= 4.0 * n * eps * max_x2)
        throw Error(ErrorKind::DegenerateX, "x variance is zero");
    if (vy <= 4.0 * n * eps * max_y2)
        throw Error(ErrorKind::DegenerateY, "y variance is zero");

    const double num = sxy.value() - sx.value() * sy.value() / n;
    return std::clamp(num / std::sqrt(vx * vy), -1.0, 1.0);
}

inline CorrelationClass classify(double theta_deg, const ClassThresholds& t = {})
{
    if (!(theta_deg >= 0.0 && theta_deg <= 180.0))
        throw Error(ErrorKind::InvalidArgument, "angle must lie in [0, 180] degrees");
    const double r = std::cos(deg_to_rad(theta_deg));
    const double m = std::abs(r);
    const bool pos = r > 0.0;
    if (m <= t.null)
        return CorrelationClass::Null;
    if (m >= t.total)
        return pos ? CorrelationClass::TotalPositive : CorrelationClass::TotalNegative;
    if (m >= t.strong)
        return pos ? CorrelationClass::StrongPositive : CorrelationClass::StrongNegative;
    return pos ? CorrelationClass::WeakPositive : CorrelationClass::WeakNegative;
}

inline CorrelationResult correlate(const CenteredCloud& c, const ClassThresholds& t = {})
{
    const double r = r_cosine(c);
    const double th = rad_to_deg(std::acos(r));
    return {th, r, classify(th, t)};
}

} // namespace geofit
