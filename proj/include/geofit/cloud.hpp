#pragma once

#include <utility>
#include <vector>

#include "vecspace.hpp"

namespace geofit
{

struct Point2
{
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point2&, const Point2&) = default;
};

/// Observed pairs (x_k, y_k). Both columns have the same length n >= 1.
class PointCloud
{
  public:
    PointCloud(Vector xs, Vector ys) : xs_(std::move(xs)), ys_(std::move(ys))
    {
        require_same_size(xs_, ys_);
    }

    PointCloud(std::vector<double> xs, std::vector<double> ys)
        : PointCloud(Vector(std::move(xs)), Vector(std::move(ys)))
    {
    }

    const Vector& xs() const noexcept { return xs_; }
    const Vector& ys() const noexcept { return ys_; }
    std::size_t size() const noexcept { return xs_.size(); }
    Point2 point(std::size_t k) const { return {xs_[k], ys_[k]}; }

  private:
    Vector xs_;
    Vector ys_;
};

/// The cloud translated so that its center of mass sits at the origin.
struct CenteredCloud
{
    Point2 centroid;
    Vector i_vec; // x_k - mean(x)
    Vector u_vec; // y_k - mean(y)

    std::size_t size() const noexcept { return i_vec.size(); }
};

inline double mean(const Vector& v) { return sum(v) / static_cast<double>(v.size()); }

inline Point2 centroid(const PointCloud& cloud) { return {mean(cloud.xs()), mean(cloud.ys())}; }

namespace detail
{

inline Vector shifted(const Vector& v, double by)
{
    std::vector<double> out(v.size());
    for (std::size_t k = 0; k < v.size(); ++k)
        out[k] = v[k] - by;
    return Vector(std::move(out));
}

} // namespace detail

inline CenteredCloud center(const PointCloud& cloud)
{
    const Point2 c = centroid(cloud);
    return {c, detail::shifted(cloud.xs(), c.x), detail::shifted(cloud.ys(), c.y)};
}

/// Undoes the translation, recovering the original cloud.
inline PointCloud uncenter(const CenteredCloud& c)
{
    return {detail::shifted(c.i_vec, -c.centroid.x), detail::shifted(c.u_vec, -c.centroid.y)};
}

/// Largest squared magnitude of the original (uncentered) column, bounded below by 1.
/// Used as the reference scale when deciding whether a centered column is all zero.
inline double raw_scale_sq(double centroid_coord, const Vector& centered)
{
    const double m = std::abs(centroid_coord) + max_abs(centered);
    return std::max(1.0, m * m);
}

} // namespace geofit
