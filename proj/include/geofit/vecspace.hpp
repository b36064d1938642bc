#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace geofit
{

namespace detail
{

// Error-free transformations (Knuth TwoSum, FMA-based TwoProd).
inline void two_sum(double a, double b, double& s, double& e)
{
    s = a + b;
    const double z = s - a;
    e = (a - (s - z)) + (b - z);
}

inline void two_prod(double a, double b, double& p, double& e)
{
    p = a * b;
    e = std::fma(a, b, -p);
}

} // namespace detail

/**
 * Compensated accumulator. Tracks the rounding error of every addition so
 * the result is as accurate as if computed in twice the working precision.
 */
class CompensatedSum
{
  public:
    void add(double v)
    {
        double e;
        detail::two_sum(sum_, v, sum_, e);
        err_ += e;
    }

    /// Adds a*b with the product's rounding error folded in.
    void add_product(double a, double b)
    {
        double p, pe;
        detail::two_prod(a, b, p, pe);
        add(p);
        err_ += pe;
    }

    double value() const { return sum_ + err_; }

  private:
    double sum_ = 0.0;
    double err_ = 0.0;
};

/// Immutable n-dimensional real vector, n >= 1, all components finite.
class Vector
{
  public:
    explicit Vector(std::vector<double> components) : data_(std::move(components))
    {
        if (data_.empty())
            throw Error(ErrorKind::InvalidArgument, "vector must have at least one component");
        for (std::size_t k = 0; k < data_.size(); ++k)
        {
            if (!std::isfinite(data_[k]))
                throw Error(ErrorKind::InvalidArgument,
                            "component " + std::to_string(k) + " is not finite");
        }
    }

    Vector(std::initializer_list<double> components)
        : Vector(std::vector<double>(components))
    {
    }

    std::size_t size() const noexcept { return data_.size(); }
    double operator[](std::size_t k) const { return data_[k]; }
    std::span<const double> components() const noexcept { return data_; }
    auto begin() const noexcept { return data_.cbegin(); }
    auto end() const noexcept { return data_.cend(); }

    friend bool operator==(const Vector&, const Vector&) = default;

  private:
    std::vector<double> data_;
};

inline void require_same_size(const Vector& a, const Vector& b)
{
    if (a.size() != b.size())
        throw Error(ErrorKind::DimensionMismatch, "lengths " + std::to_string(a.size()) +
                                                      " and " + std::to_string(b.size()));
}

/// Sum of all components, compensated.
inline double sum(const Vector& a)
{
    CompensatedSum acc;
    for (double v : a)
        acc.add(v);
    return acc.value();
}

inline double dot(const Vector& a, const Vector& b)
{
    require_same_size(a, b);
    CompensatedSum acc;
    for (std::size_t k = 0; k < a.size(); ++k)
        acc.add_product(a[k], b[k]);
    return acc.value();
}

inline double norm_sq(const Vector& a) { return dot(a, a); }

inline double norm(const Vector& a) { return std::sqrt(norm_sq(a)); }

inline Vector sub(const Vector& a, const Vector& b)
{
    require_same_size(a, b);
    std::vector<double> out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k)
        out[k] = a[k] - b[k];
    return Vector(std::move(out));
}

inline Vector scale(double c, const Vector& a)
{
    if (!std::isfinite(c))
        throw Error(ErrorKind::InvalidArgument, "scale factor is not finite");
    std::vector<double> out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k)
        out[k] = c * a[k];
    return Vector(std::move(out));
}

/// The all-ones vector w = (1, 1, ..., 1). Its norm is sqrt(n), not 1.
inline Vector ones(std::size_t n)
{
    if (n == 0)
        throw Error(ErrorKind::InvalidArgument, "ones(n) requires n >= 1");
    return Vector(std::vector<double>(n, 1.0));
}

inline double max_abs(const Vector& a)
{
    double m = 0.0;
    for (double v : a)
        m = std::max(m, std::abs(v));
    return m;
}

} // namespace geofit
