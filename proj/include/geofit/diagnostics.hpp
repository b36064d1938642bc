#pragma once

#include <cmath>

#include "regress.hpp"

namespace geofit
{

struct DiagnosticsReport
{
    Vector residual;       // u - j
    double sse = 0.0;      // |u - j|^2
    double residual_dot_i = 0.0;
    double ones_dot_i = 0.0;
    double ones_dot_u = 0.0;

    // The same three products divided by the norms of their factors. The
    // residual product is scaled by |u| |i| since the residual itself may be zero.
    double residual_dot_i_normalized = 0.0;
    double ones_dot_i_normalized = 0.0;
    double ones_dot_u_normalized = 0.0;
};

/// Component k is y~_k - a x~_k, which equals y_k - a x_k - b.
inline Vector residuals(const FitResult& f) { return sub(f.centered.u_vec, f.j_vec); }

inline double sse(const FitResult& f) { return norm_sq(residuals(f)); }

namespace detail
{

inline double normalized(double raw, double denom) { return denom > 0.0 ? raw / denom : 0.0; }

} // namespace detail

inline DiagnosticsReport orthogonality_report(const FitResult& f)
{
    const Vector& i = f.centered.i_vec;
    const Vector& u = f.centered.u_vec;
    const Vector w = ones(i.size());

    DiagnosticsReport d{residuals(f)};
    d.sse = norm_sq(d.residual);
    d.residual_dot_i = dot(d.residual, i);
    d.ones_dot_i = dot(w, i);
    d.ones_dot_u = dot(w, u);

    const double ni = norm(i);
    const double nu = norm(u);
    const double nw = std::sqrt(static_cast<double>(i.size()));
    d.residual_dot_i_normalized = detail::normalized(d.residual_dot_i, nu * ni);
    d.ones_dot_i_normalized = detail::normalized(d.ones_dot_i, nw * ni);
    d.ones_dot_u_normalized = detail::normalized(d.ones_dot_u, nw * nu);
    return d;
}

} // namespace geofit
