#pragma once

#include <cmath>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "correlate.hpp"
#include "diagnostics.hpp"

namespace geofit
{

/// Everything the CLI prints for one fitted dataset.
struct Report
{
    std::size_t n = 0;
    Point2 centroid;
    double slope = 0.0;
    double intercept = 0.0;
    double dot_ui = 0.0;
    double norm_sq_i = 0.0;
    double norm_i = 0.0;
    double norm_u = 0.0;
    double theta_deg = 0.0;
    double r = 0.0;
    CorrelationClass cls = CorrelationClass::Null;
    double sse = 0.0;
    double residual_dot_i = 0.0; // normalized
    double ones_dot_i = 0.0;     // normalized
    double ones_dot_u = 0.0;     // normalized
};

inline Report make_report(const PointCloud& cloud, const ClassThresholds& thresholds = {})
{
    const FitResult f = fit(cloud);
    const CorrelationResult c = correlate(f.centered, thresholds);
    const DiagnosticsReport d = orthogonality_report(f);
    const Vector& i = f.centered.i_vec;
    const Vector& u = f.centered.u_vec;
    return {cloud.size(),
            f.centered.centroid,
            f.slope,
            f.intercept,
            dot(u, i),
            norm_sq(i),
            norm(i),
            norm(u),
            c.theta_deg,
            c.r,
            c.cls,
            d.sse,
            d.residual_dot_i_normalized,
            d.ones_dot_i_normalized,
            d.ones_dot_u_normalized};
}

namespace detail
{

inline std::string fixed(double v, int decimals)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    std::string s(buf);
    if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos)
        s.erase(0, 1); // no negative zero
    return s;
}

/// Up to 6 decimals, trailing zeros dropped.
inline std::string short_num(double v)
{
    std::string s = fixed(v, 6);
    if (s.find('.') != std::string::npos)
    {
        s.erase(s.find_last_not_of('0') + 1);
        if (s.back() == '.')
            s.pop_back();
    }
    return s;
}

} // namespace detail

/// "y = -9.7069x + 226.4557"; 4 decimals, presentation only.
inline std::string equation_string(double slope, double intercept)
{
    const std::string b = detail::fixed(std::abs(intercept), 4);
    const bool neg = intercept < 0.0 && b.find_first_not_of("0.") != std::string::npos;
    return "y = " + detail::fixed(slope, 4) + "x " + (neg ? "- " : "+ ") + b;
}

inline std::string render_text(const Report& r)
{
    std::string out;
    auto line = [&out](const char* key, const std::string& value) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%15s: ", key);
        out += buf;
        out += value;
        out += '\n';
    };
    using detail::short_num;
    line("n", std::to_string(r.n));
    line("centroid", "(" + short_num(r.centroid.x) + ", " + short_num(r.centroid.y) + ")");
    line("dot_ui", short_num(r.dot_ui));
    line("norm_sq_i", short_num(r.norm_sq_i));
    line("norm_i", short_num(r.norm_i));
    line("norm_u", short_num(r.norm_u));
    line("slope", "a = " + detail::fixed(r.slope, 4));
    line("intercept", "b = " + detail::fixed(r.intercept, 4));
    line("equation", equation_string(r.slope, r.intercept));
    line("theta_deg", detail::fixed(r.theta_deg, 2));
    line("r", short_num(r.r));
    line("class", std::string(to_string(r.cls)));
    line("sse", short_num(r.sse));
    // Orthogonality checks are ~1e-17; fixed decimals would print 0.
    char buf[32];
    auto sci = [&buf](double v) {
        std::snprintf(buf, sizeof buf, "%.3e", v);
        return std::string(buf);
    };
    line("residual_dot_i", sci(r.residual_dot_i));
    line("ones_dot_i", sci(r.ones_dot_i));
    line("ones_dot_u", sci(r.ones_dot_u));
    return out;
}

/// Fixed key order, full double precision.
inline nlohmann::ordered_json to_json(const Report& r)
{
    nlohmann::ordered_json j;
    j["n"] = r.n;
    j["centroid"] = {{"x", r.centroid.x}, {"y", r.centroid.y}};
    j["dot_ui"] = r.dot_ui;
    j["norm_sq_i"] = r.norm_sq_i;
    j["norm_i"] = r.norm_i;
    j["norm_u"] = r.norm_u;
    j["slope"] = r.slope;
    j["intercept"] = r.intercept;
    j["equation"] = equation_string(r.slope, r.intercept);
    j["theta_deg"] = r.theta_deg;
    j["r"] = r.r;
    j["class"] = std::string(to_string(r.cls));
    j["sse"] = r.sse;
    j["residual_dot_i"] = r.residual_dot_i;
    j["ones_dot_i"] = r.ones_dot_i;
    j["ones_dot_u"] = r.ones_dot_u;
    return j;
}

inline std::string render_json(const Report& r) { return to_json(r).dump(2) + "\n"; }

enum class ReportFormat
{
    Text,
    Json,
};

inline std::string render_report(const Report& r, ReportFormat format)
{
    return format == ReportFormat::Json ? render_json(r) : render_text(r);
}

} // namespace geofit
