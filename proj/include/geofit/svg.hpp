#pragma once

#include <algorithm>
#include <cstdio>
#include <string>

#include "regress.hpp"

namespace geofit
{

/// Affine map from data coordinates to SVG pixels (y axis pointing down).
struct Viewport
{
    double x_lo, x_hi, y_lo, y_hi;  // data window
    double left, right, top, bottom; // pixel plot area

    double px(double x) const { return left + (x - x_lo) / (x_hi - x_lo) * (right - left); }
    double py(double y) const { return bottom - (y - y_lo) / (y_hi - y_lo) * (bottom - top); }
};

inline constexpr double svg_margin = 48.0;

/// Data window: x-range padded 5% per side; y covers the points and the line, padded 5%.
inline Viewport make_viewport(const PointCloud& cloud, const FitResult& f, double width, double height)
{
    const auto [xmin, xmax] = std::minmax_element(cloud.xs().begin(), cloud.xs().end());
    const double xpad = 0.05 * (*xmax - *xmin);
    const double x_lo = *xmin - xpad, x_hi = *xmax + xpad;

    const auto [ymin, ymax] = std::minmax_element(cloud.ys().begin(), cloud.ys().end());
    double y_lo = std::min({*ymin, predict(f, x_lo), predict(f, x_hi)});
    double y_hi = std::max({*ymax, predict(f, x_lo), predict(f, x_hi)});
    double ypad = 0.05 * (y_hi - y_lo);
    if (ypad == 0.0)
        ypad = std::max(1.0, 0.05 * std::abs(y_lo));
    y_lo -= ypad;
    y_hi += ypad;

    return {x_lo, x_hi, y_lo, y_hi, svg_margin, width - svg_margin / 2, svg_margin / 2,
            height - svg_margin};
}

namespace detail
{

inline std::string px_str(double v)
{
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

inline std::string label_str(double v)
{
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

} // namespace detail

/**
 * Scatter plot of the cloud with the fitted line drawn across the padded
 * x-range. Output depends only on the inputs, so identical calls give
 * byte-identical documents.
 */
inline std::string render_svg(const PointCloud& cloud, const FitResult& f, int width = 640,
                              int height = 480)
{
    if (width < 100 || height < 100)
        throw Error(ErrorKind::InvalidArgument, "SVG width and height must be at least 100");
    const Viewport vp = make_viewport(cloud, f, width, height);
    using detail::label_str;
    using detail::px_str;

    std::string s;
    s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
         "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " + std::to_string(width) +
         " " + std::to_string(height) + "\">\n";
    s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // Axes along the bottom and left of the plot area.
    s += "<g class=\"axes\" stroke=\"black\" stroke-width=\"1\">\n";
    s += "<line x1=\"" + px_str(vp.left) + "\" y1=\"" + px_str(vp.bottom) + "\" x2=\"" +
         px_str(vp.right) + "\" y2=\"" + px_str(vp.bottom) + "\"/>\n";
    s += "<line x1=\"" + px_str(vp.left) + "\" y1=\"" + px_str(vp.bottom) + "\" x2=\"" +
         px_str(vp.left) + "\" y2=\"" + px_str(vp.top) + "\"/>\n";
    s += "</g>\n";

    s += "<g class=\"ticks\" font-family=\"sans-serif\" font-size=\"11\" fill=\"black\">\n";
    s += "<text x=\"" + px_str(vp.left) + "\" y=\"" + px_str(vp.bottom + 16) +
         "\" text-anchor=\"middle\">" + label_str(vp.x_lo) + "</text>\n";
    s += "<text x=\"" + px_str(vp.right) + "\" y=\"" + px_str(vp.bottom + 16) +
         "\" text-anchor=\"middle\">" + label_str(vp.x_hi) + "</text>\n";
    s += "<text x=\"" + px_str(vp.left - 4) + "\" y=\"" + px_str(vp.bottom) +
         "\" text-anchor=\"end\">" + label_str(vp.y_lo) + "</text>\n";
    s += "<text x=\"" + px_str(vp.left - 4) + "\" y=\"" + px_str(vp.top + 4) +
         "\" text-anchor=\"end\">" + label_str(vp.y_hi) + "</text>\n";
    s += "</g>\n";

    s += "<line class=\"fit\" x1=\"" + px_str(vp.px(vp.x_lo)) + "\" y1=\"" +
         px_str(vp.py(predict(f, vp.x_lo))) + "\" x2=\"" + px_str(vp.px(vp.x_hi)) + "\" y2=\"" +
         px_str(vp.py(predict(f, vp.x_hi))) + "\" stroke=\"crimson\" stroke-width=\"1.5\"/>\n";

    s += "<g class=\"points\" fill=\"steelblue\">\n";
    for (std::size_t k = 0; k < cloud.size(); ++k)
    {
        s += "<circle cx=\"" + px_str(vp.px(cloud.xs()[k])) + "\" cy=\"" +
             px_str(vp.py(cloud.ys()[k])) + "\" r=\"3\"/>\n";
    }
    s += "</g>\n</svg>\n";
    return s;
}

} // namespace geofit
