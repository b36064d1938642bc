#pragma once

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <geofit/fixtures.hpp>
#include <geofit/geofit.hpp>
#include <geofit/oracle.hpp>

namespace geofit::cli
{

enum ExitCode : int
{
    Ok = 0,
    Usage = 2,
    DataError = 3,
    VerifyFailed = 4,
};

inline int exit_code(ErrorKind kind)
{
    switch (kind)
    {
    case ErrorKind::InvalidArgument: return Usage;
    case ErrorKind::DimensionMismatch:
    case ErrorKind::TooFewPoints:
    case ErrorKind::DegenerateX:
    case ErrorKind::DegenerateY:
    case ErrorKind::ParseError:
    case ErrorKind::EmptyDataset:
    case ErrorKind::ColumnNotFound:
    case ErrorKind::RaggedRow: return DataError;
    case ErrorKind::BoxTooSmall: return VerifyFailed;
    }
    return DataError;
}

/// Slope disagreement above this fails verification.
inline constexpr double verify_tolerance = 1e-5;

struct Options
{
    std::string input;
    std::string x_col = "0";
    std::string y_col = "1";
    std::string delimiter = ",";
    std::string format = "text";
    std::string output;
    int width = 640;
    int height = 480;
    bool verify = false;
};

namespace detail
{

inline ColumnRef column(const std::string& s)
{
    if (!s.empty() && s.find_first_not_of("0123456789") == std::string::npos)
        return static_cast<std::size_t>(std::stoull(s));
    return s;
}

class IoError : public std::runtime_error
{
    using std::runtime_error::runtime_error;
};

inline std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void spill(const std::string& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << content))
        throw IoError("cannot write '" + path + "'");
}

inline PointCloud load(const Options& o)
{
    if (o.delimiter.size() != 1)
        throw Error(ErrorKind::InvalidArgument, "--delimiter must be a single character");
    DatasetSpec spec;
    spec.delimiter = o.delimiter[0];
    spec.x_col = column(o.x_col);
    spec.y_col = column(o.y_col);
    return parse(spec, slurp(o.input));
}

struct VerifyOutcome
{
    oracle::LineParams fitted;
    oracle::LineParams searched;
    bool ok;
};

inline VerifyOutcome verify_fit(const PointCloud& cloud)
{
    const FitResult f = fit(cloud);
    const auto found = oracle::grid_search_fit(cloud, oracle::SearchBox::around(f.slope, f.intercept));
    return {{f.slope, f.intercept}, found, std::abs(f.slope - found.slope) <= verify_tolerance};
}

inline void print_verify(std::ostream& out, const VerifyOutcome& v)
{
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "projection: a = %.10g, b = %.10g\noracle:     a = %.10g, b = %.10g\n"
                  "|delta a| = %.3e (tolerance %.0e): %s\n",
                  v.fitted.slope, v.fitted.intercept, v.searched.slope, v.searched.intercept,
                  std::abs(v.fitted.slope - v.searched.slope), verify_tolerance,
                  v.ok ? "ok" : "FAILED");
    out << buf;
}

} // namespace detail

inline int cmd_fit(const Options& o, std::ostream& out, std::ostream& err)
{
    if (o.format != "text" && o.format != "json")
        throw Error(ErrorKind::InvalidArgument, "--format must be text or json");
    const PointCloud cloud = detail::load(o);
    const Report r = make_report(cloud);
    out << render_report(r, o.format == "json" ? ReportFormat::Json : ReportFormat::Text);
    if (o.verify)
    {
        const auto v = detail::verify_fit(cloud);
        detail::print_verify(err, v);
        if (!v.ok)
            return VerifyFailed;
    }
    return Ok;
}

inline int cmd_plot(const Options& o, std::ostream& out, std::ostream&)
{
    const PointCloud cloud = detail::load(o);
    const std::string svg = render_svg(cloud, fit(cloud), o.width, o.height);
    if (o.output.empty())
        out << svg;
    else
        detail::spill(o.output, svg);
    return Ok;
}

inline int cmd_verify(const Options& o, std::ostream& out, std::ostream&)
{
    const auto v = detail::verify_fit(detail::load(o));
    detail::print_verify(out, v);
    return v.ok ? Ok : VerifyFailed;
}

inline int cmd_examples(const Options& o, std::ostream& out, std::ostream&)
{
    const std::filesystem::path dir = o.output.empty() ? "." : o.output;
    std::filesystem::create_directories(dir);
    for (auto [name, body] : {std::pair{fixtures::example1_name, fixtures::example1_csv},
                              std::pair{fixtures::example2_name, fixtures::example2_csv}})
    {
        const auto path = dir / name;
        detail::spill(path.string(), std::string(body));
        out << path.string() << "\n";
    }
    return Ok;
}

/// Entry point shared by the executable and the tests.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout,
               std::ostream& err = std::cerr)
{
    CLI::App app{"Least-squares line fitting by projection of centered data vectors"};
    app.require_subcommand(1);
    Options o;

    auto add_data_opts = [&o](CLI::App* sub) {
        sub->add_option("--input", o.input, "CSV file with the data")->required();
        sub->add_option("--x-col", o.x_col, "predictor column (header name or 0-based index)");
        sub->add_option("--y-col", o.y_col, "response column (header name or 0-based index)");
        sub->add_option("--delimiter", o.delimiter, "field delimiter");
    };

    auto* fit_cmd = app.add_subcommand("fit", "fit a line and print the report");
    add_data_opts(fit_cmd);
    fit_cmd->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    fit_cmd->add_flag("--verify", o.verify, "cross-check the slope with the brute-force oracle");

    auto* plot_cmd = app.add_subcommand("plot", "write an SVG scatter plot with the fitted line");
    add_data_opts(plot_cmd);
    plot_cmd->add_option("--output", o.output, "SVG path (stdout when omitted)");
    plot_cmd->add_option("--width", o.width, "width in px")->check(CLI::Range(100, 100000));
    plot_cmd->add_option("--height", o.height, "height in px")->check(CLI::Range(100, 100000));

    auto* verify_cmd = app.add_subcommand("verify", "compare the projection fit with a grid search");
    add_data_opts(verify_cmd);

    auto* examples_cmd = app.add_subcommand("examples", "write the two bundled datasets");
    examples_cmd->add_option("--output", o.output, "target directory (default: current)");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp& e)
    {
        return app.exit(e, out, err);
    }
    catch (const CLI::ParseError& e)
    {
        app.exit(e, out, err);
        return Usage;
    }

    try
    {
        if (*fit_cmd)
            return cmd_fit(o, out, err);
        if (*plot_cmd)
            return cmd_plot(o, out, err);
        if (*verify_cmd)
            return cmd_verify(o, out, err);
        return cmd_examples(o, out, err);
    }
    catch (const Error& e)
    {
        err << "error: " << e.what() << "\n";
        return exit_code(e.kind());
    }
    catch (const detail::IoError& e)
    {
        err << "error: " << e.what() << "\n";
        return DataError;
    }
    catch (const std::filesystem::filesystem_error& e)
    {
        err << "error: " << e.what() << "\n";
        return DataError;
    }
}

} // namespace geofit::cli
