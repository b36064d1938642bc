#pragma once

#include <charconv>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cloud.hpp"

namespace geofit
{

/// A column is selected either by 0-based index or by header name.
using ColumnRef = std::variant<std::size_t, std::string>;

struct DatasetSpec
{
    char delimiter = ',';
    std::optional<bool> has_header; // empty: auto-detect
    ColumnRef x_col = std::size_t{0};
    ColumnRef y_col = std::size_t{1};
};

namespace dataio
{

inline std::string_view trim(std::string_view s)
{
    constexpr std::string_view ws = " \t\r\n";
    const auto first = s.find_first_not_of(ws);
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(ws);
    return s.substr(first, last - first + 1);
}

/// Parses a finite decimal number ('.' separator, optional exponent).
inline std::optional<double> parse_number(std::string_view field)
{
    field = trim(field);
    if (!field.empty() && field.front() == '+')
        field.remove_prefix(1);
    if (field.empty())
        return std::nullopt;
    double v = 0.0;
    const auto [ptr, ec] =
        std::from_chars(field.data(), field.data() + field.size(), v, std::chars_format::general);
    if (ec != std::errc{} || ptr != field.data() + field.size() || !std::isfinite(v))
        return std::nullopt;
    return v;
}

inline std::vector<std::string_view> split(std::string_view line, char delim)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true)
    {
        const auto pos = line.find(delim, start);
        if (pos == std::string_view::npos)
        {
            out.push_back(trim(line.substr(start)));
            return out;
        }
        out.push_back(trim(line.substr(start, pos - start)));
        start = pos + 1;
    }
}

struct Row
{
    std::size_t line_no; // 1-based
    std::vector<std::string_view> fields;
};

/// Non-blank, non-comment rows. Views point into `content`.
inline std::vector<Row> rows(std::string_view content, char delim)
{
    std::vector<Row> out;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= content.size())
    {
        auto end = content.find('\n', start);
        if (end == std::string_view::npos)
            end = content.size();
        ++line_no;
        std::string_view line = content.substr(start, end - start);
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        const auto t = trim(line);
        if (!t.empty() && t.front() != '#')
            out.push_back({line_no, split(line, delim)});
        start = end + 1;
    }
    return out;
}

inline bool header_row(const Row& row)
{
    for (auto f : row.fields)
        if (!parse_number(f))
            return true;
    return false;
}

inline std::size_t resolve(const ColumnRef& ref, const std::optional<Row>& header, const char* role)
{
    if (const auto* idx = std::get_if<std::size_t>(&ref))
    {
        if (header && *idx >= header->fields.size())
            throw Error(ErrorKind::ColumnNotFound, std::string(role) + " column index " +
                                                       std::to_string(*idx) + " out of range");
        return *idx;
    }
    const auto& name = std::get<std::string>(ref);
    if (!header)
        throw Error(ErrorKind::ColumnNotFound,
                    std::string(role) + " column '" + name + "' requested but data has no header");
    for (std::size_t k = 0; k < header->fields.size(); ++k)
        if (header->fields[k] == name)
            return k;
    throw Error(ErrorKind::ColumnNotFound, std::string(role) + " column '" + name + "' not in header");
}

} // namespace dataio

/// True iff the first data row has a field that is not a number.
inline bool auto_detect_header(std::string_view content, char delimiter = ',')
{
    const auto rows = dataio::rows(content, delimiter);
    return !rows.empty() && dataio::header_row(rows.front());
}

/**
 * Parses delimited text into a PointCloud, one point per data row in file
 * order. Blank lines and lines starting with '#' are skipped; LF and CRLF
 * endings are accepted. Quoted fields are not supported.
 */
inline PointCloud parse(const DatasetSpec& spec, std::string_view content)
{
    const auto all = dataio::rows(content, spec.delimiter);
    if (all.empty())
        throw Error(ErrorKind::EmptyDataset, "no rows");

    const bool has_header = spec.has_header.value_or(dataio::header_row(all.front()));
    std::optional<dataio::Row> header;
    if (has_header)
        header = all.front();

    const std::size_t xc = dataio::resolve(spec.x_col, header, "x");
    const std::size_t yc = dataio::resolve(spec.y_col, header, "y");
    if (xc == yc)
        throw Error(ErrorKind::InvalidArgument, "x and y select the same column");
    const std::size_t need = std::max(xc, yc) + 1;

    std::vector<double> xs, ys;
    for (std::size_t r = has_header ? 1 : 0; r < all.size(); ++r)
    {
        const auto& row = all[r];
        if (row.fields.size() < need)
            throw Error(ErrorKind::RaggedRow, "line " + std::to_string(row.line_no) + " has " +
                                                  std::to_string(row.fields.size()) +
                                                  " fields, need " + std::to_string(need));
        const auto x = dataio::parse_number(row.fields[xc]);
        if (!x)
            throw ParseError(row.line_no, xc + 1, "'" + std::string(row.fields[xc]) + "' is not a number");
        const auto y = dataio::parse_number(row.fields[yc]);
        if (!y)
            throw ParseError(row.line_no, yc + 1, "'" + std::string(row.fields[yc]) + "' is not a number");
        xs.push_back(*x);
        ys.push_back(*y);
    }
    if (xs.empty())
        throw Error(ErrorKind::EmptyDataset, "no data rows");
    return {std::move(xs), std::move(ys)};
}

/// Writes a cloud back out as CSV with a header; values use shortest round-trip form.
inline std::string to_csv(const PointCloud& cloud, std::string_view x_name = "x",
                          std::string_view y_name = "y", char delimiter = ',')
{
    std::string out;
    out.append(x_name).push_back(delimiter);
    out.append(y_name).push_back('\n');
    char buf[64];
    for (std::size_t k = 0; k < cloud.size(); ++k)
    {
        auto r = std::to_chars(buf, buf + sizeof buf, cloud.xs()[k]);
        out.append(buf, r.ptr).push_back(delimiter);
        r = std::to_chars(buf, buf + sizeof buf, cloud.ys()[k]);
        out.append(buf, r.ptr).push_back('\n');
    }
    return out;
}

} // namespace geofit
