#include "spinres/curve.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace spinres {

namespace {

std::vector<std::string> split(const std::string& line, char sep)
{
    std::vector<std::string> out;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, sep)) {
        out.push_back(field);
    }
    if (!line.empty() && line.back() == sep) {
        out.emplace_back();
    }
    return out;
}

double parse_number(const std::string& text, std::size_t line_no)
{
    double value = 0.0;
    const char* first = text.data();
    const char* last = first + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
        throw std::runtime_error("csv line " + std::to_string(line_no) + ": not a number: '" + text + "'");
    }
    return value;
}

}  // namespace

std::string format_number(double value)
{
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 17);
    if (ec != std::errc{}) {
        throw std::runtime_error("format_number: conversion failed");
    }
    return {buf, ptr};
}

void TransitionCurve::add_meta(std::string key, double value)
{
    meta.emplace_back(std::move(key), format_number(value));
}

void TransitionCurve::add_meta(std::string key, std::string value)
{
    meta.emplace_back(std::move(key), std::move(value));
}

const std::string& TransitionCurve::meta_value(const std::string& key) const
{
    for (const auto& [k, v] : meta) {
        if (k == key) {
            return v;
        }
    }
    throw std::out_of_range("TransitionCurve: no metadata key '" + key + "'");
}

std::size_t TransitionCurve::column(const std::string& name) const
{
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (columns[i] == name) {
            return i;
        }
    }
    throw std::out_of_range("TransitionCurve: no column named '" + name + "'");
}

void TransitionCurve::validate() const
{
    constexpr double slack = 1e-12;
    if (columns.empty()) {
        throw std::runtime_error("curve has no columns");
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const auto& row = rows[r];
        if (row.size() != columns.size()) {
            throw std::runtime_error("curve row " + std::to_string(r) + " has wrong width");
        }
        if (r > 0 && !(row[0] > rows[r - 1][0])) {
            throw std::runtime_error("curve abscissa not strictly increasing at row " + std::to_string(r));
        }
        for (std::size_t c = 1; c < row.size(); ++c) {
            if (!(row[c] >= -slack && row[c] <= 1.0 + slack)) {
                throw std::runtime_error("curve value outside [0, 1] in column '" + columns[c] + "' row "
                                         + std::to_string(r));
            }
        }
    }
}

void write_csv(const TransitionCurve& curve, std::ostream& os)
{
    for (const auto& [key, value] : curve.meta) {
        os << "# " << key << '=' << value << '\n';
    }
    for (std::size_t c = 0; c < curve.columns.size(); ++c) {
        os << (c ? "," : "") << curve.columns[c];
    }
    os << '\n';
    for (const auto& row : curve.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            os << (c ? "," : "") << format_number(row[c]);
        }
        os << '\n';
    }
}

TransitionCurve read_csv(std::istream& is)
{
    TransitionCurve curve;
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    while (std::getline(is, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        if (line[0] == '#') {
            if (have_header) {
                throw std::runtime_error("csv line " + std::to_string(line_no) + ": metadata after header");
            }
            const auto start = line.find_first_not_of("# ");
            const std::string body = start == std::string::npos ? std::string{} : line.substr(start);
            const auto eq = body.find('=');
            if (eq == std::string::npos || eq == 0) {
                throw std::runtime_error("csv line " + std::to_string(line_no) + ": metadata without '='");
            }
            curve.meta.emplace_back(body.substr(0, eq), body.substr(eq + 1));
            continue;
        }
        const auto fields = split(line, ',');
        if (!have_header) {
            for (const auto& f : fields) {
                if (f.empty()) {
                    throw std::runtime_error("csv header has an empty column name");
                }
            }
            curve.columns = fields;
            have_header = true;
            continue;
        }
        if (fields.size() != curve.columns.size()) {
            throw std::runtime_error("csv line " + std::to_string(line_no) + ": expected "
                                     + std::to_string(curve.columns.size()) + " fields");
        }
        std::vector<double> row;
        row.reserve(fields.size());
        for (const auto& f : fields) {
            row.push_back(parse_number(f, line_no));
        }
        curve.rows.push_back(std::move(row));
    }
    if (!have_header) {
        throw std::runtime_error("csv has no header row");
    }
    return curve;
}

}  // namespace spinres
