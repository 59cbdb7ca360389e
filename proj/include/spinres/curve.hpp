#pragma once

// CSV embodiment of sampled transition curves.
//
// Layout: '# key=value' metadata lines, one header row, then data rows.
// Numbers use 17 significant digits, '.' as decimal separator, '\n' line ends.

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace spinres {

/// Locale-independent shortest-safe round-trip formatting (17 significant digits).
std::string format_number(double value);

struct TransitionCurve {
    std::vector<std::pair<std::string, std::string>> meta;
    std::vector<std::string> columns;  ///< columns[0] is the abscissa
    std::vector<std::vector<double>> rows;

    void add_meta(std::string key, double value);
    void add_meta(std::string key, std::string value);

    /// Abscissa strictly increasing, every row the width of the header, probabilities in [0, 1]
    /// within 1e-12. Throws std::runtime_error describing the first violation.
    void validate() const;

    /// Value of a metadata key; throws std::out_of_range if absent.
    const std::string& meta_value(const std::string& key) const;

    /// Index of the named column; throws std::out_of_range if absent.
    std::size_t column(const std::string& name) const;
};

void write_csv(const TransitionCurve& curve, std::ostream& os);

/// Parses the layout written by write_csv. Throws std::runtime_error on malformed input.
TransitionCurve read_csv(std::istream& is);

}  // namespace spinres
