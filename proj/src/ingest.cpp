#include "tailspan/ingest.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tailspan {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

std::vector<std::string_view> split(std::string_view line, char delimiter) {
    std::vector<std::string_view> cells;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(delimiter, start);
        if (pos == std::string_view::npos) {
            cells.push_back(line.substr(start));
            break;
        }
        cells.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return cells;
}

[[noreturn]] void fail(const std::string& path, std::size_t line_number,
                       const std::string& message) {
    throw std::runtime_error(path + ":" + std::to_string(line_number) + ": " +
                             message);
}

// Standard decimal floating-point grammar via from_chars, plus an
// optional leading '+' which from_chars does not accept.
std::optional<double> parse_double(std::string_view cell) {
    if (!cell.empty() && cell.front() == '+') cell.remove_prefix(1);
    if (cell.empty()) return std::nullopt;
    double value = 0.0;
    const char* begin = cell.data();
    const char* end = begin + cell.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) return std::nullopt;
    return value;
}

// Resolve a column given as a header name or a 0-based position.
// With a header present, names take priority over positions.
std::size_t resolve_column(const std::string& wanted,
                           const std::vector<std::string>& header,
                           std::size_t column_count, const std::string& path,
                           bool has_header) {
    if (has_header) {
        for (std::size_t i = 0; i < header.size(); ++i) {
            if (header[i] == wanted) return i;
        }
    }
    std::size_t index = 0;
    const auto [ptr, ec] = std::from_chars(
        wanted.data(), wanted.data() + wanted.size(), index);
    if (ec == std::errc() && ptr == wanted.data() + wanted.size() &&
        index < column_count) {
        return index;
    }
    throw std::runtime_error(path + ": column '" + wanted +
                             "' not found" +
                             (has_header ? "" : " (no header; use a 0-based "
                                                "column position)"));
}

// Endpoint cells take the nearest finite value; interior gaps are
// filled linearly between their finite neighbors.
void interpolate(std::vector<std::optional<double>>& column,
                 const std::string& path) {
    std::size_t first_finite = column.size();
    for (std::size_t i = 0; i < column.size(); ++i) {
        if (column[i].has_value()) {
            first_finite = i;
            break;
        }
    }
    if (first_finite == column.size()) {
        throw std::runtime_error(path + ": every value is missing");
    }
    for (std::size_t i = 0; i < first_finite; ++i) {
        column[i] = *column[first_finite];
    }
    std::size_t prev = first_finite;
    for (std::size_t i = first_finite + 1; i < column.size(); ++i) {
        if (!column[i].has_value()) continue;
        const std::size_t gap = i - prev;
        for (std::size_t j = prev + 1; j < i; ++j) {
            const double t = static_cast<double>(j - prev) /
                             static_cast<double>(gap);
            column[j] = *column[prev] + t * (*column[i] - *column[prev]);
        }
        prev = i;
    }
    for (std::size_t i = prev + 1; i < column.size(); ++i) {
        column[i] = *column[prev];
    }
}

}  // namespace

LoadResult load_series(const SeriesFile& cfg) {
    std::ifstream in(cfg.path, std::ios::binary);
    if (!in) {
        throw std::runtime_error(cfg.path + ": cannot open file");
    }

    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    if (!lines.empty() && lines.front().rfind("\xEF\xBB\xBF", 0) == 0) {
        lines.front().erase(0, 3);  // UTF-8 BOM
    }
    // Trailing blank lines are file-ending convention; interior blank
    // lines are rows of empty cells and fall under the missing-value
    // policy.
    while (!lines.empty() && trim(lines.back()).empty()) {
        lines.pop_back();
    }

    std::vector<std::string> header;
    std::size_t first_data_line = 0;
    if (cfg.has_header) {
        while (first_data_line < lines.size() &&
               trim(lines[first_data_line]).empty()) {
            ++first_data_line;
        }
        if (first_data_line == lines.size()) {
            throw std::runtime_error(cfg.path + ": empty file");
        }
        for (std::string_view cell :
             split(lines[first_data_line], cfg.delimiter)) {
            header.emplace_back(trim(cell));
        }
        ++first_data_line;
    }

    // Column positions are resolved against the widest interpretation
    // available: the header if present, otherwise the first data row.
    std::size_t column_count = header.size();
    if (!cfg.has_header) {
        for (std::size_t i = first_data_line; i < lines.size(); ++i) {
            if (!trim(lines[i]).empty()) {
                column_count = split(lines[i], cfg.delimiter).size();
                break;
            }
        }
    }
    if (column_count == 0) {
        throw std::runtime_error(cfg.path + ": empty file");
    }

    const std::size_t value_col = resolve_column(
        cfg.value_column, header, column_count, cfg.path, cfg.has_header);
    std::optional<std::size_t> imag_col;
    if (cfg.imag_column.has_value()) {
        imag_col = resolve_column(*cfg.imag_column, header, column_count,
                                  cfg.path, cfg.has_header);
    }
    std::optional<std::size_t> label_col;
    if (cfg.label_column.has_value()) {
        label_col = resolve_column(*cfg.label_column, header, column_count,
                                   cfg.path, cfg.has_header);
    }

    std::vector<std::optional<double>> reals;
    std::vector<std::optional<double>> imags;
    std::vector<std::string> labels;
    for (std::size_t i = first_data_line; i < lines.size(); ++i) {
        const std::size_t line_number = i + 1;
        const std::vector<std::string_view> cells =
            split(lines[i], cfg.delimiter);

        const auto read_cell =
            [&](std::size_t col) -> std::optional<double> {
            const std::string_view cell =
                col < cells.size() ? trim(cells[col]) : std::string_view{};
            if (cell.empty()) {
                if (!cfg.interpolate_missing) {
                    fail(cfg.path, line_number, "missing value");
                }
                return std::nullopt;
            }
            const std::optional<double> parsed = parse_double(cell);
            if (!parsed.has_value()) {
                fail(cfg.path, line_number,
                     "cannot parse '" + std::string(cell) + "' as a number");
            }
            if (!std::isfinite(*parsed)) {
                fail(cfg.path, line_number, "non-finite value");
            }
            return parsed;
        };

        reals.push_back(read_cell(value_col));
        if (imag_col.has_value()) imags.push_back(read_cell(*imag_col));
        if (label_col.has_value()) {
            labels.emplace_back(*label_col < cells.size()
                                    ? trim(cells[*label_col])
                                    : std::string_view{});
        }
    }
    if (reals.empty()) {
        throw std::runtime_error(cfg.path + ": no data rows");
    }

    if (cfg.interpolate_missing) {
        interpolate(reals, cfg.path);
        if (imag_col.has_value()) interpolate(imags, cfg.path);
    }

    std::vector<Complex> values(reals.size());
    for (std::size_t i = 0; i < reals.size(); ++i) {
        values[i] = Complex(*reals[i],
                            imag_col.has_value() ? *imags[i] : 0.0);
    }
    return LoadResult{Signal(std::move(values)), std::move(labels)};
}

}  // namespace tailspan
