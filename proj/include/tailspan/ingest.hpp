#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tailspan/signal.hpp"

namespace tailspan {

/// A delimited-text time series source. value_column (and the optional
/// imag_column / label_column) may be a header name or a 0-based
/// position; names take priority when a header is present. Rows are
/// taken in file order as positions of Z_N; labels are carried through
/// verbatim, never parsed.
struct SeriesFile {
    std::string path;
    std::string value_column;
    std::optional<std::string> imag_column;
    std::optional<std::string> label_column;
    char delimiter = ',';
    bool has_header = true;
    /// Missing (empty) cells are a hard error by default; opting in
    /// fills them by linear interpolation between the nearest finite
    /// neighbors (nearest-value fill at the endpoints).
    bool interpolate_missing = false;
};

struct LoadResult {
    Signal signal;
    std::vector<std::string> labels;  // empty unless label_column given
};

/// Load a series into a Signal, one value per data row. Numbers are
/// parsed with the standard decimal floating-point grammar, leading and
/// trailing whitespace ignored; CRLF and LF both accepted. Errors carry
/// the 1-based file line number of the offending cell.
LoadResult load_series(const SeriesFile& cfg);

}  // namespace tailspan
