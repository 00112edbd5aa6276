#pragma once

#include <istream>
#include <string>

#include "flp/power_series.hpp"

namespace flp {

/// CSV with a "# schema: 1" line, a header, then "index,re,im" rows.
[[nodiscard]] std::string series_to_csv(const PowerSeries& s);

/// Reads rows of index,re,im. Lines starting with '#' and a non-numeric header
/// are skipped; indices may come in any order, missing ones are zero.
/// Throws ParseError on malformed rows or duplicate indices.
[[nodiscard]] PowerSeries series_from_csv(std::istream& in);

}  // namespace flp
