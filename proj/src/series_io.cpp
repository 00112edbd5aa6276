#include "flp/series_io.hpp"

#include <charconv>
#include <map>
#include <sstream>
#include <string_view>
#include <vector>

#include "flp/error.hpp"
#include "flp/report.hpp"

namespace flp {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

template <class T>
bool parse_number(std::string_view s, T& out) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const auto res = std::from_chars(s.data(), s.data() + s.size(), out);
  return res.ec == std::errc{} && res.ptr == s.data() + s.size();
}

}  // namespace

std::string series_to_csv(const PowerSeries& s) {
  std::string out = "# schema: " + std::to_string(kSchemaVersion) + "\nindex,re,im\n";
  for (std::size_t n = 0; n <= s.degree(); ++n) {
    out += std::to_string(n) + ',' + format_double(s[n].real()) + ',' + format_double(s[n].imag()) + '\n';
  }
  return out;
}

PowerSeries series_from_csv(std::istream& in) {
  std::map<std::size_t, Complex> coeffs;
  std::string line;
  int line_no = 0;
  bool first_data = true;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view row = trim(line);
    if (row.empty() || row.front() == '#') continue;
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= row.size(); ++i) {
      if (i == row.size() || row[i] == ',') {
        fields.push_back(row.substr(start, i - start));
        start = i + 1;
      }
    }
    std::size_t index = 0;
    double re = 0.0;
    double im = 0.0;
    const bool ok = (fields.size() == 2 || fields.size() == 3) && parse_number(fields[0], index) &&
                    parse_number(fields[1], re) && (fields.size() == 2 || parse_number(fields[2], im));
    if (!ok) {
      if (first_data) {
        first_data = false;
        continue;  // header
      }
      throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": expected index,re,im");
    }
    first_data = false;
    if (!coeffs.emplace(index, Complex{re, im}).second) {
      throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": duplicate index " +
                                             std::to_string(index));
    }
  }
  if (coeffs.empty()) throw Error(ErrorKind::ParseError, "no coefficients found");
  PowerSeries s(coeffs.rbegin()->first);
  for (const auto& [n, c] : coeffs) s[n] = c;
  return s;
}

}  // namespace flp
