#pragma once

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cvxgap/errors.hpp"

namespace cvxgap {

struct XYSamples {
  std::vector<double> xs;
  std::vector<double> ys;
};

namespace detail {

inline bool parse_double(const std::string& field, double& out) {
  const char* begin = field.c_str();
  char* end = nullptr;
  out = std::strtod(begin, &end);
  if (end == begin) return false;
  while (*end == ' ' || *end == '\t') ++end;
  return *end == '\0';
}

inline std::string trim(const std::string& s) {
  const auto from = s.find_first_not_of(" \t\r");
  if (from == std::string::npos) return "";
  const auto to = s.find_last_not_of(" \t\r");
  return s.substr(from, to - from + 1);
}

}  // namespace detail

/// Two-column `x,f(x)` CSV. An optional header row is detected by a
/// non-numeric first field. Ordering constraints are left to the consumer.
inline XYSamples read_xy_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  XYSamples out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = detail::trim(line);
    if (t.empty()) continue;
    std::istringstream row(t);
    std::string xf, yf, extra;
    if (!std::getline(row, xf, ',') || !std::getline(row, yf, ','))
      throw ParseError(path + ":" + std::to_string(lineno) + ": expected two comma-separated fields");
    if (std::getline(row, extra, ',') && !detail::trim(extra).empty())
      throw ParseError(path + ":" + std::to_string(lineno) + ": expected exactly two columns");
    double x, y;
    const bool xok = detail::parse_double(detail::trim(xf), x);
    const bool yok = detail::parse_double(detail::trim(yf), y);
    if (!xok) {
      if (lineno == 1 && out.xs.empty()) continue;  // header row
      throw ParseError(path + ":" + std::to_string(lineno) + ": non-numeric x field '" +
                       detail::trim(xf) + "'");
    }
    if (!yok)
      throw ParseError(path + ":" + std::to_string(lineno) + ": non-numeric y field '" +
                       detail::trim(yf) + "'");
    out.xs.push_back(x);
    out.ys.push_back(y);
  }
  if (out.xs.size() < 2)
    throw ParseError(path + ": need at least 2 data rows, got " +
                     std::to_string(out.xs.size()));
  return out;
}

}  // namespace cvxgap
