#include "fracosc/textio.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace fracosc::textio {

std::string fmt17(double v) {
  if (std::isnan(v)) return "nan";
  char buf[40];
  const auto res =
      std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

double parse_double(std::string_view s) {
  const std::string t = trim(s);
  double v = 0.0;
  const auto res = std::from_chars(t.data(), t.data() + t.size(), v);
  if (res.ec != std::errc{} || res.ptr != t.data() + t.size() || t.empty()) {
    throw std::invalid_argument("not a number: '" + t + "'");
  }
  return v;
}

int parse_int(std::string_view s) {
  const std::string t = trim(s);
  int v = 0;
  const auto res = std::from_chars(t.data(), t.data() + t.size(), v);
  if (res.ec != std::errc{} || res.ptr != t.data() + t.size() || t.empty()) {
    throw std::invalid_argument("not an integer: '" + t + "'");
  }
  return v;
}

namespace {

std::vector<std::string> split_commas(std::string_view s) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto comma = s.find(',', start);
    if (comma == std::string_view::npos) {
      parts.push_back(std::string(s.substr(start)));
      break;
    }
    parts.push_back(std::string(s.substr(start, comma - start)));
    start = comma + 1;
  }
  return parts;
}

}  // namespace

std::vector<double> parse_double_list(std::string_view s) {
  std::vector<double> out;
  for (const auto& part : split_commas(s)) out.push_back(parse_double(part));
  return out;
}

std::vector<int> parse_int_list(std::string_view s) {
  std::vector<int> out;
  for (const auto& part : split_commas(s)) out.push_back(parse_int(part));
  return out;
}

std::string join17(const std::vector<double>& v, char sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += sep;
    out += fmt17(v[i]);
  }
  return out;
}

}  // namespace fracosc::textio
