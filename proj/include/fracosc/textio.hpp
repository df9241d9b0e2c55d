#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace fracosc::textio {

/// Locale-independent float formatting: %.17g-style general form,
/// 17 significant digits. Identical input bits give identical text.
std::string fmt17(double v);

std::string trim(std::string_view s);

/// Comma-separated doubles ("0.6,0.8,0.95"); throws std::invalid_argument
/// on malformed entries.
std::vector<double> parse_double_list(std::string_view s);
std::vector<int> parse_int_list(std::string_view s);

double parse_double(std::string_view s);  // full-string or throws
int parse_int(std::string_view s);

std::string join17(const std::vector<double>& v, char sep = ',');

}  // namespace fracosc::textio
