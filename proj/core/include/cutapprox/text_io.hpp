#ifndef CUTAPPROX_TEXT_IO_HPP
#define CUTAPPROX_TEXT_IO_HPP

#include <string>

namespace cutapprox {

/// Floating-point text form used in all CSV/JSON output: 17 significant
/// digits, enough for exact double round-trips.
std::string format_g17(double v);

/// Same, but NaN becomes the given placeholder (JSON null, empty CSV field).
std::string format_g17_or(double v, const char* placeholder);

/// Minimal JSON string escaping (quotes, backslash, control characters).
std::string json_escape(const std::string& s);

}  // namespace cutapprox

#endif
