#ifndef STRATMAP_NUMERIC_HPP
#define STRATMAP_NUMERIC_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace stratmap {

/// Shortest decimal form that parses back to exactly the same double
/// ("5", "3.5", "0.0221"). Used for link strengths and weights so that
/// emitted files are byte-deterministic.
std::string format_number(double value);

/// Fixed-point form with `precision` digits after the decimal point
/// ("0.7071"). Used for map-file coordinates.
std::string format_fixed(double value, int precision);

/// Locale-independent double parse of an entire token. Returns nullopt on
/// trailing garbage, empty input, or out-of-range values.
std::optional<double> parse_double(std::string_view token);

/// Same for integers.
std::optional<std::int64_t> parse_int(std::string_view token);

/// Regularized upper incomplete gamma Q(s, x) = Gamma(s, x) / Gamma(s)
/// for s > 0, x >= 0. The chi-square upper tail with df degrees of freedom
/// at statistic t is Q(df/2, t/2).
double regularized_gamma_q(double s, double x);

/// Upper-tail p-value of the chi-square distribution.
double chi_square_upper_tail(double statistic, int df);

/// Maximum-weight perfect matching value on a square score matrix
/// (Hungarian algorithm). Rectangular inputs are zero-padded to square.
std::int64_t max_assignment_value(const std::vector<std::vector<std::int64_t>>& scores);

} // namespace stratmap

#endif
