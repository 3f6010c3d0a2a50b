#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace cscbif {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "p" or "p/q" (optional leading sign, q > 0 after normalization).
// Decimal notation is rejected on purpose: exactness is end-to-end.
std::optional<Rational> parse_rational(std::string_view text);

// Lowest terms, always "p/q" with q > 0 (integers render as "p/1").
std::string to_fraction(const Rational& value);

// 12 significant digits; only for float-facing output (CSV, diagnostics).
std::string to_decimal(const Rational& value);

double to_double(const Rational& value);

}  // namespace cscbif
