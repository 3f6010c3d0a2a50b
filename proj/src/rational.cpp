#include "rational.hpp"

#include <cctype>
#include <cstdio>

namespace cscbif {

namespace {

bool parse_integer(std::string_view text, BigInt& out) {
    if (text.empty()) return false;
    std::size_t start = 0;
    if (text[0] == '+' || text[0] == '-') start = 1;
    if (start == text.size()) return false;
    for (std::size_t k = start; k < text.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(text[k]))) return false;
    }
    out = BigInt(std::string(text));
    return true;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    BigInt num;
    if (slash == std::string_view::npos) {
        if (!parse_integer(text, num)) return std::nullopt;
        return Rational(num);
    }
    BigInt den;
    if (!parse_integer(text.substr(0, slash), num)) return std::nullopt;
    if (!parse_integer(text.substr(slash + 1), den)) return std::nullopt;
    if (den == 0) return std::nullopt;
    return Rational(num, den);
}

std::string to_fraction(const Rational& value) {
    return numerator(value).str() + "/" + denominator(value).str();
}

std::string to_decimal(const Rational& value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.12g", to_double(value));
    return buffer;
}

double to_double(const Rational& value) {
    return value.convert_to<double>();
}

}  // namespace cscbif
