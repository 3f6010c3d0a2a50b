#pragma once

#include <stdexcept>
#include <string>

namespace cscbif {

enum class Errc {
    invalid_argument,
    parse,
    validation,
    dimension,
    degenerate_pair,
    insufficient_truncation,
    missing_volume,
    index_range,
    at_instant,
    unknown_catalog,
    io,
    internal,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

// What a spectrum would have to provide for a refused enumeration to succeed.
// The true count is unknowable from a truncated spectrum, so required_at_least
// is a lower bound and reach is the exact eigenvalue level that must be met.
struct TruncationNeed {
    int factor = 0;
    int listed = 0;
    int required_at_least = 0;
    std::string reach;
};

class TruncationError : public Error {
public:
    TruncationError(TruncationNeed need, const std::string& message)
        : Error(Errc::insufficient_truncation, message), need_(std::move(need)) {}

    const TruncationNeed& need() const noexcept { return need_; }

private:
    TruncationNeed need_;
};

}  // namespace cscbif
