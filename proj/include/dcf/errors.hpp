#pragma once

#include <stdexcept>
#include <string>

namespace dcf {

// Series truncation hit the hard cap before meeting the tail tolerance.
// Callers may catch this and proceed at the cap with degraded accuracy.
struct CapExceeded : std::runtime_error {
    CapExceeded(std::string msg, int cap) : std::runtime_error(std::move(msg)), cap(cap) {}
    int cap;
};

// A coherent expansion was requested with fewer terms than its tail needs.
struct TruncationInsufficient : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The closed-form series route and the direct sampled route disagree beyond
// tolerance; points at a transcription error in one of the long series.
struct SeriesMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// More than the allowed fraction of probability mass lies outside the grid.
struct GridSupportError : std::runtime_error {
    GridSupportError(std::string msg, double missing)
        : std::runtime_error(std::move(msg)), missing(missing) {}
    double missing;
};

}  // namespace dcf
