#pragma once

#include <stdexcept>

namespace qvseg {

// A simulated state violated a structural contract that only a bug in
// circuit construction can produce.
struct CorruptStateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A histogram is missing required (frame, position) cells.
struct IncompleteSamplingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Request outside the supported parameter envelope.
struct UnsupportedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace qvseg
