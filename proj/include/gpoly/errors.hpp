#pragma once

#include <stdexcept>

namespace gpoly {

// Malformed or out-of-contract input (bad mark, unknown edge id, loop contraction, ...).
struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A brute-force routine was asked to go past its configured bound.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The polynomial handed to a reconstruction routine is not from the supported family.
struct ReconstructionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace gpoly
