#pragma once

#include <stdexcept>

namespace palin {

// Thrown when a computation would exceed a configured resource cap.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when a structural fact the library relies on fails to hold.
// Seeing one of these means a defect, not bad input.
struct invariant_error : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace palin
