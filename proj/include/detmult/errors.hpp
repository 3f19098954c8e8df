#pragma once

#include <stdexcept>
#include <string>

namespace detmult {

// Rejected input: an invariant of the degree-matrix model does not hold.
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

// Internal cross-check failed (method disagreement, nonzero division
// remainder). Must be impossible for valid inputs; never swallowed.
class invariant_violation : public std::logic_error {
public:
    explicit invariant_violation(const std::string& what) : std::logic_error(what) {}
};

} // namespace detmult
