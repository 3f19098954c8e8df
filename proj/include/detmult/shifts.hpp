#pragma once

#include <vector>

#include "detmult/degree_matrix.hpp"

namespace detmult {

// The c minimal shifts m_i or maximal shifts M_i of the resolution.
// Strictly increasing; values[0] >= t.
struct ShiftVector {
    enum class Kind { min, max };
    Kind kind;
    std::vector<long long> values; // values[i-1] holds m_i resp. M_i

    friend bool operator==(const ShiftVector&, const ShiftVector&) = default;
};

// m_i = u_{1,1} + ... + u_{i,1} + u_{i+1,2} + u_{i+2,3} + ... + u_{t+i-1,t}.
ShiftVector min_shifts(const DegreeMatrix& dm);

// M_i = u_{c-i+1,1} + u_{c-i+2,2} + ... + u_{t+c-i,t} + u_{t+c-i+1,t} + ... + u_{t+c-1,t}.
ShiftVector max_shifts(const DegreeMatrix& dm);

} // namespace detmult
