#pragma once

#include <vector>

#include "gstp/core.hpp"

namespace gstp {

// Constructive planners for 2-row strips. All planners return validated
// plans; they throw std::invalid_argument on malformed inputs and
// std::logic_error if an internal invariant breaks.

// Rearranges a 2xm strip with one escort so that the designated row (1 or 2)
// reads `row_target` left to right. Entries of `row_target` are tile ids; 0
// means "any tile". The escort ends at column 1 of the other row. The other
// row's final arrangement is unspecified.
Plan permute_row_2xm_k1(const Configuration& start, int designated_row,
                        const std::vector<int>& row_target);

// Solves a feasible 2xm instance with exactly one escort.
Plan solve_2xm_k1(const Instance& inst);

// Rearranges a 2xm strip with two escorts, initially at (1,1) and (1,2), so
// that the bottom row reads `bottom_target` (0 = any tile). Both escorts end
// back on the top row at columns 1 and 2.
Plan permute_bottom_row_2xm_k2(const Configuration& start,
                               const std::vector<int>& bottom_target);

// Solves a 2xm instance with exactly two escorts.
Plan solve_2xm_k2(const Instance& inst);

}  // namespace gstp
