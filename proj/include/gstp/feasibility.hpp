#pragma once

#include "gstp/core.hpp"

namespace gstp {

// Exact decision in O(cells): single-line boards preserve tile order; two or
// more escorts make everything reachable; with one escort a 2x2 board only
// rotates (cyclic order invariant) and every other board obeys the classic
// permutation-parity rule, escort displacement included.
bool feasible(const Instance& inst);

// Certified makespan lower bound: per step each of the k escorts absorbs at
// most one straight train, which moves fewer than max(m1, m2) tiles one cell
// each, so total displacement sinks by at most k * max(m1, m2) per step.
// Requires at least one escort.
long long lower_bound(const Instance& inst);

}  // namespace gstp
