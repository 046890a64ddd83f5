#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gstp/core.hpp"

namespace gstp::oracle {

// Exhaustive breadth-first search over whole configurations, used as ground
// truth for the polynomial-time components and to finish small endgames
// exactly. Placements are packed one byte per tile (the tile's 0-based cell
// index), so boards are limited to 256 cells and the search to tiny grids.
using Placement = std::string;

Placement pack(const Configuration& c);
Configuration unpack(const Grid& grid, const Placement& p);

// Every legal non-empty step from `p` with the placement it produces. A legal
// step is a union of escort-disjoint, tile-disjoint straight trains, so the
// options per escort are enumerated directly. Steps come out canonical
// (moves sorted by tile id) and in deterministic order.
std::vector<std::pair<Step, Placement>> successors(const Grid& grid,
                                                   const Placement& p);

// The same legality with the corner-following rule dropped: mover chains may
// turn corners, so successors are enumerated by brute force over all 5^n
// direction assignments and are only offered for boards of at most
// `kRelaxedCellLimit` cells.
inline constexpr int kRelaxedCellLimit = 6;
std::vector<std::pair<Step, Placement>> successors_relaxed(const Grid& grid,
                                                           const Placement& p);

struct Exploration {
  Grid grid;
  std::unordered_map<Placement, int> distance;  // BFS depth from the start

  std::optional<int> distance_to(const Configuration& goal) const;
  bool reaches(const Configuration& goal) const {
    return distance_to(goal).has_value();
  }
};

// Distances from `start` to every reachable placement. Throws
// std::length_error if more than `state_cap` states are discovered.
Exploration explore(const Configuration& start,
                    std::uint64_t state_cap = 1ull << 22,
                    bool relaxed = false);

enum class SearchStatus : std::uint8_t { Solved, Unreachable, CapExceeded };

struct SearchResult {
  SearchStatus status = SearchStatus::Unreachable;
  int makespan = -1;  // meaningful only when Solved
};

// Fewest steps from start to goal. A negative `step_cap` means unbounded;
// running past it, or discovering more than `state_cap` states, yields
// CapExceeded.
SearchResult optimal_makespan(const Instance& inst, long long step_cap = -1,
                              std::uint64_t state_cap = 1ull << 26,
                              bool relaxed = false);

// A shortest plan, or nullopt when the goal is unreachable. Throws
// std::length_error if the search outgrows `state_cap`.
std::optional<Plan> shortest_plan(const Instance& inst,
                                  std::uint64_t state_cap = 1ull << 22);

}  // namespace gstp::oracle
