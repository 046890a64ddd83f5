#pragma once

#include "gstp/core.hpp"

namespace gstp {

// Factors an arbitrary permutation of a fully occupied table into three
// batches of within-line permutations: rows, then columns, then rows. The
// middle batch works because the staging columns are chosen so that after
// the first batch every column holds exactly one item bound for each goal
// row (a Latin condition), obtained by splitting the start-row/goal-row
// bipartite multigraph into `cols` perfect matchings.
struct TableRouting {
  Grid grid;
  std::vector<Cell> goal;    // goal[i] for the item starting at cell i
  std::vector<int> staging;  // staging[i] = column for the middle batch

  // Item index for a start cell, and the three intermediate targets.
  Cell after_rows1(int item) const {
    return {grid.cell(item).row, staging[item]};
  }
  Cell after_cols(int item) const { return {goal[item].row, staging[item]}; }
  Cell after_rows2(int item) const { return goal[item]; }
};

// `goal` maps each start cell (row-major index) to a goal cell and must be a
// permutation of all cells; throws std::invalid_argument otherwise. The
// matchings are extracted deterministically (augmenting paths, lowest index
// first), so equal inputs give equal routings.
TableRouting route_table(const Grid& grid, const std::vector<Cell>& goal);

}  // namespace gstp
