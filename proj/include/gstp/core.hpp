#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gstp {

// Cells are 1-indexed. Row 1 is the top row, column 1 the leftmost column;
// Down increases the row index.
struct Cell {
  int row = 0;
  int col = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

int manhattan(Cell a, Cell b);

struct Grid {
  int rows = 0;
  int cols = 0;
  int cells() const { return rows * cols; }
  bool contains(Cell c) const {
    return c.row >= 1 && c.row <= rows && c.col >= 1 && c.col <= cols;
  }
  // Row-major, 0-based.
  int index(Cell c) const { return (c.row - 1) * cols + (c.col - 1); }
  Cell cell(int index) const { return {index / cols + 1, index % cols + 1}; }
  friend bool operator==(const Grid&, const Grid&) = default;
};

enum class Direction : std::uint8_t { Up, Down, Left, Right };

Cell neighbor(Cell c, Direction d);
Direction opposite(Direction d);
bool perpendicular(Direction a, Direction b);
char direction_char(Direction d);
std::optional<Direction> direction_from_char(char c);

// One tile's move within a step; tiles are 1-indexed.
struct Move {
  int tile = 0;
  Direction dir = Direction::Up;
  friend bool operator==(const Move&, const Move&) = default;
  friend auto operator<=>(const Move&, const Move&) = default;
};

// A step moves each listed tile by one cell, all simultaneously; unlisted
// tiles stay. An empty step is a legal step that does nothing.
using Step = std::vector<Move>;
using Plan = std::vector<Step>;

struct Configuration {
  Grid grid;
  std::vector<Cell> tiles;  // tiles[i] is the cell of tile i+1

  int tile_count() const { return static_cast<int>(tiles.size()); }
  int escort_count() const { return grid.cells() - tile_count(); }
  Cell tile(int id) const { return tiles[id - 1]; }
  // 0 when the cell is empty.
  int tile_at(Cell c) const;
  bool occupied(Cell c) const { return tile_at(c) != 0; }
  // Empty cells in row-major order.
  std::vector<Cell> escorts() const;
  // Cell index -> tile id (0 for empty).
  std::vector<int> occupancy() const;

  friend bool operator==(const Configuration&, const Configuration&) = default;
};

enum class ViolationKind : std::uint8_t {
  OutOfBounds,      // mover leaves the grid
  MeetCollision,    // two movers enter the same empty cell
  HeadOnCollision,  // mover enters a cell whose occupant moves toward it
  CornerFollowing,  // mover enters a cell whose occupant moves perpendicular
  TargetOccupied,   // mover enters a cell whose occupant stays
};

const char* violation_name(ViolationKind k);

struct Violation {
  int time = 0;
  ViolationKind kind = ViolationKind::OutOfBounds;
  std::vector<int> tiles;  // involved tiles, ascending
  friend bool operator==(const Violation&, const Violation&) = default;
  friend auto operator<=>(const Violation&, const Violation&) = default;
};

struct StepResult {
  std::optional<Configuration> next;  // nullopt if any violation
  std::vector<Violation> violations;
};

// Collects every violation in the step (deduplicated, sorted); `time` only
// stamps the reported violations. Throws std::invalid_argument for malformed
// steps (unknown or repeated tile id).
StepResult apply_step(const Configuration& c, const Step& step, int time = 0);

// The movers of a legal step form vertex-disjoint straight chains, each
// advancing head-first into a cell that was empty. Returns those chains,
// head first, ordered by head tile id. Precondition: the step is legal.
std::vector<std::vector<int>> trains(const Configuration& c, const Step& step);

struct PlanReport {
  bool valid = false;         // every step legal
  bool reaches_goal = false;  // valid and the final configuration equals goal
  int makespan = 0;
  std::vector<Violation> violations;
};

PlanReport validate_plan(const Configuration& start, const Configuration& goal,
                         const Plan& plan);

// Applies each step, throwing std::logic_error on any violation. Intended for
// plans produced by the planners, where an illegal step is a bug.
Configuration apply_plan(Configuration c, const Plan& plan);

// Slides the straight block of tiles occupying (from, to] one cell toward
// `from`, landing the escort on `to`; a single step no matter the distance.
// Throws std::invalid_argument unless `from` is empty, `to` is a distinct
// cell in the same row or column, and every cell of (from, to] holds a tile.
// Mutates `c` and returns the emitted step.
Step jump(Configuration& c, Cell from, Cell to);

// Rotates the four corner-to-corner edges of the rectangle by one position
// using four jumps. The escort must sit on a corner of the rectangle and
// every other boundary cell must be tiled. `clockwise` names the rotation
// direction of the tiles (the escort travels the opposite way around).
// Mutates `c` and returns the four steps.
Plan r_shift(Configuration& c, Cell top_left, Cell bottom_right,
             bool clockwise);

// Reverses a plan: steps in reverse order, every move direction inverted.
// Running the result from the plan's end configuration restores its start.
Plan reversed(const Plan& plan);

// Step-wise union of plans that touch disjoint tile sets; shorter plans are
// padded with empty steps. Throws std::invalid_argument if a tile id appears
// in two plans' same-time steps.
Plan merge_parallel(const std::vector<Plan>& plans);

struct Instance {
  Grid grid;
  std::vector<Cell> start;
  std::vector<Cell> goal;

  int tile_count() const { return static_cast<int>(start.size()); }
  int escort_count() const { return grid.cells() - tile_count(); }
  Configuration start_config() const { return {grid, start}; }
  Configuration goal_config() const { return {grid, goal}; }
};

// Throws std::invalid_argument if cells are out of bounds or duplicated, or
// if start and goal disagree on the tile count.
void check_instance(const Instance& inst);

}  // namespace gstp
