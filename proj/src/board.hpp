#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gstp/core.hpp"

namespace gstp {

// Mutable planning surface shared by the constructive planners. Every
// primitive validates its own preconditions and the emitted step, so a
// planner bug surfaces as an exception at the offending step instead of a
// corrupt plan.
class Board {
 public:
  explicit Board(Configuration c) : cfg_(std::move(c)), occ_(cfg_.occupancy()) {}

  const Configuration& config() const { return cfg_; }
  const Grid& grid() const { return cfg_.grid; }
  const Plan& plan() const { return plan_; }
  Plan take_plan() { return std::move(plan_); }
  int steps() const { return static_cast<int>(plan_.size()); }

  int tile_at(Cell c) const { return occ_[grid().index(c)]; }
  bool empty_at(Cell c) const { return tile_at(c) == 0; }
  Cell tile(int id) const { return cfg_.tile(id); }

  // Applies one legal step built from simultaneous escort pulls. Each pull
  // (from, to) slides the tiles of (from, to] one cell toward `from`; the
  // pulls must touch disjoint tiles.
  void pull(const std::vector<std::pair<Cell, Cell>>& jumps) {
    Step step;
    for (const auto& [from, to] : jumps) {
      if (!empty_at(from)) fail("pull origin not empty", from);
      Direction toward_from = direction_of(to, from);
      Cell cur = to;
      while (cur != from) {
        int t = tile_at(cur);
        if (t == 0) fail("pull crosses an empty cell", cur);
        step.push_back({t, toward_from});
        cur = neighbor(cur, toward_from);
      }
    }
    commit(step);
  }

  void jump(Cell from, Cell to) { pull({{from, to}}); }

  // Four jumps rotating the boundary of the rectangle; `clockwise` is the
  // tiles' direction. The escort must already sit on a corner.
  void rotate(Cell tl, Cell br, bool clockwise) {
    Cell tr{tl.row, br.col}, bl{br.row, tl.col};
    std::vector<Cell> order = clockwise ? std::vector<Cell>{tl, bl, br, tr}
                                        : std::vector<Cell>{tl, tr, br, bl};
    int at = -1, empties = 0;
    for (int i = 0; i < 4; ++i) {
      if (empty_at(order[i])) at = i, ++empties;
    }
    if (empties != 1) fail("rotation needs exactly one empty corner", tl);
    for (int i = 0; i < 4; ++i)
      jump(order[(at + i) % 4], order[(at + i + 1) % 4]);
  }

  void empty_step() { plan_.push_back({}); }

  // Rewinds to an earlier (config(), steps()) capture, discarding the plan
  // tail; used by planners that retry a sub-strategy from a checkpoint.
  void rewind(const Configuration& snapshot, int steps_kept) {
    if (steps_kept > steps()) throw std::logic_error("planner: bad rewind");
    plan_.resize(static_cast<std::size_t>(steps_kept));
    cfg_ = snapshot;
    occ_ = cfg_.occupancy();
  }

 private:
  static Direction direction_of(Cell from, Cell to) {
    if (from.row == to.row)
      return from.col < to.col ? Direction::Right : Direction::Left;
    if (from.col == to.col)
      return from.row < to.row ? Direction::Down : Direction::Up;
    throw std::logic_error("planner: cells not colinear");
  }

  void commit(Step step) {
    StepResult r = apply_step(cfg_, step, steps());
    if (!r.next) {
      const Violation& v = r.violations.front();
      std::string msg = "planner emitted illegal step: ";
      msg += violation_name(v.kind);
      throw std::logic_error(msg);
    }
    cfg_ = std::move(*r.next);
    std::sort(step.begin(), step.end());
    plan_.push_back(std::move(step));
    occ_ = cfg_.occupancy();
  }

  void fail(const char* what, Cell c) const {
    throw std::logic_error("planner: " + std::string(what) + " at (" +
                           std::to_string(c.row) + "," + std::to_string(c.col) +
                           ") after " + std::to_string(steps()) + " steps");
  }

  Configuration cfg_;
  std::vector<int> occ_;
  Plan plan_;
};

}  // namespace gstp
