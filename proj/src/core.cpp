#include "gstp/core.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace gstp {

int manhattan(Cell a, Cell b) {
  return std::abs(a.row - b.row) + std::abs(a.col - b.col);
}

Cell neighbor(Cell c, Direction d) {
  switch (d) {
    case Direction::Up:
      return {c.row - 1, c.col};
    case Direction::Down:
      return {c.row + 1, c.col};
    case Direction::Left:
      return {c.row, c.col - 1};
    case Direction::Right:
      return {c.row, c.col + 1};
  }
  return c;
}

Direction opposite(Direction d) {
  switch (d) {
    case Direction::Up:
      return Direction::Down;
    case Direction::Down:
      return Direction::Up;
    case Direction::Left:
      return Direction::Right;
    case Direction::Right:
      return Direction::Left;
  }
  return d;
}

bool perpendicular(Direction a, Direction b) {
  auto vertical = [](Direction d) {
    return d == Direction::Up || d == Direction::Down;
  };
  return vertical(a) != vertical(b);
}

char direction_char(Direction d) {
  switch (d) {
    case Direction::Up:
      return 'U';
    case Direction::Down:
      return 'D';
    case Direction::Left:
      return 'L';
    case Direction::Right:
      return 'R';
  }
  return '?';
}

std::optional<Direction> direction_from_char(char c) {
  switch (c) {
    case 'U':
      return Direction::Up;
    case 'D':
      return Direction::Down;
    case 'L':
      return Direction::Left;
    case 'R':
      return Direction::Right;
    default:
      return std::nullopt;
  }
}

int Configuration::tile_at(Cell c) const {
  for (int i = 0; i < tile_count(); ++i) {
    if (tiles[i] == c) return i + 1;
  }
  return 0;
}

std::vector<Cell> Configuration::escorts() const {
  std::vector<int> occ = occupancy();
  std::vector<Cell> out;
  for (int i = 0; i < grid.cells(); ++i) {
    if (occ[i] == 0) out.push_back(grid.cell(i));
  }
  return out;
}

std::vector<int> Configuration::occupancy() const {
  std::vector<int> occ(grid.cells(), 0);
  for (int i = 0; i < tile_count(); ++i) occ[grid.index(tiles[i])] = i + 1;
  return occ;
}

const char* violation_name(ViolationKind k) {
  switch (k) {
    case ViolationKind::OutOfBounds:
      return "out-of-bounds";
    case ViolationKind::MeetCollision:
      return "meet-collision";
    case ViolationKind::HeadOnCollision:
      return "head-on-collision";
    case ViolationKind::CornerFollowing:
      return "corner-following";
    case ViolationKind::TargetOccupied:
      return "target-occupied";
  }
  return "?";
}

StepResult apply_step(const Configuration& c, const Step& step, int time) {
  const int n = c.tile_count();
  std::vector<std::optional<Direction>> moving(n + 1);
  for (const Move& m : step) {
    if (m.tile < 1 || m.tile > n)
      throw std::invalid_argument("step names unknown tile " +
                                  std::to_string(m.tile));
    if (moving[m.tile])
      throw std::invalid_argument("step repeats tile " +
                                  std::to_string(m.tile));
    moving[m.tile] = m.dir;
  }

  std::vector<int> occ = c.occupancy();
  std::vector<Violation> out;
  auto report = [&](ViolationKind kind, std::vector<int> tiles) {
    std::sort(tiles.begin(), tiles.end());
    out.push_back({time, kind, std::move(tiles)});
  };

  // Movers entering the same empty cell, keyed by target cell index.
  std::unordered_map<int, std::vector<int>> entering_empty;
  for (const Move& m : step) {
    Cell from = c.tile(m.tile);
    Cell to = neighbor(from, m.dir);
    if (!c.grid.contains(to)) {
      report(ViolationKind::OutOfBounds, {m.tile});
      continue;
    }
    int occupant = occ[c.grid.index(to)];
    if (occupant == 0) {
      entering_empty[c.grid.index(to)].push_back(m.tile);
      continue;
    }
    if (!moving[occupant]) {
      report(ViolationKind::TargetOccupied, {m.tile, occupant});
    } else if (*moving[occupant] == opposite(m.dir)) {
      report(ViolationKind::HeadOnCollision, {m.tile, occupant});
    } else if (perpendicular(*moving[occupant], m.dir)) {
      report(ViolationKind::CornerFollowing, {m.tile, occupant});
    }
    // Same direction: the mover follows its occupant as part of a train.
  }
  for (auto& [cell, tiles] : entering_empty) {
    if (tiles.size() > 1) report(ViolationKind::MeetCollision, tiles);
  }

  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (!out.empty()) return {std::nullopt, std::move(out)};

  Configuration next = c;
  for (const Move& m : step)
    next.tiles[m.tile - 1] = neighbor(c.tile(m.tile), m.dir);
  return {std::move(next), {}};
}

std::vector<std::vector<int>> trains(const Configuration& c, const Step& step) {
  std::vector<int> occ = c.occupancy();
  const int n = c.tile_count();
  std::vector<std::optional<Direction>> moving(n + 1);
  for (const Move& m : step) moving[m.tile] = m.dir;

  // A mover is a head iff its target cell is empty; walk tails backwards.
  std::vector<std::vector<int>> out;
  for (const Move& m : step) {
    Cell to = neighbor(c.tile(m.tile), m.dir);
    if (occ[c.grid.index(to)] != 0) continue;
    std::vector<int> train{m.tile};
    int cur = m.tile;
    for (;;) {
      Cell behind = neighbor(c.tile(cur), opposite(*moving[cur]));
      if (!c.grid.contains(behind)) break;
      int follower = occ[c.grid.index(behind)];
      if (follower == 0 || !moving[follower] ||
          *moving[follower] != *moving[cur])
        break;
      train.push_back(follower);
      cur = follower;
    }
    out.push_back(std::move(train));
  }
  std::sort(out.begin(), out.end());
  return out;
}

PlanReport validate_plan(const Configuration& start, const Configuration& goal,
                         const Plan& plan) {
  PlanReport report;
  report.makespan = static_cast<int>(plan.size());
  Configuration cur = start;
  for (int t = 0; t < static_cast<int>(plan.size()); ++t) {
    StepResult r = apply_step(cur, plan[t], t);
    if (!r.next) {
      report.violations.insert(report.violations.end(), r.violations.begin(),
                               r.violations.end());
      return report;
    }
    cur = std::move(*r.next);
  }
  report.valid = true;
  report.reaches_goal = cur == goal;
  return report;
}

Configuration apply_plan(Configuration c, const Plan& plan) {
  for (int t = 0; t < static_cast<int>(plan.size()); ++t) {
    StepResult r = apply_step(c, plan[t], t);
    if (!r.next) {
      const Violation& v = r.violations.front();
      std::string msg = "illegal step " + std::to_string(t) + ": " +
                        violation_name(v.kind) + " tiles";
      for (int tile : v.tiles) msg += " " + std::to_string(tile);
      throw std::logic_error(msg);
    }
    c = std::move(*r.next);
  }
  return c;
}

Step jump(Configuration& c, Cell from, Cell to) {
  if (!c.grid.contains(from) || !c.grid.contains(to))
    throw std::invalid_argument("jump endpoints out of bounds");
  if (c.occupied(from)) throw std::invalid_argument("jump origin not empty");
  if (from == to) throw std::invalid_argument("jump endpoints coincide");
  if (from.row != to.row && from.col != to.col)
    throw std::invalid_argument("jump endpoints not colinear");

  Direction toward_from;
  if (from.row == to.row)
    toward_from = from.col < to.col ? Direction::Left : Direction::Right;
  else
    toward_from = from.row < to.row ? Direction::Up : Direction::Down;

  Step step;
  Cell cur = to;
  while (cur != from) {
    int tile = c.tile_at(cur);
    if (tile == 0) throw std::invalid_argument("jump crosses an empty cell");
    step.push_back({tile, toward_from});
    cur = neighbor(cur, toward_from);
  }
  std::sort(step.begin(), step.end());
  for (const Move& m : step)
    c.tiles[m.tile - 1] = neighbor(c.tile(m.tile), m.dir);
  return step;
}

Plan r_shift(Configuration& c, Cell top_left, Cell bottom_right,
             bool clockwise) {
  if (top_left.row >= bottom_right.row || top_left.col >= bottom_right.col)
    throw std::invalid_argument("degenerate rectangle");
  Cell tr{top_left.row, bottom_right.col};
  Cell bl{bottom_right.row, top_left.col};
  // Corner order the escort travels: opposite to the tiles' rotation.
  std::vector<Cell> order = clockwise ? std::vector<Cell>{top_left, bl, bottom_right, tr}
                                      : std::vector<Cell>{top_left, tr, bottom_right, bl};
  int at = -1;
  for (int i = 0; i < 4; ++i) {
    if (!c.occupied(order[i])) {
      if (at >= 0) throw std::invalid_argument("two empty corners");
      at = i;
    }
  }
  if (at < 0) throw std::invalid_argument("no escort on a corner");

  Plan plan;
  for (int i = 0; i < 4; ++i) {
    Cell from = order[(at + i) % 4];
    Cell to = order[(at + i + 1) % 4];
    plan.push_back(jump(c, from, to));
  }
  return plan;
}

Plan reversed(const Plan& plan) {
  Plan out;
  out.reserve(plan.size());
  for (auto it = plan.rbegin(); it != plan.rend(); ++it) {
    Step s = *it;
    for (Move& m : s) m.dir = opposite(m.dir);
    std::sort(s.begin(), s.end());
    out.push_back(std::move(s));
  }
  return out;
}

Plan merge_parallel(const std::vector<Plan>& plans) {
  std::size_t makespan = 0;
  for (const Plan& p : plans) makespan = std::max(makespan, p.size());
  Plan out(makespan);
  for (const Plan& p : plans) {
    for (std::size_t t = 0; t < p.size(); ++t)
      out[t].insert(out[t].end(), p[t].begin(), p[t].end());
  }
  for (Step& s : out) {
    std::sort(s.begin(), s.end());
    for (std::size_t i = 1; i < s.size(); ++i) {
      if (s[i].tile == s[i - 1].tile)
        throw std::invalid_argument("merged plans share tile " +
                                    std::to_string(s[i].tile));
    }
  }
  return out;
}

void check_instance(const Instance& inst) {
  if (inst.grid.rows < 1 || inst.grid.cols < 1)
    throw std::invalid_argument("empty grid");
  if (inst.start.size() != inst.goal.size())
    throw std::invalid_argument("start and goal tile counts differ");
  if (static_cast<int>(inst.start.size()) > inst.grid.cells())
    throw std::invalid_argument("more tiles than cells");
  auto check_side = [&](const std::vector<Cell>& cells, const char* side) {
    std::vector<int> seen(inst.grid.cells(), 0);
    for (const Cell& c : cells) {
      if (!inst.grid.contains(c))
        throw std::invalid_argument(std::string(side) + " cell out of bounds");
      if (seen[inst.grid.index(c)]++)
        throw std::invalid_argument(std::string(side) + " repeats a cell");
    }
  };
  check_side(inst.start, "start");
  check_side(inst.goal, "goal");
}

}  // namespace gstp
