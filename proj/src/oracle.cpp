#include "gstp/oracle.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace gstp::oracle {

namespace {

// Cell index deltas per direction; -1 marks off-grid.
struct Geometry {
  Grid grid;
  int shift(int cell, Direction d) const {
    Cell c = grid.cell(cell);
    Cell n = neighbor(c, d);
    return grid.contains(n) ? grid.index(n) : -1;
  }
};

std::vector<int> occupancy_of(const Grid& grid, const Placement& p) {
  std::vector<int> occ(grid.cells(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    int cell = static_cast<unsigned char>(p[i]);
    if (cell >= grid.cells()) throw std::invalid_argument("placement off grid");
    if (occ[cell]) throw std::invalid_argument("placement overlaps");
    occ[cell] = static_cast<int>(i) + 1;
  }
  return occ;
}

}  // namespace

Placement pack(const Configuration& c) {
  if (c.grid.cells() > 256)
    throw std::invalid_argument("board too large to pack");
  Placement p(c.tiles.size(), '\0');
  for (std::size_t i = 0; i < c.tiles.size(); ++i)
    p[i] = static_cast<char>(c.grid.index(c.tiles[i]));
  return p;
}

Configuration unpack(const Grid& grid, const Placement& p) {
  Configuration c{grid, {}};
  c.tiles.reserve(p.size());
  for (char b : p) c.tiles.push_back(grid.cell(static_cast<unsigned char>(b)));
  return c;
}

std::vector<std::pair<Step, Placement>> successors(const Grid& grid,
                                                   const Placement& p) {
  if (p.size() > 64)
    throw std::invalid_argument("too many tiles for the oracle");
  Geometry geo{grid};
  std::vector<int> occ = occupancy_of(grid, p);

  // One option = a train pulled toward an escort: the tiles at cells
  // escort+b, escort+2b, ... all move opposite(b), the first landing on the
  // escort. Options of distinct escorts combine when their tiles are
  // disjoint.
  struct Option {
    std::uint64_t mask;
    Step moves;
    Placement next;  // deltas applied to a copy
  };
  std::vector<std::vector<Option>> per_escort;
  for (int e = 0; e < grid.cells(); ++e) {
    if (occ[e]) continue;
    std::vector<Option> options;
    for (Direction pull : {Direction::Up, Direction::Down, Direction::Left,
                           Direction::Right}) {
      Direction move = opposite(pull);
      std::uint64_t mask = 0;
      Step moves;
      int cur = e;
      for (;;) {
        cur = geo.shift(cur, pull);
        if (cur < 0 || !occ[cur]) break;
        int tile = occ[cur];
        mask |= 1ull << (tile - 1);
        moves.push_back({tile, move});
        options.push_back({mask, moves, {}});
      }
    }
    per_escort.push_back(std::move(options));
  }

  std::vector<std::pair<Step, Placement>> out;
  // Depth-first product over escorts; the all-none branch is skipped.
  Step step;
  std::uint64_t used = 0;
  auto emit = [&]() {
    Step s = step;
    std::sort(s.begin(), s.end());
    Placement next = p;
    for (const Move& m : s) {
      int cell = static_cast<unsigned char>(next[m.tile - 1]);
      next[m.tile - 1] = static_cast<char>(geo.shift(cell, m.dir));
    }
    out.emplace_back(std::move(s), std::move(next));
  };
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == per_escort.size()) {
      if (!step.empty()) emit();
      return;
    }
    self(self, i + 1);  // this escort rests
    for (const Option& o : per_escort[i]) {
      if (o.mask & used) continue;
      used |= o.mask;
      step.insert(step.end(), o.moves.begin(), o.moves.end());
      self(self, i + 1);
      step.resize(step.size() - o.moves.size());
      used &= ~o.mask;
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<std::pair<Step, Placement>> successors_relaxed(
    const Grid& grid, const Placement& p) {
  if (grid.cells() > kRelaxedCellLimit)
    throw std::invalid_argument("relaxed successors limited to tiny boards");
  Configuration c = unpack(grid, p);
  const int n = c.tile_count();
  const Direction dirs[] = {Direction::Up, Direction::Down, Direction::Left,
                            Direction::Right};

  std::vector<std::pair<Step, Placement>> out;
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= 5;
  for (std::uint64_t code = 1; code < total; ++code) {
    std::uint64_t rest = code;
    Step step;
    for (int i = 0; i < n; ++i) {
      int choice = static_cast<int>(rest % 5);
      rest /= 5;
      if (choice) step.push_back({i + 1, dirs[choice - 1]});
    }
    if (step.empty()) continue;
    StepResult r = apply_step(c, step);
    bool legal = true;
    if (!r.next) {
      for (const Violation& v : r.violations) {
        if (v.kind != ViolationKind::CornerFollowing) legal = false;
      }
      if (!legal) continue;
      // Only corner-following stood in the way; apply by hand and insist the
      // result is still one tile per cell.
      Configuration next = c;
      for (const Move& m : step)
        next.tiles[m.tile - 1] = neighbor(c.tile(m.tile), m.dir);
      std::vector<int> seen(grid.cells(), 0);
      for (const Cell& cell : next.tiles) {
        if (seen[grid.index(cell)]++) legal = false;
      }
      if (!legal) continue;
      out.emplace_back(std::move(step), pack(next));
    } else {
      out.emplace_back(std::move(step), pack(*r.next));
    }
  }
  return out;
}

std::optional<int> Exploration::distance_to(const Configuration& goal) const {
  auto it = distance.find(pack(goal));
  if (it == distance.end()) return std::nullopt;
  return it->second;
}

Exploration explore(const Configuration& start, std::uint64_t state_cap,
                    bool relaxed) {
  Exploration ex{start.grid, {}};
  std::deque<Placement> frontier;
  ex.distance.emplace(pack(start), 0);
  frontier.push_back(pack(start));
  while (!frontier.empty()) {
    Placement cur = std::move(frontier.front());
    frontier.pop_front();
    int d = ex.distance.at(cur);
    auto next = relaxed ? successors_relaxed(start.grid, cur)
                        : successors(start.grid, cur);
    for (auto& [step, place] : next) {
      if (ex.distance.contains(place)) continue;
      if (ex.distance.size() >= state_cap)
        throw std::length_error("state cap exceeded");
      ex.distance.emplace(place, d + 1);
      frontier.push_back(std::move(place));
    }
  }
  return ex;
}

SearchResult optimal_makespan(const Instance& inst, long long step_cap,
                              std::uint64_t state_cap, bool relaxed) {
  check_instance(inst);
  Placement start = pack(inst.start_config());
  Placement goal = pack(inst.goal_config());
  if (start == goal) return {SearchStatus::Solved, 0};

  std::unordered_map<Placement, int> dist;
  std::deque<Placement> frontier;
  dist.emplace(start, 0);
  frontier.push_back(start);
  while (!frontier.empty()) {
    Placement cur = std::move(frontier.front());
    frontier.pop_front();
    int d = dist.at(cur);
    if (step_cap >= 0 && d >= step_cap) return {SearchStatus::CapExceeded, -1};
    auto next = relaxed ? successors_relaxed(inst.grid, cur)
                        : successors(inst.grid, cur);
    for (auto& [step, place] : next) {
      if (dist.contains(place)) continue;
      if (place == goal) return {SearchStatus::Solved, d + 1};
      if (dist.size() >= state_cap) return {SearchStatus::CapExceeded, -1};
      dist.emplace(place, d + 1);
      frontier.push_back(std::move(place));
    }
  }
  return {SearchStatus::Unreachable, -1};
}

std::optional<Plan> shortest_plan(const Instance& inst,
                                  std::uint64_t state_cap) {
  check_instance(inst);
  Placement start = pack(inst.start_config());
  Placement goal = pack(inst.goal_config());
  if (start == goal) return Plan{};

  struct From {
    Placement parent;
    Step step;
  };
  std::unordered_map<Placement, From> from;
  std::deque<Placement> frontier;
  from.emplace(start, From{});
  frontier.push_back(start);
  while (!frontier.empty()) {
    Placement cur = std::move(frontier.front());
    frontier.pop_front();
    for (auto& [step, place] : successors(inst.grid, cur)) {
      if (from.contains(place)) continue;
      if (from.size() >= state_cap)
        throw std::length_error("state cap exceeded");
      from.emplace(place, From{cur, step});
      if (place == goal) {
        Plan plan;
        Placement at = place;
        while (at != start) {
          From& f = from.at(at);
          plan.push_back(f.step);
          at = f.parent;
        }
        std::reverse(plan.begin(), plan.end());
        return plan;
      }
      frontier.push_back(std::move(place));
    }
  }
  return std::nullopt;
}

}  // namespace gstp::oracle
