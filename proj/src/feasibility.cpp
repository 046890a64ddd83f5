#include "gstp/feasibility.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gstp {

namespace {

// Tile ids in reading order along a single-line board.
std::vector<int> line_order(const Grid& grid, const std::vector<Cell>& tiles) {
  std::vector<int> ids(tiles.size());
  std::iota(ids.begin(), ids.end(), 1);
  std::sort(ids.begin(), ids.end(), [&](int a, int b) {
    return grid.index(tiles[a - 1]) < grid.index(tiles[b - 1]);
  });
  return ids;
}

// Tile ids clockwise around the 2x2 ring, gap omitted.
std::vector<int> ring_word(const Configuration& c) {
  std::vector<int> word;
  for (Cell cell : {Cell{1, 1}, Cell{1, 2}, Cell{2, 2}, Cell{2, 1}}) {
    if (int t = c.tile_at(cell)) word.push_back(t);
  }
  return word;
}

bool cyclic_equal(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return false;
  const std::size_t n = a.size();
  for (std::size_t shift = 0; shift < n; ++shift) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) ok = a[i] == b[(i + shift) % n];
    if (ok) return true;
  }
  return n == 0;
}

}  // namespace

bool feasible(const Instance& inst) {
  check_instance(inst);
  const Grid& g = inst.grid;
  const int k = inst.escort_count();

  if (std::min(g.rows, g.cols) == 1)
    return line_order(g, inst.start) == line_order(g, inst.goal);
  if (k == 0) return inst.start == inst.goal;
  if (k >= 2) return true;

  if (g.rows == 2 && g.cols == 2)
    return cyclic_equal(ring_word(inst.start_config()),
                        ring_word(inst.goal_config()));

  // One escort on a bigger board: permutation parity over all cells (escort
  // as pseudo-tile) must match the escort displacement parity.
  std::vector<int> perm(g.cells(), -1);
  for (int i = 0; i < inst.tile_count(); ++i)
    perm[g.index(inst.start[i])] = g.index(inst.goal[i]);
  Cell escort_start, escort_goal;
  {
    Configuration s = inst.start_config(), t = inst.goal_config();
    escort_start = s.escorts().front();
    escort_goal = t.escorts().front();
  }
  perm[g.index(escort_start)] = g.index(escort_goal);

  int cycles = 0;
  std::vector<char> seen(g.cells(), 0);
  for (int i = 0; i < g.cells(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (int j = i; !seen[j]; j = perm[j]) seen[j] = 1;
  }
  int perm_parity = (g.cells() - cycles) % 2;
  return perm_parity == manhattan(escort_start, escort_goal) % 2;
}

long long lower_bound(const Instance& inst) {
  check_instance(inst);
  const int k = inst.escort_count();
  if (k < 1) throw std::invalid_argument("lower_bound needs an escort");
  long long total = 0;
  for (int i = 0; i < inst.tile_count(); ++i)
    total += manhattan(inst.start[i], inst.goal[i]);
  long long per_step =
      static_cast<long long>(k) * std::max(inst.grid.rows, inst.grid.cols);
  return (total + per_step - 1) / per_step;
}

}  // namespace gstp
