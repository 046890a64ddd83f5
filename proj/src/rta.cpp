#include "gstp/rta.hpp"

#include <algorithm>
#include <stdexcept>

namespace gstp {

namespace {

struct Edge {
  int item;      // row-major start index
  int goal_row;  // 0-based
  bool used = false;
};

}  // namespace

TableRouting route_table(const Grid& grid, const std::vector<Cell>& goal) {
  const int rows = grid.rows, cols = grid.cols, n = grid.cells();
  if (static_cast<int>(goal.size()) != n)
    throw std::invalid_argument("goal must cover the whole table");
  {
    std::vector<char> seen(n, 0);
    for (const Cell& c : goal) {
      if (!grid.contains(c))
        throw std::invalid_argument("goal cell out of bounds");
      if (seen[grid.index(c)]++)
        throw std::invalid_argument("goal repeats a cell");
    }
  }

  std::vector<Edge> edges(n);
  std::vector<std::vector<int>> adj(rows);
  for (int i = 0; i < n; ++i) {
    edges[i] = {i, goal[i].row - 1, false};
    adj[grid.cell(i).row - 1].push_back(i);
  }

  TableRouting routing{grid, goal, std::vector<int>(n, 0)};
  std::vector<int> match_edge(rows, -1);
  std::vector<char> visited(rows, 0);

  // Kuhn's algorithm against the unused edges; start rows are processed in
  // order and edges in item order, so the result is deterministic.
  auto augment = [&](auto&& self, int r) -> bool {
    for (int id : adj[r]) {
      if (edges[id].used) continue;
      int g = edges[id].goal_row;
      if (visited[g]) continue;
      visited[g] = 1;
      int prev = match_edge[g];
      if (prev < 0 || self(self, grid.cell(edges[prev].item).row - 1)) {
        match_edge[g] = id;
        return true;
      }
    }
    return false;
  };

  for (int round = 1; round <= cols; ++round) {
    std::fill(match_edge.begin(), match_edge.end(), -1);
    for (int r = 0; r < rows; ++r) {
      std::fill(visited.begin(), visited.end(), 0);
      if (!augment(augment, r))
        throw std::logic_error("regular multigraph failed to match");
    }
    for (int g = 0; g < rows; ++g) {
      Edge& e = edges[match_edge[g]];
      e.used = true;
      routing.staging[e.item] = round;
    }
  }
  return routing;
}

}  // namespace gstp
