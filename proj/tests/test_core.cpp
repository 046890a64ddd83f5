#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "gstp/core.hpp"
#include "gstp/rng.hpp"

using namespace gstp;

namespace {

Configuration config(int rows, int cols, std::vector<Cell> tiles) {
  return {{rows, cols}, std::move(tiles)};
}

}  // namespace

TEST_CASE("grid indexing round-trips") {
  Grid g{3, 5};
  for (int i = 0; i < g.cells(); ++i) CHECK(g.index(g.cell(i)) == i);
  CHECK(g.index({1, 1}) == 0);
  CHECK(g.index({3, 5}) == 14);
  CHECK(!g.contains({0, 1}));
  CHECK(!g.contains({1, 6}));
}

TEST_CASE("direction helpers") {
  CHECK(neighbor({2, 2}, Direction::Up) == Cell{1, 2});
  CHECK(neighbor({2, 2}, Direction::Down) == Cell{3, 2});
  CHECK(neighbor({2, 2}, Direction::Left) == Cell{2, 1});
  CHECK(neighbor({2, 2}, Direction::Right) == Cell{2, 3});
  for (Direction d : {Direction::Up, Direction::Down, Direction::Left,
                      Direction::Right}) {
    CHECK(opposite(opposite(d)) == d);
    CHECK(!perpendicular(d, d));
    CHECK(!perpendicular(d, opposite(d)));
    CHECK(perpendicular(d, d == Direction::Up || d == Direction::Down
                               ? Direction::Left
                               : Direction::Up));
    CHECK(direction_from_char(direction_char(d)) == d);
  }
  CHECK(!direction_from_char('X'));
}

TEST_CASE("perpendicular movers through a shared corner are rejected") {
  // Tile 1 moves right into the cell tile 2 is leaving downward: the follower
  // would round a corner, which a step may not do.
  Configuration c = config(2, 2, {{1, 1}, {1, 2}});
  StepResult r = apply_step(c, {{1, Direction::Right}, {2, Direction::Down}});
  CHECK(!r.next);
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0] ==
        Violation{0, ViolationKind::CornerFollowing, {1, 2}});
}

TEST_CASE("adjacent tiles cannot swap") {
  Configuration c = config(1, 3, {{1, 1}, {1, 2}});
  StepResult r = apply_step(c, {{1, Direction::Right}, {2, Direction::Left}});
  CHECK(!r.next);
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0] ==
        Violation{0, ViolationKind::HeadOnCollision, {1, 2}});
}

TEST_CASE("remaining violation kinds") {
  Configuration c = config(2, 2, {{1, 1}, {1, 2}});

  StepResult oob = apply_step(c, {{1, Direction::Up}}, 7);
  REQUIRE(oob.violations.size() == 1);
  CHECK(oob.violations[0] == Violation{7, ViolationKind::OutOfBounds, {1}});

  StepResult occ = apply_step(c, {{1, Direction::Right}});
  REQUIRE(occ.violations.size() == 1);
  CHECK(occ.violations[0] == Violation{0, ViolationKind::TargetOccupied, {1, 2}});

  // Both movers head for the empty cell (2,1).
  Configuration c2 = config(2, 2, {{1, 1}, {2, 2}});
  StepResult meet = apply_step(c2, {{1, Direction::Down}, {2, Direction::Left}});
  REQUIRE(meet.violations.size() == 1);
  CHECK(meet.violations[0] == Violation{0, ViolationKind::MeetCollision, {1, 2}});
}

TEST_CASE("violations are collected exhaustively, not first-found") {
  // 1 leaves the grid, 2 rams stationary 3, and 4+5 meet in (2,3).
  Configuration c =
      config(2, 4, {{1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 4}});
  Step s{{1, Direction::Up},
         {2, Direction::Right},
         {4, Direction::Right},
         {5, Direction::Left}};
  StepResult r = apply_step(c, s);
  REQUIRE(r.violations.size() == 3);
  CHECK(r.violations[0] == Violation{0, ViolationKind::OutOfBounds, {1}});
  CHECK(r.violations[1] == Violation{0, ViolationKind::MeetCollision, {4, 5}});
  CHECK(r.violations[2] == Violation{0, ViolationKind::TargetOccupied, {2, 3}});
}

TEST_CASE("malformed steps throw") {
  Configuration c = config(2, 2, {{1, 1}});
  CHECK_THROWS_AS(apply_step(c, {{2, Direction::Up}}), std::invalid_argument);
  CHECK_THROWS_AS(apply_step(c, {{1, Direction::Up}, {1, Direction::Down}}),
                  std::invalid_argument);
}

TEST_CASE("enumerated legality on a 2x2 with two top tiles") {
  Configuration c = config(2, 2, {{1, 1}, {1, 2}});
  const Direction dirs[] = {Direction::Up, Direction::Down, Direction::Left,
                            Direction::Right};
  int legal = 0;
  // All 24 non-empty steps over two tiles with an optional move each.
  for (int a = 0; a < 5; ++a) {
    for (int b = 0; b < 5; ++b) {
      if (a == 0 && b == 0) continue;
      Step s;
      if (a > 0) s.push_back({1, dirs[a - 1]});
      if (b > 0) s.push_back({2, dirs[b - 1]});
      if (apply_step(c, s).next) ++legal;
    }
  }
  // Exactly: {1 down}, {2 down}, {both down}.
  CHECK(legal == 3);
  CHECK(apply_step(c, {}).next.has_value());  // the empty step is legal
}

TEST_CASE("a train follows its head into the vacated cells") {
  Configuration c = config(1, 4, {{1, 1}, {1, 2}, {1, 3}});
  Step s{{1, Direction::Right}, {2, Direction::Right}, {3, Direction::Right}};
  StepResult r = apply_step(c, s);
  REQUIRE(r.next);
  CHECK(r.next->tiles == std::vector<Cell>{{1, 2}, {1, 3}, {1, 4}});
  auto ts = trains(c, s);
  REQUIRE(ts.size() == 1);
  CHECK(ts[0] == std::vector<int>{3, 2, 1});
}

TEST_CASE("disjoint trains move in one step") {
  Configuration c = config(2, 3, {{1, 1}, {1, 2}, {2, 2}, {2, 3}});
  Step s{{1, Direction::Right},
         {2, Direction::Right},
         {3, Direction::Left},
         {4, Direction::Left}};
  StepResult r = apply_step(c, s);
  REQUIRE(r.next);
  auto ts = trains(c, s);
  REQUIRE(ts.size() == 2);
  CHECK(ts[0] == std::vector<int>{2, 1});
  CHECK(ts[1] == std::vector<int>{3, 4});
}

TEST_CASE("jump slides a block one cell and parks the escort at the far end") {
  Configuration c = config(1, 5, {{1, 2}, {1, 3}, {1, 4}});
  Step s = jump(c, {1, 1}, {1, 4});
  CHECK(s.size() == 3);
  CHECK(c.tiles == std::vector<Cell>{{1, 1}, {1, 2}, {1, 3}});
  CHECK(c.tile_at({1, 4}) == 0);

  // A length-1 jump is just a single-tile move.
  Configuration d = config(2, 2, {{1, 1}});
  Step s2 = jump(d, {1, 2}, {1, 1});
  CHECK(s2 == Step{{1, Direction::Right}});
  CHECK(d.tile(1) == Cell{1, 2});
}

TEST_CASE("jump preconditions") {
  Configuration c = config(1, 5, {{1, 2}, {1, 4}});
  CHECK_THROWS_AS(jump(c, {1, 1}, {1, 4}), std::invalid_argument);  // gap at 3
  CHECK_THROWS_AS(jump(c, {1, 2}, {1, 4}), std::invalid_argument);  // origin tiled
  CHECK_THROWS_AS(jump(c, {1, 1}, {1, 1}), std::invalid_argument);
  Configuration d = config(3, 3, {{1, 2}, {2, 2}});
  CHECK_THROWS_AS(jump(d, {1, 1}, {2, 2}), std::invalid_argument);  // diagonal
}

TEST_CASE("r-shift rotates the ring occupants by one seat") {
  // Escort on (2,2); clockwise carries 1 to the right, 3 to the top.
  Configuration c = config(2, 2, {{1, 1}, {1, 2}, {2, 1}});
  Configuration cw = c;
  Plan p = r_shift(cw, {1, 1}, {2, 2}, true);
  CHECK(p.size() == 4);
  for (const Step& s : p) CHECK(s.size() == 1);
  CHECK(cw.tiles == std::vector<Cell>{{1, 2}, {2, 1}, {1, 1}});
  CHECK(cw.tile_at({2, 2}) == 0);  // escort back home

  Configuration ccw = c;
  r_shift(ccw, {1, 1}, {2, 2}, false);
  CHECK(ccw.tiles == std::vector<Cell>{{2, 1}, {1, 1}, {1, 2}});

  // One rotation each way is the identity.
  Configuration back = cw;
  r_shift(back, {1, 1}, {2, 2}, false);
  CHECK(back == c);
}

TEST_CASE("r-shift on a wider ring moves interior edge tiles too") {
  // 2x3 full ring: five tiles, escort at (2,3).
  Configuration c = config(2, 3, {{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}});
  Plan p = r_shift(c, {1, 1}, {2, 3}, true);
  CHECK(p.size() == 4);
  // Every tile advances one occupied seat clockwise; tile 3 hops the
  // escort's seat and so travels two cells.
  Configuration expect =
      config(2, 3, {{1, 2}, {1, 3}, {2, 2}, {1, 1}, {2, 1}});
  CHECK(c.tiles == expect.tiles);
  CHECK(c.tile_at({2, 3}) == 0);
}

TEST_CASE("r-shift requires an escort corner") {
  Configuration full = config(2, 2, {{1, 1}, {1, 2}, {2, 1}, {2, 2}});
  CHECK_THROWS_AS(r_shift(full, {1, 1}, {2, 2}, true), std::invalid_argument);
  Configuration two = config(2, 2, {{1, 1}, {1, 2}});
  CHECK_THROWS_AS(r_shift(two, {1, 1}, {2, 2}, true), std::invalid_argument);
}

TEST_CASE("reversing a plan undoes it") {
  Rng rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    int rows = rng.range(1, 4), cols = rng.range(2, 5);
    Grid g{rows, cols};
    int k = rng.range(1, std::max(1, g.cells() / 3));
    std::vector<int> cells(g.cells());
    for (int i = 0; i < g.cells(); ++i) cells[i] = i;
    rng.shuffle(cells);
    std::vector<Cell> tiles;
    for (int i = 0; i < g.cells() - k; ++i) tiles.push_back(g.cell(cells[i]));
    Configuration start{g, tiles};

    // Random walk of jumps.
    Configuration cur = start;
    Plan plan;
    for (int t = 0; t < 30; ++t) {
      std::vector<Cell> es = cur.escorts();
      Cell from = es[rng.below(es.size())];
      std::vector<Cell> targets;
      for (Direction d : {Direction::Up, Direction::Down, Direction::Left,
                          Direction::Right}) {
        Cell to = from;
        for (;;) {
          to = neighbor(to, d);
          if (!cur.grid.contains(to) || !cur.occupied(to)) break;
          targets.push_back(to);
        }
      }
      if (targets.empty()) continue;
      plan.push_back(jump(cur, from, targets[rng.below(targets.size())]));
    }

    PlanReport fwd = validate_plan(start, cur, plan);
    CHECK(fwd.valid);
    CHECK(fwd.reaches_goal);
    PlanReport bwd = validate_plan(cur, start, reversed(plan));
    CHECK(bwd.valid);
    CHECK(bwd.reaches_goal);
  }
}

TEST_CASE("validate_plan flags the failing step and stops") {
  Configuration start = config(1, 3, {{1, 1}, {1, 2}});
  Configuration goal = config(1, 3, {{1, 2}, {1, 3}});
  Plan good{{{2, Direction::Right}}, {{1, Direction::Right}}};
  PlanReport ok = validate_plan(start, goal, good);
  CHECK(ok.valid);
  CHECK(ok.reaches_goal);
  CHECK(ok.makespan == 2);

  // After step 0 the gap is at (1,2); both tiles then dive for it.
  Plan bad{{{2, Direction::Right}}, {{2, Direction::Left}, {1, Direction::Right}}};
  PlanReport r = validate_plan(start, goal, bad);
  CHECK(!r.valid);
  CHECK(!r.reaches_goal);
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0].time == 1);
  CHECK(r.violations[0].kind == ViolationKind::MeetCollision);

  Plan wrong{{{2, Direction::Right}}};
  PlanReport w = validate_plan(start, goal, wrong);
  CHECK(w.valid);
  CHECK(!w.reaches_goal);
}

TEST_CASE("apply_plan throws on planner bugs") {
  Configuration start = config(1, 3, {{1, 1}, {1, 2}});
  CHECK_THROWS_AS(apply_plan(start, {{{1, Direction::Right}}}),
                  std::logic_error);
  Configuration end = apply_plan(start, {{{2, Direction::Right}}});
  CHECK(end.tile(2) == Cell{1, 3});
}

TEST_CASE("merge_parallel pads and rejects overlap") {
  Plan a{{{1, Direction::Right}}, {{1, Direction::Right}}};
  Plan b{{{2, Direction::Left}}};
  Plan m = merge_parallel({a, b});
  REQUIRE(m.size() == 2);
  CHECK(m[0].size() == 2);
  CHECK(m[1].size() == 1);
  CHECK_THROWS_AS(merge_parallel({a, a}), std::invalid_argument);
}

TEST_CASE("instance validation") {
  Instance ok{{2, 2}, {{1, 1}, {2, 2}}, {{2, 1}, {1, 2}}};
  CHECK_NOTHROW(check_instance(ok));
  Instance dup{{2, 2}, {{1, 1}, {1, 1}}, {{2, 1}, {1, 2}}};
  CHECK_THROWS_AS(check_instance(dup), std::invalid_argument);
  Instance oob{{2, 2}, {{1, 1}, {3, 1}}, {{2, 1}, {1, 2}}};
  CHECK_THROWS_AS(check_instance(oob), std::invalid_argument);
  Instance mismatch{{2, 2}, {{1, 1}}, {{2, 1}, {1, 2}}};
  CHECK_THROWS_AS(check_instance(mismatch), std::invalid_argument);
}

TEST_CASE("escorts come back in row-major order") {
  Configuration c = config(2, 3, {{1, 2}, {2, 1}, {2, 3}});
  CHECK(c.escorts() == std::vector<Cell>{{1, 1}, {1, 3}, {2, 2}});
  CHECK(c.escort_count() == 3);
}
