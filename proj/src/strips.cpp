#include "gstp/strips.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "board.hpp"
#include "gstp/feasibility.hpp"
#include "gstp/oracle.hpp"

// Both strip solvers work the same way: sweep the strip once with a beat loop
// that collects the tiles of the next target arc into one contiguous
// "caravan" on the top row, ordered as the arc will read, then rotate the
// whole window ring until the caravan lands on its target cells. Rotations
// move every tile one cyclic position, so a placed caravan arrives intact and
// everything else stays inside the surviving window. The window then shrinks
// and the process repeats; small windows are finished by exhaustive search.
// The row-permute entry points resolve their wildcards into a concrete goal
// and run the matching solver.

namespace gstp {
namespace {

bool g_trace = false;  // temporary debugging aid

constexpr int kMaxArcAttempts = 24;

int positive_mod(int x, int mod) { return ((x % mod) + mod) % mod; }

// Clockwise boundary coordinates of the 2 x w window: (1,1) is 0, (1,w) is
// w-1, (2,w) is w, (2,1) is 2w-1.
Cell ring_cell(int r, int w) {
  return r < w ? Cell{1, r + 1} : Cell{2, 2 * w - r};
}

std::vector<Cell> window_escorts(const Board& bd, int w) {
  std::vector<Cell> out;
  for (int row = 1; row <= 2; ++row)
    for (int col = 1; col <= w; ++col)
      if (bd.empty_at({row, col})) out.push_back({row, col});
  return out;
}

// Walks the only escort of the window to (1,1) in at most two jumps.
void escort_to_corner(Board& bd, int w) {
  Cell e = window_escorts(bd, w).front();
  if (e.row == 2) {
    if (e.col > 1) bd.jump({2, e.col}, {2, 1});
    bd.jump({2, 1}, {1, 1});
  } else if (e.col > 1) {
    bd.jump({1, e.col}, {1, 1});
  }
}

// Packs the two escorts of the window onto (1,1) and (1,2).
void escorts_to_top_pair(Board& bd, int w) {
  for (int guard = 0; guard < 8; ++guard) {
    auto es = window_escorts(bd, w);
    if (es[0] == Cell{1, 1} && es[1] == Cell{1, 2}) return;
    bool lifted = false;
    for (Cell e : es) {
      if (e.row != 2) continue;
      if (!bd.empty_at({1, e.col})) {
        bd.jump({2, e.col}, {1, e.col});
      } else {
        bd.jump({2, e.col}, {2, e.col == 1 ? 2 : e.col - 1});
      }
      lifted = true;
      break;
    }
    if (lifted) continue;
    if (es[0].col != 1)
      bd.jump({1, es[0].col}, {1, 1});
    else
      bd.jump({1, es[1].col}, {1, 2});
  }
  throw std::logic_error("escort packing failed");
}

// Decomposes a legal step into simultaneous escort pulls so that a plan found
// by search can replay through a Board.
std::vector<std::pair<Cell, Cell>> step_to_pulls(const Configuration& c,
                                                 const Step& step) {
  std::vector<std::pair<Cell, Cell>> pulls;
  for (Cell e : c.escorts()) {
    const Move* head = nullptr;
    for (const Move& mv : step)
      if (neighbor(c.tile(mv.tile), mv.dir) == e) {
        head = &mv;
        break;
      }
    if (!head) continue;
    Cell tail = c.tile(head->tile);
    for (;;) {
      Cell prev = neighbor(tail, opposite(head->dir));
      if (!c.grid.contains(prev)) break;
      int t = c.tile_at(prev);
      bool joins = false;
      for (const Move& mv : step)
        if (mv.tile == t && mv.dir == head->dir) {
          joins = true;
          break;
        }
      if (!t || !joins) break;
      tail = prev;
    }
    pulls.push_back({e, tail});
  }
  return pulls;
}

// The left 2 x w columns as a stand-alone configuration; to_full maps its
// tile ids (1-based) back to board ids.
Configuration window_config(const Configuration& full, int w,
                            std::vector<int>& to_full) {
  std::vector<std::pair<int, Cell>> present;
  for (int row = 1; row <= 2; ++row)
    for (int col = 1; col <= w; ++col)
      if (int t = full.tile_at({row, col})) present.push_back({t, {row, col}});
  std::sort(present.begin(), present.end());
  Configuration sub{Grid{2, w}, {}};
  to_full.clear();
  for (auto& [t, c] : present) {
    sub.tiles.push_back(c);
    to_full.push_back(t);
  }
  return sub;
}

void replay_window_plan(Board& bd, Configuration sub, const Plan& plan) {
  for (const Step& step : plan) {
    if (step.empty()) {
      bd.empty_step();
      continue;
    }
    bd.pull(step_to_pulls(sub, step));
    StepResult r = apply_step(sub, step);
    if (!r.next) throw std::logic_error("window replay diverged");
    sub = std::move(*r.next);
  }
}

// Finishes the window exactly against the same window of `goal`.
void window_exact_finish(Board& bd, int w, const Configuration& goal) {
  std::vector<int> to_full;
  Configuration sub = window_config(bd.config(), w, to_full);
  Instance inst{Grid{2, w}, sub.tiles, {}};
  inst.goal.reserve(to_full.size());
  for (int t : to_full) {
    Cell g = goal.tile(t);
    if (g.col > w) throw std::logic_error("window tile belongs elsewhere");
    inst.goal.push_back(g);
  }
  if (inst.start == inst.goal) return;
  auto plan = oracle::shortest_plan(inst);
  if (!plan) throw std::logic_error("window endgame unreachable");
  replay_window_plan(bd, sub, *plan);
}

// Retry signals for the caravan collector. A Strand means a wanted tile fell
// behind the sweep; flipping the parity decision of that visit on the next
// attempt reroutes it. CapacityOverflow means the arc is too long for the
// working room and the caller should try a shorter one.
struct CapacityOverflow {};
struct Strand {
  int tile = 0;
  int visit = 0;
};

using FlipKey = std::pair<int, int>;  // (tile, visit)

// Beat loop gathering the tiles of `seq` into a contiguous caravan on the top
// row, ordered exactly as `seq` (0 entries accept any unreserved tile). The
// escort sweeps left to right: each beat slides the caravan one column right,
// raises the tile behind it (boarding it when it extends the order, otherwise
// piling it), advances the bottom stream one column left underneath, and
// drops one fresh tile behind the mouth. Riders meet their caravan slot only
// on the right parity, which is steered at the mouth with small rotations.
class Collector {
 public:
  Collector(Board& bd, int w, int escorts, const std::vector<int>& seq,
            const std::map<FlipKey, char>& flips)
      : bd_(bd),
        w_(w),
        two_(escorts == 2),
        seq_(seq),
        flips_(flips),
        len_(static_cast<int>(seq.size())),
        claimed_(seq.size(), 0) {
    for (int i = 0; i < len_; ++i)
      if (seq_[i] && !index_.emplace(seq_[i], i).second)
        throw std::invalid_argument("duplicate tile in target arc");
  }

  void run() {
    base_ = bd_.steps();
    while (done_ < len_) {
      if (g_trace) dump();
      if (++rounds_ > 4000 + 400L * w_ || bd_.steps() - base_ > 60 * w_ + 200) {
        if (g_trace) std::fprintf(stderr, "BUDGET rounds=%ld steps=%d\n", rounds_, bd_.steps() - base_);
        throw CapacityOverflow{};
      }
      const int m = mouth();
      if (m + 1 <= w_) {
        if (entry(m + 1)) { if (g_trace) std::fprintf(stderr, "  -> entry(m+1)\n"); continue; }
        if (entry(m)) { if (g_trace) std::fprintf(stderr, "  -> entry(m)\n"); continue; }
        if (try_append()) { if (g_trace) std::fprintf(stderr, "  -> append\n"); continue; }
        if (try_insert()) { if (g_trace) std::fprintf(stderr, "  -> insert\n"); continue; }
        beat();
        if (g_trace) std::fprintf(stderr, "  -> beat\n");
        continue;
      }
      if (try_short_append()) { if (g_trace) std::fprintf(stderr, "  -> short_append\n"); continue; }
      stall();
      if (g_trace) std::fprintf(stderr, "  -> stall\n");
    }
  }

  void dump() const {
    std::fprintf(stderr, "[a=%d len=%d done=%d mouth=%d s=%d steps=%d]\n", a_,
                 caravan_len(), done_, mouth(), s_, bd_.steps() - base_);
    for (int r = 1; r <= 2; ++r) {
      for (int c = 1; c <= w_; ++c)
        std::fprintf(stderr, "%3d", bd_.tile_at({r, c}));
      std::fprintf(stderr, "\n");
    }
  }

  int head() const { return a_; }
  int mouth() const { return a_ + caravan_len(); }
  int slot_gap() const { return s_; }
  int caravan_len() const { return static_cast<int>(members_.size()); }
  bool parked_low() const { return parked_low_; }

 private:
  int bot(int col) const { return bd_.tile_at({2, col}); }
  bool pending(int t) const {
    auto it = index_.find(t);
    return it != index_.end() && !claimed_[it->second];
  }
  bool free_junk(int t) const { return t != 0 && index_.find(t) == index_.end(); }
  int rank_of(int pos) const {
    return static_cast<int>(
        std::lower_bound(members_.begin(), members_.end(), pos) -
        members_.begin());
  }
  int flex_below(int bound) const {
    for (int i = std::min(bound, len_) - 1; i >= 0; --i)
      if (!seq_[i] && !claimed_[i]) return i;
    return -1;
  }
  int flex_above(int bound) const {
    for (int i = bound + 1; i < len_; ++i)
      if (!seq_[i] && !claimed_[i]) return i;
    return -1;
  }
  void surfaced(int t) {
    if (t) seen_.erase(t);
  }
  void claim_front(int pos) {
    members_.insert(members_.begin(), pos);
    claimed_[pos] = 1;
    ++done_;
  }
  void claim_back(int pos) {
    members_.push_back(pos);
    claimed_[pos] = 1;
    ++done_;
  }

  // First sighting of a specific rider near the mouth decides its parity: it
  // meets its slot only if its column offset to the slot is even, and the
  // mouth rotation flips that. Misjudged visits come back as Strands and are
  // overridden through `flips_` on the retry.
  bool entry(int x) {
    int t = bot(x);
    if (!t || seen_.count(t)) return false;
    seen_.insert(t);
    if (!pending(t)) return false;
    int visit = ++visits_[t];
    int r = rank_of(index_.at(t));
    bool fix = (x - a_ - r) % 2 != 0;
    auto it = flips_.find({t, visit});
    if (it != flips_.end() && it->second) fix = !fix;
    if (!fix) return false;
    if (bot(mouth()) == 0) return false;  // gap under the mouth: cannot steer
    if (x == mouth() + 1) {
      nudge();
    } else {
      nudge();
      nudge();
    }
    return true;
  }

  // Four jumps rotating the 2x2 block behind the mouth: the tile under the
  // mouth surfaces ahead, the one behind it advances a column, and one top
  // tile drops early. Advancing a bottom tile without a beat flips its
  // parity.
  void nudge() {
    const int m = mouth();
    surfaced(bot(m));
    bd_.jump({1, m}, {2, m});
    bd_.jump({2, m}, {2, m + 1});
    bd_.jump({2, m + 1}, {1, m + 1});
    bd_.jump({1, m + 1}, {1, m});
  }

  // Dip-slide-rise: the tile under the mouth surfaces as the caravan tail and
  // the escort re-emerges one column further right.
  void append_steps(int m) {
    surfaced(bot(m));
    bd_.jump({1, m}, {2, m});
    bd_.jump({2, m}, {2, m + 1});
    bd_.jump({2, m + 1}, {1, m + 1});
  }

  bool try_append() {
    const int m = mouth();
    int t = bot(m);
    if (!t) return false;
    if (pending(t)) {
      int pos = index_.at(t);
      if (members_.empty() || pos > members_.back()) {
        append_steps(m);
        claim_back(pos);
        return true;
      }
      return false;
    }
    if (free_junk(t)) {
      int f = flex_above(members_.empty() ? -1 : members_.back());
      if (f >= 0) {
        append_steps(m);
        claim_back(f);
        return true;
      }
    }
    return false;
  }

  // A rider standing exactly on its order gap enters mid-caravan: open the
  // gap above it, dip it in, close the stream underneath.
  bool try_insert() {
    const int m = mouth();
    for (int x = two_ ? a_ : a_ + 1; x < m; ++x) {
      int t = bot(x);
      if (!t) continue;
      int pos = -1;
      if (pending(t)) {
        pos = index_.at(t);
        if (a_ + rank_of(pos) != x) continue;
      } else if (free_junk(t)) {
        int r = x - a_;
        for (int f = 0; f < len_ && pos < 0; ++f)
          if (!seq_[f] && !claimed_[f] && rank_of(f) == r) pos = f;
        if (pos < 0) continue;
      } else {
        continue;
      }
      surfaced(t);
      bd_.jump({1, m}, {1, x});
      bd_.jump({1, x}, {2, x});
      bd_.jump({2, x}, {2, m + 1});
      bd_.jump({2, m + 1}, {1, m + 1});
      members_.insert(std::lower_bound(members_.begin(), members_.end(), pos),
                      pos);
      claimed_[pos] = 1;
      ++done_;
      return true;
    }
    return false;
  }

  void beat() { two_ ? beat2() : beat1(); }

  void beat1() {
    const int m = mouth();
    const int s = a_;
    if (caravan_len() > 0) bd_.jump({1, m}, {1, a_});
    int x = bot(s);
    bd_.jump({1, s}, {2, s});
    surfaced(x);
    take_or_pile(x);
    bd_.jump({2, s}, {2, m + 1});
    bd_.jump({2, m + 1}, {1, m + 1});
    scan_behind();
  }

  // Two escorts pipeline the same beat into two steps: both slides run in
  // parallel, then the raise and the drop do.
  void beat2() {
    const int m = mouth();
    std::vector<std::pair<Cell, Cell>> slides;
    if (caravan_len() > 0) slides.push_back({{1, m}, {1, a_}});
    slides.push_back({{2, s_}, {2, m + 1}});
    bd_.pull(slides);
    int x = bd_.tile_at({2, a_});
    bd_.pull({{{1, a_}, {2, a_}}, {{2, m + 1}, {1, m + 1}}});
    surfaced(x);
    s_ = a_;  // the raise leaves the bottom gap under the old head column
    take_or_pile(x);
    scan_behind();
  }

  void take_or_pile(int x) {
    if (pending(x)) {
      int pos = index_.at(x);
      if (members_.empty() || pos < members_.front()) {
        claim_front(pos);
        return;
      }
      throw Strand{x, visits_[x]};
    }
    int f = flex_below(members_.empty() ? len_ : members_.front());
    if (f >= 0) {
      claim_front(f);
      return;
    }
    ++a_;
    if (a_ - 1 + len_ > w_ - 1) throw CapacityOverflow{};
  }

  // Wanted tiles behind the sweep can never rejoin it.
  void scan_behind() {
    for (int x = 1; x < a_; ++x) {
      int t = bot(x);
      if (t && pending(t)) throw Strand{t, visits_[t]};
    }
  }

  // At the wall the last rider may board with a bare dip, parking the escort
  // on the bottom row.
  bool try_short_append() {
    if (done_ != len_ - 1 || mouth() != w_) return false;
    int u = 0;
    while (claimed_[u]) ++u;
    if (!members_.empty() && u < members_.back()) return false;
    int t = bot(w_);
    if (!t) return false;
    if (seq_[u] ? t != seq_[u] : !free_junk(t)) return false;
    surfaced(t);
    bd_.jump({1, w_}, {2, w_});
    claim_back(u);
    parked_low_ = true;
    return true;
  }

  // One escort can back the whole window up a couple of columns to reopen
  // room at the wall; with two escorts a shorter arc is cheaper.
  void stall() {
    if (two_ || ++stalls_ > w_ || a_ < 2) throw CapacityOverflow{};
    int s = std::min(2, a_ - 1);
    for (int i = 0; i < s; ++i) {
      surfaced(bot(w_));
      bd_.rotate({1, 1}, {2, w_}, false);
    }
    a_ -= s;
    if (mouth() < w_) bd_.jump({1, w_}, {1, mouth()});
  }

  Board& bd_;
  const int w_;
  const bool two_;
  const std::vector<int>& seq_;
  const std::map<FlipKey, char>& flips_;
  const int len_;
  std::vector<char> claimed_;
  std::map<int, int> index_;  // tile -> position in seq_
  std::vector<int> members_;  // claimed positions, ascending left to right
  int a_ = 1;  // caravan head column
  int s_ = 1;  // bottom gap column (two escorts)
  int done_ = 0;
  std::set<int> seen_;
  std::map<int, int> visits_;
  int stalls_ = 0;
  long rounds_ = 0;
  int base_ = 0;
  bool parked_low_ = false;
};

// Collects `seq` and rotates the window ring so the block covers the
// clockwise arc starting at ring position `ring_target`. Leaves the escort at
// (2,1).
void place_arc_k1(Board& bd, int w, const std::vector<int>& seq,
                  int ring_target) {
  const int len = static_cast<int>(seq.size());
  if (len < 1 || len > w - 1) throw CapacityOverflow{};
  for (int t : seq)
    if (t && bd.tile(t).col > w)
      throw std::logic_error("target tile outside the window");
  std::map<FlipKey, char> flips;
  const Configuration snap = bd.config();
  const int base = bd.steps();
  for (int attempt = 0; attempt < kMaxArcAttempts; ++attempt) {
    try {
      escort_to_corner(bd, w);
      Collector col(bd, w, 1, seq, flips);
      col.run();
      if (col.parked_low()) {
        if (w > 1) bd.jump({2, w}, {2, 1});
      } else {
        int m = col.mouth();
        bd.jump({1, m}, {2, m});
        if (m > 1) bd.jump({2, m}, {2, 1});
      }
      // With the gap at (2,1), the block head's word slot equals its column;
      // one clockwise turn advances every word slot by one.
      const int word = 2 * w - 1;
      int target_slot = positive_mod(ring_target + 1, 2 * w);
      int turns = positive_mod(target_slot - col.head(), word);
      if (turns <= word - turns)
        for (int i = 0; i < turns; ++i) bd.rotate({1, 1}, {2, w}, true);
      else
        for (int i = 0; i < word - turns; ++i) bd.rotate({1, 1}, {2, w}, false);
      for (int i = 0; i < len; ++i) {
        if (!seq[i]) continue;
        if (bd.tile_at(ring_cell(positive_mod(ring_target + i, 2 * w), w)) !=
            seq[i])
          throw std::logic_error("arc placement corrupted");
      }
      return;
    } catch (const Strand& s) {
      if (g_trace) std::fprintf(stderr, "STRAND tile=%d visit=%d attempt=%d\n", s.tile, s.visit, attempt);
      bd.rewind(snap, base);
      flips[{s.tile, std::max(1, s.visit)}] ^= 1;
    } catch (const CapacityOverflow&) {
      if (g_trace) std::fprintf(stderr, "CAPACITY attempt=%d\n", attempt);
      bd.rewind(snap, base);
      throw;
    }
  }
  if (g_trace) std::fprintf(stderr, "ATTEMPTS EXHAUSTED\n");
  bd.rewind(snap, base);
  throw CapacityOverflow{};
}

// Two-escort variant. The roll keeps its gaps on (1,1) and (2,w) and turns
// the remaining 2w-2 cells; word positions 1..2w-2 count clockwise from
// (1,2). Because (2,w) never rotates, the block is aimed one position early
// on the top row and two finishing pulls drop the corner tile and close the
// top row, leaving the gaps at (1,1) and (1, next_w).
Cell word2_cell(int p, int w) {
  return p <= w - 1 ? Cell{1, p + 1} : Cell{2, 2 * w - 1 - p};
}

void place_arc_k2(Board& bd, int w, const std::vector<int>& seq,
                  int word_target, int next_w) {
  const int len = static_cast<int>(seq.size());
  if (len < 1 || len > w - 1 || next_w < 2) throw CapacityOverflow{};
  for (int t : seq)
    if (t && bd.tile(t).col > w)
      throw std::logic_error("target tile outside the window");
  std::map<FlipKey, char> flips;
  const Configuration snap = bd.config();
  const int base = bd.steps();
  for (int attempt = 0; attempt < kMaxArcAttempts; ++attempt) {
    try {
      escorts_to_top_pair(bd, w);
      bd.jump({1, 2}, {2, 2});
      bd.jump({2, 2}, {2, 1});
      Collector col(bd, w, 2, seq, flips);
      col.run();
      int head = col.head();
      if (col.parked_low()) {
        if (head <= 1) throw CapacityOverflow{};
        if (col.slot_gap() > 1) bd.pull({{{2, col.slot_gap()}, {2, 1}}});
        bd.pull({{{2, 1}, {1, 1}}});
      } else {
        bd.pull({{{1, col.mouth()}, {1, 1}}, {{2, col.slot_gap()}, {2, w}}});
        ++head;
      }
      const int word = 2 * w - 2;
      int turns = positive_mod(word_target - (head - 1), word);
      bool cw = turns <= word - turns;
      if (!cw) turns = word - turns;
      for (int i = 0; i < turns; ++i) {
        if (cw) {
          bd.pull({{{1, 1}, {2, 1}}, {{2, w}, {1, w}}});
          bd.pull({{{2, 1}, {2, w}}, {{1, w}, {1, 1}}});
        } else {
          bd.pull({{{1, 1}, {1, w}}, {{2, w}, {2, 1}}});
          bd.pull({{{1, w}, {2, w}}, {{2, 1}, {1, 1}}});
        }
      }
      for (int i = 0; i < len; ++i) {
        if (!seq[i]) continue;
        int p = positive_mod(word_target + i - 1, word) + 1;
        if (bd.tile_at(word2_cell(p, w)) != seq[i])
          throw std::logic_error("arc placement corrupted");
      }
      bd.pull({{{2, w}, {1, w}}});
      bd.pull({{{1, w}, {1, next_w}}});
      return;
    } catch (const Strand& s) {
      bd.rewind(snap, base);
      flips[{s.tile, std::max(1, s.visit)}] ^= 1;
    } catch (const CapacityOverflow&) {
      bd.rewind(snap, base);
      throw;
    }
  }
  bd.rewind(snap, base);
  throw CapacityOverflow{};
}

Configuration flip_rows(const Configuration& c) {
  Configuration f = c;
  for (Cell& t : f.tiles) t.row = 3 - t.row;
  return f;
}

Plan flip_plan_rows(Plan plan) {
  for (Step& step : plan)
    for (Move& mv : step) {
      if (mv.dir == Direction::Up)
        mv.dir = Direction::Down;
      else if (mv.dir == Direction::Down)
        mv.dir = Direction::Up;
    }
  return plan;
}

void require_two_rows(const Grid& g) {
  if (g.rows != 2 || g.cols < 1)
    throw std::invalid_argument("board is not 2 x m");
}

void check_row_target(const Configuration& start,
                      const std::vector<int>& target) {
  if (static_cast<int>(target.size()) != start.grid.cols)
    throw std::invalid_argument("target length mismatch");
  std::set<int> used;
  for (int t : target) {
    if (t < 0 || t > start.tile_count())
      throw std::invalid_argument("bad target tile id");
    if (t && !used.insert(t).second)
      throw std::invalid_argument("duplicate target tile");
  }
}

// Resolves a bottom-row request into a full goal configuration: named tiles
// go to their columns, everything else fills the remaining non-escort cells
// in id order. With one escort the filler order may flip the permutation
// parity, so an infeasible draw is repaired by swapping two filler tiles;
// if no two cells are free the request is genuinely unreachable.
Configuration resolve_goal(const Configuration& start,
                           const std::vector<int>& bottom,
                           const std::vector<Cell>& escort_cells) {
  const Grid g = start.grid;
  const int m = g.cols;
  std::vector<int> goal_at(g.cells(), -1);  // cell index -> tile, -1 open
  for (Cell e : escort_cells) goal_at[g.index(e)] = 0;
  std::set<int> placed;
  for (int c = 1; c <= m; ++c)
    if (int t = bottom[c - 1]) {
      goal_at[g.index({2, c})] = t;
      placed.insert(t);
    }
  std::vector<int> open_cells;
  for (int i = 0; i < g.cells(); ++i)
    if (goal_at[i] < 0) open_cells.push_back(i);
  std::vector<int> fillers;
  for (int t = 1; t <= start.tile_count(); ++t)
    if (!placed.count(t)) fillers.push_back(t);
  for (std::size_t i = 0; i < fillers.size(); ++i)
    goal_at[open_cells[i]] = fillers[i];
  auto to_config = [&] {
    Configuration goal{g, std::vector<Cell>(start.tile_count())};
    for (int i = 0; i < g.cells(); ++i)
      if (goal_at[i] > 0) goal.tiles[goal_at[i] - 1] = g.cell(i);
    return goal;
  };
  Configuration goal = to_config();
  if (start.escort_count() == 1 &&
      !feasible({g, start.tiles, goal.tiles})) {
    if (fillers.size() < 2)
      throw std::invalid_argument("row target unreachable");
    std::swap(goal_at[open_cells[0]], goal_at[open_cells[1]]);
    goal = to_config();
    if (!feasible({g, start.tiles, goal.tiles}))
      throw std::logic_error("parity repair failed");
  }
  return goal;
}

}  // namespace

Plan permute_row_2xm_k1(const Configuration& start, int designated_row,
                        const std::vector<int>& row_target) {
  require_two_rows(start.grid);
  if (start.escort_count() != 1)
    throw std::invalid_argument("needs exactly one escort");
  if (designated_row != 1 && designated_row != 2)
    throw std::invalid_argument("designated row must be 1 or 2");
  check_row_target(start, row_target);
  if (designated_row == 1)
    return flip_plan_rows(permute_row_2xm_k1(flip_rows(start), 2, row_target));
  Configuration goal = resolve_goal(start, row_target, {{1, 1}});
  return solve_2xm_k1({start.grid, start.tiles, goal.tiles});
}

Plan solve_2xm_k1(const Instance& inst) {
  check_instance(inst);
  require_two_rows(inst.grid);
  if (inst.escort_count() != 1)
    throw std::invalid_argument("needs exactly one escort");
  if (!feasible(inst)) throw std::invalid_argument("instance is unsolvable");
  const int m = inst.grid.cols;
  if (m <= 4) {
    auto plan = oracle::shortest_plan(inst);
    if (!plan) throw std::logic_error("small window unsolved");
    return *plan;
  }
  // Walk both frames' escort to (1,1); the goal-side walk is undone at the
  // end by its reverse.
  Board gb(inst.goal_config());
  escort_to_corner(gb, m);
  const Configuration goal = gb.config();
  const Plan suffix = reversed(gb.take_plan());
  Board bd(inst.start_config());
  escort_to_corner(bd, m);
  int w = m;
  while (w > 4) {
    int d = std::max(1, w / 4);
    for (;;) {
      std::vector<int> seq;
      seq.reserve(2 * d);
      for (int c = w - d + 1; c <= w; ++c) seq.push_back(goal.tile_at({1, c}));
      for (int c = w; c >= w - d + 1; --c) seq.push_back(goal.tile_at({2, c}));
      try {
        place_arc_k1(bd, w, seq, w - d);
        break;
      } catch (const CapacityOverflow&) {
        if (d == 1) throw std::logic_error("strip solver stuck");
        d = std::max(1, d / 2);
      }
    }
    w -= d;
  }
  window_exact_finish(bd, w, goal);
  Plan plan = bd.take_plan();
  plan.insert(plan.end(), suffix.begin(), suffix.end());
  return plan;
}

Plan permute_bottom_row_2xm_k2(const Configuration& start,
                               const std::vector<int>& bottom_target) {
  require_two_rows(start.grid);
  if (start.escort_count() != 2)
    throw std::invalid_argument("needs exactly two escorts");
  if (start.grid.cols >= 2) {
    auto es = start.escorts();
    if (es[0] != Cell{1, 1} || es[1] != Cell{1, 2})
      throw std::invalid_argument("escorts must start at (1,1) and (1,2)");
  }
  check_row_target(start, bottom_target);
  if (start.grid.cols == 1) return {};  // no tiles at all
  Configuration goal = resolve_goal(start, bottom_target, {{1, 1}, {1, 2}});
  return solve_2xm_k2({start.grid, start.tiles, goal.tiles});
}

Plan solve_2xm_k2(const Instance& inst) {
  check_instance(inst);
  require_two_rows(inst.grid);
  if (inst.escort_count() != 2)
    throw std::invalid_argument("needs exactly two escorts");
  const int m = inst.grid.cols;
  if (m <= 4) {
    auto plan = oracle::shortest_plan(inst);
    if (!plan) throw std::logic_error("small window unsolved");
    return *plan;
  }
  Board gb(inst.goal_config());
  escorts_to_top_pair(gb, m);
  const Configuration goal = gb.config();
  const Plan suffix = reversed(gb.take_plan());
  Board bd(inst.start_config());
  escorts_to_top_pair(bd, m);
  int w = m;
  while (w > 4) {
    int d = std::max(1, w / 4);
    for (;;) {
      std::vector<int> seq;
      seq.reserve(2 * d);
      for (int c = w - d + 1; c <= w; ++c) seq.push_back(goal.tile_at({1, c}));
      for (int c = w; c >= w - d + 1; --c) seq.push_back(goal.tile_at({2, c}));
      try {
        place_arc_k2(bd, w, seq, w - d - 1, w - d);
        break;
      } catch (const CapacityOverflow&) {
        if (d == 1) throw std::logic_error("strip solver stuck");
        d = std::max(1, d / 2);
      }
    }
    for (int c = w - d + 1; c <= w; ++c)
      if (bd.tile_at({1, c}) != goal.tile_at({1, c}) ||
          bd.tile_at({2, c}) != goal.tile_at({2, c}))
        throw std::logic_error("column block misplaced");
    w -= d;
  }
  window_exact_finish(bd, w, goal);
  Plan plan = bd.take_plan();
  plan.insert(plan.end(), suffix.begin(), suffix.end());
  return plan;
}

}  // namespace gstp
