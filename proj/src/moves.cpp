#include "homfly/moves.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <sstream>

namespace homfly {

namespace {

using Circles = std::vector<std::vector<Slot>>;

End other(End e) { return e == End::Head ? End::Tail : End::Head; }

void check_gap(const GaussDiagram& g, Gap gap) {
  if (gap.circle < 0 || gap.circle >= g.num_circles()) throw MoveError("gap on a nonexistent circle");
  if (gap.index < 0 || gap.index > static_cast<int>(g.circle(gap.circle).size()))
    throw MoveError("gap index out of range");
}

void check_segment(const GaussDiagram& g, Position p) {
  if (p.circle < 0 || p.circle >= g.num_circles()) throw MoveError("segment on a nonexistent circle");
  const int len = static_cast<int>(g.circle(p.circle).size());
  if (p.index < 0 || p.index >= len) throw MoveError("segment index out of range");
  if (p.index + 1 == len) throw MoveError("base point inside the segment");
}

void check_sign(int sign) {
  if (sign != 1 && sign != -1) throw MoveError("sign must be +1 or -1");
}

/// Drops the listed arrows and renumbers the rest densely.
GaussDiagram remove_arrows(const GaussDiagram& g, const std::set<int>& gone) {
  std::vector<int> renumber(g.num_arrows(), -1);
  std::vector<int> signs;
  for (int a = 0; a < g.num_arrows(); ++a)
    if (gone.count(a) == 0) {
      renumber[a] = static_cast<int>(signs.size());
      signs.push_back(g.sign(a));
    }
  Circles circles;
  for (const auto& circle : g.circles()) {
    std::vector<Slot> out;
    for (const Slot& s : circle)
      if (renumber[s.arrow] >= 0) out.push_back({renumber[s.arrow], s.end});
    circles.push_back(std::move(out));
  }
  return GaussDiagram(std::move(circles), std::move(signs));
}

GaussDiagram apply(const GaussDiagram& g, const R1Insert& m) {
  check_gap(g, m.site);
  check_sign(m.sign);
  if (g.num_arrows() + 1 > ArrowSet::kMaxArrows) throw MoveError("too many arrows");
  Circles circles = g.circles();
  std::vector<int> signs = g.signs();
  const int x = g.num_arrows();
  auto& c = circles[m.site.circle];
  c.insert(c.begin() + m.site.index, {Slot{x, m.first}, Slot{x, other(m.first)}});
  signs.push_back(m.sign);
  return GaussDiagram(std::move(circles), std::move(signs));
}

GaussDiagram apply(const GaussDiagram& g, const R1Delete& m) {
  check_segment(g, m.at);
  const Slot& s = g.at(m.at);
  const Slot& t = g.at({m.at.circle, m.at.index + 1});
  if (s.arrow != t.arrow) throw MoveError("R1: slots belong to different arrows");
  return remove_arrows(g, {s.arrow});
}

GaussDiagram apply(const GaussDiagram& g, const R2Insert& m) {
  check_gap(g, m.over);
  check_gap(g, m.under);
  check_sign(m.sign);
  if (g.num_arrows() + 2 > ArrowSet::kMaxArrows) throw MoveError("too many arrows");
  Circles circles = g.circles();
  std::vector<int> signs = g.signs();
  const int x = g.num_arrows();
  const int y = x + 1;
  signs.push_back(m.sign);
  signs.push_back(-m.sign);
  auto insert_over = [&] {
    auto& c = circles[m.over.circle];
    c.insert(c.begin() + m.over.index, {Slot{x, End::Tail}, Slot{y, End::Tail}});
  };
  auto insert_under = [&] {
    auto& c = circles[m.under.circle];
    if (m.reversed)
      c.insert(c.begin() + m.under.index, {Slot{y, End::Head}, Slot{x, End::Head}});
    else
      c.insert(c.begin() + m.under.index, {Slot{x, End::Head}, Slot{y, End::Head}});
  };
  // later gap first so the earlier index stays valid
  if (m.over.circle == m.under.circle && m.over.index > m.under.index) {
    insert_over();
    insert_under();
  } else {
    insert_under();
    insert_over();
  }
  return GaussDiagram(std::move(circles), std::move(signs));
}

bool overlapping(Position p, Position q) { return p.circle == q.circle && std::abs(p.index - q.index) <= 1; }

GaussDiagram apply(const GaussDiagram& g, const R2Delete& m) {
  check_segment(g, m.first);
  check_segment(g, m.second);
  if (overlapping(m.first, m.second)) throw MoveError("R2: segments overlap");
  std::array<Slot, 2> p{g.at(m.first), g.at({m.first.circle, m.first.index + 1})};
  std::array<Slot, 2> q{g.at(m.second), g.at({m.second.circle, m.second.index + 1})};
  if (p[0].arrow == p[1].arrow) throw MoveError("R2: segment holds one arrow twice");
  if (!((q[0].arrow == p[0].arrow && q[1].arrow == p[1].arrow) ||
        (q[0].arrow == p[1].arrow && q[1].arrow == p[0].arrow)))
    throw MoveError("R2: segments do not share both arrows");
  if (p[0].end != p[1].end || q[0].end != q[1].end)
    throw MoveError("R2: one segment must hold both tails and the other both heads");
  if (g.sign(p[0].arrow) != -g.sign(p[1].arrow)) throw MoveError("R2: arrows must have opposite signs");
  return remove_arrows(g, {p[0].arrow, p[1].arrow});
}

/// Validates an R3 site; on success returns the three segments.
std::array<Position, 3> check_r3(const GaussDiagram& g, const R3Move& m) {
  std::array<Position, 3> seg{m.a, m.b, m.c};
  for (Position p : seg) check_segment(g, p);
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (overlapping(seg[i], seg[j])) throw MoveError("R3: segments overlap");

  std::array<std::array<Slot, 2>, 3> slots;
  for (int i = 0; i < 3; ++i) {
    slots[i] = {g.at(seg[i]), g.at({seg[i].circle, seg[i].index + 1})};
    if (slots[i][0].arrow == slots[i][1].arrow) throw MoveError("R3: segment holds one arrow twice");
  }
  // each arrow must join two different segments
  std::set<int> arrows;
  for (int i = 0; i < 3; ++i)
    for (const Slot& s : slots[i]) arrows.insert(s.arrow);
  if (arrows.size() != 3) throw MoveError("R3: segments must carry exactly three arrows");

  int top = -1, mid = -1, bottom = -1;
  for (int i = 0; i < 3; ++i) {
    const int tails = (slots[i][0].end == End::Tail) + (slots[i][1].end == End::Tail);
    int& role = tails == 2 ? top : tails == 1 ? mid : bottom;
    if (role != -1) throw MoveError("R3: cyclic configuration");
    role = i;
  }
  auto shared = [&](int i, int j) {
    for (const Slot& s : slots[i])
      for (const Slot& t : slots[j])
        if (s.arrow == t.arrow) return s.arrow;
    throw MoveError("R3: segments are not pairwise joined");
  };
  const int tm = shared(top, mid);
  const int tb = shared(top, bottom);
  const int mb = shared(mid, bottom);
  // o = 1 when the arrow to the higher-ranked partner comes first
  const int o_top = slots[top][0].arrow == tm;
  const int o_mid = slots[mid][0].arrow == tm;
  const int o_bottom = slots[bottom][0].arrow == tb;
  auto parity = [](int k) { return k % 2 == 0 ? 1 : -1; };
  const int v1 = g.sign(tm) * parity(o_top + o_mid);
  const int v2 = g.sign(tb) * parity(o_top + o_bottom);
  const int v3 = g.sign(mb) * parity(o_mid + o_bottom);
  if (v1 != v2 || v2 != v3) throw MoveError("R3: signs and endpoint orders do not form a valid triangle");
  return seg;
}

GaussDiagram apply(const GaussDiagram& g, const R3Move& m) {
  auto seg = check_r3(g, m);
  Circles circles = g.circles();
  for (Position p : seg) std::swap(circles[p.circle][p.index], circles[p.circle][p.index + 1]);
  return GaussDiagram(std::move(circles), g.signs());
}

std::string sign_char(int s) { return s > 0 ? "+" : "-"; }

std::string where(Gap g) { return "(" + std::to_string(g.circle) + "," + std::to_string(g.index) + ")"; }
std::string where(Position p) { return "(" + std::to_string(p.circle) + "," + std::to_string(p.index) + ")"; }

}  // namespace

GaussDiagram apply_move(const GaussDiagram& g, const Move& move) {
  return std::visit([&](const auto& m) { return apply(g, m); }, move);
}

std::string describe(const Move& move) {
  struct Describer {
    std::string operator()(const R1Insert& m) const {
      return "R1-insert gap " + where(m.site) + " sign " + sign_char(m.sign) + " first " +
             (m.first == End::Head ? "head" : "tail");
    }
    std::string operator()(const R1Delete& m) const { return "R1-delete at " + where(m.at); }
    std::string operator()(const R2Insert& m) const {
      return "R2-insert over " + where(m.over) + " under " + where(m.under) + " sign " + sign_char(m.sign) +
             (m.reversed ? " reversed" : "");
    }
    std::string operator()(const R2Delete& m) const {
      return "R2-delete at " + where(m.first) + " and " + where(m.second);
    }
    std::string operator()(const R3Move& m) const {
      return "R3 at " + where(m.a) + " " + where(m.b) + " " + where(m.c);
    }
  };
  return std::visit(Describer{}, move);
}

std::vector<Move> applicable_moves(const GaussDiagram& g, int max_arrows) {
  std::vector<Move> moves;
  const int n = g.num_arrows();
  std::vector<Gap> gaps;
  std::vector<Position> segments;
  for (int c = 0; c < g.num_circles(); ++c) {
    const int len = static_cast<int>(g.circle(c).size());
    for (int i = 0; i <= len; ++i) gaps.push_back({c, i});
    for (int i = 0; i + 1 < len; ++i) segments.push_back({c, i});
  }

  if (n + 1 <= max_arrows)
    for (Gap gap : gaps)
      for (int sign : {1, -1})
        for (End first : {End::Tail, End::Head}) moves.push_back(R1Insert{gap, sign, first});

  for (Position p : segments)
    if (g.at(p).arrow == g.at({p.circle, p.index + 1}).arrow) moves.push_back(R1Delete{p});

  if (n + 2 <= max_arrows)
    for (Gap over : gaps)
      for (Gap under : gaps) {
        for (int sign : {1, -1})
          for (bool reversed : {false, true}) moves.push_back(R2Insert{over, under, sign, reversed});
      }

  for (std::size_t i = 0; i < segments.size(); ++i)
    for (std::size_t j = i + 1; j < segments.size(); ++j) {
      R2Delete m{segments[i], segments[j]};
      try {
        apply(g, m);
        moves.push_back(m);
      } catch (const MoveError&) {
      }
    }

  // R3 candidates: segments around the far endpoints of a segment's arrows
  std::set<std::array<Position, 3>> seen;
  auto around = [&](Position p) {
    std::vector<Position> out;
    const int len = static_cast<int>(g.circle(p.circle).size());
    if (p.index >= 1) out.push_back({p.circle, p.index - 1});
    if (p.index + 1 < len) out.push_back(p);
    return out;
  };
  auto far_end = [&](Slot s) { return g.endpoint(s.arrow, other(s.end)); };
  for (Position s : segments) {
    const Slot x = g.at(s);
    const Slot y = g.at({s.circle, s.index + 1});
    if (x.arrow == y.arrow) continue;
    for (Position u : around(far_end(x)))
      for (Position v : around(far_end(y))) {
        std::array<Position, 3> key{s, u, v};
        std::sort(key.begin(), key.end());
        if (key[0] == key[1] || key[1] == key[2] || !seen.insert(key).second) continue;
        R3Move m{key[0], key[1], key[2]};
        try {
          check_r3(g, m);
          moves.push_back(m);
        } catch (const MoveError&) {
        }
      }
  }
  return moves;
}

// ---------------------------------------------------------------------------
// Ribbon graph

namespace {

// arms of a crossing
constexpr int kUnderIn = 0;
constexpr int kUnderOut = 1;
constexpr int kOverIn = 2;
constexpr int kOverOut = 3;

int find(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

int graph_components(const GaussDiagram& g) {
  std::vector<int> parent(g.num_circles());
  std::iota(parent.begin(), parent.end(), 0);
  for (int a = 0; a < g.num_arrows(); ++a) parent[find(parent, g.tail(a).circle)] = find(parent, g.head(a).circle);
  int count = 0;
  for (int c = 0; c < g.num_circles(); ++c)
    if (!g.circle(c).empty() && find(parent, c) == c) ++count;
  return count;
}

int euler_characteristic(const GaussDiagram& g) {
  const int n = g.num_arrows();
  std::vector<int> edge(4 * n, -1);
  for (const auto& circle : g.circles()) {
    const std::size_t len = circle.size();
    for (std::size_t i = 0; i < len; ++i) {
      const Slot& cur = circle[i];
      const Slot& next = circle[(i + 1) % len];
      const int out = 4 * cur.arrow + (cur.end == End::Head ? kUnderOut : kOverOut);
      const int in = 4 * next.arrow + (next.end == End::Head ? kUnderIn : kOverIn);
      edge[out] = in;
      edge[in] = out;
    }
  }
  // counterclockwise successor of each arm
  std::vector<int> rotate(4 * n);
  for (int a = 0; a < n; ++a) {
    const std::array<int, 4> order = g.sign(a) > 0 ? std::array<int, 4>{kUnderIn, kOverOut, kUnderOut, kOverIn}
                                                   : std::array<int, 4>{kUnderIn, kOverIn, kUnderOut, kOverOut};
    for (int i = 0; i < 4; ++i) rotate[4 * a + order[i]] = 4 * a + order[(i + 1) % 4];
  }
  std::vector<char> done(4 * n, 0);
  int faces = 0;
  for (int d = 0; d < 4 * n; ++d) {
    if (done[d]) continue;
    ++faces;
    for (int e = d; !done[e]; e = rotate[edge[e]]) done[e] = 1;
  }
  return n - 2 * n + faces;
}

bool is_planar(const GaussDiagram& g) { return euler_characteristic(g) == 2 * graph_components(g); }

std::optional<Mutation> random_classical_mutation(const GaussDiagram& g, std::mt19937_64& rng, int max_arrows) {
  std::array<std::vector<Move>, std::variant_size_v<Move>> by_kind;
  for (Move& m : applicable_moves(g, max_arrows)) by_kind[m.index()].push_back(std::move(m));
  std::vector<std::size_t> kinds(by_kind.size());
  std::iota(kinds.begin(), kinds.end(), 0);
  std::shuffle(kinds.begin(), kinds.end(), rng);
  for (std::size_t kind : kinds) {
    auto& moves = by_kind[kind];
    std::shuffle(moves.begin(), moves.end(), rng);
    for (const Move& m : moves) {
      GaussDiagram next = apply_move(g, m);
      if (is_planar(next)) return Mutation{std::move(next), m};
    }
  }
  return std::nullopt;
}

}  // namespace homfly
