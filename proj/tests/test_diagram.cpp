#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "homfly/codec.hpp"
#include "homfly/diagram.hpp"
#include "oracles.hpp"

using namespace homfly;

namespace {

GaussDiagram relabel(const GaussDiagram& g, const std::vector<int>& perm) {
  std::vector<std::vector<Slot>> circles = g.circles();
  for (auto& c : circles)
    for (auto& s : c) s.arrow = perm[s.arrow];
  std::vector<int> signs(g.num_arrows());
  for (int a = 0; a < g.num_arrows(); ++a) signs[perm[a]] = g.sign(a);
  return GaussDiagram(std::move(circles), std::move(signs));
}

}  // namespace

TEST_CASE("diagram construction validates") {
  CHECK(GaussDiagram().num_circles() == 1);
  CHECK(GaussDiagram().num_arrows() == 0);
  CHECK_THROWS_AS(GaussDiagram({{{0, End::Tail}, {0, End::Tail}}}, {1}), std::invalid_argument);
  CHECK_THROWS_AS(GaussDiagram({{{0, End::Tail}, {0, End::Head}}}, {2}), std::invalid_argument);
  CHECK_THROWS_AS(GaussDiagram({{{0, End::Tail}}}, {1}), std::invalid_argument);
  const GaussDiagram t = parse_gauss_code("U1- O2- U3- O1- U2- O3-");
  CHECK(t.writhe() == -3);
  CHECK(t.sign_product() == -1);
}

TEST_CASE("canonical code is stable under relabelling") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const int n = static_cast<int>(rng() % 7);
    const GaussDiagram g = oracle::random_diagram(rng, n, 1 + static_cast<int>(rng() % 3));
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const GaussDiagram h = relabel(g, perm);
    CHECK(canonicalize(h) == canonicalize(g));
    CHECK(canonical_form(h) == canonical_form(g));
    CHECK(decode(canonicalize(g)) == canonical_form(g));
    CHECK(CanonicalCode::from_hex(canonicalize(g).hex()) == canonicalize(g));
    CHECK(canonicalize(parse_gauss_code(to_gauss_code(g))) == canonicalize(g));
  }
}

TEST_CASE("canonical code separates sign, direction and base point") {
  const auto code = [](const char* s) { return canonicalize(parse_gauss_code(s)); };
  CHECK(code("U1+ O2+ O1+ U2+") != code("U1- O2+ O1- U2+"));
  CHECK(code("U1+ O2+ O1+ U2+") != code("O1+ O2+ U1+ U2+"));
  CHECK(code("U1+ O2+ O1+ U2+") != code("O2+ O1+ U2+ U1+"));
  CHECK(code("U1+ O2+ O1+ U2+") == code("U7+ O3+ O7+ U3+"));
  CHECK(code("U1+ O1+\n.") != code(".\nU1+ O1+"));
  CHECK(unsigned_code(parse_gauss_code("U1- O2+ O1- U2+")) == code("U1+ O2+ O1+ U2+"));
}

TEST_CASE("enumeration matches the brute-force oracle") {
  CHECK(arrow_diagram_codes(0, 1).size() == 1);
  CHECK(arrow_diagram_codes(1, 1).size() == 4);
  for (auto [n, m] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 2}, {2, 2}, {3, 1}, {1, 3}}) {
    CAPTURE(n);
    CAPTURE(m);
    const std::set<std::string> oracle = oracle::brute_force_diagrams(n, m);
    const std::vector<CanonicalCode> codes = arrow_diagram_codes(n, m);
    const std::set<CanonicalCode> unique(codes.begin(), codes.end());
    CHECK(unique.size() == codes.size());
    CHECK(codes.size() == oracle.size());
    CHECK(arrow_diagram_count(n, m) == codes.size());
    int visited = 0;
    enumerate_arrow_diagrams(n, m, [&](const GaussDiagram& g) {
      ++visited;
      CHECK(g.num_arrows() == n);
      CHECK(g.num_circles() == m);
    });
    CHECK(visited == static_cast<int>(codes.size()));
  }
  CHECK(oracle::brute_force_diagrams(2, 1).size() == 48);
  CHECK(arrow_diagram_codes(2, 1).size() == 48);
}

TEST_CASE("four chord types of 3-arrow diagrams without isolated arrows") {
  std::set<std::vector<int>> chord_words;
  enumerate_arrow_diagrams(3, 1, [&](const GaussDiagram& g) {
    if (has_isolated_arrow(g)) return;
    std::vector<int> word;
    std::map<int, int> first;
    for (const Slot& s : g.circle(0)) word.push_back(first.try_emplace(s.arrow, first.size()).first->second);
    chord_words.insert(word);
  });
  CHECK(chord_words.size() == 4);
  CHECK(chord_words.count({0, 1, 2, 0, 1, 2}) == 1);
  CHECK(chord_words.count({0, 1, 0, 2, 1, 2}) == 1);
}

TEST_CASE("isolated arrows") {
  CHECK(is_isolated(parse_gauss_code("U1+ O1+"), 0));
  const GaussDiagram pair = parse_gauss_code("U1+ O2+ O1+ U2+");
  CHECK_FALSE(is_isolated(pair, 0));
  CHECK_FALSE(is_isolated(pair, 1));
  CHECK_FALSE(is_isolated(parse_gauss_code("O1+\nU1+"), 0));
  const GaussDiagram nested = parse_gauss_code("O1+ O2+ U2+ U1+");
  CHECK(is_isolated(nested, 0));
  CHECK(is_isolated(nested, 1));
  CHECK(has_isolated_arrow(parse_gauss_code("U1+ O2+ O1+ U2+ O3- U3-")));
  CHECK_FALSE(has_isolated_arrow(pair));
}

TEST_CASE("subdiagram and crossing change") {
  const GaussDiagram t = parse_gauss_code("O3- U1- O2- U3- O1- U2-");
  CHECK(to_gauss_code(subdiagram(t, ArrowSet{0, 1})) == "U1- O2- O1- U2-\n");
  CHECK(to_gauss_code(subdiagram(t, ArrowSet{})) == ".\n");
  CHECK(to_gauss_code(subdiagram(t, ArrowSet{2})) == "O1- U1-\n");
  CHECK(to_gauss_code(crossing_flip(t, 0)) == "O3- O1+ O2- U3- U1+ U2-\n");
  CHECK(crossing_flip(crossing_flip(t, ArrowSet{0, 2}), ArrowSet{0, 2}) == t);
  CHECK(subdiagram(t, ArrowSet::all(3)) == t);
}

TEST_CASE("smoothing a single arrow") {
  CHECK(to_gauss_code(smooth_arrow(parse_gauss_code("U1+ O1+"), 0)) == ".\n.\n");
  CHECK(to_gauss_code(smooth_arrow(parse_gauss_code("O1+\nU1+"), 0)) == ".\n");
  const GaussDiagram pair = parse_gauss_code("U1+ O2+ O1+ U2+");
  CHECK(to_gauss_code(smooth_arrow(pair, 0)) == "U1+\nO1+\n");
}

TEST_CASE("smoothing count agrees with the permutation-cycle oracle") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 400; ++i) {
    const int n = static_cast<int>(rng() % 7);
    const int m = 1 + static_cast<int>(rng() % 3);
    const GaussDiagram g = oracle::random_diagram(rng, n, m);
    const ArrowSet s(rng() & ArrowSet::all(n).bits());
    const TraceResult r = smooth_and_trace(g, s);
    CHECK(r.components == oracle::count_smoothed_circles(g, s));
    CHECK(static_cast<int>(r.circles.size()) == r.components);
    CHECK((s.size() + m - r.components) % 2 == 0);
    CHECK(static_cast<int>(r.smoothing_order.size()) == s.size());
    for (int a = 0; a < n; ++a) {
      if (s.contains(a)) continue;
      const int c = smooth_and_trace(g, s.with(a)).components;
      CHECK(std::abs(c - r.components) == 1);
    }
    TraceScratch scratch;
    CHECK(trace_state(g, s, ZeroPattern{}, scratch) == r.components);
    CHECK(scratch.first_passage == r.first_passage);
  }
}

TEST_CASE("smoothing order: circles agree as cyclic words, induced order may differ") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 300; ++i) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const GaussDiagram g = oracle::random_diagram(rng, n, 1 + static_cast<int>(rng() % 2));
    const ArrowSet s(rng() & ArrowSet::all(n).bits());
    const TraceResult r = smooth_and_trace(g, s);
    CHECK(smooth_in_order(g, r.smoothing_order) == r.circles);
    std::vector<int> order = s.members();
    std::shuffle(order.begin(), order.end(), rng);
    const auto other = smooth_in_order(g, order);
    CHECK(other.size() == r.circles.size());
    CHECK(oracle::cyclic_words(other) == oracle::cyclic_words(r.circles));
  }

  const GaussDiagram g = parse_gauss_code("O1+ U1+ O2+ O3+ U2+ U3+");
  const TraceResult r = smooth_and_trace(g, ArrowSet{0, 1});
  CHECK(r.smoothing_order == std::vector<int>{0, 1});
  const std::vector<std::vector<Slot>> trace_order{{{2, End::Head}}, {{2, End::Tail}}, {}};
  const std::vector<std::vector<Slot>> reversed{{{2, End::Head}}, {}, {{2, End::Tail}}};
  CHECK(r.circles == trace_order);
  CHECK(smooth_in_order(g, {1, 0}) == reversed);
}
