#include <doctest.h>

#include <random>

#include "homfly/codec.hpp"
#include "homfly/corpus.hpp"
#include "oracles.hpp"

using namespace homfly;

namespace {

struct Failure {
  int line = 0;
  int column = 0;
  std::string detail;
};

Failure parse_failure(const std::string& text) {
  try {
    parse_gauss_code(text);
  } catch (const ParseError& e) {
    return {e.line(), e.column(), e.detail()};
  }
  return {};
}

// Knot PD with edges 1..2n numbered consecutively along the orientation:
// edge e enters the crossing listing it at slot 0, or the one whose over
// strand continues with edge e + 1.
GaussDiagram knot_from_pd(const PdCode& pd) {
  const long edges = 2 * static_cast<long>(pd.crossings.size());
  auto succ = [&](long e) { return e % edges + 1; };
  std::vector<Slot> circle;
  std::vector<int> signs(pd.crossings.size());
  long e = pd.base_edges[0];
  for (long step = 0; step < edges; ++step) {
    for (int c = 0; c < static_cast<int>(pd.crossings.size()); ++c) {
      const auto& x = pd.crossings[c];
      if (x[0] == e) {
        circle.push_back({c, End::Head});
      } else if ((x[1] == e && x[3] == succ(e)) || (x[3] == e && x[1] == succ(e))) {
        circle.push_back({c, End::Tail});
        signs[c] = x[3] == e ? 1 : -1;
      }
    }
    e = succ(e);
  }
  return GaussDiagram({circle}, signs);
}

}  // namespace

TEST_CASE("gauss code round trip") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 100; ++i) {
    const GaussDiagram g = oracle::random_diagram(rng, static_cast<int>(rng() % 6), 1 + static_cast<int>(rng() % 3));
    const GaussDiagram h = parse_gauss_code(to_gauss_code(g));
    CHECK(canonicalize(h) == canonicalize(g));
    CHECK(to_gauss_code(h) == to_gauss_code(parse_gauss_code(to_gauss_code(h))));
  }
  const std::string text = "# comment\n\nO1+ U2-  U1+\t O2-\n.\n";
  CHECK(to_gauss_code(parse_gauss_code(text)) == "O1+ U2- U1+ O2-\n.\n");
  CHECK(to_unsigned_gauss_code(parse_gauss_code(text)) == "O1 U2 U1 O2\n.\n");
  CHECK(to_gauss_code(parse_gauss_code("U10- O3+ O10- U3+")) == "U2- O1+ O2- U1+\n");
}

TEST_CASE("gauss code errors carry line and column") {
  Failure f = parse_failure("O1+ O1+ U1+");
  CHECK(f.line == 1);
  CHECK(f.column == 5);
  CHECK(f.detail == "arrow 1 appears twice as O");

  f = parse_failure("O1+ U2+\nU1+ X2+");
  CHECK(f.line == 2);
  CHECK(f.column == 5);

  f = parse_failure("O1+ U1-");
  CHECK(f.line == 1);
  CHECK(f.column == 5);
  CHECK(f.detail == "arrow 1 has inconsistent signs");

  f = parse_failure("O1+ U2+ U1+");
  CHECK(f.line == 1);
  CHECK(f.column == 5);

  CHECK(parse_failure("O1 U1").column == 1);
  CHECK(parse_failure("Oa+ Ua+").column == 1);
  CHECK(parse_failure("O1+ . U1+").column == 5);
  CHECK(parse_failure("# nothing\n").line == 1);
  CHECK_THROWS_AS(read_diagram("{\"crossings\": [}"), ParseError);
}

TEST_CASE("PD trefoil") {
  const GaussDiagram t = left_trefoil();
  CHECK(canonicalize(t) == canonicalize(parse_gauss_code("U1- O2- U3- O1- U2- O3-")));
  CHECK(t.writhe() == -3);
  CHECK(canonicalize(reference_trefoil()) != canonicalize(t));
}

TEST_CASE("PD knots agree with the consecutive-edge oracle") {
  for (const auto& [name, pd] : standard_pd_codes()) {
    if (pd.base_edges.size() != 1 || pd.crossings.empty()) continue;
    CAPTURE(name);
    const GaussDiagram g = from_pd_code(pd);
    const GaussDiagram expected = knot_from_pd(pd);
    CHECK(canonicalize(g) == canonicalize(expected));
    CHECK(g.writhe() == expected.writhe());
  }
  CHECK(from_pd_code(standard_pd_codes()[3].second).writhe() == 0);
  CHECK(from_pd_code(standard_pd_codes()[4].second).writhe() == -5);
}

TEST_CASE("PD links and degenerate input") {
  const GaussDiagram hopf = from_pd_code(standard_pd_codes()[1].second);
  CHECK(hopf.num_circles() == 2);
  CHECK(hopf.num_arrows() == 2);
  CHECK(std::abs(hopf.writhe()) == 2);
  for (const auto& c : hopf.circles()) CHECK(c.size() == 2);

  const GaussDiagram empty = read_diagram(R"({"crossings":[],"components":[{"base_edge":1}]})");
  CHECK(empty.num_circles() == 1);
  CHECK(empty.num_arrows() == 0);

  CHECK_THROWS_AS(from_pd_code({{{1, 4, 2, 5}, {3, 6, 4, 1}, {5, 2, 6, 1}}, {1}}), std::invalid_argument);
  CHECK_THROWS_AS(from_pd_code({{{1, 4, 2, 5}, {3, 6, 4, 1}, {5, 2, 6, 7}}, {1}}), std::invalid_argument);
  CHECK_THROWS_AS(from_pd_code({{{1, 4, 2, 5}}, {}}), std::invalid_argument);
  CHECK_THROWS_AS(read_diagram(R"({"crossings":[[1,2,3]],"components":[]})"), ParseError);
}

TEST_CASE("PD JSON round trip") {
  for (const auto& [name, pd] : standard_pd_codes()) {
    const PdCode back = parse_pd_json(to_json(pd).dump());
    CHECK(back.crossings == pd.crossings);
    CHECK(back.base_edges == pd.base_edges);
    CHECK(read_diagram(to_json(pd).dump()) == from_pd_code(pd));
  }
}
