#pragma once

// Reidemeister moves on Gauss diagrams and a genus test for realizability.
//
// Segments are runs of adjacent slots (index, index + 1) on one circle; a
// segment never contains the base point. Gaps are insertion points: gap
// (c, i) sits before slot i of circle c, and (c, len) after the last slot.

#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "homfly/diagram.hpp"

namespace homfly {

struct Gap {
  int circle = 0;
  int index = 0;
  friend auto operator<=>(const Gap&, const Gap&) = default;
};

/// New kink arrow with both endpoints at `site`, `first` met first.
struct R1Insert {
  Gap site;
  int sign = 1;
  End first = End::Tail;
};

/// Removes the arrow owning the adjacent slots at and after `at`.
struct R1Delete {
  Position at;
};

/// Two new arrows x (sign) and y (-sign): tails x, y at `over`, heads at
/// `under` in order x, y, or y, x when `reversed`. When the gaps coincide the
/// tails come first.
struct R2Insert {
  Gap over;
  Gap under;
  int sign = 1;
  bool reversed = false;
};

/// Removes two arrows of opposite signs whose tails are adjacent at one
/// segment and heads adjacent at the other.
struct R2Delete {
  Position first;
  Position second;
};

/// Three segments pairwise joined by three arrows with acyclic heights.
/// The move reverses the endpoint order on each segment.
struct R3Move {
  Position a;
  Position b;
  Position c;
};

using Move = std::variant<R1Insert, R1Delete, R2Insert, R2Delete, R3Move>;

class MoveError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

GaussDiagram apply_move(const GaussDiagram& g, const Move& move);
std::string describe(const Move& move);

/// Every move applicable to g whose result has at most max_arrows arrows.
std::vector<Move> applicable_moves(const GaussDiagram& g, int max_arrows);

/// V - E + F of the ribbon graph with crossing rotations given by the signs,
/// summed over connected pieces; arrowless circles are ignored.
int euler_characteristic(const GaussDiagram& g);
/// Number of connected pieces of that graph.
int graph_components(const GaussDiagram& g);
/// Genus zero: g is the Gauss diagram of a classical link diagram.
bool is_planar(const GaussDiagram& g);

struct Mutation {
  GaussDiagram diagram;
  Move move;
};

/// Picks a move kind uniformly, then a random instance of it whose result is
/// planar. Returns nothing when no kind admits such a move.
std::optional<Mutation> random_classical_mutation(const GaussDiagram& g, std::mt19937_64& rng, int max_arrows);

}  // namespace homfly
