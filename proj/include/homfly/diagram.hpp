#pragma once

// Ordered, based, signed Gauss (arrow) diagrams.
//
// A diagram is a list of circles in component order. Each circle is the
// linear sequence of arrow endpoints met when walking from its base point
// along the orientation. An arrow points from the overpass preimage (tail)
// to the underpass preimage (head) and carries the crossing sign.

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace homfly {

enum class End : std::uint8_t { Tail, Head };
enum class Passage : std::uint8_t { HeadFirst, TailFirst };

struct Slot {
  int arrow = 0;
  End end = End::Tail;
  friend bool operator==(const Slot&, const Slot&) = default;
};

struct Position {
  int circle = 0;
  int index = 0;
  friend auto operator<=>(const Position&, const Position&) = default;
};

/// Subset of a diagram's arrows; bit i stands for arrow i.
class ArrowSet {
 public:
  static constexpr int kMaxArrows = 64;

  constexpr ArrowSet() = default;
  constexpr explicit ArrowSet(std::uint64_t bits) : bits_(bits) {}
  ArrowSet(std::initializer_list<int> arrows);

  static ArrowSet all(int n) {
    return ArrowSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  bool contains(int arrow) const { return (bits_ >> arrow) & 1U; }
  ArrowSet with(int arrow) const { return ArrowSet(bits_ | (std::uint64_t{1} << arrow)); }
  ArrowSet without(int arrow) const { return ArrowSet(bits_ & ~(std::uint64_t{1} << arrow)); }
  int size() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  std::uint64_t bits() const { return bits_; }
  std::vector<int> members() const;

  friend bool operator==(ArrowSet, ArrowSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

class GaussDiagram {
 public:
  /// The unknot: one circle, no arrows.
  GaussDiagram();
  /// Validates that arrows 0..n-1 each have exactly one tail and one head
  /// slot and a sign of +1 or -1. Throws std::invalid_argument otherwise.
  GaussDiagram(std::vector<std::vector<Slot>> circles, std::vector<int> signs);

  static GaussDiagram unlink(int components);

  int num_circles() const { return static_cast<int>(circles_.size()); }
  int num_arrows() const { return static_cast<int>(signs_.size()); }
  const std::vector<std::vector<Slot>>& circles() const { return circles_; }
  const std::vector<Slot>& circle(int c) const { return circles_.at(c); }
  const Slot& at(Position p) const { return circles_.at(p.circle).at(p.index); }
  const std::vector<int>& signs() const { return signs_; }
  int sign(int arrow) const { return signs_.at(arrow); }
  Position tail(int arrow) const { return tails_.at(arrow); }
  Position head(int arrow) const { return heads_.at(arrow); }
  Position endpoint(int arrow, End end) const { return end == End::Head ? head(arrow) : tail(arrow); }
  /// The endpoint of `arrow` met first when tracing circles in order.
  Position first_endpoint(int arrow) const { return std::min(tail(arrow), head(arrow)); }

  int writhe() const;
  /// Product of all signs.
  int sign_product() const;

  friend bool operator==(const GaussDiagram& g, const GaussDiagram& h) {
    return g.circles_ == h.circles_ && g.signs_ == h.signs_;
  }

 private:
  std::vector<std::vector<Slot>> circles_;
  std::vector<int> signs_;
  std::vector<Position> tails_;
  std::vector<Position> heads_;
};

/// Byte string identifying a diagram up to renumbering of its arrows (and of
/// endpoint slots along each circle). Equal codes iff equal ordered based
/// signed arrow diagrams.
class CanonicalCode {
 public:
  CanonicalCode() = default;
  explicit CanonicalCode(std::string bytes) : bytes_(std::move(bytes)) {}

  const std::string& bytes() const { return bytes_; }
  std::string hex() const;
  static CanonicalCode from_hex(std::string_view hex);

  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;

 private:
  std::string bytes_;
};

struct CanonicalCodeHash {
  std::size_t operator()(const CanonicalCode& c) const { return std::hash<std::string>{}(c.bytes()); }
};

CanonicalCode canonicalize(const GaussDiagram& g);
/// Same diagram with arrows numbered by first appearance.
GaussDiagram canonical_form(const GaussDiagram& g);
/// Inverse of canonicalize (returns the canonical form).
GaussDiagram decode(const CanonicalCode& code);
/// Code of the diagram with all signs forgotten.
CanonicalCode unsigned_code(const GaussDiagram& g);

/// Keeps all circles and base points, only the chosen arrows. Arrows keep
/// their relative numbering.
GaussDiagram subdiagram(const GaussDiagram& g, ArrowSet arrows);

/// Reverses `arrow` and negates its sign (a crossing change).
GaussDiagram crossing_flip(const GaussDiagram& g, int arrow);
GaussDiagram crossing_flip(const GaussDiagram& g, ArrowSet arrows);

/// Orientation-preserving smoothing of one arrow at its first endpoint in
/// trace order, with the induced ordering of the result. Arrows above
/// `arrow` are renumbered down by one.
GaussDiagram smooth_arrow(const GaussDiagram& g, int arrow);

struct TraceResult {
  /// c(S): number of circles of the smoothed diagram.
  int components = 0;
  std::vector<Passage> first_passage;
  /// Circles of G(S) in induced order, read from their base points. Only
  /// endpoints of unsmoothed arrows remain.
  std::vector<std::vector<Slot>> circles;
  /// Arrows of S in the order they were smoothed.
  std::vector<int> smoothing_order;
};

/// Smooths every arrow of `state` sequentially: trace the current diagram in
/// component order from base points and smooth each state arrow where it is
/// first met. A smoothing joining circles i < j yields circle i with i's base
/// point; a smoothing of circle i into two keeps the piece with i's base point
/// at index i and inserts the other at i + 1, based just after the junction.
TraceResult smooth_and_trace(const GaussDiagram& g, ArrowSet state);

/// Which (membership, first passage) combinations make a local weight zero.
struct ZeroPattern {
  bool in_state_head_first = false;
  bool in_state_tail_first = false;
  bool out_head_first = false;
  bool out_tail_first = false;

  bool is_zero(bool in_state, Passage p) const {
    if (in_state) return p == Passage::HeadFirst ? in_state_head_first : in_state_tail_first;
    return p == Passage::HeadFirst ? out_head_first : out_tail_first;
  }
};

/// Reusable buffers for trace_state.
struct TraceScratch {
  std::vector<std::vector<Slot>> circles;
  std::vector<Passage> first_passage;
  std::vector<char> seen;
};

/// The same procedure as smooth_and_trace, stopping as soon as an arrow's
/// classification matches `zero`. Returns c(S), or 0 when stopped early.
/// On success scratch.first_passage holds the classification.
int trace_state(const GaussDiagram& g, ArrowSet state, const ZeroPattern& zero, TraceScratch& scratch);

/// Smooths the arrows in the given order using the same local rules,
/// regardless of trace order. Returns the resulting circles.
std::vector<std::vector<Slot>> smooth_in_order(const GaussDiagram& g, const std::vector<int>& order);

/// True iff both endpoints lie on one circle and no other arrow has exactly
/// one endpoint strictly between them.
bool is_isolated(const GaussDiagram& g, int arrow);
bool has_isolated_arrow(const GaussDiagram& g);

/// Every ordered based signed arrow diagram with exactly n arrows on m
/// circles, once each, in canonical form.
void enumerate_arrow_diagrams(int n, int m, const std::function<void(const GaussDiagram&)>& visit);
std::vector<CanonicalCode> arrow_diagram_codes(int n, int m);
/// C(2n+m-1, m-1) (2n-1)!! 4^n.
std::uint64_t arrow_diagram_count(int n, int m);

}  // namespace homfly
