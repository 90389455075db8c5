#pragma once

// HOMFLYPT polynomial of an ordered Gauss diagram: the descending state sum,
// its ascending variant, and the skein recursion that turns a diagram into
// descending ones.
//
// Convention: a P(L+) - a^-1 P(L-) = z P(L0), P(unknot) = 1.

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "homfly/diagram.hpp"
#include "homfly/exactpoly.hpp"

namespace homfly {

/// Signed monomial c a^i z^j with c in {-1, 0, 1}.
struct LocalWeight {
  int coeff = 0;
  int a_power = 0;
  int z_power = 0;
};

class WeightTable {
 public:
  /// (in S, head first): +a^-1 z / -a z; (in S, tail first): 0;
  /// (not in S, head first): a^-2 / a^2; (not in S, tail first): 1.
  static WeightTable descending();
  /// The descending table with head-first and tail-first columns swapped.
  static WeightTable ascending();

  const LocalWeight& local(bool in_state, Passage passage, int sign) const {
    return entries_[in_state ? 1 : 0][passage == Passage::HeadFirst ? 0 : 1][sign > 0 ? 0 : 1];
  }
  IntLaurent2 entry(bool in_state, Passage passage, int sign) const;
  ZeroPattern zeros() const;

 private:
  LocalWeight entries_[2][2][2]{};
};

/// Product of the local weights of all arrows (without the unlink factor).
IntLaurent2 state_weight(const GaussDiagram& g, ArrowSet state, const WeightTable& table);

/// Calls visit(state) for every subset of n arrows, by increasing size and
/// then increasing bitmask.
void for_each_state(int n, const std::function<void(ArrowSet)>& visit);

/// Per-state terms <G|S> ((a - a^-1)/z)^(c(S)-1) in for_each_state order.
std::vector<std::pair<ArrowSet, IntLaurent2>> state_contributions(const GaussDiagram& g,
                                                                  const WeightTable& table);

struct StateSumOptions {
  /// Stop tracing a state at its first zero local weight.
  bool prune = true;
  /// Worker threads for the state enumeration; results do not depend on it.
  int threads = 1;
};

IntLaurent2 homfly_statesum(const GaussDiagram& g, const WeightTable& table, const StateSumOptions& options = {});
IntLaurent2 homfly_descending(const GaussDiagram& g, const StateSumOptions& options = {});
IntLaurent2 homfly_ascending(const GaussDiagram& g, const StateSumOptions& options = {});

/// First arrow (in trace order) whose first endpoint is a head, if any.
std::optional<int> first_descent_failure(const GaussDiagram& g);
bool is_descending(const GaussDiagram& g);

struct SkeinStats {
  /// Distinct diagrams on which the skein relation was applied.
  int steps = 0;
  /// Distinct descending diagrams reached.
  int leaves = 0;
};

/// Resolves the first descent failure by the skein relation until every
/// diagram is descending; memoized on canonical codes.
IntLaurent2 skein_homfly(const GaussDiagram& g, SkeinStats* stats = nullptr);

}  // namespace homfly
