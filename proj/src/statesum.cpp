#include "homfly/statesum.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>
#include <thread>
#include <tuple>
#include <unordered_map>

namespace homfly {

WeightTable WeightTable::descending() {
  WeightTable t;
  // [in_state][head_first ? 0 : 1][sign > 0 ? 0 : 1]
  t.entries_[1][0][0] = {1, -1, 1};
  t.entries_[1][0][1] = {-1, 1, 1};
  t.entries_[1][1][0] = {0, 0, 0};
  t.entries_[1][1][1] = {0, 0, 0};
  t.entries_[0][0][0] = {1, -2, 0};
  t.entries_[0][0][1] = {1, 2, 0};
  t.entries_[0][1][0] = {1, 0, 0};
  t.entries_[0][1][1] = {1, 0, 0};
  return t;
}

WeightTable WeightTable::ascending() {
  WeightTable d = descending();
  WeightTable t;
  for (int in = 0; in < 2; ++in)
    for (int s = 0; s < 2; ++s) {
      t.entries_[in][0][s] = d.entries_[in][1][s];
      t.entries_[in][1][s] = d.entries_[in][0][s];
    }
  return t;
}

IntLaurent2 WeightTable::entry(bool in_state, Passage passage, int sign) const {
  const LocalWeight& w = local(in_state, passage, sign);
  return IntLaurent2::monomial(w.coeff, w.a_power, w.z_power);
}

ZeroPattern WeightTable::zeros() const {
  auto zero = [&](bool in, Passage p) {
    return local(in, p, 1).coeff == 0 && local(in, p, -1).coeff == 0;
  };
  return {zero(true, Passage::HeadFirst), zero(true, Passage::TailFirst), zero(false, Passage::HeadFirst),
          zero(false, Passage::TailFirst)};
}

namespace {

/// Product of local weights for a traced state.
LocalWeight multiply_locals(const GaussDiagram& g, ArrowSet state, const std::vector<Passage>& passage,
                            const WeightTable& table) {
  LocalWeight w{1, 0, 0};
  for (int a = 0; a < g.num_arrows(); ++a) {
    const LocalWeight& l = table.local(state.contains(a), passage[a], g.sign(a));
    w.coeff *= l.coeff;
    w.a_power += l.a_power;
    w.z_power += l.z_power;
  }
  return w;
}

/// Sums signed monomials per component count, then expands the unlink powers.
class Accumulator {
 public:
  void add(const LocalWeight& w, int components) {
    if (w.coeff == 0) return;
    auto [it, inserted] = counts_.try_emplace({w.a_power, w.z_power, components}, w.coeff);
    if (!inserted) it->second += w.coeff;
  }

  void merge(const Accumulator& other) {
    for (const auto& [key, c] : other.counts_) {
      auto [it, inserted] = counts_.try_emplace(key, c);
      if (!inserted) it->second += c;
    }
  }

  IntLaurent2 finish() const {
    std::map<int, IntLaurent2> powers;
    IntLaurent2 result;
    for (const auto& [key, c] : counts_) {
      auto [a, z, components] = key;
      if (c == 0) continue;
      auto it = powers.find(components);
      if (it == powers.end())
        it = powers.emplace(components, lp_pow(IntLaurent2::unlink_factor(), components - 1)).first;
      for (const auto& [k, v] : it->second.terms()) result.add_term(k.first + a, k.second + z, v * c);
    }
    return result;
  }

 private:
  std::map<std::tuple<int, int, int>, BigInt> counts_;
};

void accumulate_range(const GaussDiagram& g, const WeightTable& table, bool prune, std::uint64_t begin,
                      std::uint64_t end, Accumulator& acc) {
  TraceScratch scratch;
  const ZeroPattern zeros = prune ? table.zeros() : ZeroPattern{};
  for (std::uint64_t bits = begin; bits < end; ++bits) {
    ArrowSet state(bits);
    int c = trace_state(g, state, zeros, scratch);
    if (c == 0) continue;
    acc.add(multiply_locals(g, state, scratch.first_passage, table), c);
  }
}

}  // namespace

IntLaurent2 state_weight(const GaussDiagram& g, ArrowSet state, const WeightTable& table) {
  TraceResult tr = smooth_and_trace(g, state);
  LocalWeight w = multiply_locals(g, state, tr.first_passage, table);
  return IntLaurent2::monomial(w.coeff, w.a_power, w.z_power);
}

void for_each_state(int n, const std::function<void(ArrowSet)>& visit) {
  if (n < 0 || n > 63) throw std::invalid_argument("for_each_state: unsupported arrow count");
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (int k = 0; k <= n; ++k) {
    if (k == 0) {
      visit(ArrowSet(0));
      continue;
    }
    // Gosper's hack: next larger integer with the same popcount
    std::uint64_t bits = (std::uint64_t{1} << k) - 1;
    while (bits < limit) {
      visit(ArrowSet(bits));
      std::uint64_t low = bits & (~bits + 1);
      std::uint64_t ripple = bits + low;
      bits = (((ripple ^ bits) >> 2) / low) | ripple;
    }
  }
}

std::vector<std::pair<ArrowSet, IntLaurent2>> state_contributions(const GaussDiagram& g,
                                                                  const WeightTable& table) {
  std::vector<std::pair<ArrowSet, IntLaurent2>> out;
  const IntLaurent2 unlink = IntLaurent2::unlink_factor();
  for_each_state(g.num_arrows(), [&](ArrowSet s) {
    TraceResult tr = smooth_and_trace(g, s);
    LocalWeight w = multiply_locals(g, s, tr.first_passage, table);
    IntLaurent2 term = IntLaurent2::monomial(w.coeff, w.a_power, w.z_power);
    if (!term.is_zero()) term *= lp_pow(unlink, tr.components - 1);
    out.emplace_back(s, std::move(term));
  });
  return out;
}

IntLaurent2 homfly_statesum(const GaussDiagram& g, const WeightTable& table, const StateSumOptions& options) {
  const int n = g.num_arrows();
  if (n > 40) throw std::invalid_argument("state sum over more than 2^40 states is not supported");
  const std::uint64_t total = std::uint64_t{1} << n;
  const int threads = static_cast<int>(std::clamp<std::uint64_t>(options.threads, 1, total));
  if (threads == 1) {
    Accumulator acc;
    accumulate_range(g, table, options.prune, 0, total, acc);
    return acc.finish();
  }
  std::vector<Accumulator> partial(threads);
  {
    std::vector<std::jthread> workers;
    const std::uint64_t chunk = (total + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      std::uint64_t begin = std::min(total, chunk * t);
      std::uint64_t end = std::min(total, begin + chunk);
      workers.emplace_back([&, t, begin, end] { accumulate_range(g, table, options.prune, begin, end, partial[t]); });
    }
  }
  for (int t = 1; t < threads; ++t) partial[0].merge(partial[t]);
  return partial[0].finish();
}

IntLaurent2 homfly_descending(const GaussDiagram& g, const StateSumOptions& options) {
  return homfly_statesum(g, WeightTable::descending(), options);
}

IntLaurent2 homfly_ascending(const GaussDiagram& g, const StateSumOptions& options) {
  return homfly_statesum(g, WeightTable::ascending(), options);
}

// ---------------------------------------------------------------------------
// Skein recursion

namespace {

/// Number of slots traced before the first descent failure (all slots if
/// the diagram is descending), and the failing arrow.
std::pair<int, std::optional<int>> descending_prefix(const GaussDiagram& g) {
  std::vector<char> seen(g.num_arrows(), 0);
  int count = 0;
  for (const auto& circle : g.circles())
    for (const Slot& s : circle) {
      if (!seen[s.arrow]) {
        seen[s.arrow] = 1;
        if (s.end == End::Head) return {count, s.arrow};
      }
      ++count;
    }
  return {count, std::nullopt};
}

class SkeinSolver {
 public:
  explicit SkeinSolver(SkeinStats* stats) : stats_(stats) {}

  IntLaurent2 solve(const GaussDiagram& g) {
    CanonicalCode code = canonicalize(g);
    if (auto it = memo_.find(code); it != memo_.end()) return it->second;

    auto [prefix, failure] = descending_prefix(g);
    IntLaurent2 result;
    if (!failure) {
      result = lp_pow(IntLaurent2::unlink_factor(), g.num_circles() - 1);
      if (stats_ != nullptr) ++stats_->leaves;
    } else {
      if (stats_ != nullptr) ++stats_->steps;
      const int arrow = *failure;
      const int eps = g.sign(arrow);
      GaussDiagram flipped = crossing_flip(g, arrow);
      GaussDiagram smoothed = smooth_arrow(g, arrow);
      // termination measure: (arrow count, descending prefix) decreases lexicographically
      if (descending_prefix(flipped).first <= prefix)
        throw std::logic_error("skein recursion: flip did not extend the descending prefix");
      if (smoothed.num_arrows() >= g.num_arrows())
        throw std::logic_error("skein recursion: smoothing did not remove an arrow");
      // P(D^eps) = a^{-2 eps} P(D^{-eps}) + eps a^{-eps} z P(D^0)
      result = IntLaurent2::monomial(1, -2 * eps, 0) * solve(flipped) +
               IntLaurent2::monomial(eps, -eps, 1) * solve(smoothed);
    }
    memo_.emplace(std::move(code), result);
    return result;
  }

 private:
  SkeinStats* stats_;
  std::unordered_map<CanonicalCode, IntLaurent2, CanonicalCodeHash> memo_;
};

}  // namespace

std::optional<int> first_descent_failure(const GaussDiagram& g) { return descending_prefix(g).second; }

bool is_descending(const GaussDiagram& g) { return !first_descent_failure(g).has_value(); }

IntLaurent2 skein_homfly(const GaussDiagram& g, SkeinStats* stats) {
  SkeinSolver solver(stats);
  return solver.solve(g);
}

}  // namespace homfly
