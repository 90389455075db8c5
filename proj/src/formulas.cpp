#include "homfly/formulas.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>
#include <tuple>

#include "homfly/codec.hpp"
#include "homfly/statesum.hpp"

namespace homfly {

namespace {

/// Calls visit(subset) for every subset of n arrows with exactly s members.
template <typename F>
void for_each_subset(int n, int s, F&& visit) {
  if (s < 0 || s > n) return;
  if (s == 0) {
    visit(ArrowSet(0));
    return;
  }
  const std::uint64_t limit = n >= 64 ? 0 : std::uint64_t{1} << n;
  std::uint64_t bits = (s >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << s) - 1);
  while (true) {
    visit(ArrowSet(bits));
    std::uint64_t low = bits & (~bits + 1);
    std::uint64_t ripple = bits + low;
    if (ripple == 0) return;
    bits = (((ripple ^ bits) >> 2) / low) | ripple;
    if (limit != 0 && bits >= limit) return;
  }
}

std::vector<std::pair<int, int>> degree_pairs(int max_degree, int m) {
  std::vector<std::pair<int, int>> out;
  for (int k = 0; k <= max_degree + m - 1; ++k)
    for (int l = std::max(1 - m, -k); k + l <= max_degree; ++l) out.emplace_back(k, l);
  return out;
}

void check_degree(int k, int l, int m) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  if (k + l < 0) throw std::invalid_argument("k + l must be non-negative");
  if (m < 1) throw std::invalid_argument("m must be positive");
}

int epsilon(const GaussDiagram& g) { return g.sign_product(); }

}  // namespace

ArrowWeightTable ArrowWeightTable::standard(int cutoff) {
  ArrowWeightTable t(cutoff);
  const HZSeries one = HZSeries::one(cutoff);
  t.entries_[index(true, Passage::HeadFirst, 1)] = HZSeries::exp(-1, cutoff).shifted_z(1);
  t.entries_[index(true, Passage::HeadFirst, -1)] = HZSeries::exp(1, cutoff).shifted_z(1).scaled(-1);
  t.entries_[index(false, Passage::HeadFirst, 1)] = series_sub(HZSeries::exp(-2, cutoff), one);
  t.entries_[index(false, Passage::HeadFirst, -1)] = series_sub(HZSeries::exp(2, cutoff), one);
  return t;
}

IntLaurent2 weight_laurent(const GaussDiagram& a) {
  const int n = a.num_arrows();
  if (n > 30) throw std::invalid_argument("weight_laurent: too many arrows");
  const ZeroPattern not_ascending{false, true, false, true};
  TraceScratch scratch;
  // (a-power, z-power, components) -> coefficient
  std::map<std::tuple<int, int, int>, long long> acc;
  std::map<int, long long> poly;
  std::map<int, long long> next;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    const ArrowSet state(bits);
    const int c = trace_state(a, state, not_ascending, scratch);
    if (c == 0) continue;
    poly.clear();
    poly[0] = 1;
    for (int x = 0; x < n; ++x) {
      const int eps = a.sign(x);
      next.clear();
      if (state.contains(x)) {
        // eps a^-eps z
        for (const auto& [p, v] : poly) next[p - eps] += eps * v;
      } else {
        // a^-2eps - 1
        for (const auto& [p, v] : poly) {
          next[p - 2 * eps] += v;
          next[p] -= v;
        }
      }
      poly.swap(next);
    }
    for (const auto& [p, v] : poly)
      if (v != 0) acc[{p, state.size(), c}] += v;
  }
  std::map<int, IntLaurent2> unlink_powers;
  IntLaurent2 result;
  for (const auto& [key, v] : acc) {
    if (v == 0) continue;
    const auto [ap, zp, c] = key;
    auto it = unlink_powers.find(c);
    if (it == unlink_powers.end()) it = unlink_powers.emplace(c, lp_pow(IntLaurent2::unlink_factor(), c - 1)).first;
    for (const auto& [e, coeff] : it->second.terms()) result.add_term(e.first + ap, e.second + zp, coeff * v);
  }
  return result;
}

HZSeries weight_series(const GaussDiagram& a, int cutoff) { return substitute_exp(weight_laurent(a), cutoff); }

HZSeries weight_series_direct(const GaussDiagram& a, int cutoff) {
  const ArrowWeightTable table = ArrowWeightTable::standard(cutoff);
  HZSeries total(cutoff);
  for_each_state(a.num_arrows(), [&](ArrowSet state) {
    TraceResult tr = smooth_and_trace(a, state);
    HZSeries term = HZSeries::one(cutoff);
    bool tail_first = false;
    for (int x = 0; x < a.num_arrows(); ++x) {
      tail_first = tail_first || tr.first_passage[x] == Passage::TailFirst;
      term = series_mul(term, table.entry(state.contains(x), tr.first_passage[x], a.sign(x)));
    }
    term = series_mul(term, unlink_series(tr.components, cutoff));
    if (tail_first && !term.is_zero()) throw std::logic_error("non-ascending state with nonzero weight");
    total = series_add(total, term);
  });
  return total;
}

IntLaurent2 WeightCache::get(const GaussDiagram& a) { return get(canonicalize(a), a); }

IntLaurent2 WeightCache::get(const CanonicalCode& code, const GaussDiagram& a) {
  {
    std::lock_guard lock(mutex_);
    if (auto it = values_.find(code); it != values_.end()) return it->second;
  }
  IntLaurent2 w = weight_laurent(a);
  std::lock_guard lock(mutex_);
  return values_.try_emplace(code, std::move(w)).first->second;
}

std::size_t WeightCache::size() const {
  std::lock_guard lock(mutex_);
  return values_.size();
}

void WeightCache::clear() {
  std::lock_guard lock(mutex_);
  values_.clear();
}

WeightCache& default_weight_cache() {
  static WeightCache cache;
  return cache;
}

Rational w_kl(const GaussDiagram& a, int k, int l) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  if (a.num_arrows() > k + l) return Rational(0);
  return exp_coefficient(default_weight_cache().get(a), k, l);
}

void FormulaCombo::add(const CanonicalCode& code, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(code, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms.erase(it);
}

std::map<std::pair<int, int>, FormulaCombo> generate_Akl_table(int max_degree, int m, bool skip_isolated) {
  check_degree(0, max_degree, m);
  const auto pairs = degree_pairs(max_degree, m);
  std::map<std::pair<int, int>, FormulaCombo> table;
  for (auto [k, l] : pairs) table[{k, l}] = FormulaCombo{k, l, m, k, {}};
  for (int n = 0; n <= max_degree; ++n)
    enumerate_arrow_diagrams(n, m, [&](const GaussDiagram& a) {
      if (skip_isolated && has_isolated_arrow(a)) return;
      const IntLaurent2 w = weight_laurent(a);
      if (w.is_zero()) return;
      const CanonicalCode code = canonicalize(a);
      for (auto [k, l] : pairs)
        if (n <= k + l) table[{k, l}].add(code, exp_coefficient(w, k, l));
    });
  return table;
}

FormulaCombo generate_Akl(int k, int l, int m, bool skip_isolated) {
  check_degree(k, l, m);
  FormulaCombo combo{k, l, m, k, {}};
  for (int n = 0; n <= k + l; ++n)
    enumerate_arrow_diagrams(n, m, [&](const GaussDiagram& a) {
      if (skip_isolated && has_isolated_arrow(a)) return;
      combo.add(canonicalize(a), exp_coefficient(weight_laurent(a), k, l));
    });
  return combo;
}

long long pairing(const GaussDiagram& a, const GaussDiagram& g) {
  if (a.num_circles() != g.num_circles()) throw std::invalid_argument("pairing: circle counts differ");
  const CanonicalCode target = canonicalize(a);
  long long count = 0;
  for_each_subset(g.num_arrows(), a.num_arrows(), [&](ArrowSet b) {
    if (canonicalize(subdiagram(g, b)) == target) ++count;
  });
  return count;
}

Rational evaluate_combo(const FormulaCombo& combo, const GaussDiagram& g) {
  if (combo.m != g.num_circles()) throw std::invalid_argument("evaluate_combo: circle counts differ");
  std::set<int> sizes;
  for (const auto& [code, c] : combo.terms) sizes.insert(decode(code).num_arrows());
  Rational total(0);
  for (int s : sizes)
    for_each_subset(g.num_arrows(), s, [&](ArrowSet b) {
      auto it = combo.terms.find(canonicalize(subdiagram(g, b)));
      if (it != combo.terms.end()) total += it->second;
    });
  return total;
}

Rational evaluate_pkl(const GaussDiagram& g, int k, int l) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  Rational total(0);
  WeightCache& cache = default_weight_cache();
  for (int s = 0; s <= std::min(k + l, g.num_arrows()); ++s)
    for_each_subset(g.num_arrows(), s, [&](ArrowSet b) {
      GaussDiagram sub = subdiagram(g, b);
      total += exp_coefficient(cache.get(canonicalize(sub), sub), k, l);
    });
  return total;
}

std::map<std::pair<int, int>, Rational> evaluate_pkl_table(const GaussDiagram& g, int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("max degree must be non-negative");
  const auto pairs = degree_pairs(max_degree, g.num_circles());
  std::map<std::pair<int, int>, Rational> table;
  for (auto kl : pairs) table[kl] = Rational(0);
  WeightCache& cache = default_weight_cache();
  for (int s = 0; s <= std::min(max_degree, g.num_arrows()); ++s)
    for_each_subset(g.num_arrows(), s, [&](ArrowSet b) {
      GaussDiagram sub = subdiagram(g, b);
      const IntLaurent2 w = cache.get(canonicalize(sub), sub);
      for (auto [k, l] : pairs)
        if (s <= k + l) table[{k, l}] += exp_coefficient(w, k, l);
    });
  return table;
}

Rational homfly_coefficient(const GaussDiagram& g, int k, int l) {
  return exp_coefficient(homfly_descending(g), k, l);
}

// ---------------------------------------------------------------------------
// Simplified p_{1,2}

namespace {

/// Adds coeff * eps(A) * A for every sign pattern A of the unsigned diagram.
void add_unsigned_class(FormulaCombo& combo, const std::string& gauss, const Rational& coeff) {
  const GaussDiagram base = parse_gauss_code(gauss);
  const int n = base.num_arrows();
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    std::vector<int> signs(n, 1);
    for (int x = 0; x < n; ++x)
      if ((bits >> x) & 1U) signs[x] = -1;
    GaussDiagram g(base.circles(), signs);
    combo.add(canonicalize(g), coeff * epsilon(g));
  }
}

}  // namespace

const FormulaCombo& simplified_p12_combo() {
  static const FormulaCombo combo = [] {
    FormulaCombo c{1, 2, 1, 1, {}};
    // 3-arrow classes, each weighted by the sign product of the arrows
    for (const char* gauss : {"U1+ O2+ O3+ O1+ U2+ U3+", "U1+ U2+ O3+ O1+ O2+ U3+", "U1+ U2+ O1+ O3+ O2+ U3+",
                              "U1+ O2+ O3+ O1+ U3+ U2+", "U1+ U2+ O3+ O2+ O1+ U3+"})
      add_unsigned_class(c, gauss, Rational(-2));
    c.add(canonicalize(parse_gauss_code("U1+ O2+ O1+ U2+")), Rational(-2));
    c.add(canonicalize(parse_gauss_code("U1- O2- O1- U2-")), Rational(2));
    return c;
  }();
  return combo;
}

Rational simplified_p12(const GaussDiagram& g) { return evaluate_combo(simplified_p12_combo(), g); }

Rational vassiliev_defect(const GaussDiagram& g, const std::vector<int>& arrows, int k, int l) {
  const int count = k + l + 1;
  if (k < 0 || count < 1) throw std::invalid_argument("vassiliev_defect: need k >= 0 and k + l >= 0");
  if (g.num_arrows() < count) throw std::invalid_argument("vassiliev_defect: too few arrows in the diagram");
  if (static_cast<int>(arrows.size()) != count)
    throw std::invalid_argument("vassiliev_defect: exactly k + l + 1 arrows are required");
  std::set<int> distinct(arrows.begin(), arrows.end());
  if (static_cast<int>(distinct.size()) != count || *distinct.begin() < 0 || *distinct.rbegin() >= g.num_arrows())
    throw std::invalid_argument("vassiliev_defect: arrows must be distinct arrows of the diagram");
  Rational total(0);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << count); ++bits) {
    ArrowSet flips;
    for (int i = 0; i < count; ++i)
      if ((bits >> i) & 1U) flips = flips.with(arrows[i]);
    const Rational p = homfly_coefficient(crossing_flip(g, flips), k, l);
    if (std::popcount(bits) % 2 == 0)
      total += p;
    else
      total -= p;
  }
  return total;
}

// ---------------------------------------------------------------------------
// Export

std::vector<UnsignedTerm> unsigned_terms(const FormulaCombo& combo) {
  std::map<CanonicalCode, std::vector<std::pair<GaussDiagram, Rational>>> groups;
  for (const auto& [code, c] : combo.terms) {
    GaussDiagram g = decode(code);
    groups[unsigned_code(g)].emplace_back(std::move(g), c);
  }
  std::vector<UnsignedTerm> out;
  for (const auto& [ucode, members] : groups) {
    const int n = members.front().first.num_arrows();
    const Rational base = members.front().second * epsilon(members.front().first);
    const bool pattern = members.size() == (std::size_t{1} << n) &&
                         std::all_of(members.begin(), members.end(),
                                     [&](const auto& m) { return m.second == base * epsilon(m.first); });
    if (pattern) {
      out.push_back({ucode, base, true});
    } else {
      for (const auto& [g, c] : members) out.push_back({canonicalize(g), c, false});
    }
  }
  return out;
}

nlohmann::json to_json(const FormulaCombo& combo) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [code, c] : combo.terms)
    terms.push_back({{"diagram", to_gauss_code(decode(code))}, {"coeff", fraction_string(c)}});
  return {{"k", combo.k}, {"l", combo.l}, {"m", combo.m}, {"terms", terms}};
}

nlohmann::json to_unsigned_json(const FormulaCombo& combo) {
  nlohmann::json terms = nlohmann::json::array();
  for (const UnsignedTerm& t : unsigned_terms(combo)) {
    const GaussDiagram g = decode(t.code);
    terms.push_back({{"diagram", t.grouped ? to_unsigned_gauss_code(g) : to_gauss_code(g)},
                     {"coeff", rational_string(t.coeff)},
                     {"signed", !t.grouped}});
  }
  return {{"k", combo.k}, {"l", combo.l}, {"m", combo.m}, {"terms", terms}};
}

}  // namespace homfly
