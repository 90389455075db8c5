#pragma once

// Gauss diagram formulas for the coefficients p_{k,l} of the HOMFLYPT
// polynomial after a = e^h.
//
// W(A) = sum_S <A|S> ((e^h - e^-h)/z)^(c(S)-1) with local weights
//   (in S, head first)      +: e^-h z      -: -e^h z
//   (not in S, head first)  +: e^-2h - 1   -: e^2h - 1
//   tail first              0
// w_{k,l}(A) is its h^k z^l coefficient, A_{k,l} = sum_A w_{k,l}(A) A, and
// p_{k,l}(G) = <A_{k,l}, G>.

#include <map>
#include <mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "homfly/diagram.hpp"
#include "homfly/exactpoly.hpp"

namespace homfly {

class ArrowWeightTable {
 public:
  static ArrowWeightTable standard(int cutoff);

  const HZSeries& entry(bool in_state, Passage passage, int sign) const {
    return entries_[index(in_state, passage, sign)];
  }
  int cutoff() const { return cutoff_; }

 private:
  static int index(bool in_state, Passage passage, int sign) {
    return (in_state ? 4 : 0) + (passage == Passage::HeadFirst ? 0 : 2) + (sign > 0 ? 0 : 1);
  }
  explicit ArrowWeightTable(int cutoff) : cutoff_(cutoff), entries_(8, HZSeries(cutoff)) {}
  int cutoff_;
  std::vector<HZSeries> entries_;
};

/// W(A) as a Laurent polynomial in a and z; W(A) itself is its image under
/// a = e^h. Only ascending states are traced.
IntLaurent2 weight_laurent(const GaussDiagram& a);

/// W(A) truncated at h^K through the Laurent route.
HZSeries weight_series(const GaussDiagram& a, int cutoff);
/// W(A) from the series table directly, state by state. Throws
/// std::logic_error if a state with a tail-first arrow is nonzero.
HZSeries weight_series_direct(const GaussDiagram& a, int cutoff);

/// Thread-safe memo of weight_laurent keyed by canonical code.
class WeightCache {
 public:
  IntLaurent2 get(const GaussDiagram& a);
  IntLaurent2 get(const CanonicalCode& code, const GaussDiagram& a);
  std::size_t size() const;
  void clear();

 private:
  mutable std::mutex mutex_;
  std::unordered_map<CanonicalCode, IntLaurent2, CanonicalCodeHash> values_;
};

WeightCache& default_weight_cache();

/// Coefficient of h^k z^l in W(A) (series cut at h^k).
Rational w_kl(const GaussDiagram& a, int k, int l);

struct FormulaCombo {
  int k = 0;
  int l = 0;
  int m = 1;
  int cutoff = 0;
  std::map<CanonicalCode, Rational> terms;

  void add(const CanonicalCode& code, const Rational& c);
  friend bool operator==(const FormulaCombo&, const FormulaCombo&) = default;
};

/// Enumerates every diagram with at most k + l arrows on m circles.
/// skip_isolated drops diagrams containing an isolated arrow unevaluated.
FormulaCombo generate_Akl(int k, int l, int m, bool skip_isolated = true);

/// All A_{k,l} with k >= 0, l >= 1 - m and k + l <= max_degree, sharing one
/// weight computation per diagram.
std::map<std::pair<int, int>, FormulaCombo> generate_Akl_table(int max_degree, int m, bool skip_isolated = true);

/// Number of arrow subsets of G whose subdiagram equals A.
long long pairing(const GaussDiagram& a, const GaussDiagram& g);
Rational evaluate_combo(const FormulaCombo& combo, const GaussDiagram& g);

/// Sum over arrow subsets B of G with |B| <= k + l of w_{k,l}(G_B).
Rational evaluate_pkl(const GaussDiagram& g, int k, int l);
/// evaluate_pkl for every (k, l) with k >= 0, l >= 1 - m, k + l <= max_degree.
std::map<std::pair<int, int>, Rational> evaluate_pkl_table(const GaussDiagram& g, int max_degree);

/// Taylor coefficient of h^k z^l in P(G) at a = e^h, from the state sum.
Rational homfly_coefficient(const GaussDiagram& g, int k, int l);

/// Seven-term combination for p_{1,2} on classical knots: -2 times two
/// triangle classes and one chain class per base-point position (each
/// weighted by its sign product), -2 on U1+ O2+ O1+ U2+, +2 on U1- O2- O1- U2-.
const FormulaCombo& simplified_p12_combo();
Rational simplified_p12(const GaussDiagram& g);

/// Alternating sum over the 2^(k+l+1) crossing changes of the chosen arrows
/// of p_{k,l}. Throws std::invalid_argument unless exactly k + l + 1
/// distinct arrows of G are given.
Rational vassiliev_defect(const GaussDiagram& g, const std::vector<int>& arrows, int k, int l);

struct UnsignedTerm {
  /// Unsigned Gauss code when `grouped`, signed code otherwise.
  CanonicalCode code;
  Rational coeff;
  /// All sign variants present with coefficients eps(A) * coeff.
  bool grouped = false;
};

/// Groups signed terms whose diagrams differ only by signs. Classes that do
/// not follow the eps(A) pattern stay as signed terms.
std::vector<UnsignedTerm> unsigned_terms(const FormulaCombo& combo);

nlohmann::json to_json(const FormulaCombo& combo);
nlohmann::json to_unsigned_json(const FormulaCombo& combo);

}  // namespace homfly
