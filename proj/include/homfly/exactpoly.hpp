#pragma once

// Exact sparse arithmetic: Laurent polynomials in (a, z) with integer
// coefficients, and truncated power series in h with Laurent exponents in z
// and rational coefficients.

#include <map>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

namespace homfly {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "n/d" with d > 0, always including the denominator.
std::string fraction_string(const Rational& r);
/// "n" for integers, "n/d" otherwise.
std::string rational_string(const Rational& r);
/// Parses "n" or "n/d".
Rational parse_rational(const std::string& text);

/// Integer Laurent polynomial in a and z. Terms are keyed by (power of a,
/// power of z); no stored coefficient is zero.
class IntLaurent2 {
 public:
  using Key = std::pair<int, int>;
  using Terms = std::map<Key, BigInt>;

  IntLaurent2() = default;

  static IntLaurent2 constant(const BigInt& c);
  static IntLaurent2 monomial(const BigInt& c, int a_power, int z_power);
  /// (a - a^-1) / z, the value of the two-component unlink.
  static IntLaurent2 unlink_factor();

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  BigInt coeff(int a_power, int z_power) const;

  void add_term(int a_power, int z_power, const BigInt& c);

  IntLaurent2& operator+=(const IntLaurent2& other);
  IntLaurent2& operator-=(const IntLaurent2& other);
  IntLaurent2& operator*=(const IntLaurent2& other);

  friend IntLaurent2 operator+(IntLaurent2 p, const IntLaurent2& q) { return p += q; }
  friend IntLaurent2 operator-(IntLaurent2 p, const IntLaurent2& q) { return p -= q; }
  friend IntLaurent2 operator*(const IntLaurent2& p, const IntLaurent2& q);
  friend IntLaurent2 operator-(const IntLaurent2& p);
  friend bool operator==(const IntLaurent2& p, const IntLaurent2& q) = default;

 private:
  Terms terms_;
};

IntLaurent2 lp_add(const IntLaurent2& p, const IntLaurent2& q);
IntLaurent2 lp_mul(const IntLaurent2& p, const IntLaurent2& q);
IntLaurent2 lp_pow(const IntLaurent2& p, int n);

/// a -> a^-1.
IntLaurent2 mirror(const IntLaurent2& p);
/// Coefficient of z^l after setting a = 1.
BigInt coeff_at_a_one(const IntLaurent2& p, int z_power);
/// Smallest power of z with a nonzero coefficient; 0 for the zero polynomial.
int min_z_degree(const IntLaurent2& p);

/// Canonical text: terms sorted by (a-power, z-power) ascending, each printed
/// as `{sign}{|c|}*a^{i}*z^{j}`, separated by single spaces. Zero prints "0".
std::string to_text(const IntLaurent2& p);
/// Inverse of to_text.
IntLaurent2 parse_laurent(const std::string& text);
/// `{"terms":[[i,j,c],...]}`; coefficients outside the int64 range are strings.
nlohmann::json to_json(const IntLaurent2& p);

/// Power series in h truncated at h^cutoff, Laurent in z, rational coefficients.
class HZSeries {
 public:
  using Key = std::pair<int, int>;  // (h-degree, z-degree)
  using Terms = std::map<Key, Rational>;

  explicit HZSeries(int cutoff);

  static HZSeries one(int cutoff);
  /// e^{multiple * h}.
  static HZSeries exp(int multiple, int cutoff);

  int cutoff() const { return cutoff_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Throws std::out_of_range when k is negative or beyond the cutoff.
  Rational coeff(int k, int l) const;
  /// Terms beyond the cutoff are dropped.
  void add_term(int k, int l, const Rational& c);

  /// Multiplies every term by z^shift.
  HZSeries shifted_z(int shift) const;
  HZSeries scaled(const Rational& c) const;
  HZSeries truncated(int new_cutoff) const;

  friend bool operator==(const HZSeries& s, const HZSeries& t) = default;

 private:
  int cutoff_;
  Terms terms_;
};

/// Both operands must share the cutoff; throws std::invalid_argument otherwise.
HZSeries series_add(const HZSeries& s, const HZSeries& t);
HZSeries series_sub(const HZSeries& s, const HZSeries& t);
HZSeries series_mul(const HZSeries& s, const HZSeries& t);

/// a = e^h: each c a^i z^j becomes c z^j sum_{k<=K} (i h)^k / k!.
HZSeries substitute_exp(const IntLaurent2& p, int cutoff);
/// ((e^h - e^-h) / z)^(components - 1).
HZSeries unlink_series(int components, int cutoff);

/// Coefficient of h^k z^l in substitute_exp(p, k), without building the series.
Rational exp_coefficient(const IntLaurent2& p, int k, int l);

/// `{"cutoff":K,"terms":[[k,l,"n/d"],...]}`.
nlohmann::json to_json(const HZSeries& s);

}  // namespace homfly
