#include "homfly/exactpoly.hpp"

#include <charconv>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace homfly {

std::string fraction_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

std::string rational_string(const Rational& r) {
  if (boost::multiprecision::denominator(r) == 1) return boost::multiprecision::numerator(r).str();
  return fraction_string(r);
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational: " + text);
  }
}

// ---------------------------------------------------------------------------
// IntLaurent2

IntLaurent2 IntLaurent2::constant(const BigInt& c) { return monomial(c, 0, 0); }

IntLaurent2 IntLaurent2::monomial(const BigInt& c, int a_power, int z_power) {
  IntLaurent2 p;
  p.add_term(a_power, z_power, c);
  return p;
}

IntLaurent2 IntLaurent2::unlink_factor() {
  IntLaurent2 p;
  p.add_term(1, -1, 1);
  p.add_term(-1, -1, -1);
  return p;
}

BigInt IntLaurent2::coeff(int a_power, int z_power) const {
  auto it = terms_.find({a_power, z_power});
  return it == terms_.end() ? BigInt(0) : it->second;
}

void IntLaurent2::add_term(int a_power, int z_power, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({a_power, z_power}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

IntLaurent2& IntLaurent2::operator+=(const IntLaurent2& other) {
  for (const auto& [key, c] : other.terms_) add_term(key.first, key.second, c);
  return *this;
}

IntLaurent2& IntLaurent2::operator-=(const IntLaurent2& other) {
  for (const auto& [key, c] : other.terms_) add_term(key.first, key.second, -c);
  return *this;
}

IntLaurent2& IntLaurent2::operator*=(const IntLaurent2& other) {
  *this = *this * other;
  return *this;
}

IntLaurent2 operator*(const IntLaurent2& p, const IntLaurent2& q) {
  IntLaurent2 r;
  for (const auto& [kp, cp] : p.terms_)
    for (const auto& [kq, cq] : q.terms_)
      r.add_term(kp.first + kq.first, kp.second + kq.second, cp * cq);
  return r;
}

IntLaurent2 operator-(const IntLaurent2& p) {
  IntLaurent2 r;
  for (const auto& [key, c] : p.terms_) r.terms_.emplace(key, -c);
  return r;
}

IntLaurent2 lp_add(const IntLaurent2& p, const IntLaurent2& q) { return p + q; }

IntLaurent2 lp_mul(const IntLaurent2& p, const IntLaurent2& q) { return p * q; }

IntLaurent2 lp_pow(const IntLaurent2& p, int n) {
  if (n < 0) throw std::invalid_argument("lp_pow: negative exponent");
  IntLaurent2 result = IntLaurent2::constant(1);
  IntLaurent2 base = p;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

IntLaurent2 mirror(const IntLaurent2& p) {
  IntLaurent2 r;
  for (const auto& [key, c] : p.terms()) r.add_term(-key.first, key.second, c);
  return r;
}

BigInt coeff_at_a_one(const IntLaurent2& p, int z_power) {
  BigInt sum = 0;
  for (const auto& [key, c] : p.terms())
    if (key.second == z_power) sum += c;
  return sum;
}

int min_z_degree(const IntLaurent2& p) {
  if (p.is_zero()) return 0;
  int best = std::numeric_limits<int>::max();
  for (const auto& [key, c] : p.terms()) best = std::min(best, key.second);
  return best;
}

std::string to_text(const IntLaurent2& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, c] : p.terms()) {
    if (!first) out << ' ';
    first = false;
    out << (c < 0 ? '-' : '+') << (c < 0 ? BigInt(-c) : c) << "*a^" << key.first << "*z^"
        << key.second;
  }
  return out.str();
}

namespace {

int parse_int_exact(std::string_view s, const std::string& whole) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument("malformed polynomial term: " + whole);
  return value;
}

}  // namespace

IntLaurent2 parse_laurent(const std::string& text) {
  IntLaurent2 p;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    if (token == "0") continue;
    auto star_a = token.find("*a^");
    auto star_z = token.find("*z^");
    if (token.size() < 2 || (token[0] != '+' && token[0] != '-') || star_a == std::string::npos ||
        star_z == std::string::npos || star_z < star_a)
      throw std::invalid_argument("malformed polynomial term: " + token);
    BigInt c;
    try {
      c = BigInt(token.substr(1, star_a - 1));
    } catch (const std::runtime_error&) {
      throw std::invalid_argument("malformed polynomial term: " + token);
    }
    if (token[0] == '-') c = -c;
    std::string_view view(token);
    int i = parse_int_exact(view.substr(star_a + 3, star_z - star_a - 3), token);
    int j = parse_int_exact(view.substr(star_z + 3), token);
    p.add_term(i, j, c);
  }
  return p;
}

namespace {

nlohmann::json big_to_json(const BigInt& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(c);
  return c.str();
}

}  // namespace

nlohmann::json to_json(const IntLaurent2& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [key, c] : p.terms()) terms.push_back({key.first, key.second, big_to_json(c)});
  return {{"terms", terms}};
}

// ---------------------------------------------------------------------------
// HZSeries

HZSeries::HZSeries(int cutoff) : cutoff_(cutoff) {
  if (cutoff < 0) throw std::invalid_argument("HZSeries: negative cutoff");
}

HZSeries HZSeries::one(int cutoff) {
  HZSeries s(cutoff);
  s.add_term(0, 0, 1);
  return s;
}

HZSeries HZSeries::exp(int multiple, int cutoff) {
  HZSeries s(cutoff);
  Rational term = 1;
  for (int k = 0; k <= cutoff; ++k) {
    s.add_term(k, 0, term);
    term = term * multiple / (k + 1);
  }
  return s;
}

Rational HZSeries::coeff(int k, int l) const {
  if (k < 0 || k > cutoff_) throw std::out_of_range("HZSeries::coeff: h-degree beyond cutoff");
  auto it = terms_.find({k, l});
  return it == terms_.end() ? Rational(0) : it->second;
}

void HZSeries::add_term(int k, int l, const Rational& c) {
  if (k < 0) throw std::invalid_argument("HZSeries: negative h-degree");
  if (k > cutoff_ || c == 0) return;
  auto [it, inserted] = terms_.try_emplace({k, l}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

HZSeries HZSeries::shifted_z(int shift) const {
  HZSeries r(cutoff_);
  for (const auto& [key, c] : terms_) r.terms_.emplace(Key{key.first, key.second + shift}, c);
  return r;
}

HZSeries HZSeries::scaled(const Rational& c) const {
  HZSeries r(cutoff_);
  if (c == 0) return r;
  for (const auto& [key, v] : terms_) r.terms_.emplace(key, v * c);
  return r;
}

HZSeries HZSeries::truncated(int new_cutoff) const {
  if (new_cutoff > cutoff_)
    throw std::invalid_argument("HZSeries::truncated: cannot extend beyond the stored cutoff");
  HZSeries r(new_cutoff);
  for (const auto& [key, c] : terms_)
    if (key.first <= new_cutoff) r.terms_.emplace(key, c);
  return r;
}

namespace {

void require_same_cutoff(const HZSeries& s, const HZSeries& t) {
  if (s.cutoff() != t.cutoff()) throw std::invalid_argument("HZSeries: cutoff mismatch");
}

}  // namespace

HZSeries series_add(const HZSeries& s, const HZSeries& t) {
  require_same_cutoff(s, t);
  HZSeries r = s;
  for (const auto& [key, c] : t.terms()) r.add_term(key.first, key.second, c);
  return r;
}

HZSeries series_sub(const HZSeries& s, const HZSeries& t) {
  require_same_cutoff(s, t);
  HZSeries r = s;
  for (const auto& [key, c] : t.terms()) r.add_term(key.first, key.second, -c);
  return r;
}

HZSeries series_mul(const HZSeries& s, const HZSeries& t) {
  require_same_cutoff(s, t);
  HZSeries r(s.cutoff());
  for (const auto& [ks, cs] : s.terms())
    for (const auto& [kt, ct] : t.terms())
      if (ks.first + kt.first <= s.cutoff())
        r.add_term(ks.first + kt.first, ks.second + kt.second, cs * ct);
  return r;
}

HZSeries substitute_exp(const IntLaurent2& p, int cutoff) {
  HZSeries r(cutoff);
  for (const auto& [key, c] : p.terms()) {
    // c * (i h)^k / k!
    Rational term(c);
    for (int k = 0; k <= cutoff; ++k) {
      r.add_term(k, key.second, term);
      term = term * key.first / (k + 1);
      if (term == 0) break;
    }
  }
  return r;
}

HZSeries unlink_series(int components, int cutoff) {
  if (components < 1) throw std::invalid_argument("unlink_series: need at least one component");
  // e^h - e^-h = 2 sum_{k odd} h^k / k!
  HZSeries factor(cutoff);
  Rational term = 1;
  for (int k = 0; k <= cutoff; ++k) {
    if (k % 2 == 1) factor.add_term(k, -1, 2 * term);
    term = term / (k + 1);
  }
  HZSeries result = HZSeries::one(cutoff);
  for (int i = 1; i < components; ++i) result = series_mul(result, factor);
  return result;
}

Rational exp_coefficient(const IntLaurent2& p, int k, int l) {
  if (k < 0) throw std::out_of_range("exp_coefficient: negative h-degree");
  BigInt sum = 0;
  for (const auto& [key, c] : p.terms())
    if (key.second == l) sum += c * boost::multiprecision::pow(BigInt(key.first), k);
  BigInt factorial = 1;
  for (int i = 2; i <= k; ++i) factorial *= i;
  return Rational(sum, factorial);
}

nlohmann::json to_json(const HZSeries& s) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [key, c] : s.terms()) terms.push_back({key.first, key.second, fraction_string(c)});
  return {{"cutoff", s.cutoff()}, {"terms", terms}};
}

}  // namespace homfly
