#include "homfly/diagram.hpp"

#include <algorithm>
#include <stdexcept>

namespace homfly {

ArrowSet::ArrowSet(std::initializer_list<int> arrows) {
  for (int a : arrows) bits_ |= std::uint64_t{1} << a;
}

std::vector<int> ArrowSet::members() const {
  std::vector<int> out;
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

// ---------------------------------------------------------------------------

GaussDiagram::GaussDiagram() : circles_(1) {}

GaussDiagram::GaussDiagram(std::vector<std::vector<Slot>> circles, std::vector<int> signs)
    : circles_(std::move(circles)), signs_(std::move(signs)) {
  if (circles_.empty()) throw std::invalid_argument("diagram needs at least one circle");
  const int n = num_arrows();
  if (n > ArrowSet::kMaxArrows) throw std::invalid_argument("too many arrows");
  for (int s : signs_)
    if (s != 1 && s != -1) throw std::invalid_argument("arrow sign must be +1 or -1");
  const Position unset{-1, -1};
  tails_.assign(n, unset);
  heads_.assign(n, unset);
  for (int c = 0; c < num_circles(); ++c) {
    for (int i = 0; i < static_cast<int>(circles_[c].size()); ++i) {
      const Slot& s = circles_[c][i];
      if (s.arrow < 0 || s.arrow >= n) throw std::invalid_argument("slot refers to unknown arrow");
      Position& slot = s.end == End::Head ? heads_[s.arrow] : tails_[s.arrow];
      if (slot != unset) throw std::invalid_argument("arrow endpoint used twice");
      slot = {c, i};
    }
  }
  for (int a = 0; a < n; ++a)
    if (tails_[a] == unset || heads_[a] == unset) throw std::invalid_argument("arrow missing an endpoint");
}

GaussDiagram GaussDiagram::unlink(int components) {
  if (components < 1) throw std::invalid_argument("unlink needs at least one component");
  return GaussDiagram(std::vector<std::vector<Slot>>(components), {});
}

int GaussDiagram::writhe() const {
  int w = 0;
  for (int s : signs_) w += s;
  return w;
}

int GaussDiagram::sign_product() const {
  int p = 1;
  for (int s : signs_) p *= s;
  return p;
}

// ---------------------------------------------------------------------------
// Canonical codes
//
// Layout: u16 circle count, then per circle a u16 length followed by three
// bytes per slot (u16 arrow label in first-appearance order, flag byte with
// bit 0 = head and bit 1 = negative sign). All integers big-endian.

namespace {

void put_u16(std::string& out, int v) {
  out.push_back(static_cast<char>((v >> 8) & 0xff));
  out.push_back(static_cast<char>(v & 0xff));
}

int get_u16(const std::string& in, std::size_t& pos) {
  if (pos + 2 > in.size()) throw std::invalid_argument("truncated canonical code");
  int v = (static_cast<unsigned char>(in[pos]) << 8) | static_cast<unsigned char>(in[pos + 1]);
  pos += 2;
  return v;
}

CanonicalCode encode(const GaussDiagram& g, bool with_signs) {
  std::vector<int> label(g.num_arrows(), -1);
  int next = 0;
  std::string out;
  out.reserve(2 + 2 * g.num_circles() + 3 * 2 * g.num_arrows());
  put_u16(out, g.num_circles());
  for (const auto& circle : g.circles()) {
    put_u16(out, static_cast<int>(circle.size()));
    for (const Slot& s : circle) {
      if (label[s.arrow] < 0) label[s.arrow] = next++;
      put_u16(out, label[s.arrow]);
      int flags = (s.end == End::Head ? 1 : 0);
      if (with_signs && g.sign(s.arrow) < 0) flags |= 2;
      out.push_back(static_cast<char>(flags));
    }
  }
  return CanonicalCode(std::move(out));
}

}  // namespace

std::string CanonicalCode::hex() const {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * bytes_.size());
  for (unsigned char c : bytes_) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 0xf]);
  }
  return out;
}

CanonicalCode CanonicalCode::from_hex(std::string_view hex) {
  if (hex.size() % 2 != 0) throw std::invalid_argument("odd-length hex code");
  auto nibble = [](char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    throw std::invalid_argument("invalid hex digit");
  };
  std::string bytes;
  for (std::size_t i = 0; i < hex.size(); i += 2)
    bytes.push_back(static_cast<char>((nibble(hex[i]) << 4) | nibble(hex[i + 1])));
  return CanonicalCode(std::move(bytes));
}

CanonicalCode canonicalize(const GaussDiagram& g) { return encode(g, true); }

CanonicalCode unsigned_code(const GaussDiagram& g) { return encode(g, false); }

GaussDiagram canonical_form(const GaussDiagram& g) {
  std::vector<int> label(g.num_arrows(), -1);
  std::vector<int> signs(g.num_arrows());
  int next = 0;
  auto circles = g.circles();
  for (auto& circle : circles)
    for (Slot& s : circle) {
      if (label[s.arrow] < 0) {
        label[s.arrow] = next;
        signs[next] = g.sign(s.arrow);
        ++next;
      }
      s.arrow = label[s.arrow];
    }
  return GaussDiagram(std::move(circles), std::move(signs));
}

GaussDiagram decode(const CanonicalCode& code) {
  const std::string& in = code.bytes();
  std::size_t pos = 0;
  int m = get_u16(in, pos);
  std::vector<std::vector<Slot>> circles(m);
  std::vector<int> signs;
  for (auto& circle : circles) {
    int len = get_u16(in, pos);
    for (int i = 0; i < len; ++i) {
      int label = get_u16(in, pos);
      if (pos >= in.size()) throw std::invalid_argument("truncated canonical code");
      int flags = static_cast<unsigned char>(in[pos++]);
      if (label >= static_cast<int>(signs.size())) signs.resize(label + 1, 0);
      int sign = (flags & 2) ? -1 : 1;
      if (signs[label] != 0 && signs[label] != sign) throw std::invalid_argument("inconsistent signs in code");
      signs[label] = sign;
      circle.push_back({label, (flags & 1) ? End::Head : End::Tail});
    }
  }
  if (pos != in.size()) throw std::invalid_argument("trailing bytes in canonical code");
  return GaussDiagram(std::move(circles), std::move(signs));
}

// ---------------------------------------------------------------------------

GaussDiagram subdiagram(const GaussDiagram& g, ArrowSet arrows) {
  std::vector<int> renumber(g.num_arrows(), -1);
  std::vector<int> signs;
  for (int a = 0; a < g.num_arrows(); ++a)
    if (arrows.contains(a)) {
      renumber[a] = static_cast<int>(signs.size());
      signs.push_back(g.sign(a));
    }
  std::vector<std::vector<Slot>> circles(g.num_circles());
  for (int c = 0; c < g.num_circles(); ++c)
    for (const Slot& s : g.circle(c))
      if (renumber[s.arrow] >= 0) circles[c].push_back({renumber[s.arrow], s.end});
  return GaussDiagram(std::move(circles), std::move(signs));
}

GaussDiagram crossing_flip(const GaussDiagram& g, ArrowSet arrows) {
  auto circles = g.circles();
  auto signs = g.signs();
  for (auto& circle : circles)
    for (Slot& s : circle)
      if (arrows.contains(s.arrow)) s.end = s.end == End::Head ? End::Tail : End::Head;
  for (int a : arrows.members()) {
    if (a >= g.num_arrows()) throw std::out_of_range("crossing_flip: no such arrow");
    signs[a] = -signs[a];
  }
  return GaussDiagram(std::move(circles), std::move(signs));
}

GaussDiagram crossing_flip(const GaussDiagram& g, int arrow) {
  if (arrow < 0 || arrow >= g.num_arrows()) throw std::out_of_range("crossing_flip: no such arrow");
  return crossing_flip(g, ArrowSet{arrow});
}

// ---------------------------------------------------------------------------
// Smoothing

namespace {

using Circles = std::vector<std::vector<Slot>>;

/// Smooths the arrow whose endpoint sits at circles[ci][p]; its partner must
/// lie later in trace order.
void smooth_at(Circles& circles, int ci, int p) {
  const Slot here = circles[ci][p];
  const End partner_end = here.end == End::Head ? End::Tail : End::Head;
  auto& cur = circles[ci];
  for (int q = p + 1; q < static_cast<int>(cur.size()); ++q) {
    if (cur[q].arrow == here.arrow && cur[q].end == partner_end) {
      // cur = A here B partner C  ->  circle i: A C, circle i+1: B
      std::vector<Slot> inner(cur.begin() + p + 1, cur.begin() + q);
      cur.erase(cur.begin() + p, cur.begin() + q + 1);
      circles.insert(circles.begin() + ci + 1, std::move(inner));
      return;
    }
  }
  for (int cj = ci + 1; cj < static_cast<int>(circles.size()); ++cj) {
    auto& other = circles[cj];
    for (int q = 0; q < static_cast<int>(other.size()); ++q) {
      if (other[q].arrow == here.arrow && other[q].end == partner_end) {
        // cur = A here B, other = C partner D  ->  A D C B
        std::vector<Slot> merged(cur.begin(), cur.begin() + p);
        merged.insert(merged.end(), other.begin() + q + 1, other.end());
        merged.insert(merged.end(), other.begin(), other.begin() + q);
        merged.insert(merged.end(), cur.begin() + p + 1, cur.end());
        cur = std::move(merged);
        circles.erase(circles.begin() + cj);
        return;
      }
    }
  }
  throw std::logic_error("smooth_at: partner endpoint precedes the smoothing point");
}

/// Locates the endpoint of `arrow` that comes first in the current circles.
Position locate_first(const Circles& circles, int arrow) {
  for (int c = 0; c < static_cast<int>(circles.size()); ++c)
    for (int i = 0; i < static_cast<int>(circles[c].size()); ++i)
      if (circles[c][i].arrow == arrow) return {c, i};
  throw std::logic_error("arrow not present");
}

int run_trace(const GaussDiagram& g, ArrowSet state, const ZeroPattern* zero, TraceScratch& sc,
              std::vector<int>* order) {
  const int n = g.num_arrows();
  sc.circles = g.circles();
  sc.first_passage.assign(n, Passage::TailFirst);
  sc.seen.assign(n, 0);
  auto& circles = sc.circles;
  for (int ci = 0; ci < static_cast<int>(circles.size()); ++ci) {
    int p = 0;
    while (p < static_cast<int>(circles[ci].size())) {
      const Slot slot = circles[ci][p];
      const bool in_state = state.contains(slot.arrow);
      if (!sc.seen[slot.arrow]) {
        sc.seen[slot.arrow] = 1;
        Passage passage = slot.end == End::Head ? Passage::HeadFirst : Passage::TailFirst;
        sc.first_passage[slot.arrow] = passage;
        if (zero != nullptr && zero->is_zero(in_state, passage)) return 0;
      }
      if (in_state) {
        if (order != nullptr) order->push_back(slot.arrow);
        smooth_at(circles, ci, p);
      } else {
        ++p;
      }
    }
  }
  return static_cast<int>(circles.size());
}

}  // namespace

TraceResult smooth_and_trace(const GaussDiagram& g, ArrowSet state) {
  if ((state.bits() & ~ArrowSet::all(g.num_arrows()).bits()) != 0)
    throw std::invalid_argument("state contains arrows not in the diagram");
  TraceScratch sc;
  TraceResult result;
  result.components = run_trace(g, state, nullptr, sc, &result.smoothing_order);
  result.first_passage = std::move(sc.first_passage);
  result.circles = std::move(sc.circles);
  return result;
}

int trace_state(const GaussDiagram& g, ArrowSet state, const ZeroPattern& zero, TraceScratch& scratch) {
  return run_trace(g, state, &zero, scratch, nullptr);
}

std::vector<std::vector<Slot>> smooth_in_order(const GaussDiagram& g, const std::vector<int>& order) {
  Circles circles = g.circles();
  for (int a : order) {
    Position p = locate_first(circles, a);
    smooth_at(circles, p.circle, p.index);
  }
  return circles;
}

GaussDiagram smooth_arrow(const GaussDiagram& g, int arrow) {
  if (arrow < 0 || arrow >= g.num_arrows()) throw std::out_of_range("smooth_arrow: no such arrow");
  Circles circles = g.circles();
  Position p = g.first_endpoint(arrow);
  smooth_at(circles, p.circle, p.index);
  for (auto& circle : circles)
    for (Slot& s : circle)
      if (s.arrow > arrow) --s.arrow;
  std::vector<int> signs = g.signs();
  signs.erase(signs.begin() + arrow);
  return GaussDiagram(std::move(circles), std::move(signs));
}

// ---------------------------------------------------------------------------

bool is_isolated(const GaussDiagram& g, int arrow) {
  Position t = g.tail(arrow);
  Position h = g.head(arrow);
  if (t.circle != h.circle) return false;
  const int lo = std::min(t.index, h.index);
  const int hi = std::max(t.index, h.index);
  std::vector<int> inside(g.num_arrows(), 0);
  const auto& circle = g.circle(t.circle);
  for (int i = lo + 1; i < hi; ++i) ++inside[circle[i].arrow];
  for (int a = 0; a < g.num_arrows(); ++a)
    if (a != arrow && inside[a] == 1) return false;
  return true;
}

bool has_isolated_arrow(const GaussDiagram& g) {
  for (int a = 0; a < g.num_arrows(); ++a)
    if (is_isolated(g, a)) return true;
  return false;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

void for_each_composition(int total, int parts, std::vector<int>& current,
                          const std::function<void(const std::vector<int>&)>& visit) {
  if (static_cast<int>(current.size()) == parts - 1) {
    current.push_back(total);
    visit(current);
    current.pop_back();
    return;
  }
  for (int first = 0; first <= total; ++first) {
    current.push_back(first);
    for_each_composition(total - first, parts, current, visit);
    current.pop_back();
  }
}

void for_each_matching(std::vector<int>& partner, const std::function<void()>& visit) {
  int first = -1;
  for (int i = 0; i < static_cast<int>(partner.size()); ++i)
    if (partner[i] < 0) {
      first = i;
      break;
    }
  if (first < 0) {
    visit();
    return;
  }
  for (int j = first + 1; j < static_cast<int>(partner.size()); ++j) {
    if (partner[j] >= 0) continue;
    partner[first] = j;
    partner[j] = first;
    for_each_matching(partner, visit);
    partner[first] = -1;
    partner[j] = -1;
  }
}

}  // namespace

void enumerate_arrow_diagrams(int n, int m, const std::function<void(const GaussDiagram&)>& visit) {
  if (n < 0 || m < 1) throw std::invalid_argument("enumerate_arrow_diagrams: need n >= 0, m >= 1");
  if (n > ArrowSet::kMaxArrows) throw std::invalid_argument("enumerate_arrow_diagrams: too many arrows");
  const int slots = 2 * n;
  std::vector<int> lengths;
  std::vector<int> partner(slots, -1);
  for_each_composition(slots, m, lengths, [&](const std::vector<int>& lens) {
    for_each_matching(partner, [&] {
      // arrow labels by first appearance: arrow k is the k-th opener
      std::vector<int> label(slots, -1);
      std::vector<int> opener;
      for (int i = 0; i < slots; ++i)
        if (partner[i] > i) {
          label[i] = label[partner[i]] = static_cast<int>(opener.size());
          opener.push_back(i);
        }
      const std::uint64_t combos = std::uint64_t{1} << n;
      for (std::uint64_t heads_first = 0; heads_first < combos; ++heads_first) {
        for (std::uint64_t negative = 0; negative < combos; ++negative) {
          std::vector<std::vector<Slot>> circles(m);
          int pos = 0;
          for (int c = 0; c < m; ++c)
            for (int k = 0; k < lens[c]; ++k, ++pos) {
              int a = label[pos];
              bool opening = opener[a] == pos;
              bool head = ((heads_first >> a) & 1U) ? opening : !opening;
              circles[c].push_back({a, head ? End::Head : End::Tail});
            }
          std::vector<int> signs(n);
          for (int a = 0; a < n; ++a) signs[a] = ((negative >> a) & 1U) ? -1 : 1;
          visit(GaussDiagram(std::move(circles), std::move(signs)));
        }
      }
    });
  });
}

std::vector<CanonicalCode> arrow_diagram_codes(int n, int m) {
  std::vector<CanonicalCode> out;
  enumerate_arrow_diagrams(n, m, [&](const GaussDiagram& g) { out.push_back(canonicalize(g)); });
  return out;
}

std::uint64_t arrow_diagram_count(int n, int m) {
  // C(2n+m-1, m-1)
  std::uint64_t binom = 1;
  for (int i = 1; i <= m - 1; ++i) binom = binom * (2 * n + i) / i;
  std::uint64_t matchings = 1;
  for (int i = 2 * n - 1; i > 1; i -= 2) matchings *= static_cast<std::uint64_t>(i);
  return binom * matchings * (std::uint64_t{1} << (2 * n));
}

}  // namespace homfly
