#include "homfly/codec.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <sstream>

namespace homfly {

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                         message),
      line_(line),
      column_(column),
      detail_(message) {}

// ---------------------------------------------------------------------------
// Gauss code

namespace {

struct Token {
  long id;
  End end;
  int sign;
  int line;
  int column;
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

}  // namespace

GaussDiagram parse_gauss_code(std::string_view text) {
  std::vector<std::vector<Token>> lines;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t stop = text.find('\n', start);
    if (stop == std::string_view::npos) stop = text.size();
    std::string_view line = text.substr(start, stop - start);
    ++line_no;
    start = stop + 1;

    std::size_t first = 0;
    while (first < line.size() && is_space(line[first])) ++first;
    if (first == line.size() || line[first] == '#') continue;

    std::vector<Token> tokens;
    bool empty_marker = false;
    std::size_t pos = first;
    while (pos < line.size()) {
      if (is_space(line[pos])) {
        ++pos;
        continue;
      }
      const int column = static_cast<int>(pos) + 1;
      std::size_t tok_end = pos;
      while (tok_end < line.size() && !is_space(line[tok_end])) ++tok_end;
      std::string_view tok = line.substr(pos, tok_end - pos);
      pos = tok_end;
      if (tok == ".") {
        if (empty_marker || !tokens.empty())
          throw ParseError(line_no, column, "'.' must be the only token on its line");
        empty_marker = true;
        continue;
      }
      if (empty_marker) throw ParseError(line_no, column, "'.' must be the only token on its line");
      if (tok.size() < 3 || (tok[0] != 'O' && tok[0] != 'U'))
        throw ParseError(line_no, column, "expected token O<id><sign> or U<id><sign>, got '" + std::string(tok) + "'");
      char sign_char = tok.back();
      if (sign_char != '+' && sign_char != '-')
        throw ParseError(line_no, column, "token '" + std::string(tok) + "' lacks a +/- sign");
      std::string_view digits = tok.substr(1, tok.size() - 2);
      if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
          digits.size() > 9)
        throw ParseError(line_no, column, "bad arrow id in token '" + std::string(tok) + "'");
      tokens.push_back({std::stol(std::string(digits)), tok[0] == 'U' ? End::Head : End::Tail,
                        sign_char == '+' ? 1 : -1, line_no, column});
    }
    lines.push_back(std::move(tokens));
  }
  if (lines.empty()) throw ParseError(1, 1, "empty input");

  struct Seen {
    const Token* over = nullptr;
    const Token* under = nullptr;
  };
  std::map<long, Seen> seen;
  for (const auto& line : lines)
    for (const Token& t : line) {
      Seen& s = seen[t.id];
      const Token*& slot = t.end == End::Head ? s.under : s.over;
      if (slot != nullptr)
        throw ParseError(t.line, t.column,
                         "arrow " + std::to_string(t.id) + " appears twice as " + (t.end == End::Head ? "U" : "O"));
      slot = &t;
      if (s.over != nullptr && s.under != nullptr && s.over->sign != s.under->sign)
        throw ParseError(t.line, t.column, "arrow " + std::to_string(t.id) + " has inconsistent signs");
    }
  std::map<long, int> index;
  std::vector<int> signs;
  for (const auto& [id, s] : seen) {
    const Token* present = s.over != nullptr ? s.over : s.under;
    if (s.over == nullptr || s.under == nullptr)
      throw ParseError(present->line, present->column,
                       "arrow " + std::to_string(id) + " must appear exactly once as O and once as U");
    index[id] = static_cast<int>(signs.size());
    signs.push_back(present->sign);
  }
  std::vector<std::vector<Slot>> circles;
  for (const auto& line : lines) {
    std::vector<Slot> circle;
    for (const Token& t : line) circle.push_back({index[t.id], t.end});
    circles.push_back(std::move(circle));
  }
  return GaussDiagram(std::move(circles), std::move(signs));
}

namespace {

std::string write_gauss(const GaussDiagram& g, bool with_signs) {
  std::ostringstream out;
  for (const auto& circle : g.circles()) {
    if (circle.empty()) {
      out << ".\n";
      continue;
    }
    bool first = true;
    for (const Slot& s : circle) {
      if (!first) out << ' ';
      first = false;
      out << (s.end == End::Head ? 'U' : 'O') << (s.arrow + 1);
      if (with_signs) out << (g.sign(s.arrow) > 0 ? '+' : '-');
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace

std::string to_gauss_code(const GaussDiagram& g) { return write_gauss(g, true); }

std::string to_unsigned_gauss_code(const GaussDiagram& g) { return write_gauss(g, false); }

// ---------------------------------------------------------------------------
// PD codes

namespace {

std::pair<int, int> line_column(std::string_view text, std::size_t byte) {
  int line = 1;
  int col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

PdCode parse_pd_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, col] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError(line, col, "invalid JSON");
  }
  PdCode pd;
  try {
    for (const auto& x : doc.at("crossings")) {
      if (!x.is_array() || x.size() != 4) throw ParseError(1, 1, "each crossing needs four edge labels");
      pd.crossings.push_back({x[0].get<long>(), x[1].get<long>(), x[2].get<long>(), x[3].get<long>()});
    }
    for (const auto& c : doc.at("components")) pd.base_edges.push_back(c.at("base_edge").get<long>());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(1, 1, std::string("malformed PD code: ") + e.what());
  }
  return pd;
}

nlohmann::json to_json(const PdCode& pd) {
  nlohmann::json crossings = nlohmann::json::array();
  for (const auto& x : pd.crossings) crossings.push_back({x[0], x[1], x[2], x[3]});
  nlohmann::json components = nlohmann::json::array();
  for (long e : pd.base_edges) components.push_back({{"base_edge", e}});
  return {{"crossings", crossings}, {"components", components}};
}

GaussDiagram from_pd_code(const PdCode& pd) {
  const int n = static_cast<int>(pd.crossings.size());
  if (pd.base_edges.empty()) throw std::invalid_argument("PD code lists no components");
  if (n > ArrowSet::kMaxArrows) throw std::invalid_argument("too many crossings");

  struct Occurrence {
    int crossing;
    int slot;
  };
  std::map<long, std::vector<Occurrence>> occurrences;
  for (int c = 0; c < n; ++c)
    for (int s = 0; s < 4; ++s) occurrences[pd.crossings[c][s]].push_back({c, s});
  for (const auto& [edge, occ] : occurrences) {
    if (occ.size() == 1) throw std::invalid_argument("dangling edge " + std::to_string(edge));
    if (occ.size() > 2)
      throw std::invalid_argument("edge " + std::to_string(edge) + " used " + std::to_string(occ.size()) + " times");
  }

  // direction[c][s]: +1 incoming, -1 outgoing, 0 unknown
  std::vector<std::array<int, 4>> direction(n, {0, 0, 0, 0});
  std::queue<Occurrence> pending;
  auto assign = [&](Occurrence o, int dir) {
    int& d = direction[o.crossing][o.slot];
    if (d == dir) return;
    if (d != 0) throw std::invalid_argument("non-orientable edge assignment");
    d = dir;
    pending.push(o);
  };
  auto propagate = [&] {
    while (!pending.empty()) {
      Occurrence o = pending.front();
      pending.pop();
      int dir = direction[o.crossing][o.slot];
      const auto& occ = occurrences[pd.crossings[o.crossing][o.slot]];
      for (const Occurrence& other : occ)
        if (other.crossing != o.crossing || other.slot != o.slot) assign(other, -dir);
      if (o.slot == 1 || o.slot == 3) assign({o.crossing, 4 - o.slot}, -dir);
    }
  };
  for (int c = 0; c < n; ++c) {
    assign({c, 0}, +1);
    assign({c, 2}, -1);
  }
  propagate();
  for (int c = 0; c < n; ++c) {
    if (direction[c][1] != 0) continue;
    // Over strand not reachable from any under strand: fall back to
    // consecutive labelling along the orientation.
    long j = pd.crossings[c][1];
    long l = pd.crossings[c][3];
    bool l_to_j = (j - l == 1) || (l - j > 1);
    assign({c, l_to_j ? 3 : 1}, +1);
    propagate();
  }

  std::vector<std::vector<Slot>> circles;
  std::set<long> visited;
  for (long base : pd.base_edges) {
    if (visited.count(base) != 0) throw std::invalid_argument("two components share base edge " + std::to_string(base));
    auto it = occurrences.find(base);
    std::vector<Slot> circle;
    if (it == occurrences.end()) {
      visited.insert(base);
      circles.push_back(std::move(circle));
      continue;
    }
    long edge = base;
    do {
      if (!visited.insert(edge).second) throw std::invalid_argument("edge " + std::to_string(edge) + " traced twice");
      const auto& occ = occurrences[edge];
      const Occurrence& in = direction[occ[0].crossing][occ[0].slot] == +1 ? occ[0] : occ[1];
      if (in.slot == 2) throw std::invalid_argument("non-orientable edge assignment");
      circle.push_back({in.crossing, in.slot == 0 ? End::Head : End::Tail});
      edge = pd.crossings[in.crossing][(in.slot + 2) % 4];
    } while (edge != base);
    circles.push_back(std::move(circle));
  }
  for (const auto& [edge, occ] : occurrences)
    if (visited.count(edge) == 0)
      throw std::invalid_argument("edge " + std::to_string(edge) + " is not on any listed component");

  std::vector<int> signs(n);
  for (int c = 0; c < n; ++c) signs[c] = direction[c][3] == +1 ? 1 : -1;
  return GaussDiagram(std::move(circles), std::move(signs));
}

GaussDiagram read_diagram(std::string_view text, InputFormat format) {
  if (format == InputFormat::Auto) {
    auto first = text.find_first_not_of(" \t\r\n");
    format = (first != std::string_view::npos && text[first] == '{') ? InputFormat::Pd : InputFormat::Gauss;
  }
  if (format == InputFormat::Pd) return from_pd_code(parse_pd_json(text));
  return parse_gauss_code(text);
}

}  // namespace homfly
