#include "homfly/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "homfly/codec.hpp"
#include "homfly/corpus.hpp"
#include "homfly/formulas.hpp"
#include "homfly/moves.hpp"
#include "homfly/statesum.hpp"

namespace homfly {

namespace {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class VerifyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input;
  std::string input_format = "auto";
  std::string format = "text";
  std::string method = "statesum";
  int threads = 1;
  int k = -1;
  int l = 0;
  int m = 1;
  int max_degree = -1;
  int cutoff = 3;
  bool verify = false;
  bool unsigned_mode = false;
  bool keep_isolated = false;
  std::uint64_t seed = 1;
  int iters = 100;
  int probes = -1;
};

std::string read_text(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw InputError("cannot open " + path);
    buf << file.rdbuf();
  }
  return buf.str();
}

GaussDiagram load(const Options& o, std::istream& in) {
  InputFormat f = InputFormat::Auto;
  if (o.input_format == "gauss") f = InputFormat::Gauss;
  if (o.input_format == "pd") f = InputFormat::Pd;
  const std::string text = read_text(o.input, in);
  try {
    return read_diagram(text, f);
  } catch (const ParseError& e) {
    throw InputError(o.input + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " + e.detail());
  } catch (const std::invalid_argument& e) {
    throw InputError(o.input + ": " + e.what());
  }
}

void print_poly(std::ostream& out, const IntLaurent2& p, const Options& o) {
  if (o.format == "json")
    out << to_json(p).dump() << '\n';
  else
    out << to_text(p) << '\n';
}

int cmd_homfly(const Options& o, std::istream& in, std::ostream& out) {
  const GaussDiagram g = load(o, in);
  const StateSumOptions sso{true, o.threads};
  IntLaurent2 p;
  if (o.method == "statesum") {
    p = homfly_descending(g, sso);
  } else if (o.method == "ascending") {
    p = homfly_ascending(g, sso);
  } else if (o.method == "skein") {
    p = skein_homfly(g);
  } else {
    p = homfly_descending(g, sso);
    const IntLaurent2 s = skein_homfly(g);
    if (s != p) throw VerifyError("state sum " + to_text(p) + " differs from skein " + to_text(s));
  }
  print_poly(out, p, o);
  return kExitOk;
}

int cmd_states(const Options& o, std::istream& in, std::ostream& out) {
  const GaussDiagram g = load(o, in);
  const WeightTable table = o.method == "ascending" ? WeightTable::ascending() : WeightTable::descending();
  for (const auto& [s, term] : state_contributions(g, table)) {
    out << '{';
    bool first = true;
    for (int x : s.members()) {
      out << (first ? "" : ",") << (x + 1);
      first = false;
    }
    out << "} " << to_text(term) << '\n';
  }
  return kExitOk;
}

int cmd_pkl(const Options& o, std::istream& in, std::ostream& out) {
  const GaussDiagram g = load(o, in);
  std::map<std::pair<int, int>, Rational> values;
  if (o.max_degree >= 0) {
    values = evaluate_pkl_table(g, o.max_degree);
  } else {
    if (o.k < 0) throw InputError("pkl needs --k and --l, or --max-degree");
    values[{o.k, o.l}] = evaluate_pkl(g, o.k, o.l);
  }
  if (o.verify) {
    const IntLaurent2 p = homfly_descending(g, {true, o.threads});
    for (const auto& [kl, v] : values) {
      const Rational expected = exp_coefficient(p, kl.first, kl.second);
      if (expected != v)
        throw VerifyError("p(" + std::to_string(kl.first) + "," + std::to_string(kl.second) + "): formula " +
                          rational_string(v) + ", polynomial " + rational_string(expected));
    }
  }
  if (o.format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& [kl, v] : values) rows.push_back({{"k", kl.first}, {"l", kl.second}, {"value", fraction_string(v)}});
    out << nlohmann::json{{"values", rows}}.dump() << '\n';
  } else if (o.max_degree < 0) {
    out << rational_string(values.begin()->second) << '\n';
  } else {
    for (const auto& [kl, v] : values)
      out << "p(" << kl.first << "," << kl.second << ") = " << rational_string(v) << '\n';
  }
  return kExitOk;
}

int cmd_gen_akl(const Options& o, std::ostream& out) {
  if (o.k < 0) throw InputError("gen-akl needs --k >= 0");
  if (o.k + o.l < 0) throw InputError("gen-akl needs k + l >= 0");
  if (o.m < 1) throw InputError("gen-akl needs --m >= 1");
  const FormulaCombo combo = generate_Akl(o.k, o.l, o.m, !o.keep_isolated);
  out << (o.unsigned_mode ? to_unsigned_json(combo) : to_json(combo)).dump(2) << '\n';
  return kExitOk;
}

int cmd_series(const Options& o, std::istream& in, std::ostream& out) {
  if (o.cutoff < 0) throw InputError("--cutoff must be non-negative");
  const GaussDiagram g = load(o, in);
  const HZSeries s = substitute_exp(homfly_descending(g, {true, o.threads}), o.cutoff);
  if (o.format == "json") {
    out << to_json(s).dump() << '\n';
  } else {
    for (const auto& [key, c] : s.terms())
      out << "h^" << key.first << "*z^" << key.second << " " << rational_string(c) << '\n';
  }
  return kExitOk;
}

int cmd_canon(const Options& o, std::istream& in, std::ostream& out) {
  const GaussDiagram g = canonical_form(load(o, in));
  out << canonicalize(g).hex() << '\n' << to_gauss_code(g);
  return kExitOk;
}

int cmd_fuzz(const Options& o, std::ostream& out) {
  std::mt19937_64 rng(o.seed);
  const std::vector<CorpusEntry> bases = standard_links();
  const int max_arrows = 8;
  int mutations = 0;
  for (int i = 0; i < o.iters; ++i) {
    const CorpusEntry& base = bases[i % bases.size()];
    const IntLaurent2 expected = homfly_descending(base.diagram);
    GaussDiagram g = base.diagram;
    const int steps = 1 + static_cast<int>(rng() % 4);
    for (int s = 0; s < steps; ++s) {
      auto next = random_classical_mutation(g, rng, max_arrows);
      if (!next) break;
      ++mutations;
      const IntLaurent2 p = homfly_descending(next->diagram);
      if (p != expected) {
        std::ostringstream msg;
        msg << "R-move changed P on " << base.name << " (iteration " << i << ")\nbefore:\n"
            << to_gauss_code(g) << "move: " << describe(next->move) << "\nafter:\n"
            << to_gauss_code(next->diagram) << "expected " << to_text(expected) << "\ngot " << to_text(p);
        throw VerifyError(msg.str());
      }
      g = std::move(next->diagram);
    }
  }
  const int probes = o.probes >= 0 ? o.probes : o.iters / 2;
  int done = 0;
  for (int i = 0; i < probes; ++i) {
    GaussDiagram g = bases[rng() % bases.size()].diagram;
    for (int s = static_cast<int>(rng() % 3); s > 0; --s)
      if (auto next = random_classical_mutation(g, rng, 6)) g = std::move(next->diagram);
    const int d = static_cast<int>(rng() % 3);
    if (g.num_arrows() < d + 1) continue;
    const int k = static_cast<int>(rng() % (d + 1));
    const int l = d - k;
    std::vector<int> arrows(g.num_arrows());
    std::iota(arrows.begin(), arrows.end(), 0);
    std::shuffle(arrows.begin(), arrows.end(), rng);
    arrows.resize(d + 1);
    ++done;
    const Rational defect = vassiliev_defect(g, arrows, k, l);
    if (defect != 0) {
      std::ostringstream msg;
      msg << "nonzero Vassiliev defect " << rational_string(defect) << " for (k,l)=(" << k << "," << l << ")\n"
          << to_gauss_code(g);
      throw VerifyError(msg.str());
    }
  }
  out << "seed " << o.seed << "\n";
  out << "r-move mutations: " << mutations << ", failures: 0\n";
  out << "vassiliev probes: " << done << ", failures: 0\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"HOMFLYPT polynomial and its Vassiliev coefficients from Gauss diagrams", "homfly"};
  app.require_subcommand(1);
  Options o;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", o.input, "Gauss code or PD JSON file, or - for standard input")->required();
    sub->add_option("--input-format", o.input_format, "auto, gauss or pd")
        ->check(CLI::IsMember({"auto", "gauss", "pd"}));
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  };

  auto* homfly = app.add_subcommand("homfly", "HOMFLYPT polynomial");
  add_input(homfly);
  add_format(homfly);
  homfly->add_option("--method", o.method, "statesum, ascending, skein or both")
      ->check(CLI::IsMember({"statesum", "ascending", "skein", "both"}));
  homfly->add_option("--threads", o.threads, "worker threads for the state sum")->check(CLI::Range(1, 256));

  auto* states = app.add_subcommand("states", "per-state contributions of the state sum");
  add_input(states);
  states->add_option("--method", o.method, "statesum or ascending")
      ->check(CLI::IsMember({"statesum", "ascending"}));

  auto* pkl = app.add_subcommand("pkl", "coefficients p_{k,l} from Gauss diagram formulas");
  add_input(pkl);
  add_format(pkl);
  pkl->add_option("--k", o.k)->check(CLI::NonNegativeNumber);
  pkl->add_option("--l", o.l);
  pkl->add_option("--max-degree", o.max_degree, "all k + l <= D")->check(CLI::NonNegativeNumber);
  pkl->add_flag("--verify", o.verify, "compare with the expansion of the polynomial");
  pkl->add_option("--threads", o.threads)->check(CLI::Range(1, 256));

  auto* gen = app.add_subcommand("gen-akl", "the combination A_{k,l} as JSON");
  gen->add_option("--k", o.k)->required()->check(CLI::NonNegativeNumber);
  gen->add_option("--l", o.l)->required();
  gen->add_option("--m", o.m, "number of circles")->check(CLI::PositiveNumber);
  gen->add_flag("--unsigned", o.unsigned_mode, "group sign variants into unsigned classes");
  gen->add_flag("--keep-isolated", o.keep_isolated, "evaluate diagrams with isolated arrows too");

  auto* series = app.add_subcommand("series", "P at a = e^h as a truncated series");
  add_input(series);
  add_format(series);
  series->add_option("--cutoff", o.cutoff, "highest power of h")->check(CLI::NonNegativeNumber);
  series->add_option("--threads", o.threads)->check(CLI::Range(1, 256));

  auto* canon = app.add_subcommand("canon", "canonical code and normalized Gauss code");
  add_input(canon);

  auto* fuzz = app.add_subcommand("fuzz", "random Reidemeister moves and Vassiliev probes");
  fuzz->add_option("--seed", o.seed);
  fuzz->add_option("--iters", o.iters, "mutation chains")->check(CLI::NonNegativeNumber);
  fuzz->add_option("--probes", o.probes, "Vassiliev probes (default iters / 2)")->check(CLI::NonNegativeNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*homfly) return cmd_homfly(o, in, out);
    if (*states) return cmd_states(o, in, out);
    if (*pkl) return cmd_pkl(o, in, out);
    if (*gen) return cmd_gen_akl(o, out);
    if (*series) return cmd_series(o, in, out);
    if (*canon) return cmd_canon(o, in, out);
    if (*fuzz) return cmd_fuzz(o, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const VerifyError& e) {
    err << "verification failed: " << e.what() << '\n';
    return kExitVerify;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitVerify;
  }
  return kExitInput;
}

}  // namespace homfly
