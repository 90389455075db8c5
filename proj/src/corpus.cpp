#include "homfly/corpus.hpp"

#include <random>

#include "homfly/moves.hpp"

namespace homfly {

std::vector<std::pair<std::string, PdCode>> standard_pd_codes() {
  return {
      {"unknot", {{}, {1}}},
      {"hopf", {{{4, 1, 3, 2}, {2, 3, 1, 4}}, {1, 3}}},
      {"3_1", {{{1, 4, 2, 5}, {3, 6, 4, 1}, {5, 2, 6, 3}}, {1}}},
      {"4_1", {{{4, 2, 5, 1}, {8, 6, 1, 5}, {6, 3, 7, 4}, {2, 7, 3, 8}}, {1}}},
      {"5_1", {{{1, 6, 2, 7}, {3, 8, 4, 9}, {5, 10, 6, 1}, {7, 2, 8, 3}, {9, 4, 10, 5}}, {1}}},
      {"5_2", {{{1, 4, 2, 5}, {3, 8, 4, 9}, {5, 10, 6, 1}, {9, 6, 10, 7}, {7, 2, 8, 3}}, {1}}},
      {"6_1", {{{1, 4, 2, 5}, {7, 10, 8, 11}, {3, 9, 4, 8}, {9, 3, 10, 2}, {5, 12, 6, 1}, {11, 6, 12, 7}}, {1}}},
  };
}

std::vector<CorpusEntry> standard_links() {
  std::vector<CorpusEntry> out;
  for (const auto& [name, pd] : standard_pd_codes()) out.push_back({name, from_pd_code(pd)});
  return out;
}

GaussDiagram reference_trefoil() { return parse_gauss_code("O3- U1- O2- U3- O1- U2-"); }

GaussDiagram left_trefoil() { return from_pd_code(standard_pd_codes()[2].second); }

std::vector<CorpusEntry> mutation_corpus(std::uint64_t seed, int count, int max_arrows) {
  std::mt19937_64 rng(seed);
  const std::vector<CorpusEntry> bases = standard_links();
  std::vector<CorpusEntry> out;
  for (int i = 0; i < count; ++i) {
    const CorpusEntry& base = bases[i % bases.size()];
    GaussDiagram g = base.diagram;
    const int steps = 1 + static_cast<int>(rng() % 4);
    for (int s = 0; s < steps; ++s) {
      auto next = random_classical_mutation(g, rng, max_arrows);
      if (!next) break;
      g = std::move(next->diagram);
    }
    out.push_back({base.name + "/mut" + std::to_string(i), std::move(g)});
  }
  return out;
}

std::vector<CorpusEntry> classical_corpus(std::uint64_t seed, int count, int max_arrows) {
  std::vector<CorpusEntry> out = standard_links();
  for (auto& e : mutation_corpus(seed, count, max_arrows)) out.push_back(std::move(e));
  return out;
}

}  // namespace homfly
