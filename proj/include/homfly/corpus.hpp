#pragma once

// Test and demo diagrams: standard small links from PD codes and seeded
// Reidemeister mutations of them.

#include <cstdint>
#include <string>
#include <vector>

#include "homfly/codec.hpp"
#include "homfly/diagram.hpp"

namespace homfly {

struct CorpusEntry {
  std::string name;
  GaussDiagram diagram;
};

/// PD codes of the unknot, Hopf link, 3_1, 4_1, 5_1, 5_2 and 6_1.
std::vector<std::pair<std::string, PdCode>> standard_pd_codes();
std::vector<CorpusEntry> standard_links();

/// Left trefoil with base point chosen so that the arrows met are
/// O3 U1 O2 U3 O1 U2 (all negative).
GaussDiagram reference_trefoil();
/// Left trefoil read from the standard PD code.
GaussDiagram left_trefoil();

/// `count` diagrams, each a standard link followed by 1 to 4 random planar
/// Reidemeister moves, never exceeding max_arrows arrows.
std::vector<CorpusEntry> mutation_corpus(std::uint64_t seed, int count, int max_arrows);

/// standard_links() followed by mutation_corpus(seed, count, max_arrows).
std::vector<CorpusEntry> classical_corpus(std::uint64_t seed = 20240611, int count = 200, int max_arrows = 10);

}  // namespace homfly
