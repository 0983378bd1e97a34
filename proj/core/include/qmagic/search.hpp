#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qmagic/operators.hpp"
#include "qmagic/words.hpp"

namespace qmagic {

struct SearchOptions {
  std::size_t node_budget = 400000;  // states expanded across both BFS frontiers
  std::size_t walks = 5000;
  int max_walk = 40;
  std::uint64_t seed = 1;
  double tol = 1e-9;
};

// Sorted |<s|psi>|^2 over the stabilizer dictionary; a Clifford invariant.
std::vector<double> overlap_invariant(const PureState& psi);
bool invariants_match(const PureState& a, const PureState& b, double tol = 1e-8);

// Word W over {H_i, S_i, CZ_ij} (inverses written as powers) with W a ~ b up to phase.
// nullopt is inconclusive.
std::optional<CliffordWord> clifford_equivalence_search(const PureState& a, const PureState& b,
                                                        const SearchOptions& opts = {});

}  // namespace qmagic
