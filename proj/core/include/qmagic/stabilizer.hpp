#pragma once

#include <optional>
#include <vector>

#include "qmagic/operators.hpp"
#include "qmagic/zd.hpp"

namespace qmagic {

struct StabilizerState {
  IsotropicSubspace subspace;
  PhasePoint displacement;  // lexicographically smallest coset representative
  PureState state;          // first nonzero amplitude real-positive
};

// joint eigenstate |M, chi>; throws invalid_stabilizer when the projector vanishes
StabilizerState stabilizer_state(const IsotropicSubspace& subspace, const PhasePoint& chi);

// Coset label of chi relative to the subspace: (<chi, b_i>) over its basis.
std::vector<int> coset_label(const IsotropicSubspace& subspace, const PhasePoint& chi);

class StabilizerDictionary {
 public:
  explicit StabilizerDictionary(const PrimeDim& dims);

  const PrimeDim& dims() const { return dims_; }
  const std::vector<StabilizerState>& states() const { return states_; }
  const std::vector<IsotropicSubspace>& subspaces() const { return subspaces_; }
  std::size_t size() const { return states_.size(); }
  // Columns are the state vectors.
  const CMatrix& matrix() const { return columns_; }
  // Index of the state with the given subspace and displacement coset.
  std::optional<std::size_t> find(std::size_t subspace_index, const PhasePoint& chi) const;

 private:
  PrimeDim dims_;
  std::vector<IsotropicSubspace> subspaces_;
  std::vector<StabilizerState> states_;
  std::vector<std::vector<std::vector<int>>> labels_;  // per subspace, per state slot
  std::vector<std::vector<std::size_t>> slots_;
  CMatrix columns_;
};

// d^N prod_{i=1..N} (d^i + 1)
long long stabilizer_state_count(const PrimeDim& dims);

// Shared dictionary per dims (built on first use, thread-safe).
const StabilizerDictionary& stabilizer_dictionary(const PrimeDim& dims);

struct OverlapResult {
  double value = 0.0;
  std::vector<std::size_t> argmax;  // indices into the dictionary
};

OverlapResult max_overlap(const PureState& psi, const StabilizerDictionary& dict, double tie_tol = 1e-9);
// All squared overlaps |<s|psi>|^2 in dictionary order.
std::vector<double> overlaps(const PureState& psi, const StabilizerDictionary& dict);

}  // namespace qmagic
