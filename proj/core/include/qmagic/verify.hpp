#pragma once

// Regression checks of the catalog against its stored values, the stated
// Clifford equivalences, and eigenstate sweeps over Clifford operators.

#include <optional>
#include <string>
#include <vector>

#include "qmagic/operators.hpp"

namespace qmagic {

struct Check {
  std::string name;
  std::string expected_exact;
  double expected = 0;
  double got = 0;
  double abs_error = 0;
  double tol = 0;
  bool pass = false;
};

struct VerifyReport {
  std::vector<Check> checks;

  void add(std::string name, std::string exact, double expected, double got, double tol);
  // Records a condition whose value is a residual that must stay below tol.
  void add_residual(std::string name, double residual, double tol);
  std::size_t failures() const;
  bool passed() const { return failures() == 0; }
};

VerifyReport verify_catalog(double tol = 1e-9);
VerifyReport verify_equivalences(double tol = 1e-9);

struct Equivalence {
  std::string name;
  std::string word;
  std::string from;  // catalog name, or "0|" + name for |0> tensor the state
  std::string to;
  std::optional<cplx> phase;  // <to| W |from> when the relation fixes it
};
const std::vector<Equivalence>& stated_equivalences();

struct EigenClass {
  PureState representative;
  std::vector<std::string> sources;  // operator label per eigenstate found in the class
  bool stabilizer = false;
  double fidelity = 0;
  int nearest_count = 0;
  std::vector<std::string> catalog_matches;
};

struct SweepResult {
  std::size_t operators = 0;
  std::size_t eigenstates = 0;
  std::vector<EigenClass> classes;
  std::size_t nonstabilizer_classes() const;
};

// Groups the non-degenerate eigenstates of the given operators into Clifford orbits,
// using the overlap invariant as a pre-filter and the enumerated Clifford group to decide.
SweepResult eigenstate_sweep(const PrimeDim& dims, const std::vector<CMatrix>& operators,
                             const std::vector<std::string>& labels, double tol = 1e-8);
// All reduced Clifford unitaries of one qudit.
SweepResult single_qudit_sweep(int d, double tol = 1e-8);
// The 21 two-qubit class representatives.
SweepResult two_qubit_sweep(double tol = 1e-8);

// Searches the enumerated reduced Clifford group for U with U a ~ b.
bool clifford_equivalent(const PureState& a, const PureState& b, double tol = 1e-8);
const std::vector<CMatrix>& cached_clifford_unitaries(const PrimeDim& dims);

}  // namespace qmagic
