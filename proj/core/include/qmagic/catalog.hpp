#pragma once

// Named states with closed-form amplitudes and their tabulated values.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qmagic/operators.hpp"
#include "qmagic/words.hpp"

namespace qmagic {

struct ExactValue {
  std::string exact;  // closed form as text
  double value = 0;   // evaluated from a 32-digit literal
};

struct EigenOperator {
  CliffordWord word;
  cplx eigenvalue;  // <psi|U|psi> of the constructed state
};

// Keys of CatalogEntry::expected.
inline constexpr const char* kTraceNorm = "wigner_trace_norm";
inline constexpr const char* kFidelity = "stabilizer_fidelity";
inline constexpr const char* kSre2 = "sre2";

struct CatalogEntry {
  std::string name;
  PrimeDim dims;
  PureState state;
  std::map<std::string, ExactValue> expected;
  std::optional<int> expected_nearest_count;
  std::optional<EigenOperator> eigen_operator;
  // Non-degenerate Clifford eigenstate, so extent = 1 / fidelity.
  bool clifford_stabilizer = false;
};

// Throws unknown_name.
const CatalogEntry& catalog_entry(const std::string& name);
PureState build(const std::string& name);
std::vector<std::string> catalog_names();
// Names starting with the prefix ("qutrit:", "2q:", ...), in catalog order.
std::vector<std::string> catalog_names(const std::string& prefix);

// Ququint constants: chi_c = sqrt((5+sqrt5)/10), eta_pm, kappa_pm.
struct QuquintConstants {
  double chi_c;
  double eta_plus, eta_minus;
  double kappa_plus, kappa_minus;
};
QuquintConstants ququint_constants();

// Orbit representatives of the two-qubit Clifford conjugacy classes, 1..21.
const std::vector<std::string>& two_qubit_class_representatives();

}  // namespace qmagic
