#pragma once

#include <array>
#include <random>
#include <span>
#include <vector>

#include "qmagic/operators.hpp"
#include "qmagic/stabilizer.hpp"

namespace qmagic {

// psi(eps) = (psi + eps phi) / sqrt(1 + eps^2) with <phi|psi> = 0.
struct PerturbationFrame {
  PureState base;
  PureState direction;
  CMatrix sigma;  // |phi><psi| + |psi><phi|
  CMatrix mu;     // |phi><phi| - |psi><psi|

  PureState at(double eps) const;
};

// Throws invalid_input unless |<phi|psi>| < tol.
PerturbationFrame make_frame(const PureState& psi, const PureState& phi, double tol = 1e-9);

enum class Measure { mana, fidelity, xi2 };
enum class CriticalKind { sharp_min, smooth_max, smooth_min, flat, inflection, undetermined };
const char* to_string(Measure m);
const char* to_string(CriticalKind k);

struct CriticalReport {
  Measure measure = Measure::fidelity;
  CriticalKind kind = CriticalKind::undetermined;
  int leading_order = 0;
  double leading_coefficient = 0;
};

// Rows: nearest stabilizer states of basis[0]; columns: basis[1..]. Entry <phi|s><s|psi>.
CMatrix l_matrix(std::span<const PureState> basis, const StabilizerDictionary& dict, double tie_tol = 1e-9);
// W_ij = sum_chi sign[W_chi(psi_i)] W_chi(psi_j), sign(x) = 0 for |x| < zero_tol.
Eigen::MatrixXd w_matrix(std::span<const PureState> basis, double zero_tol = 1e-10);

struct ManaExpansion {
  double linear_abs_coeff = 0;     // coefficient of |eps|/(1+eps^2)
  double smooth_linear_coeff = 0;  // sum over supp W(psi) of sign W(psi) W(sigma)
  double quadratic_coeff = 0;      // coefficient of eps^2/(1+eps^2) when the linear terms vanish
  bool vanishing_pattern_ok = false;  // W(sigma) = 0 wherever W(psi) = 0
  double zero_tol = 1e-10;
  CriticalReport report;
};

ManaExpansion mana_expansion(const PerturbationFrame& frame, double zero_tol = 1e-10);

struct FidelityExpansion {
  std::vector<double> linear;     // <s|sigma|s> = 2 Re l per nearest state
  std::vector<double> quadratic;  // <s|mu|s> per nearest state
  CriticalReport report;
};

FidelityExpansion fidelity_expansion(const PerturbationFrame& frame, const StabilizerDictionary& dict,
                                     double tie_tol = 1e-9, double zero_tol = 1e-10);

struct Xi2Expansion {
  std::array<double, 9> tilde{};   // coefficients of (1+eps^2)^4 Xi_2
  std::array<double, 9> coeffs{};  // coefficients of Xi_2 itself
};

Xi2Expansion xi2_expansion(const PerturbationFrame& frame);
// Classification of Xi_2 (not M_2) along the path.
CriticalReport classify_xi2(const std::array<double, 9>& coeffs, double tol = 1e-9);

// Orthonormal basis of the complement of psi.
std::vector<PureState> orthogonal_complement(const PureState& psi);
// e^{i phi_1} cos(theta) |b_1> + e^{i phi_2} sin(theta) |b_2>
PureState two_angle_direction(const PureState& b1, const PureState& b2, double theta, double phi1, double phi2);
PureState phase_direction(const PureState& b, double phi);
PureState random_direction(const PureState& psi, std::mt19937_64& rng);

}  // namespace qmagic
