#pragma once

// Doubled five-qubit-code distillation of (|T0 T0> - |T1 T1>)/sqrt2.
// Ten qubits are ordered A1 B1 A2 B2 ... A5 B5, so each pair is one 4-dim factor.

#include <array>
#include <span>
#include <string>
#include <vector>

#include "qmagic/operators.hpp"

namespace qmagic {

// rho = (1 - e1 - e2 - e3)|psi0><psi0| + sum e_i |psi_i><psi_i| + (a + ib)|psi0><psi3| + h.c.
struct PairParams {
  double eps1 = 0, eps2 = 0, eps3 = 0;
  double a = 0, b = 0;

  // 4x4 in the pair basis.
  CMatrix density() const;
  bool valid(double tol = 1e-12) const;
};

// psi0 = (T0T0 - T1T1)/sqrt2, psi1 = T0T1, psi2 = T1T0, psi3 = (T0T0 + T1T1)/sqrt2.
std::array<PureState, 4> pair_basis();
// Columns are the pair basis in the computational basis.
CMatrix pair_basis_matrix();
// T' = e^{i pi/4} S H.
CMatrix t_hat();

struct CodeSpec {
  std::vector<PauliElement> generators;
  DenseOperator projector() const;  // prod (I + g)/2
  static CodeSpec five_qubit();
};

// Projector of the code on A and B in the interleaved ten-qubit ordering, computational basis.
CMatrix doubled_projector();
// Logical pair basis psi_n^L (columns), interleaved computational basis, with
// |T0_L> = sqrt6 Pi |T1...1> and |T1_L> = sqrt6 Pi |T0...0>.
CMatrix logical_pair_basis();
// The same columns expressed in the product pair basis (1024 x 4).
CMatrix logical_pair_basis_in_pair_basis();

struct TOverlap {
  std::string bits;  // x_1..x_5
  int weight = 0;
  double overlap = 0;  // <T_x|Pi|T_x>
  // For weights 2 and 3: arg <T_ref|Pi|T_x>, ref = T_1...1 for weight 2 and T_0...0 for weight 3.
  double phase = 0;
};

std::vector<TOverlap> project_T_overlaps();

struct StepResult {
  PairParams out;
  double p_success = 0;
  CMatrix logical;                  // 4x4 post-selected logical density matrix in the logical pair basis
  double structure_residual = 0;    // largest off-form element of `logical`
};

// Throws invalid_input when some input is not a density matrix.
StepResult distill_step(std::span<const PairParams, 5> params);
StepResult distill_step(const PairParams& identical);
std::vector<StepResult> iterate_protocol(const PairParams& params, int rounds);

// Closed forms for eps1 = eps2 = a = b = 0, eps3 = eps.
double success_probability_exact(double eps);
double output_error_exact(double eps);

// I, T'xT'^-1, T'^2xT'^-2 with weight 1/3, then I or the entangling Clifford with weight 1/2.
// Computational basis in and out.
CMatrix dephase_pair(const CMatrix& rho);

}  // namespace qmagic
