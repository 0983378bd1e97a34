#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "qmagic/operators.hpp"
#include "qmagic/stabilizer.hpp"

namespace qmagic {

struct WignerFunction {
  PrimeDim dims;
  std::vector<double> values;  // indexed by PhasePoint::index()

  double at(const PhasePoint& chi) const { return values.at(chi.index()); }
  double sum() const;
  double trace_norm() const;
};

// W_chi(O) = Tr(A_chi O) / d^N for any Hermitian O; odd d only.
WignerFunction wigner_function(const DenseOperator& o);
WignerFunction wigner_function(const PureState& psi);
// Real part of Tr(A_chi O) / d^N for a general matrix.
std::vector<double> wigner_values(const CMatrix& o, const PrimeDim& dims);

double wigner_trace_norm(const DenseOperator& rho);
double wigner_trace_norm(const PureState& psi);
double mana(const DenseOperator& rho);
double mana(const PureState& psi);

struct PauliDistribution {
  PrimeDim dims;
  std::vector<double> probs;  // indexed by PhasePoint::index() of the phase-reduced label
};

PauliDistribution pauli_distribution(const PureState& psi);

// Sum of P^alpha; alpha < 2 throws invalid_input unless allow_small_alpha.
double xi(const PureState& psi, double alpha, bool allow_small_alpha = false);
double sre(const PureState& psi, double alpha, bool allow_small_alpha = false);
double sre_upper_bound(const PrimeDim& dims, double alpha);
// -log( sum |Tr T rho|^4 / sum |Tr T rho|^2 )
double mixed_sre2(const DenseOperator& rho);

// K_chi(O1, O2) = Tr[O1 T_chi O2 T_chi^dag] / d^N
cplx wh_kernel_complex(const CMatrix& o1, const CMatrix& o2, const PhasePoint& chi, const PrimeDim& dims);
double wh_kernel(const DenseOperator& o1, const DenseOperator& o2, const PhasePoint& chi);

OverlapResult stabilizer_fidelity(const PureState& psi, const StabilizerDictionary& dict, double tie_tol = 1e-9);
OverlapResult stabilizer_fidelity(const PureState& psi, double tie_tol = 1e-9);
OverlapResult group_stabilizer_fidelity(const PureState& psi, std::span<const PureState> states, double tie_tol = 1e-9);

struct MeasureReport {
  std::optional<double> mana;
  std::optional<double> wigner_trace_norm;
  double stabilizer_fidelity = 0;
  int nearest_count = 0;
  std::map<double, double> sre;
  std::map<double, double> xi;
};

MeasureReport measure_report(const PureState& psi, const std::vector<double>& alphas = {2.0}, double tie_tol = 1e-9);

}  // namespace qmagic
