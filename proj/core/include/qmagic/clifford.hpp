#pragma once

#include <span>
#include <utility>
#include <vector>

#include "qmagic/operators.hpp"
#include "qmagic/zd.hpp"

namespace qmagic {

struct CliffordElement {
  DenseOperator unitary;
  ZdMatrix symplectic;      // S_C
  PhasePoint displacement;  // a_C
};

// Single-qudit gates; for d = 2 the usual qubit H and S = diag(1, i).
CMatrix hadamard_matrix(int d);
CMatrix phase_gate_matrix(int d);
// Fourier-matrix prefactor delta_d that makes det H = 1.
cplx hadamard_delta(int d);
// Gate builders on N qudits; qudit indices are 0-based, qudit 0 most significant.
CMatrix embed_single(const CMatrix& g, int qudit, const PrimeDim& dims);
CMatrix cz_matrix(int control, int target, const PrimeDim& dims);
CMatrix cnot_matrix(int control, int target, const PrimeDim& dims);
CMatrix swap_matrix(int i, int j, const PrimeDim& dims);

std::pair<CliffordElement, CliffordElement> qudit_clifford_generators(int d);

// Metaplectic representative of F in SL(2, Z_d), d odd.
DenseOperator metaplectic_V(const ZdMatrix& f);

// Recovers (S_C, a_C) from the conjugation action on the basis displacements.
// For d = 2 a_C reproduces the signs on basis vectors only.
std::pair<ZdMatrix, PhasePoint> affine_from_clifford(const DenseOperator& u);
CliffordElement make_clifford(const DenseOperator& u);
bool is_clifford(const DenseOperator& u);
// Single qudit, odd d: T_a V_S.
CliffordElement clifford_from_affine(const ZdMatrix& s, const PhasePoint& a);
// Largest deviation from C T_chi C^dag = omega^{-<a, S chi>} T_{S chi} over all chi (odd d).
double affine_law_error(const CliffordElement& c);

// |Clifford group / phases| = d^{2N} |Sp(2N, Z_d)|
long long reduced_clifford_order(const PrimeDim& dims);
// BFS modulo global phase over {H_i, S_i, CZ_{i,i+1}}.
std::vector<CMatrix> enumerate_reduced_clifford_unitaries(const PrimeDim& dims);
std::vector<CliffordElement> enumerate_reduced_clifford(const PrimeDim& dims);

struct Eigenpair {
  cplx value;
  PureState state;
};

// Eigenpairs whose eigenvalue is separated from all others by more than tol.
std::vector<Eigenpair> nondegenerate_eigenstates(const DenseOperator& u, double tol = 1e-8);

class FiniteUnitaryGroup {
 public:
  // Closure of the generators with exact phases; throws budget_exceeded past max_order.
  static FiniteUnitaryGroup generate(const PrimeDim& dims, const std::vector<CMatrix>& generators,
                                     std::size_t max_order = 200000);

  const PrimeDim& dims() const { return dims_; }
  const std::vector<CMatrix>& elements() const { return elements_; }
  const std::vector<CMatrix>& generators() const { return generators_; }
  std::size_t order() const { return elements_.size(); }
  bool closed(double tol = 1e-8) const;

 private:
  FiniteUnitaryGroup(const PrimeDim& dims, std::vector<CMatrix> gens, std::vector<CMatrix> els)
      : dims_(dims), generators_(std::move(gens)), elements_(std::move(els)) {}
  PrimeDim dims_;
  std::vector<CMatrix> generators_;
  std::vector<CMatrix> elements_;
};

DenseOperator group_projector(const FiniteUnitaryGroup& g);
DenseOperator twirl(const DenseOperator& o, const FiniteUnitaryGroup& g);
// Cyclic group of C extended by its eigenvalue phases times the identity.
FiniteUnitaryGroup eigenphase_extended_group(const DenseOperator& c, std::size_t max_order = 200000);

// States spanning a one-dimensional joint eigenspace of some subgroup, modulo phase.
std::vector<PureState> group_stabilizer_states(const FiniteUnitaryGroup& g, double tol = 1e-8);
// Orthogonal projector onto the span of the given states.
CMatrix span_projector(std::span<const PureState> states, double tol = 1e-9);

}  // namespace qmagic
