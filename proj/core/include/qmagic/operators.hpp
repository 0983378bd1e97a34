#pragma once

// Dense operators, pure states and the Weyl-Heisenberg operators.

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qmagic/zd.hpp"

namespace qmagic {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

struct Tolerances {
  double op = 1e-10;    // role checks on operators
  double eq = 1e-9;     // operator / state equality
  double tie = 1e-9;    // argmax ties for fidelity
  double zero = 1e-10;  // sign(0) threshold for Wigner entries
  double solver = 1e-8;
};

// exp(2 pi i k / n), evaluated in long double from the reduced exponent.
cplx root_of_unity(long long k, long long n);
inline cplx omega(int d, long long k) { return root_of_unity(k, d); }

enum class Role { general, unitary, hermitian, density };
const char* to_string(Role r);

class DenseOperator {
 public:
  // Validates the role against tol; throws invalid_input on violation.
  DenseOperator(const PrimeDim& dims, CMatrix m, Role role = Role::general, double tol = 1e-10);

  const PrimeDim& dims() const { return dims_; }
  const CMatrix& matrix() const { return m_; }
  Role role() const { return role_; }
  int dim() const { return dims_.hilbert(); }

  DenseOperator adjoint() const;
  DenseOperator operator*(const DenseOperator& o) const;

 private:
  PrimeDim dims_;
  CMatrix m_;
  Role role_;
};

bool satisfies_role(const CMatrix& m, Role role, double tol);

class PureState {
 public:
  // Normalizes; throws invalid_input on a zero vector.
  PureState(const PrimeDim& dims, CVector amplitudes);
  static PureState basis(const PrimeDim& dims, int index);

  const PrimeDim& dims() const { return dims_; }
  const CVector& vector() const { return v_; }
  int dim() const { return dims_.hilbert(); }
  DenseOperator density() const;

 private:
  PrimeDim dims_;
  CVector v_;
};

PrimeDim combined_dims(const PrimeDim& a, const PrimeDim& b);
CMatrix kron(const CMatrix& a, const CMatrix& b);
CVector kron(const CVector& a, const CVector& b);
PureState tensor(const PureState& a, const PureState& b);
DenseOperator tensor(const DenseOperator& a, const DenseOperator& b);

double max_abs_diff(const CMatrix& a, const CMatrix& b);
bool approx_equal(const CMatrix& a, const CMatrix& b, double tol = 1e-9);
// Phase c with b ~ c a, chosen from the largest-magnitude entry of a.
cplx relative_phase(const CMatrix& a, const CMatrix& b);
bool equal_up_to_phase(const CMatrix& a, const CMatrix& b, double tol = 1e-9);
bool equal_up_to_phase(const CVector& a, const CVector& b, double tol = 1e-9);
bool equal_up_to_phase(const PureState& a, const PureState& b, double tol = 1e-9);
double fidelity(const PureState& a, const PureState& b);

// First entry above cutoff made real-positive.
CMatrix phase_normalized(const CMatrix& m, double cutoff = 1e-6);
CVector phase_normalized(const CVector& v, double cutoff = 1e-6);
// Hash key of entries rounded to a grid, after phase normalization when requested.
std::string quantized_key(const CMatrix& m, double grid, bool modulo_phase);

// Matrix with exactly one nonzero per column: column j maps to row[j] with value[j].
struct Monomial {
  std::vector<int> row;
  std::vector<cplx> value;
  CMatrix dense() const;
  CVector apply(const CVector& v) const;
};

// T_chi = tau^{p.q} X^p Z^q for odd d, i^{p.q} X^p Z^q for qubits.
Monomial displacement_monomial(const PhasePoint& chi, const PrimeDim& dims);
DenseOperator displacement_operator(const PhasePoint& chi, const PrimeDim& dims);
// A_chi, odd d only.
Monomial phase_point_monomial(const PhasePoint& chi, const PrimeDim& dims);
DenseOperator phase_point_operator(const PhasePoint& chi, const PrimeDim& dims);

// (-1)^sign zeta^phase X^a Z^b with zeta = exp(i pi / d).
struct PauliElement {
  std::vector<int> a;
  std::vector<int> b;
  int phase = 0;  // mod 2d
  int sign = 0;   // mod 2
  int d = 2;

  PauliElement operator*(const PauliElement& o) const;
  // Folds the sign into the zeta exponent.
  PauliElement canonical() const;
  DenseOperator materialize(const PrimeDim& dims) const;
  friend bool operator==(const PauliElement& x, const PauliElement& y) {
    auto cx = x.canonical(), cy = y.canonical();
    return cx.a == cy.a && cx.b == cy.b && cx.phase == cy.phase;
  }
};

// Reduced: one displacement operator per phase point. Full: closure of {zeta I, X_i, Z_i}.
std::vector<DenseOperator> pauli_group(const PrimeDim& dims, bool phase_reduced);
std::vector<PauliElement> pauli_group_elements(const PrimeDim& dims);

}  // namespace qmagic
