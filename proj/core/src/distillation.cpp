#include "qmagic/distillation.hpp"

#include <bit>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "qmagic/catalog.hpp"
#include "qmagic/clifford.hpp"
#include "qmagic/error.hpp"

namespace qmagic {

namespace {

constexpr int kPairs = 5;
constexpr int kTen = 1024;

// X^a Z^b on n qubits (no Y phase needed for the code generators), applied to v.
CVector apply_pauli(const PauliElement& g, const CVector& v) {
  const int n = static_cast<int>(g.a.size());
  int xmask = 0, zmask = 0;
  for (int k = 0; k < n; ++k) {
    xmask |= g.a[k] << (n - 1 - k);
    zmask |= g.b[k] << (n - 1 - k);
  }
  CVector out(v.size());
  for (int j = 0; j < v.size(); ++j) out(j ^ xmask) = (std::popcount(static_cast<unsigned>(j & zmask)) & 1 ? -1.0 : 1.0) * v(j);
  return out;
}

PauliElement pauli_from_string(const std::string& s) {
  PauliElement g;
  g.d = 2;
  for (char c : s) {
    g.a.push_back(c == 'X' || c == 'Y');
    g.b.push_back(c == 'Z' || c == 'Y');
  }
  return g;
}

// Generator acting on code block `offset` (0 = A, 1 = B) of the interleaved ten qubits.
PauliElement doubled(const PauliElement& g, int offset) {
  PauliElement out;
  out.d = 2;
  out.a.assign(2 * kPairs, 0);
  out.b.assign(2 * kPairs, 0);
  for (int k = 0; k < kPairs; ++k) {
    out.a[2 * k + offset] = g.a[k];
    out.b[2 * k + offset] = g.b[k];
  }
  return out;
}

// |a>_A |b>_B with A1..A5 B1..B5 reordered to A1 B1 ... A5 B5.
CVector interleave(const CVector& a, const CVector& b) {
  CVector out(kTen);
  for (int ia = 0; ia < 32; ++ia)
    for (int ib = 0; ib < 32; ++ib) {
      int idx = 0;
      for (int k = 0; k < kPairs; ++k) {
        idx = (idx << 1) | ((ia >> (kPairs - 1 - k)) & 1);
        idx = (idx << 1) | ((ib >> (kPairs - 1 - k)) & 1);
      }
      out(idx) = a(ia) * b(ib);
    }
  return out;
}

CVector power_state(const CVector& v) {
  CVector out = v;
  for (int k = 1; k < kPairs; ++k) out = kron(out, v);
  return out;
}

CMatrix kron_power(const CMatrix& m) {
  CMatrix out = m;
  for (int k = 1; k < kPairs; ++k) out = kron(out, m);
  return out;
}

}  // namespace

CMatrix PairParams::density() const {
  CMatrix r = CMatrix::Zero(4, 4);
  r(0, 0) = 1 - eps1 - eps2 - eps3;
  r(1, 1) = eps1;
  r(2, 2) = eps2;
  r(3, 3) = eps3;
  r(0, 3) = cplx(a, b);
  r(3, 0) = cplx(a, -b);
  return r;
}

bool PairParams::valid(double tol) const {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(density());
  return es.eigenvalues().minCoeff() >= -tol;
}

std::array<PureState, 4> pair_basis() {
  return {build("2q:psi0"), build("2q:psi1"), build("2q:psi2"), build("2q:psi3")};
}

CMatrix pair_basis_matrix() {
  CMatrix u(4, 4);
  const auto basis = pair_basis();
  for (int k = 0; k < 4; ++k) u.col(k) = basis[k].vector();
  return u;
}

CMatrix t_hat() { return std::polar(1.0, std::numbers::pi / 4) * phase_gate_matrix(2) * hadamard_matrix(2); }

CodeSpec CodeSpec::five_qubit() {
  CodeSpec c;
  for (const char* s : {"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"}) c.generators.push_back(pauli_from_string(s));
  return c;
}

DenseOperator CodeSpec::projector() const {
  const int n = static_cast<int>(generators.at(0).a.size());
  const PrimeDim dims(2, n);
  CMatrix p = CMatrix::Identity(dims.hilbert(), dims.hilbert());
  for (int col = 0; col < p.cols(); ++col) {
    CVector v = p.col(col);
    for (const auto& g : generators) v = (v + apply_pauli(g, v)) / 2.0;
    p.col(col) = v;
  }
  return DenseOperator(dims, std::move(p), Role::hermitian, 1e-10);
}

CMatrix doubled_projector() {
  const auto code = CodeSpec::five_qubit();
  CodeSpec both;
  for (int offset : {0, 1})
    for (const auto& g : code.generators) both.generators.push_back(doubled(g, offset));
  return both.projector().matrix();
}

CMatrix logical_pair_basis() {
  const CMatrix pi5 = CodeSpec::five_qubit().projector().matrix();
  const CVector t0 = build("qubit:T0").vector(), t1 = build("qubit:T1").vector();
  const CVector t0l = std::sqrt(6.0) * pi5 * power_state(t1);
  const CVector t1l = std::sqrt(6.0) * pi5 * power_state(t0);
  CMatrix l(kTen, 4);
  l.col(0) = (interleave(t0l, t0l) - interleave(t1l, t1l)) / std::sqrt(2.0);
  l.col(1) = interleave(t0l, t1l);
  l.col(2) = interleave(t1l, t0l);
  l.col(3) = (interleave(t0l, t0l) + interleave(t1l, t1l)) / std::sqrt(2.0);
  return l;
}

CMatrix logical_pair_basis_in_pair_basis() {
  static const CMatrix lb = [] {
    const CMatrix u = kron_power(pair_basis_matrix());
    return CMatrix(u.adjoint() * logical_pair_basis());
  }();
  return lb;
}

std::vector<TOverlap> project_T_overlaps() {
  const CMatrix pi5 = CodeSpec::five_qubit().projector().matrix();
  const CVector t0 = build("qubit:T0").vector(), t1 = build("qubit:T1").vector();
  const CVector all0 = pi5 * power_state(t0), all1 = pi5 * power_state(t1);
  std::vector<TOverlap> out;
  for (int x = 0; x < 32; ++x) {
    TOverlap o;
    CVector v = CVector::Ones(1);
    for (int k = 0; k < kPairs; ++k) {
      const int bit = (x >> (kPairs - 1 - k)) & 1;
      o.bits.push_back(bit ? '1' : '0');
      o.weight += bit;
      v = kron(v, bit ? t1 : t0);
    }
    const CVector pv = pi5 * v;
    o.overlap = v.dot(pv).real();
    if (o.weight == 2) o.phase = std::arg(all1.dot(pv));
    if (o.weight == 3) o.phase = std::arg(all0.dot(pv));
    out.push_back(std::move(o));
  }
  return out;
}

StepResult distill_step(std::span<const PairParams, 5> params) {
  CMatrix r = CMatrix::Ones(1, 1);
  for (const auto& p : params) {
    if (!p.valid(1e-12)) throw Error(Errc::invalid_input, "pair parameters do not give a density matrix");
    r = kron(r, p.density());
  }
  const CMatrix& lb = logical_pair_basis_in_pair_basis();
  // Pi = lb lb^dag, so the projected operator lives on span(lb).
  const CMatrix m = lb.adjoint() * r * lb;
  StepResult res;
  res.p_success = m.trace().real();
  res.logical = m / res.p_success;
  const CMatrix& l = res.logical;
  res.out = PairParams{l(1, 1).real(), l(2, 2).real(), l(3, 3).real(), l(0, 3).real(), l(0, 3).imag()};
  CMatrix off = l - res.out.density();
  res.structure_residual = off.cwiseAbs().maxCoeff();
  return res;
}

StepResult distill_step(const PairParams& identical) {
  const std::array<PairParams, 5> ps{identical, identical, identical, identical, identical};
  return distill_step(std::span<const PairParams, 5>(ps));
}

std::vector<StepResult> iterate_protocol(const PairParams& params, int rounds) {
  if (rounds < 1) throw Error(Errc::invalid_input, "rounds must be at least 1");
  std::vector<StepResult> out;
  PairParams cur = params;
  for (int k = 0; k < rounds; ++k) {
    out.push_back(distill_step(cur));
    cur = out.back().out;
  }
  return out;
}

double success_probability_exact(double e) {
  return (49 - 240 * e + 600 * e * e - 640 * e * e * e + 240 * e * e * e * e) / 2304;
}

double output_error_exact(double e) {
  const double num = e * (5 + 100 * e - 240 * e * e + 160 * e * e * e - 16 * e * e * e * e);
  return num / (49 - 240 * e + 600 * e * e - 640 * e * e * e + 240 * e * e * e * e);
}

CMatrix dephase_pair(const CMatrix& rho) {
  const CMatrix t = t_hat();
  const CMatrix tinv = t.adjoint();
  CMatrix avg = CMatrix::Zero(4, 4);
  CMatrix ka = CMatrix::Identity(2, 2), kb = CMatrix::Identity(2, 2);
  for (int k = 0; k < 3; ++k) {
    const CMatrix op = kron(ka, kb);
    avg += op * rho * op.adjoint() / 3.0;
    ka = t * ka;
    kb = tinv * kb;
  }
  CMatrix g = CMatrix::Zero(4, 4);
  g(0, 3) = cplx(0, 1);
  g(1, 1) = 1;
  g(2, 2) = 1;
  g(3, 0) = cplx(0, -1);
  return (avg + g * avg * g.adjoint()) / 2.0;
}

}  // namespace qmagic
