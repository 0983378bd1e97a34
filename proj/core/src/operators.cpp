#include "qmagic/operators.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <tuple>

#include "qmagic/error.hpp"

namespace qmagic {

cplx root_of_unity(long long k, long long n) {
  long long r = k % n;
  if (r < 0) r += n;
  // exact values for the quarter turns
  if (4 * r % n == 0) {
    switch (4 * r / n) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  const long double angle = 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(r) / static_cast<long double>(n);
  return {static_cast<double>(std::cos(angle)), static_cast<double>(std::sin(angle))};
}

const char* to_string(Role r) {
  switch (r) {
    case Role::unitary: return "unitary";
    case Role::hermitian: return "hermitian";
    case Role::density: return "density";
    default: return "general";
  }
}

bool satisfies_role(const CMatrix& m, Role role, double tol) {
  if (m.rows() != m.cols()) return false;
  switch (role) {
    case Role::general: return true;
    case Role::unitary: {
      CMatrix e = m.adjoint() * m - CMatrix::Identity(m.rows(), m.cols());
      return e.cwiseAbs().maxCoeff() < tol;
    }
    case Role::hermitian: return (m - m.adjoint()).cwiseAbs().maxCoeff() < tol;
    case Role::density: {
      if ((m - m.adjoint()).cwiseAbs().maxCoeff() >= tol) return false;
      if (std::abs(m.trace() - cplx(1.0)) >= std::max(tol, 1e-9)) return false;
      Eigen::SelfAdjointEigenSolver<CMatrix> es(0.5 * (m + m.adjoint()), Eigen::EigenvaluesOnly);
      return es.eigenvalues().minCoeff() >= -tol;
    }
  }
  return false;
}

DenseOperator::DenseOperator(const PrimeDim& dims, CMatrix m, Role role, double tol)
    : dims_(dims), m_(std::move(m)), role_(role) {
  if (m_.rows() != dims.hilbert() || m_.cols() != dims.hilbert())
    throw Error(Errc::dimension_mismatch, "operator shape does not match " + to_string(dims));
  if (!satisfies_role(m_, role_, tol))
    throw Error(Errc::invalid_input, std::string("operator is not ") + to_string(role_));
}

DenseOperator DenseOperator::adjoint() const {
  Role r = role_ == Role::unitary || role_ == Role::hermitian || role_ == Role::density ? role_ : Role::general;
  return DenseOperator(dims_, m_.adjoint(), r, 1e-8);
}

DenseOperator DenseOperator::operator*(const DenseOperator& o) const {
  if (!(dims_ == o.dims_)) throw Error(Errc::dimension_mismatch, "operator product dims mismatch");
  const bool unitary = role_ == Role::unitary && o.role_ == Role::unitary;
  return DenseOperator(dims_, m_ * o.m_, unitary ? Role::unitary : Role::general, 1e-8);
}

PureState::PureState(const PrimeDim& dims, CVector amplitudes) : dims_(dims), v_(std::move(amplitudes)) {
  if (v_.size() != dims.hilbert()) throw Error(Errc::dimension_mismatch, "state length does not match " + to_string(dims));
  const double n = v_.norm();
  if (!(n > 1e-14)) throw Error(Errc::invalid_input, "zero state vector");
  v_ /= n;
}

PureState PureState::basis(const PrimeDim& dims, int index) {
  CVector v = CVector::Zero(dims.hilbert());
  v(index) = 1.0;
  return PureState(dims, std::move(v));
}

DenseOperator PureState::density() const {
  return DenseOperator(dims_, v_ * v_.adjoint(), Role::density, 1e-9);
}

PrimeDim combined_dims(const PrimeDim& a, const PrimeDim& b) {
  if (a.d() != b.d()) throw Error(Errc::dimension_mismatch, "tensor product of different local dimensions");
  return PrimeDim(a.d(), a.n() + b.n());
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) r.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return r;
}

CVector kron(const CVector& a, const CVector& b) {
  CVector r(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) r.segment(i * b.size(), b.size()) = a(i) * b;
  return r;
}

PureState tensor(const PureState& a, const PureState& b) {
  return PureState(combined_dims(a.dims(), b.dims()), kron(a.vector(), b.vector()));
}

DenseOperator tensor(const DenseOperator& a, const DenseOperator& b) {
  Role r = a.role() == b.role() ? a.role() : Role::general;
  return DenseOperator(combined_dims(a.dims(), b.dims()), kron(a.matrix(), b.matrix()), r, 1e-8);
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(Errc::dimension_mismatch, "shape mismatch");
  return a.size() == 0 ? 0.0 : (a - b).cwiseAbs().maxCoeff();
}

bool approx_equal(const CMatrix& a, const CMatrix& b, double tol) { return max_abs_diff(a, b) < tol; }

cplx relative_phase(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(Errc::dimension_mismatch, "shape mismatch");
  Eigen::Index r = 0, c = 0;
  a.cwiseAbs().maxCoeff(&r, &c);
  if (std::abs(a(r, c)) == 0.0 || std::abs(b(r, c)) == 0.0) return {1.0, 0.0};
  cplx ph = b(r, c) / a(r, c);
  return ph / std::abs(ph);
}

bool equal_up_to_phase(const CMatrix& a, const CMatrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return max_abs_diff(relative_phase(a, b) * a, b) < tol;
}

bool equal_up_to_phase(const CVector& a, const CVector& b, double tol) {
  return equal_up_to_phase(CMatrix(a), CMatrix(b), tol);
}

bool equal_up_to_phase(const PureState& a, const PureState& b, double tol) {
  return a.dims() == b.dims() && equal_up_to_phase(a.vector(), b.vector(), tol);
}

double fidelity(const PureState& a, const PureState& b) {
  if (!(a.dims() == b.dims())) throw Error(Errc::dimension_mismatch, "fidelity of mismatched states");
  return std::norm(a.vector().dot(b.vector()));
}

CMatrix phase_normalized(const CMatrix& m, double cutoff) {
  // column-major scan
  for (Eigen::Index k = 0; k < m.size(); ++k) {
    const cplx z = m.data()[k];
    if (std::abs(z) > cutoff) return m * (std::conj(z) / std::abs(z));
  }
  return m;
}

CVector phase_normalized(const CVector& v, double cutoff) {
  for (Eigen::Index k = 0; k < v.size(); ++k)
    if (std::abs(v(k)) > cutoff) return v * (std::conj(v(k)) / std::abs(v(k)));
  return v;
}

std::string quantized_key(const CMatrix& m, double grid, bool modulo_phase) {
  const CMatrix n = modulo_phase ? phase_normalized(m) : m;
  std::string key;
  key.reserve(static_cast<std::size_t>(n.size()) * 2 * sizeof(std::int64_t));
  auto put = [&](double x) {
    std::int64_t q = std::llround(x / grid);
    if (q == 0) q = 0;  // fold -0
    key.append(reinterpret_cast<const char*>(&q), sizeof q);
  };
  for (Eigen::Index k = 0; k < n.size(); ++k) {
    put(n.data()[k].real());
    put(n.data()[k].imag());
  }
  return key;
}

CMatrix Monomial::dense() const {
  const auto n = static_cast<Eigen::Index>(row.size());
  CMatrix m = CMatrix::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) m(row[j], j) = value[j];
  return m;
}

CVector Monomial::apply(const CVector& v) const {
  CVector r = CVector::Zero(v.size());
  for (Eigen::Index j = 0; j < v.size(); ++j) r(row[j]) += value[j] * v(j);
  return r;
}

namespace {

std::vector<int> digits_of(int index, const PrimeDim& dims) {
  std::vector<int> dg(dims.n());
  for (int i = dims.n() - 1; i >= 0; --i) {
    dg[i] = index % dims.d();
    index /= dims.d();
  }
  return dg;
}

int index_of(const std::vector<int>& dg, int d) {
  int idx = 0;
  for (int x : dg) idx = idx * d + x;
  return idx;
}

void check_point(const PhasePoint& chi, const PrimeDim& dims) {
  if (chi.n() != dims.n() || chi.d() != dims.d()) throw Error(Errc::dimension_mismatch, "phase point does not match dims");
}

}  // namespace

Monomial displacement_monomial(const PhasePoint& chi, const PrimeDim& dims) {
  check_point(chi, dims);
  const int d = dims.d();
  const auto p = chi.p();
  const auto q = chi.q();
  long long pq = 0;
  for (int i = 0; i < dims.n(); ++i) pq += static_cast<long long>(p[i]) * q[i];
  // prefactor as a power of exp(2 pi i / (2d))
  const long long pre = d == 2 ? pq : 2LL * pq * mod_inverse(2, d);
  Monomial m;
  m.row.resize(dims.hilbert());
  m.value.resize(dims.hilbert());
  for (int j = 0; j < dims.hilbert(); ++j) {
    auto dg = digits_of(j, dims);
    long long qj = 0;
    for (int i = 0; i < dims.n(); ++i) {
      qj += static_cast<long long>(q[i]) * dg[i];
      dg[i] = mod(dg[i] + p[i], d);
    }
    m.row[j] = index_of(dg, d);
    m.value[j] = root_of_unity(pre + 2 * qj, 2LL * d);
  }
  return m;
}

DenseOperator displacement_operator(const PhasePoint& chi, const PrimeDim& dims) {
  return DenseOperator(dims, displacement_monomial(chi, dims).dense(), Role::unitary);
}

Monomial phase_point_monomial(const PhasePoint& chi, const PrimeDim& dims) {
  check_point(chi, dims);
  if (!dims.odd()) throw Error(Errc::unsupported_dimension, "phase-point operators need odd d");
  const int d = dims.d();
  const auto p = chi.p();
  const auto q = chi.q();
  Monomial m;
  m.row.resize(dims.hilbert());
  m.value.resize(dims.hilbert());
  for (int j = 0; j < dims.hilbert(); ++j) {
    auto dg = digits_of(j, dims);
    long long e = 0;
    for (int i = 0; i < dims.n(); ++i) {
      e += 2LL * q[i] * (p[i] - dg[i]);
      dg[i] = mod(2LL * p[i] - dg[i], d);
    }
    m.row[j] = index_of(dg, d);
    m.value[j] = omega(d, e);
  }
  return m;
}

DenseOperator phase_point_operator(const PhasePoint& chi, const PrimeDim& dims) {
  return DenseOperator(dims, phase_point_monomial(chi, dims).dense(), Role::hermitian);
}

PauliElement PauliElement::operator*(const PauliElement& o) const {
  if (a.size() != o.a.size() || d != o.d) throw Error(Errc::dimension_mismatch, "Pauli product mismatch");
  PauliElement r;
  r.d = d;
  r.a.resize(a.size());
  r.b.resize(b.size());
  // Z^b X^a' = omega^{b.a'} X^a' Z^b, omega = zeta^2
  long long ph = phase + o.phase;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ph += 2LL * b[i] * o.a[i];
    r.a[i] = mod(a[i] + o.a[i], d);
    r.b[i] = mod(b[i] + o.b[i], d);
  }
  r.phase = mod(ph, 2 * d);
  r.sign = (sign + o.sign) % 2;
  return r.canonical();
}

PauliElement PauliElement::canonical() const {
  PauliElement r = *this;
  r.phase = mod(static_cast<long long>(phase) + static_cast<long long>(d) * sign, 2 * d);
  r.sign = 0;
  return r;
}

DenseOperator PauliElement::materialize(const PrimeDim& dims) const {
  if (static_cast<int>(a.size()) != dims.n() || d != dims.d()) throw Error(Errc::dimension_mismatch, "Pauli element does not match dims");
  const auto c = canonical();
  CMatrix m = CMatrix::Zero(dims.hilbert(), dims.hilbert());
  for (int j = 0; j < dims.hilbert(); ++j) {
    auto dg = digits_of(j, dims);
    long long bj = 0;
    for (int i = 0; i < dims.n(); ++i) {
      bj += static_cast<long long>(c.b[i]) * dg[i];
      dg[i] = mod(dg[i] + c.a[i], d);
    }
    m(index_of(dg, d), j) = root_of_unity(c.phase + 2 * bj, 2LL * d);
  }
  return DenseOperator(dims, std::move(m), Role::unitary);
}

std::vector<PauliElement> pauli_group_elements(const PrimeDim& dims) {
  const long long bound = 4LL * dims.d() * static_cast<long long>(dims.points());
  if (bound > (1LL << 22)) throw Error(Errc::budget_exceeded, "Pauli group too large for " + to_string(dims));
  const int n = dims.n(), d = dims.d();
  auto blank = [&] {
    PauliElement e;
    e.d = d;
    e.a.assign(n, 0);
    e.b.assign(n, 0);
    return e;
  };
  std::vector<PauliElement> gens;
  {
    auto z = blank();
    z.phase = 1;
    gens.push_back(z);
    auto m = blank();
    m.sign = 1;
    gens.push_back(m.canonical());
  }
  for (int i = 0; i < n; ++i) {
    auto x = blank();
    x.a[i] = 1;
    gens.push_back(x);
    auto zz = blank();
    zz.b[i] = 1;
    gens.push_back(zz);
  }
  using Key = std::tuple<std::vector<int>, std::vector<int>, int>;
  std::set<Key> seen;
  std::vector<PauliElement> out{blank()};
  seen.insert({out[0].a, out[0].b, 0});
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const auto& g : gens) {
      auto e = out[head] * g;
      if (seen.insert({e.a, e.b, e.phase}).second) out.push_back(e);
    }
  }
  return out;
}

std::vector<DenseOperator> pauli_group(const PrimeDim& dims, bool phase_reduced) {
  if (dims.hilbert() > 64) throw Error(Errc::budget_exceeded, "Pauli group materialization too large for " + to_string(dims));
  std::vector<DenseOperator> out;
  if (phase_reduced) {
    for (const auto& chi : all_points(dims)) out.push_back(displacement_operator(chi, dims));
    return out;
  }
  for (const auto& e : pauli_group_elements(dims)) out.push_back(e.materialize(dims));
  return out;
}

}  // namespace qmagic
