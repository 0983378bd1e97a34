#include "qmagic/clifford.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <optional>
#include <numbers>
#include <unordered_map>
#include <unordered_set>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "qmagic/error.hpp"

namespace qmagic {

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

void check_qudit(int i, const PrimeDim& dims) {
  if (i < 0 || i >= dims.n()) throw Error(Errc::invalid_input, "qudit index " + std::to_string(i + 1) + " out of range");
}

}  // namespace

cplx hadamard_delta(int d) {
  switch (d % 8) {
    case 1: return {1, 0};
    case 3: return {0, -1};
    case 5: return {-1, 0};
    case 7: return {0, 1};
    default: return {1, 0};
  }
}

CMatrix hadamard_matrix(int d) {
  CMatrix h(d, d);
  const cplx pre = (d == 2 ? cplx(1) : hadamard_delta(d)) / std::sqrt(static_cast<double>(d));
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) h(j, k) = pre * omega(d, static_cast<long long>(j) * k);
  return h;
}

CMatrix phase_gate_matrix(int d) {
  CMatrix s = CMatrix::Zero(d, d);
  if (d == 2) {
    s(0, 0) = 1;
    s(1, 1) = cplx(0, 1);
    return s;
  }
  const int inv2 = mod_inverse(2, d);
  for (int j = 0; j < d; ++j) s(j, j) = omega(d, static_cast<long long>(inv2) * j * (j + 1));
  return s;
}

CMatrix embed_single(const CMatrix& g, int qudit, const PrimeDim& dims) {
  check_qudit(qudit, dims);
  if (g.rows() != dims.d()) throw Error(Errc::dimension_mismatch, "single-qudit gate has wrong size");
  CMatrix r = CMatrix::Identity(1, 1);
  for (int i = 0; i < dims.n(); ++i) r = kron(r, i == qudit ? g : CMatrix(CMatrix::Identity(dims.d(), dims.d())));
  return r;
}

CMatrix cz_matrix(int control, int target, const PrimeDim& dims) {
  check_qudit(control, dims);
  check_qudit(target, dims);
  if (control == target) throw Error(Errc::invalid_input, "CZ needs two distinct qudits");
  CMatrix m = CMatrix::Zero(dims.hilbert(), dims.hilbert());
  for (int j = 0; j < dims.hilbert(); ++j) {
    const auto dg = digits_of(j, dims);
    m(j, j) = omega(dims.d(), static_cast<long long>(dg[control]) * dg[target]);
  }
  return m;
}

CMatrix cnot_matrix(int control, int target, const PrimeDim& dims) {
  check_qudit(control, dims);
  check_qudit(target, dims);
  if (control == target) throw Error(Errc::invalid_input, "CNOT needs two distinct qudits");
  CMatrix m = CMatrix::Zero(dims.hilbert(), dims.hilbert());
  for (int j = 0; j < dims.hilbert(); ++j) {
    auto dg = digits_of(j, dims);
    dg[target] = mod(dg[target] + dg[control], dims.d());
    m(index_of(dg, dims.d()), j) = 1;
  }
  return m;
}

CMatrix swap_matrix(int i, int k, const PrimeDim& dims) {
  check_qudit(i, dims);
  check_qudit(k, dims);
  CMatrix m = CMatrix::Zero(dims.hilbert(), dims.hilbert());
  for (int j = 0; j < dims.hilbert(); ++j) {
    auto dg = digits_of(j, dims);
    std::swap(dg[i], dg[k]);
    m(index_of(dg, dims.d()), j) = 1;
  }
  return m;
}

std::pair<CliffordElement, CliffordElement> qudit_clifford_generators(int d) {
  const PrimeDim dims(d, 1);
  return {make_clifford(DenseOperator(dims, hadamard_matrix(d), Role::unitary)),
          make_clifford(DenseOperator(dims, phase_gate_matrix(d), Role::unitary))};
}

DenseOperator metaplectic_V(const ZdMatrix& f) {
  const int d = f.d();
  if (f.rows() != 2 || f.cols() != 2) throw Error(Errc::dimension_mismatch, "metaplectic representation needs a 2x2 matrix");
  if (d == 2) throw Error(Errc::unsupported_dimension, "metaplectic formula needs odd d");
  if (f.determinant() != 1) throw Error(Errc::not_symplectic, "matrix " + to_string(f) + " is not in SL(2, Z_d)");
  const int a = f(0, 0), b = f(0, 1), c = f(1, 0), e = f(1, 1);
  const PrimeDim dims(d, 1);
  CMatrix v = CMatrix::Zero(d, d);
  const int inv2 = mod_inverse(2, d);
  if (b != 0) {
    const cplx eps = d % 4 == 1 ? cplx(1) : cplx(0, 1);
    const cplx pre = static_cast<double>(legendre(-2 * b, d)) * eps / std::sqrt(static_cast<double>(d));
    const long long inv2b = mod_inverse(mod(2LL * b, d), d);
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        const long long num = static_cast<long long>(a) * k * k - 2LL * j * k + static_cast<long long>(e) * j * j;
        v(j, k) = pre * omega(d, mod(num, d) * inv2b);
      }
  } else {
    const double pre = legendre(a, d);
    for (int k = 0; k < d; ++k)
      v(mod(static_cast<long long>(a) * k, d), k) = pre * omega(d, static_cast<long long>(a) * c % d * k * k % d * inv2);
  }
  return DenseOperator(dims, std::move(v), Role::unitary);
}

namespace {

struct Match {
  PhasePoint image;
  cplx phase;
};

std::optional<Match> match_displacement(const CMatrix& m, const PrimeDim& dims) {
  const double dim = dims.hilbert();
  // the image must be monomial; locate the column pattern from column 0
  for (const auto& chi : all_points(dims)) {
    const auto t = displacement_monomial(chi, dims);
    if (std::abs(m(t.row[0], 0)) < 0.5) continue;
    cplx c = 0;
    for (int j = 0; j < dims.hilbert(); ++j) c += std::conj(t.value[j]) * m(t.row[j], j);
    c /= dim;
    if (std::abs(std::abs(c) - 1.0) > 1e-6) continue;
    CMatrix diff = m - c * t.dense();
    if (diff.cwiseAbs().maxCoeff() < 1e-7) return Match{chi, c};
  }
  return std::nullopt;
}

}  // namespace

std::pair<ZdMatrix, PhasePoint> affine_from_clifford(const DenseOperator& u) {
  const PrimeDim& dims = u.dims();
  if (!satisfies_role(u.matrix(), Role::unitary, 1e-8)) throw Error(Errc::not_clifford, "operator is not unitary");
  const int n2 = 2 * dims.n();
  const int d = dims.d();
  ZdMatrix s(n2, n2, d);
  std::vector<int> signs(n2);
  for (int k = 0; k < n2; ++k) {
    std::vector<int> e(n2, 0);
    e[k] = 1;
    const auto chi = PhasePoint::from_coords(e, d);
    const CMatrix img = u.matrix() * displacement_monomial(chi, dims).dense() * u.matrix().adjoint();
    const auto m = match_displacement(img, dims);
    if (!m) throw Error(Errc::not_clifford, "conjugate of a displacement is not a displacement");
    for (int r = 0; r < n2; ++r) s.set(r, k, m->image.coords()[r]);
    const double turns = std::arg(m->phase) / (2.0 * std::numbers::pi) * d;
    const long long rounded = std::llround(turns);
    if (std::abs(turns - static_cast<double>(rounded)) > 1e-6) throw Error(Errc::not_clifford, "conjugation phase is not a d-th root of unity");
    signs[k] = mod(rounded, d);
  }
  if (!is_symplectic(s)) throw Error(Errc::not_clifford, "induced phase-space map is not symplectic");
  // <a, S e_k> = -s_k  <=>  (J S)^T a = -s
  const ZdMatrix js = ZdMatrix::symplectic_form(dims.n(), d) * s;
  const ZdMatrix inv = js.transpose().inverse();
  std::vector<int> rhs(n2);
  for (int k = 0; k < n2; ++k) rhs[k] = mod(-signs[k], d);
  const PhasePoint a = inv * PhasePoint::from_coords(rhs, d);
  return {s, a};
}

CliffordElement make_clifford(const DenseOperator& u) {
  auto [s, a] = affine_from_clifford(u);
  return CliffordElement{u, std::move(s), std::move(a)};
}

bool is_clifford(const DenseOperator& u) {
  try {
    affine_from_clifford(u);
    return true;
  } catch (const Error&) {
    return false;
  }
}

CliffordElement clifford_from_affine(const ZdMatrix& s, const PhasePoint& a) {
  if (s.rows() != 2 || a.n() != 1) throw Error(Errc::unsupported_dimension, "clifford_from_affine supports one qudit");
  const PrimeDim dims(s.d(), 1);
  DenseOperator u = displacement_operator(a, dims) * metaplectic_V(s);
  return CliffordElement{u, s, a};
}

double affine_law_error(const CliffordElement& c) {
  const PrimeDim& dims = c.unitary.dims();
  if (!dims.odd()) throw Error(Errc::unsupported_dimension, "affine law with displacement holds for odd d");
  double worst = 0;
  const CMatrix& u = c.unitary.matrix();
  for (const auto& chi : all_points(dims)) {
    const PhasePoint img = c.symplectic * chi;
    const CMatrix lhs = u * displacement_monomial(chi, dims).dense() * u.adjoint();
    const CMatrix rhs = omega(dims.d(), -symplectic_product(c.displacement, img)) * displacement_monomial(img, dims).dense();
    worst = std::max(worst, max_abs_diff(lhs, rhs));
  }
  return worst;
}

long long reduced_clifford_order(const PrimeDim& dims) {
  return static_cast<long long>(dims.points()) * symplectic_group_order(dims);
}

std::vector<CMatrix> enumerate_reduced_clifford_unitaries(const PrimeDim& dims) {
  const long long order = reduced_clifford_order(dims);
  if (order > 200000) throw Error(Errc::budget_exceeded, "Clifford group of order " + std::to_string(order) + " is over budget");
  std::vector<CMatrix> gens;
  for (int i = 0; i < dims.n(); ++i) {
    gens.push_back(embed_single(hadamard_matrix(dims.d()), i, dims));
    gens.push_back(embed_single(phase_gate_matrix(dims.d()), i, dims));
  }
  for (int i = 0; i + 1 < dims.n(); ++i) gens.push_back(cz_matrix(i, i + 1, dims));
  std::unordered_set<std::string> seen;
  std::vector<CMatrix> out{CMatrix::Identity(dims.hilbert(), dims.hilbert())};
  seen.insert(quantized_key(out[0], 1e-8, true));
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const auto& g : gens) {
      CMatrix m = g * out[head];
      if (seen.insert(quantized_key(m, 1e-8, true)).second) {
        out.push_back(phase_normalized(m));
        if (static_cast<long long>(out.size()) > order) throw Error(Errc::budget_exceeded, "Clifford closure exceeded the expected order");
      }
    }
  }
  return out;
}

std::vector<CliffordElement> enumerate_reduced_clifford(const PrimeDim& dims) {
  std::vector<CliffordElement> out;
  for (auto& m : enumerate_reduced_clifford_unitaries(dims))
    out.push_back(make_clifford(DenseOperator(dims, std::move(m), Role::unitary, 1e-8)));
  return out;
}

std::vector<Eigenpair> nondegenerate_eigenstates(const DenseOperator& u, double tol) {
  const CMatrix& m = u.matrix();
  Eigen::ComplexSchur<CMatrix> schur(m);
  if (schur.info() != Eigen::Success) throw Error(Errc::invalid_input, "Schur decomposition failed");
  const CMatrix& t = schur.matrixT();
  const CMatrix& q = schur.matrixU();
  CMatrix off = t;
  off.diagonal().setZero();
  if (off.size() && off.cwiseAbs().maxCoeff() > 1e-7) throw Error(Errc::invalid_input, "operator is not normal");
  const Eigen::Index n = t.rows();
  std::vector<Eigenpair> out;
  for (Eigen::Index k = 0; k < n; ++k) {
    bool isolated = true;
    for (Eigen::Index j = 0; j < n && isolated; ++j)
      if (j != k && std::abs(t(k, k) - t(j, j)) <= tol) isolated = false;
    if (isolated) out.push_back(Eigenpair{t(k, k), PureState(u.dims(), phase_normalized(CVector(q.col(k)), 1e-8))});
  }
  std::sort(out.begin(), out.end(), [](const Eigenpair& a, const Eigenpair& b) { return std::arg(a.value) < std::arg(b.value); });
  return out;
}

FiniteUnitaryGroup FiniteUnitaryGroup::generate(const PrimeDim& dims, const std::vector<CMatrix>& generators,
                                                std::size_t max_order) {
  for (const auto& g : generators)
    if (g.rows() != dims.hilbert() || !satisfies_role(g, Role::unitary, 1e-8))
      throw Error(Errc::invalid_input, "group generator is not a unitary on " + to_string(dims));
  std::unordered_set<std::string> seen;
  std::vector<CMatrix> els{CMatrix::Identity(dims.hilbert(), dims.hilbert())};
  seen.insert(quantized_key(els[0], 1e-8, false));
  for (std::size_t head = 0; head < els.size(); ++head) {
    for (const auto& g : generators) {
      CMatrix m = g * els[head];
      if (seen.insert(quantized_key(m, 1e-8, false)).second) {
        els.push_back(std::move(m));
        if (els.size() > max_order) throw Error(Errc::budget_exceeded, "group closure exceeded " + std::to_string(max_order) + " elements");
      }
    }
  }
  return FiniteUnitaryGroup(dims, generators, std::move(els));
}

bool FiniteUnitaryGroup::closed(double tol) const {
  std::unordered_set<std::string> keys;
  for (const auto& e : elements_) keys.insert(quantized_key(e, tol, false));
  for (const auto& g : generators_)
    for (const auto& e : elements_)
      if (!keys.count(quantized_key(g * e, tol, false))) return false;
  return true;
}

DenseOperator group_projector(const FiniteUnitaryGroup& g) {
  CMatrix p = CMatrix::Zero(g.dims().hilbert(), g.dims().hilbert());
  for (const auto& e : g.elements()) p += e;
  p /= static_cast<double>(g.order());
  return DenseOperator(g.dims(), std::move(p), Role::hermitian, 1e-8);
}

DenseOperator twirl(const DenseOperator& o, const FiniteUnitaryGroup& g) {
  if (!(o.dims() == g.dims())) throw Error(Errc::dimension_mismatch, "twirl dims mismatch");
  CMatrix r = CMatrix::Zero(o.dim(), o.dim());
  for (const auto& e : g.elements()) r += e * o.matrix() * e.adjoint();
  r /= static_cast<double>(g.order());
  return DenseOperator(o.dims(), std::move(r));
}

FiniteUnitaryGroup eigenphase_extended_group(const DenseOperator& c, std::size_t max_order) {
  Eigen::ComplexEigenSolver<CMatrix> es(c.matrix(), false);
  std::vector<CMatrix> gens{c.matrix()};
  const auto id = CMatrix::Identity(c.dim(), c.dim());
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
    cplx z = es.eigenvalues()(k);
    z /= std::abs(z);
    gens.push_back(z * id);
  }
  return FiniteUnitaryGroup::generate(c.dims(), gens, max_order);
}

namespace {

// Orthonormal basis of the null space of m.
CMatrix null_space(const CMatrix& m, double tol) {
  Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  Eigen::Index rank = 0;
  while (rank < sv.size() && sv(rank) > tol) ++rank;
  return svd.matrixV().rightCols(m.cols() - rank);
}

}  // namespace

std::vector<PureState> group_stabilizer_states(const FiniteUnitaryGroup& g, double tol) {
  const int n = g.dims().hilbert();
  const CMatrix id = CMatrix::Identity(n, n);
  std::vector<CMatrix> spaces;  // orthonormal columns
  std::unordered_set<std::string> seen;
  auto insert = [&](CMatrix q) {
    if (q.cols() == 0 || q.cols() == n) return false;
    if (!seen.insert(quantized_key(q * q.adjoint(), 1e-6, false)).second) return false;
    spaces.push_back(std::move(q));
    return true;
  };
  for (const auto& u : g.elements()) {
    Eigen::ComplexEigenSolver<CMatrix> es(u, false);
    for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) insert(null_space(u - es.eigenvalues()(k) * id, tol));
  }
  // Every joint eigenspace is an intersection of eigenspaces of single elements.
  for (std::size_t i = 0; i < spaces.size(); ++i) {
    if (spaces[i].cols() < 2) continue;
    for (std::size_t j = 0; j < i; ++j) {
      if (spaces[j].cols() < 2) continue;
      const CMatrix sum = 2 * id - spaces[i] * spaces[i].adjoint() - spaces[j] * spaces[j].adjoint();
      insert(null_space(sum, tol));
    }
  }
  std::vector<PureState> out;
  for (const auto& q : spaces)
    if (q.cols() == 1) out.emplace_back(g.dims(), phase_normalized(CVector(q.col(0))));
  return out;
}

CMatrix span_projector(std::span<const PureState> states, double tol) {
  if (states.empty()) throw Error(Errc::invalid_input, "no states to span");
  CMatrix m(states.front().dim(), static_cast<Eigen::Index>(states.size()));
  for (std::size_t k = 0; k < states.size(); ++k) m.col(static_cast<Eigen::Index>(k)) = states[k].vector();
  Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeThinU);
  Eigen::Index rank = 0;
  while (rank < svd.singularValues().size() && svd.singularValues()(rank) > tol) ++rank;
  const CMatrix u = svd.matrixU().leftCols(rank);
  return u * u.adjoint();
}

}  // namespace qmagic
