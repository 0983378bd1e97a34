#include "qmagic/extremality.hpp"

#include <algorithm>
#include <cmath>

#include "qmagic/error.hpp"
#include "qmagic/measures.hpp"

namespace qmagic {

PureState PerturbationFrame::at(double eps) const {
  return PureState(base.dims(), CVector(base.vector() + eps * direction.vector()));
}

PerturbationFrame make_frame(const PureState& psi, const PureState& phi, double tol) {
  if (!(psi.dims() == phi.dims())) throw Error(Errc::dimension_mismatch, "frame states differ in dims");
  if (std::abs(phi.vector().dot(psi.vector())) > tol) throw Error(Errc::invalid_input, "direction is not orthogonal to the base state");
  const CVector& p = psi.vector();
  const CVector& f = phi.vector();
  CMatrix sigma = f * p.adjoint() + p * f.adjoint();
  CMatrix mu = f * f.adjoint() - p * p.adjoint();
  return PerturbationFrame{psi, phi, std::move(sigma), std::move(mu)};
}

const char* to_string(Measure m) {
  switch (m) {
    case Measure::mana: return "mana";
    case Measure::fidelity: return "fidelity";
    default: return "xi2";
  }
}

const char* to_string(CriticalKind k) {
  switch (k) {
    case CriticalKind::sharp_min: return "sharp_min";
    case CriticalKind::smooth_max: return "smooth_max";
    case CriticalKind::smooth_min: return "smooth_min";
    case CriticalKind::flat: return "flat";
    case CriticalKind::inflection: return "inflection";
    default: return "undetermined";
  }
}

namespace {

void check_orthonormal(std::span<const PureState> basis, double tol) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i; j < basis.size(); ++j) {
      if (!(basis[i].dims() == basis[j].dims())) throw Error(Errc::dimension_mismatch, "basis states differ in dims");
      const cplx g = basis[i].vector().dot(basis[j].vector());
      if (std::abs(g - cplx(i == j ? 1.0 : 0.0)) > tol) throw Error(Errc::invalid_input, "basis is not orthonormal");
    }
}

int sign_of(double x, double zero_tol) { return std::abs(x) < zero_tol ? 0 : (x > 0 ? 1 : -1); }

}  // namespace

CMatrix l_matrix(std::span<const PureState> basis, const StabilizerDictionary& dict, double tie_tol) {
  if (basis.empty()) throw Error(Errc::invalid_input, "empty basis");
  check_orthonormal(basis, 1e-9);
  const auto near = max_overlap(basis[0], dict, tie_tol);
  CMatrix l(static_cast<Eigen::Index>(near.argmax.size()), static_cast<Eigen::Index>(basis.size() - 1));
  for (std::size_t r = 0; r < near.argmax.size(); ++r) {
    const CVector& s = dict.states()[near.argmax[r]].state.vector();
    const cplx sp = s.dot(basis[0].vector());
    for (std::size_t c = 1; c < basis.size(); ++c) l(r, c - 1) = basis[c].vector().dot(s) * sp;
  }
  return l;
}

Eigen::MatrixXd w_matrix(std::span<const PureState> basis, double zero_tol) {
  check_orthonormal(basis, 1e-9);
  std::vector<WignerFunction> w;
  for (const auto& b : basis) w.push_back(wigner_function(b));
  const auto n = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      double s = 0;
      for (std::size_t k = 0; k < w[i].values.size(); ++k) s += sign_of(w[i].values[k], zero_tol) * w[j].values[k];
      m(i, j) = s;
    }
  return m;
}

ManaExpansion mana_expansion(const PerturbationFrame& frame, double zero_tol) {
  const PrimeDim& dims = frame.base.dims();
  const auto wpsi = wigner_function(frame.base).values;
  const auto wsig = wigner_values(frame.sigma, dims);
  const auto wmu = wigner_values(frame.mu, dims);
  ManaExpansion e;
  e.zero_tol = zero_tol;
  double quad = 0;
  for (std::size_t k = 0; k < wpsi.size(); ++k) {
    const int s = sign_of(wpsi[k], zero_tol);
    if (s != 0) {
      e.smooth_linear_coeff += s * wsig[k];
      quad += s * wmu[k];
    } else if (std::abs(wsig[k]) >= zero_tol) {
      e.linear_abs_coeff += std::abs(wsig[k]);
    } else {
      quad += std::abs(wmu[k]);
    }
  }
  e.vanishing_pattern_ok = e.linear_abs_coeff < zero_tol;
  e.quadratic_coeff = quad;
  e.report.measure = Measure::mana;
  if (!e.vanishing_pattern_ok) {
    e.report.kind = CriticalKind::sharp_min;
    e.report.leading_order = 1;
    e.report.leading_coefficient = e.linear_abs_coeff;
  } else if (std::abs(e.smooth_linear_coeff) >= 1e-9) {
    e.report.kind = CriticalKind::undetermined;
    e.report.leading_order = 1;
    e.report.leading_coefficient = e.smooth_linear_coeff;
  } else {
    e.report.leading_order = 2;
    e.report.leading_coefficient = quad;
    e.report.kind = quad < -1e-9 ? CriticalKind::smooth_max : quad > 1e-9 ? CriticalKind::smooth_min : CriticalKind::flat;
  }
  return e;
}

FidelityExpansion fidelity_expansion(const PerturbationFrame& frame, const StabilizerDictionary& dict, double tie_tol,
                                     double zero_tol) {
  const auto near = max_overlap(frame.base, dict, tie_tol);
  FidelityExpansion e;
  e.report.measure = Measure::fidelity;
  double max_lin = 0;
  for (std::size_t k : near.argmax) {
    const CVector& s = dict.states()[k].state.vector();
    const double lin = s.dot(frame.sigma * s).real();
    e.linear.push_back(lin);
    e.quadratic.push_back(s.dot(frame.mu * s).real());
    max_lin = std::max(max_lin, std::abs(lin));
  }
  if (max_lin >= zero_tol) {
    e.report.kind = CriticalKind::sharp_min;
    e.report.leading_order = 1;
    e.report.leading_coefficient = max_lin;
    return e;
  }
  const double top = *std::max_element(e.quadratic.begin(), e.quadratic.end());
  e.report.leading_order = 2;
  e.report.leading_coefficient = top;
  e.report.kind = top > zero_tol ? CriticalKind::smooth_min : top < -zero_tol ? CriticalKind::smooth_max : CriticalKind::flat;
  return e;
}

Xi2Expansion xi2_expansion(const PerturbationFrame& frame) {
  const PrimeDim& dims = frame.base.dims();
  const CVector& p = frame.base.vector();
  const CVector& f = frame.direction.vector();
  const CMatrix psi = p * p.adjoint();
  const CMatrix phi = f * f.adjoint();
  Xi2Expansion x;
  for (const auto& chi : all_points(dims)) {
    const CMatrix t = displacement_monomial(chi, dims).dense();
    auto k = [&](const CMatrix& a, const CMatrix& b) {
      return ((a * t * b * t.adjoint()).trace() / static_cast<double>(dims.hilbert())).real();
    };
    const std::array<double, 5> pt{k(psi, psi), k(psi, frame.sigma) + k(frame.sigma, psi),
                                   k(psi, phi) + k(frame.sigma, frame.sigma) + k(phi, psi),
                                   k(phi, frame.sigma) + k(frame.sigma, phi), k(phi, phi)};
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) x.tilde[i + j] += pt[i] * pt[j];
  }
  // 1/(1+e^2)^4 = sum_n C(n+3,3) (-e^2)^n
  for (int n = 0; n <= 8; ++n) {
    double s = 0;
    for (int i = 0; 2 * i <= n; ++i) {
      const double f_i = (i % 2 ? -1.0 : 1.0) * (i + 1) * (i + 2) * (i + 3) / 6.0;
      s += f_i * x.tilde[n - 2 * i];
    }
    x.coeffs[n] = s;
  }
  return x;
}

CriticalReport classify_xi2(const std::array<double, 9>& coeffs, double tol) {
  CriticalReport r;
  r.measure = Measure::xi2;
  for (int m = 2; m <= 8; ++m) {
    if (std::abs(coeffs[m]) <= tol) continue;
    r.leading_order = m;
    r.leading_coefficient = coeffs[m];
    if (m % 2) r.kind = CriticalKind::inflection;
    else r.kind = coeffs[m] > 0 ? CriticalKind::smooth_min : CriticalKind::smooth_max;
    return r;
  }
  r.kind = CriticalKind::flat;
  return r;
}

std::vector<PureState> orthogonal_complement(const PureState& psi) {
  const int n = psi.dim();
  CMatrix m(n, n);
  m.col(0) = psi.vector();
  int filled = 1;
  for (int k = 0; k < n && filled < n; ++k) {
    CVector v = CVector::Zero(n);
    v(k) = 1;
    for (int j = 0; j < filled; ++j) v -= m.col(j).dot(v) * m.col(j);
    for (int j = 0; j < filled; ++j) v -= m.col(j).dot(v) * m.col(j);
    if (v.norm() > 1e-6) m.col(filled++) = v / v.norm();
  }
  std::vector<PureState> out;
  for (int j = 1; j < n; ++j) out.emplace_back(psi.dims(), CVector(m.col(j)));
  return out;
}

PureState two_angle_direction(const PureState& b1, const PureState& b2, double theta, double phi1, double phi2) {
  return PureState(b1.dims(), CVector(std::polar(std::cos(theta), phi1) * b1.vector() + std::polar(std::sin(theta), phi2) * b2.vector()));
}

PureState phase_direction(const PureState& b, double phi) {
  return PureState(b.dims(), CVector(std::polar(1.0, phi) * b.vector()));
}

PureState random_direction(const PureState& psi, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  CVector v(psi.dim());
  for (auto& z : v) z = cplx(g(rng), g(rng));
  v -= psi.vector().dot(v) * psi.vector();
  return PureState(psi.dims(), std::move(v));
}

}  // namespace qmagic
