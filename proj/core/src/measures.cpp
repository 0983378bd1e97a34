#include "qmagic/measures.hpp"

#include <algorithm>
#include <cmath>

#include "qmagic/error.hpp"

namespace qmagic {

double WignerFunction::sum() const {
  double s = 0;
  for (double v : values) s += v;
  return s;
}

double WignerFunction::trace_norm() const {
  double s = 0;
  for (double v : values) s += std::abs(v);
  return s;
}

std::vector<double> wigner_values(const CMatrix& o, const PrimeDim& dims) {
  if (!dims.odd()) throw Error(Errc::unsupported_dimension, "Wigner function needs odd d");
  if (o.rows() != dims.hilbert() || o.cols() != dims.hilbert()) throw Error(Errc::dimension_mismatch, "operator does not match dims");
  std::vector<double> w(dims.points());
  const double inv = 1.0 / dims.hilbert();
  for (std::size_t k = 0; k < dims.points(); ++k) {
    const auto a = phase_point_monomial(PhasePoint::from_index(k, dims), dims);
    cplx tr = 0;
    for (int j = 0; j < dims.hilbert(); ++j) tr += a.value[j] * o(j, a.row[j]);
    w[k] = tr.real() * inv;
  }
  return w;
}

WignerFunction wigner_function(const DenseOperator& o) {
  if (!satisfies_role(o.matrix(), Role::hermitian, 1e-9)) throw Error(Errc::invalid_input, "Wigner function of a non-Hermitian operator");
  return WignerFunction{o.dims(), wigner_values(o.matrix(), o.dims())};
}

WignerFunction wigner_function(const PureState& psi) { return wigner_function(psi.density()); }

double wigner_trace_norm(const DenseOperator& rho) { return wigner_function(rho).trace_norm(); }
double wigner_trace_norm(const PureState& psi) { return wigner_function(psi).trace_norm(); }
double mana(const DenseOperator& rho) { return std::log(wigner_trace_norm(rho)); }
double mana(const PureState& psi) { return std::log(wigner_trace_norm(psi)); }

PauliDistribution pauli_distribution(const PureState& psi) {
  const PrimeDim& dims = psi.dims();
  const CVector& v = psi.vector();
  std::vector<double> p(dims.points());
  for (std::size_t k = 0; k < dims.points(); ++k) {
    const auto t = displacement_monomial(PhasePoint::from_index(k, dims), dims);
    cplx e = 0;
    for (int j = 0; j < dims.hilbert(); ++j) e += std::conj(v(t.row[j])) * t.value[j] * v(j);
    p[k] = std::norm(e) / dims.hilbert();
  }
  return PauliDistribution{dims, std::move(p)};
}

namespace {

void check_alpha(double alpha, bool allow) {
  if (alpha == 1.0) throw Error(Errc::invalid_input, "alpha = 1 is not a Renyi order here");
  if (alpha < 2.0 && !allow) throw Error(Errc::invalid_input, "alpha < 2 requires an explicit override");
}

double power(double x, double alpha) {
  if (alpha == std::floor(alpha) && alpha > 0 && alpha < 64) {
    double r = 1;
    for (int k = 0; k < static_cast<int>(alpha); ++k) r *= x;
    return r;
  }
  return std::pow(x, alpha);
}

}  // namespace

double xi(const PureState& psi, double alpha, bool allow_small_alpha) {
  check_alpha(alpha, allow_small_alpha);
  double s = 0;
  for (double p : pauli_distribution(psi).probs) s += power(std::max(p, 0.0), alpha);
  return s;
}

double sre(const PureState& psi, double alpha, bool allow_small_alpha) {
  return std::log(xi(psi, alpha, allow_small_alpha)) / (1.0 - alpha) - psi.dims().n() * std::log(psi.dims().d());
}

double sre_upper_bound(const PrimeDim& dims, double alpha) {
  const double dn = dims.hilbert();
  return std::log((1.0 + (dn - 1.0) * std::pow(dn + 1.0, 1.0 - alpha)) / dn) / (1.0 - alpha);
}

double mixed_sre2(const DenseOperator& rho) {
  const PrimeDim& dims = rho.dims();
  double num = 0, den = 0;
  for (const auto& chi : all_points(dims)) {
    const auto t = displacement_monomial(chi, dims);
    cplx tr = 0;
    for (int j = 0; j < dims.hilbert(); ++j) tr += t.value[j] * rho.matrix()(j, t.row[j]);
    const double a2 = std::norm(tr);
    num += a2 * a2;
    den += a2;
  }
  return -std::log(num / den);
}

cplx wh_kernel_complex(const CMatrix& o1, const CMatrix& o2, const PhasePoint& chi, const PrimeDim& dims) {
  const CMatrix t = displacement_monomial(chi, dims).dense();
  return (o1 * t * o2 * t.adjoint()).trace() / static_cast<double>(dims.hilbert());
}

double wh_kernel(const DenseOperator& o1, const DenseOperator& o2, const PhasePoint& chi) {
  if (!(o1.dims() == o2.dims())) throw Error(Errc::dimension_mismatch, "kernel of mismatched operators");
  return wh_kernel_complex(o1.matrix(), o2.matrix(), chi, o1.dims()).real();
}

OverlapResult stabilizer_fidelity(const PureState& psi, const StabilizerDictionary& dict, double tie_tol) {
  return max_overlap(psi, dict, tie_tol);
}

OverlapResult stabilizer_fidelity(const PureState& psi, double tie_tol) {
  return max_overlap(psi, stabilizer_dictionary(psi.dims()), tie_tol);
}

OverlapResult group_stabilizer_fidelity(const PureState& psi, std::span<const PureState> states, double tie_tol) {
  if (states.empty()) throw Error(Errc::invalid_input, "empty G-stabilizer set");
  std::vector<double> ov;
  for (const auto& s : states) ov.push_back(fidelity(psi, s));
  OverlapResult r;
  r.value = *std::max_element(ov.begin(), ov.end());
  for (std::size_t k = 0; k < ov.size(); ++k)
    if (ov[k] >= r.value - tie_tol) r.argmax.push_back(k);
  return r;
}

MeasureReport measure_report(const PureState& psi, const std::vector<double>& alphas, double tie_tol) {
  MeasureReport r;
  if (psi.dims().odd()) {
    r.wigner_trace_norm = wigner_trace_norm(psi);
    r.mana = std::log(*r.wigner_trace_norm);
  }
  const auto f = stabilizer_fidelity(psi, tie_tol);
  r.stabilizer_fidelity = f.value;
  r.nearest_count = static_cast<int>(f.argmax.size());
  for (double a : alphas) {
    r.xi[a] = xi(psi, a, true);
    r.sre[a] = std::log(r.xi[a]) / (1.0 - a) - psi.dims().n() * std::log(psi.dims().d());
  }
  return r;
}

}  // namespace qmagic
