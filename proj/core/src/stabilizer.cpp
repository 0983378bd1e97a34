#include "qmagic/stabilizer.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "qmagic/error.hpp"

namespace qmagic {

std::vector<int> coset_label(const IsotropicSubspace& subspace, const PhasePoint& chi) {
  std::vector<int> label;
  label.reserve(subspace.basis().size());
  for (const auto& b : subspace.basis()) label.push_back(symplectic_product(chi, b));
  return label;
}

namespace {

CMatrix stabilizer_projector(const IsotropicSubspace& subspace, const PhasePoint& chi, const PrimeDim& dims) {
  const int dim = dims.hilbert();
  if (dims.odd()) {
    CMatrix p = CMatrix::Zero(dim, dim);
    for (const auto& m : subspace.elements()) {
      const auto t = displacement_monomial(m, dims);
      const cplx c = omega(dims.d(), symplectic_product(chi, m));
      for (int j = 0; j < dim; ++j) p(t.row[j], j) += c * t.value[j];
    }
    return p / static_cast<double>(dim);
  }
  CMatrix p = CMatrix::Identity(dim, dim);
  for (const auto& b : subspace.basis()) {
    const double s = symplectic_product(chi, b) ? -1.0 : 1.0;
    CMatrix g = CMatrix::Identity(dim, dim) + s * displacement_monomial(b, dims).dense();
    p = p * g * 0.5;
  }
  return p;
}

}  // namespace

StabilizerState stabilizer_state(const IsotropicSubspace& subspace, const PhasePoint& chi) {
  if (!subspace.maximal()) throw Error(Errc::invalid_input, "stabilizer state needs a maximal isotropic subspace");
  const PrimeDim dims(chi.d(), chi.n());
  const CMatrix p = stabilizer_projector(subspace, chi, dims);
  Eigen::Index best = 0;
  p.colwise().norm().maxCoeff(&best);
  CVector v = p.col(best);
  if (v.norm() < 1e-6) throw Error(Errc::invalid_stabilizer, "stabilizer projector vanishes");
  if (std::abs(p.trace() - cplx(1.0)) > 1e-8) throw Error(Errc::invalid_stabilizer, "stabilizer projector is not rank one");
  v = phase_normalized(CVector(v / v.norm()), 1e-8);
  // smallest representative of the coset chi + M
  PhasePoint rep = chi;
  for (const auto& m : subspace.elements()) rep = std::min(rep, chi + m);
  return StabilizerState{subspace, rep, PureState(dims, std::move(v))};
}

StabilizerDictionary::StabilizerDictionary(const PrimeDim& dims) : dims_(dims) {
  if (dims.points() > 1024) throw Error(Errc::budget_exceeded, "stabilizer enumeration too large for " + to_string(dims));
  subspaces_ = enumerate_maximal_isotropic(dims);
  const auto pts = all_points(dims);
  for (const auto& m : subspaces_) {
    std::map<std::vector<int>, std::size_t> by_label;
    std::vector<std::vector<int>> labels;
    std::vector<std::size_t> slots;
    for (const auto& chi : pts) {
      auto lab = coset_label(m, chi);
      if (by_label.count(lab)) continue;
      by_label[lab] = states_.size();
      labels.push_back(lab);
      slots.push_back(states_.size());
      states_.push_back(stabilizer_state(m, chi));
    }
    labels_.push_back(std::move(labels));
    slots_.push_back(std::move(slots));
  }
  columns_.resize(dims.hilbert(), static_cast<Eigen::Index>(states_.size()));
  for (std::size_t k = 0; k < states_.size(); ++k) columns_.col(static_cast<Eigen::Index>(k)) = states_[k].state.vector();
}

std::optional<std::size_t> StabilizerDictionary::find(std::size_t subspace_index, const PhasePoint& chi) const {
  if (subspace_index >= subspaces_.size()) return std::nullopt;
  const auto lab = coset_label(subspaces_[subspace_index], chi);
  const auto& labels = labels_[subspace_index];
  for (std::size_t k = 0; k < labels.size(); ++k)
    if (labels[k] == lab) return slots_[subspace_index][k];
  return std::nullopt;
}

long long stabilizer_state_count(const PrimeDim& dims) {
  long long c = ipow(dims.d(), dims.n());
  for (int i = 1; i <= dims.n(); ++i) c *= ipow(dims.d(), i) + 1;
  return c;
}

const StabilizerDictionary& stabilizer_dictionary(const PrimeDim& dims) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<StabilizerDictionary>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{dims.d(), dims.n()}];
  if (!slot) slot = std::make_unique<StabilizerDictionary>(dims);
  return *slot;
}

std::vector<double> overlaps(const PureState& psi, const StabilizerDictionary& dict) {
  if (!(psi.dims() == dict.dims())) throw Error(Errc::dimension_mismatch, "state and dictionary dims differ");
  const CVector amp = dict.matrix().adjoint() * psi.vector();
  std::vector<double> out(static_cast<std::size_t>(amp.size()));
  for (Eigen::Index k = 0; k < amp.size(); ++k) out[k] = std::norm(amp(k));
  return out;
}

OverlapResult max_overlap(const PureState& psi, const StabilizerDictionary& dict, double tie_tol) {
  const auto ov = overlaps(psi, dict);
  OverlapResult r;
  r.value = *std::max_element(ov.begin(), ov.end());
  for (std::size_t k = 0; k < ov.size(); ++k)
    if (ov[k] >= r.value - tie_tol) r.argmax.push_back(k);
  return r;
}

}  // namespace qmagic
