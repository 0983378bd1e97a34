#include "qmagic/verify.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <unordered_set>

#include "qmagic/catalog.hpp"
#include "qmagic/clifford.hpp"
#include "qmagic/error.hpp"
#include "qmagic/measures.hpp"
#include "qmagic/search.hpp"
#include "qmagic/stabilizer.hpp"

namespace qmagic {

void VerifyReport::add(std::string name, std::string exact, double expected, double got, double tol) {
  const double err = std::abs(expected - got);
  checks.push_back(Check{std::move(name), std::move(exact), expected, got, err, tol, err <= tol});
}

void VerifyReport::add_residual(std::string name, double residual, double tol) {
  checks.push_back(Check{std::move(name), "0", 0.0, residual, std::abs(residual), tol, std::abs(residual) <= tol});
}

std::size_t VerifyReport::failures() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += !c.pass;
  return n;
}

namespace {

bool has_eigenvector(const std::vector<Eigenpair>& pairs, const PureState& psi, double tol) {
  for (const auto& p : pairs)
    if (equal_up_to_phase(p.state, psi, tol)) return true;
  return false;
}

}  // namespace

VerifyReport verify_catalog(double tol) {
  VerifyReport rep;
  std::map<std::string, std::vector<const CatalogEntry*>> by_operator;
  for (const auto& name : catalog_names()) {
    const auto& e = catalog_entry(name);
    const auto& v = e.state.vector();
    rep.add_residual(name + " norm", v.norm() - 1.0, 1e-12);
    if (e.eigen_operator) {
      const auto& op = *e.eigen_operator;
      const CMatrix u = op.word.matrix(e.dims);
      rep.add_residual(name + " eigenvector of " + op.word.str(), (u * v - op.eigenvalue * v).norm(), tol);
      const auto pairs = nondegenerate_eigenstates(DenseOperator(e.dims, u, Role::unitary, 1e-9));
      rep.add(name + " non-degenerate", "1", 1.0, has_eigenvector(pairs, e.state, 1e-8) ? 1.0 : 0.0, 0.0);
      by_operator[op.word.str() + "#" + to_string(e.dims)].push_back(&e);
    }
    for (const auto& [key, val] : e.expected) {
      double got = 0;
      if (key == kTraceNorm) {
        got = wigner_trace_norm(e.state);
      } else if (key == kFidelity) {
        got = stabilizer_fidelity(e.state).value;
      } else if (key == kSre2) {
        got = sre(e.state, 2.0);
      }
      rep.add(name + " " + key, val.exact, val.value, got, tol);
    }
    if (e.expected_nearest_count) {
      const auto f = stabilizer_fidelity(e.state);
      rep.add(name + " nearest count", std::to_string(*e.expected_nearest_count), *e.expected_nearest_count,
              static_cast<double>(f.argmax.size()), 0.0);
    }
  }
  // Eigenvectors of one operator with distinct eigenvalues must be orthogonal.
  for (const auto& [key, group] : by_operator) {
    for (std::size_t i = 0; i < group.size(); ++i)
      for (std::size_t j = i + 1; j < group.size(); ++j) {
        const auto* a = group[i];
        const auto* b = group[j];
        if (std::abs(a->eigen_operator->eigenvalue - b->eigen_operator->eigenvalue) < 1e-6) continue;
        rep.add_residual(a->name + " orthogonal to " + b->name, std::abs(a->state.vector().dot(b->state.vector())), tol);
      }
  }
  return rep;
}

const std::vector<Equivalence>& stated_equivalences() {
  static const std::vector<Equivalence> list{
      {"G4,2 from psi0", "Sdg@1 H@1 CZ@1,2 H@2 CZ@1,2 Sdg@1 H@2 H@1", "2q:psi0", "2q:G4,2", std::nullopt},
      {"G4,3 from T1T0", "Sdg@2 H@2 H@1 CZ@1,2 H@1 CZ@1,2", "2q:T1T0", "2q:G4,3", std::nullopt},
      {"G4,4 from G4,3", "CZ@1,2", "2q:G4,3", "2q:G4,4", std::nullopt},
      {"G18,1 from HH", "Sdg@2 H@1 Z@1 CNOT@1,2", "2q:HH", "2q:G18,1", std::nullopt},
      {"G18,2 from G18,1", "SWAP@1,2 CZ@1,2", "2q:G18,1", "2q:G18,2", std::nullopt},
      {"G18,3 from G18,2", "Z@1 Z@2", "2q:G18,2", "2q:G18,3", std::nullopt},
      {"G18,4 from G18,1", "Z@1 Z@2", "2q:G18,1", "2q:G18,4", std::nullopt},
      {"G20,2 from G20,1", "H@1 Sdg@1 H@1 H@2", "2q:G20,1", "2q:G20,2", std::nullopt},
      {"G20,3 from G20,1", "H@1 Sdg@1 H@1 CZ@1,2 H@2", "2q:G20,1", "2q:G20,3", std::nullopt},
      {"G20,4 from G20,1", "H@2 Sdg@2 Z@1 H@1 Sdg@1", "2q:G20,1", "2q:G20,4", std::nullopt},
      {"C1 W = i |0>|G4,2>",
       "H@2 S@1 CZ@2,3 H@1 H@2 H@3 S@3 S@2 S@1 CZ@1,2 CZ@1,3 S@1 H@1 H@3 H@3 CZ@2,3 S@1", "3q:W", "0|2q:G4,2",
       cplx(0, 1)},
      {"C2 |0>|G20,2>",
       "CZ@1,3 S@3 CZ@1,3 S@3 H@1 CZ@1,3 CZ@1,2 S@1 S@1 H@3 H@2 H@1 CZ@1,2 S@2 H@2 CZ@1,2 CZ@2,3 CZ@1,3", "0|2q:G20,2",
       "3q:W+i111", cplx(-2, 1) / std::sqrt(5.0)},
      {"G20,1 from psi_max,0", "CZ@1,2 Sdg@1 H@1 CZ@1,2 Sdg@1^3 H@2", "2q:psi_max,0", "2q:G20,1", std::nullopt},
  };
  return list;
}

namespace {

PureState resolve(const std::string& spec) {
  if (spec.starts_with("0|")) return tensor(PureState::basis(PrimeDim(2, 1), 0), build(spec.substr(2)));
  return build(spec);
}

}  // namespace

VerifyReport verify_equivalences(double tol) {
  VerifyReport rep;
  for (const auto& eq : stated_equivalences()) {
    const auto from = resolve(eq.from);
    const auto to = resolve(eq.to);
    const auto w = CliffordWord::parse(eq.word);
    const cplx ov = to.vector().dot(w.apply(from.vector(), from.dims()));
    rep.add(eq.name + " |overlap|", "1", 1.0, std::abs(ov), tol);
    if (eq.phase) rep.add(eq.name + " phase", "stated", 0.0, std::abs(ov - *eq.phase), tol);
  }
  return rep;
}

const std::vector<CMatrix>& cached_clifford_unitaries(const PrimeDim& dims) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<CMatrix>> cache;
  std::lock_guard lock(mu);
  auto key = std::pair{dims.d(), dims.n()};
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, enumerate_reduced_clifford_unitaries(dims)).first;
  return it->second;
}

namespace {

std::string orbit_key(const CVector& v) { return quantized_key(CMatrix(phase_normalized(v, 1e-3)), 1e-6, false); }

struct Orbit {
  std::unordered_set<std::string> keys;
};

Orbit make_orbit(const PureState& psi, const std::vector<CMatrix>& group) {
  Orbit o;
  for (const auto& u : group) o.keys.insert(orbit_key(u * psi.vector()));
  return o;
}

bool explicit_equivalent(const PureState& a, const PureState& b, const std::vector<CMatrix>& group, double tol) {
  for (const auto& u : group)
    if (std::abs(b.vector().dot(u * a.vector())) > 1 - tol) return true;
  return false;
}

}  // namespace

bool clifford_equivalent(const PureState& a, const PureState& b, double tol) {
  if (!(a.dims() == b.dims())) return false;
  if (!invariants_match(a, b, 1e-8)) return false;
  return explicit_equivalent(a, b, cached_clifford_unitaries(a.dims()), tol);
}

std::size_t SweepResult::nonstabilizer_classes() const {
  std::size_t n = 0;
  for (const auto& c : classes) n += !c.stabilizer;
  return n;
}

SweepResult eigenstate_sweep(const PrimeDim& dims, const std::vector<CMatrix>& operators,
                             const std::vector<std::string>& labels, double tol) {
  const auto& group = cached_clifford_unitaries(dims);
  SweepResult res;
  res.operators = operators.size();
  std::vector<Orbit> orbits;
  std::vector<std::vector<double>> invariants;
  for (std::size_t k = 0; k < operators.size(); ++k) {
    const auto pairs = nondegenerate_eigenstates(DenseOperator(dims, operators[k], Role::unitary, 1e-8), tol);
    for (const auto& p : pairs) {
      ++res.eigenstates;
      const auto key = orbit_key(p.state.vector());
      std::optional<std::size_t> found;
      for (std::size_t c = 0; c < orbits.size() && !found; ++c)
        if (orbits[c].keys.contains(key)) found = c;
      if (!found) {
        // Rounding can split a key at a grid boundary; confirm against classes with the same invariant.
        const auto inv = overlap_invariant(p.state);
        for (std::size_t c = 0; c < invariants.size() && !found; ++c) {
          bool same = true;
          for (std::size_t j = 0; j < inv.size() && same; ++j) same = std::abs(inv[j] - invariants[c][j]) < 1e-8;
          if (same && explicit_equivalent(res.classes[c].representative, p.state, group, 1e-9)) found = c;
        }
        if (!found) {
          const auto f = stabilizer_fidelity(p.state);
          res.classes.push_back(EigenClass{p.state, {}, f.value > 1 - 1e-9, f.value, static_cast<int>(f.argmax.size()), {}});
          orbits.push_back(make_orbit(p.state, group));
          invariants.push_back(inv);
          found = res.classes.size() - 1;
        }
      }
      res.classes[*found].sources.push_back(k < labels.size() ? labels[k] : std::to_string(k));
    }
  }
  for (const auto& name : catalog_names()) {
    const auto& e = catalog_entry(name);
    if (!(e.dims == dims)) continue;
    for (std::size_t c = 0; c < res.classes.size(); ++c) {
      if (orbits[c].keys.contains(orbit_key(e.state.vector())) ||
          (std::abs(res.classes[c].fidelity - stabilizer_fidelity(e.state).value) < 1e-8 &&
           explicit_equivalent(res.classes[c].representative, e.state, group, 1e-9))) {
        res.classes[c].catalog_matches.push_back(name);
        break;
      }
    }
  }
  return res;
}

SweepResult single_qudit_sweep(int d, double tol) {
  const PrimeDim dims(d, 1);
  const auto& ops = cached_clifford_unitaries(dims);
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < ops.size(); ++k) labels.push_back("clifford#" + std::to_string(k));
  return eigenstate_sweep(dims, ops, labels, tol);
}

SweepResult two_qubit_sweep(double tol) {
  const PrimeDim dims(2, 2);
  std::vector<CMatrix> ops;
  std::vector<std::string> labels;
  const auto& reps = two_qubit_class_representatives();
  for (std::size_t k = 0; k < reps.size(); ++k) {
    ops.push_back(CliffordWord::parse(reps[k]).matrix(dims));
    labels.push_back("No." + std::to_string(k + 1));
  }
  return eigenstate_sweep(dims, ops, labels, tol);
}

}  // namespace qmagic
