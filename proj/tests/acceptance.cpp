// Acceptance checks, one PASS/FAIL line per criterion.
//   acceptance               run all criteria
//   acceptance --criterion N run one criterion

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qmagic/catalog.hpp"
#include "qmagic/clifford.hpp"
#include "qmagic/distillation.hpp"
#include "qmagic/error.hpp"
#include "qmagic/extent.hpp"
#include "qmagic/extremality.hpp"
#include "qmagic/measures.hpp"
#include "qmagic/verify.hpp"

using namespace qmagic;

namespace {

constexpr double pi = std::numbers::pi;
const double r2 = std::sqrt(2.0);
const double r3 = std::sqrt(3.0);
const double r5 = std::sqrt(5.0);

class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) {
      ++failures_;
      if (failed_.size() < 6) failed_.push_back(what);
    }
  }
  void near(double got, double want, double tol, const std::string& what) {
    std::ostringstream os;
    os << what << " got " << got << " want " << want;
    expect(std::abs(got - want) <= tol, os.str());
  }
  void note(const std::string& s) { notes_.push_back(s); }
  bool passed() const { return failures_ == 0; }
  std::string summary() const {
    std::ostringstream os;
    os << checks_ - failures_ << "/" << checks_ << " checks";
    for (const auto& n : notes_) os << "; " << n;
    for (const auto& f : failed_) os << "; failed: " << f;
    if (failures_ > static_cast<int>(failed_.size())) os << "; ...";
    return os.str();
  }

 private:
  int checks_ = 0;
  int failures_ = 0;
  std::vector<std::string> failed_;
  std::vector<std::string> notes_;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

PureState random_state(const PrimeDim& dims, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  CVector v(dims.hilbert());
  for (auto& z : v) z = cplx(g(rng), g(rng));
  return PureState(dims, v);
}

PureState ket(const PrimeDim& dims, std::initializer_list<cplx> amps) {
  CVector v(static_cast<Eigen::Index>(amps.size()));
  Eigen::Index i = 0;
  for (auto a : amps) v(i++) = a;
  return PureState(dims, std::move(v));
}

std::vector<PureState> from_names(std::initializer_list<const char*> names) {
  std::vector<PureState> out;
  for (const char* n : names) out.push_back(build(n));
  return out;
}

// Every row of `want` is matched to a distinct row of `got`.
bool rows_match(const CMatrix& got, const std::vector<std::vector<cplx>>& want, double tol) {
  if (got.rows() != static_cast<Eigen::Index>(want.size())) return false;
  std::vector<bool> used(want.size(), false);
  for (const auto& row : want) {
    if (static_cast<Eigen::Index>(row.size()) != got.cols()) return false;
    bool found = false;
    for (Eigen::Index r = 0; r < got.rows() && !found; ++r) {
      if (used[r]) continue;
      bool same = true;
      for (Eigen::Index c = 0; c < got.cols(); ++c) same = same && std::abs(got(r, c) - row[c]) <= tol;
      if (same) used[r] = found = true;
    }
    if (!found) return false;
  }
  return true;
}

double max_diff(const Eigen::MatrixXd& got, const std::vector<std::vector<double>>& want) {
  double worst = 0;
  for (std::size_t r = 0; r < want.size(); ++r)
    for (std::size_t c = 0; c < want[r].size(); ++c)
      worst = std::max(worst, std::abs(got(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) - want[r][c]));
  return worst;
}

oracle::Point to_oracle(const PhasePoint& c) {
  return {std::vector<int>(c.p().begin(), c.p().end()), std::vector<int>(c.q().begin(), c.q().end())};
}

Tally operator_identities() {
  Tally t;
  const auto t0 = std::chrono::steady_clock::now();
  for (const auto& dims : {PrimeDim(3, 1), PrimeDim(5, 1)}) {
    const int d = dims.d();
    const int n = dims.hilbert();
    const auto pts = all_points(dims);
    const cplx tau = -std::polar(1.0, pi / d);
    double def = 0, comp = 0, comm = 0, trace = 0, orth = 0, a_def = 0, a_orth = 0, a_trace = 0, cov = 0;
    CMatrix resolution = CMatrix::Zero(n, n);
    for (const auto& a : pts) {
      const CMatrix ta = displacement_operator(a, dims).matrix();
      const CMatrix aa = phase_point_operator(a, dims).matrix();
      def = std::max(def, max_abs_diff(ta, oracle::displacement(to_oracle(a), d)));
      a_def = std::max(a_def, max_abs_diff(aa, oracle::phase_point(to_oracle(a), d)));
      trace = std::max(trace, std::abs(ta.trace() - cplx(a.is_zero() ? n : 0)));
      a_trace = std::max(a_trace, std::abs(aa.trace() - cplx(1)));
      resolution += aa;
      for (const auto& b : pts) {
        const CMatrix tb = displacement_operator(b, dims).matrix();
        const CMatrix ab = phase_point_operator(b, dims).matrix();
        const int ab_form = symplectic_product(a, b);
        comp = std::max(comp, max_abs_diff(ta * tb, std::pow(tau, -ab_form) * displacement_operator(a + b, dims).matrix()));
        comm = std::max(comm, max_abs_diff(ta * tb, omega(d, -ab_form) * tb * ta));
        orth = std::max(orth, std::abs((ta.adjoint() * tb).trace() - cplx(a == b ? n : 0)));
        a_orth = std::max(a_orth, std::abs((aa * ab).trace() - cplx(a == b ? n : 0)));
        cov = std::max(cov, max_abs_diff(tb * aa * tb.adjoint(), phase_point_operator(a + b, dims).matrix()));
      }
    }
    double clifford = 0;
    for (const auto& c : enumerate_reduced_clifford(dims)) {
      clifford = std::max(clifford, affine_law_error(c));
      const CMatrix& u = c.unitary.matrix();
      for (const auto& a : pts) {
        const PhasePoint img = c.symplectic * a + c.displacement;
        clifford = std::max(clifford, max_abs_diff(u * phase_point_operator(a, dims).matrix() * u.adjoint(),
                                                   phase_point_operator(img, dims).matrix()));
      }
    }
    const std::string tag = " d=" + std::to_string(d);
    t.near(def, 0, 1e-10, "displacement definition" + tag);
    t.near(a_def, 0, 1e-10, "phase-point definition" + tag);
    t.near(comp, 0, 1e-10, "composition" + tag);
    t.near(comm, 0, 1e-10, "commutation" + tag);
    t.near(trace, 0, 1e-10, "displacement trace" + tag);
    t.near(a_trace, 0, 1e-10, "phase-point trace" + tag);
    t.near(orth, 0, 1e-10, "displacement orthogonality" + tag);
    t.near(a_orth, 0, 1e-10, "phase-point orthogonality" + tag);
    t.near(max_abs_diff(resolution, n * CMatrix::Identity(n, n)), 0, 1e-10, "phase-point resolution" + tag);
    t.near(cov, 0, 1e-10, "displacement covariance" + tag);
    t.near(clifford, 0, 1e-10, "Clifford covariance" + tag);
  }
  const double secs = seconds_since(t0);
  t.expect(secs < 10, "runtime " + std::to_string(secs) + " s");
  t.note("runtime " + std::to_string(secs) + " s");
  return t;
}

Tally counts() {
  Tally t;
  const std::vector<std::pair<PrimeDim, long long>> states{
      {PrimeDim(2, 1), 6}, {PrimeDim(2, 2), 60}, {PrimeDim(2, 3), 1080}, {PrimeDim(3, 1), 12}, {PrimeDim(5, 1), 30}};
  for (const auto& [dims, want] : states) {
    const std::string tag = to_string(dims);
    t.expect(stabilizer_state_count(dims) == want, "formula count " + tag);
    t.expect(static_cast<long long>(stabilizer_dictionary(dims).size()) == want, "enumerated count " + tag);
  }
  const std::vector<std::pair<PrimeDim, long long>> orders{
      {PrimeDim(2, 1), 24}, {PrimeDim(3, 1), 216}, {PrimeDim(5, 1), 3000}, {PrimeDim(2, 2), 11520}};
  for (const auto& [dims, want] : orders) {
    const std::string tag = to_string(dims);
    t.expect(reduced_clifford_order(dims) == want, "formula order " + tag);
    t.expect(static_cast<long long>(enumerate_reduced_clifford_unitaries(dims).size()) == want, "enumerated order " + tag);
  }
  return t;
}

Tally qutrit_tables() {
  Tally t;
  const double c2 = std::cos(2 * pi / 9), c1 = std::cos(pi / 9), s18 = std::sin(pi / 18);
  const double hp = (1 + r3) / 12, hm = (1 - r3) / 12;
  const double ta = (1 + 2 * c2) / 9, tb = (1 - 2 * c1) / 9, tc = (1 + 2 * s18) / 9;
  struct Row {
    const char* name;
    std::vector<std::vector<double>> wigner;
    double trace_norm, fidelity;
    int nearest;
  };
  const std::vector<Row> rows{
      {"qutrit:S", {{-1.0 / 3, 1.0 / 6, 1.0 / 6}, {1.0 / 6, 1.0 / 6, 1.0 / 6}, {1.0 / 6, 1.0 / 6, 1.0 / 6}}, 5.0 / 3, 0.5, 8},
      {"qutrit:N", {{-1.0 / 6, 1.0 / 6, 1.0 / 6}, {1.0 / 3, 1.0 / 6, 1.0 / 6}, {-1.0 / 6, 1.0 / 6, 1.0 / 6}}, 5.0 / 3, 2.0 / 3, 3},
      {"qutrit:H+", {{1.0 / 3, hp, hp}, {hp, hm, hm}, {hp, hm, hm}}, 1.0 / 3 + 2 / r3, (3 + r3) / 6, 2},
      {"qutrit:T0", {{ta, tb, tc}, {tc, ta, tb}, {ta, tb, tc}}, (1 + 4 * c1) / 3, std::pow(1 + 2 * c2, 2) / 9, 3},
  };
  for (const auto& r : rows) {
    const auto psi = build(r.name);
    const auto w = wigner_function(psi);
    double worst = 0;
    for (int p = 0; p < 3; ++p)
      for (int q = 0; q < 3; ++q) worst = std::max(worst, std::abs(w.at(PhasePoint({p}, {q}, 3)) - r.wigner[p][q]));
    t.near(worst, 0, 1e-9, std::string(r.name) + " Wigner matrix");
    t.near(w.trace_norm(), r.trace_norm, 1e-9, std::string(r.name) + " trace norm");
    const auto f = stabilizer_fidelity(psi);
    t.near(f.value, r.fidelity, 1e-9, std::string(r.name) + " fidelity");
    t.expect(static_cast<int>(f.argmax.size()) == r.nearest, std::string(r.name) + " nearest count " + std::to_string(f.argmax.size()));
  }
  return t;
}

Tally ququint_tables() {
  Tally t;
  struct Row {
    const char* name;
    double trace_norm, fidelity;
    int nearest;
  };
  const std::vector<Row> rows{
      {"ququint:H,+i", 1.8311, 0.4627, 4},    {"ququint:H,-1", 1.8, 0.7236, 2},      {"ququint:XVS,1", 1.8944, 0.5236, 5},
      {"ququint:B',-1", 1.9889, 0.6315, 3},   {"ququint:B',-w3", 2.1134, 0.4824, 3}, {"ququint:B',w3", 1.8661, 0.4487, 6},
      {"ququint:A,-pi/5", 1.6472, 0.5, 2},    {"ququint:A,4pi/5", 1.6472, 0.5, 2},
  };
  for (const auto& r : rows) {
    const auto& e = catalog_entry(r.name);
    const double tn = wigner_trace_norm(e.state);
    const auto f = stabilizer_fidelity(e.state);
    t.near(tn, r.trace_norm, 1e-4, std::string(r.name) + " printed trace norm");
    t.near(f.value, r.fidelity, 1e-4, std::string(r.name) + " printed fidelity");
    t.expect(static_cast<int>(f.argmax.size()) == r.nearest, std::string(r.name) + " nearest count");
  }
  int closed = 0;
  for (const auto& n : catalog_names("ququint:")) {
    const auto& e = catalog_entry(n);
    if (auto it = e.expected.find(kTraceNorm); it != e.expected.end()) {
      t.near(wigner_trace_norm(e.state), it->second.value, 1e-9, n + " trace norm " + it->second.exact);
      ++closed;
    }
    if (auto it = e.expected.find(kFidelity); it != e.expected.end()) {
      const auto f = stabilizer_fidelity(e.state);
      t.near(f.value, it->second.value, 1e-9, n + " fidelity " + it->second.exact);
      if (e.expected_nearest_count) t.expect(static_cast<int>(f.argmax.size()) == *e.expected_nearest_count, n + " nearest count");
      ++closed;
    }
  }
  t.expect(closed >= 16, "closed forms present");
  return t;
}

Tally l_and_w_matrices() {
  Tally t;
  using Rows = std::vector<std::vector<cplx>>;
  const PrimeDim qutrit(3, 1);
  const cplx i(0, 1);
  const cplx e4 = std::polar(1.0, pi / 4);
  const cplx w3 = std::polar(1.0, 2 * pi / 3);

  const double la = 1 / (2 * std::sqrt(3 + r3)), lb = 1 / (2 * std::sqrt(3 - r3));
  const double lc = (1 + r3) / (2 * std::sqrt(2 * (3 + r3))), le = (-1 + r3) / (2 * std::sqrt(2 * (3 - r3)));
  const double c2 = std::cos(2 * pi / 9), c1 = std::cos(pi / 9), s18 = std::sin(pi / 18), c18 = std::cos(pi / 18);
  const double t1 = 2.0 / 9 * (2 * c2 + s18), t2 = 2.0 / 9 * (-2 * c1 + c2), t3 = (-r3 * c18 - 3 * s18) / 9;

  struct LCase {
    std::string label;
    std::vector<PureState> basis;
    Rows exact;
  };
  const std::vector<LCase> l_cases{
      {"qubit T0;T1", from_names({"qubit:T0", "qubit:T1"}),
       {{-1 / std::sqrt(6.0)}, {std::polar(1.0, -pi / 3) / std::sqrt(6.0)}, {std::polar(1.0, pi / 3) / std::sqrt(6.0)}}},
      {"qubit H0;H1", from_names({"qubit:H0", "qubit:H1"}), {{-1 / (2 * r2)}, {1 / (2 * r2)}}},
      {"S;H+;H-",
       from_names({"qutrit:S", "qutrit:H+", "qutrit:H-"}),
       {{la, lb},
        {-la, -lb},
        {-lc * e4, le * std::conj(e4)},
        {-lc * std::conj(e4), le * e4},
        {lc * std::conj(e4), -le * e4},
        {-i * la, i * lb},
        {i * la, -i * lb},
        {lc * e4, -le * std::conj(e4)}}},
      {"H+;H-;S",
       from_names({"qutrit:H+", "qutrit:H-", "qutrit:S"}),
       {{-(1 + r3) / (r2 * (3 + r3)), 0.0}, {-(r3 - 3) * std::sqrt(2 + r3) / 6, 0.0}}},
      {"N;(0-2);(0+1+2)",
       {build("qutrit:N"), ket(qutrit, {1, 0, -1}), ket(qutrit, {1, 1, 1})},
       {{0.0, r2 / 3}, {0.0, std::pow(cplx(r3, -3), 2) / (18 * r2)}, {0.0, i * cplx(r3, 1) / (3 * r2)}}},
      {"T0;T1;T2",
       from_names({"qutrit:T0", "qutrit:T1", "qutrit:T2"}),
       {{t1, t2}, {std::conj(w3) * t1, w3 * t3}, {w3 * t1, std::conj(w3) * t3}}},
  };
  double col_sum = 0;
  for (const auto& c : l_cases) {
    const auto l = l_matrix(c.basis, stabilizer_dictionary(c.basis.front().dims()));
    t.expect(rows_match(l, c.exact, 1e-9), "L " + c.label);
    col_sum = std::max(col_sum, l.colwise().sum().cwiseAbs().maxCoeff());
  }
  for (const auto& n : catalog_names()) {
    const auto& e = catalog_entry(n);
    if (!e.clifford_stabilizer) continue;
    std::vector<PureState> basis{e.state};
    for (auto& v : orthogonal_complement(e.state)) basis.push_back(v);
    const auto l = l_matrix(basis, stabilizer_dictionary(e.dims));
    const double s = l.colwise().sum().cwiseAbs().maxCoeff();
    t.expect(s <= 1e-10, "L column sum " + n);
    col_sum = std::max(col_sum, s);
  }
  t.near(col_sum, 0, 1e-10, "largest L column sum");

  const double s9 = std::sin(pi / 9);
  const double wd = (1 + 4 * c1) / 3, wm = (1 - 2 * c1 - 2 * r3 * s9) / 3, wp = (1 - 2 * c1 + 2 * r3 * s9) / 3;
  struct WCase {
    std::string label;
    std::vector<PureState> basis;
    std::vector<std::vector<double>> want;
    double tol;
  };
  const std::vector<WCase> w_cases{
      {"S;H+;H-",
       from_names({"qutrit:S", "qutrit:H+", "qutrit:H-"}),
       {{5.0 / 3, 1.0 / 3, 1.0 / 3}, {-1.0 / 3, 1.0 / 3 + 2 / r3, 1.0 / 3 - 2 / r3}, {-1.0 / 3, 1.0 / 3 - 2 / r3, 1.0 / 3 + 2 / r3}},
       1e-9},
      {"N;(0-2);(0+1+2)",
       {build("qutrit:N"), ket(qutrit, {1, 0, -1}), ket(qutrit, {1, 1, 1})},
       {{5.0 / 3, 1.0 / 3, -1.0 / 3}, {1.0 / 3, 5.0 / 3, 1.0 / 3}, {0, 0, 1}},
       1e-9},
      {"T0;T1;T2", from_names({"qutrit:T0", "qutrit:T1", "qutrit:T2"}), {{wd, wm, wp}, {wp, wd, wm}, {wm, wp, wd}}, 1e-9},
      {"B' printed",
       from_names({"ququint:B',-1", "ququint:B',-w3", "ququint:B',-w3*", "ququint:B',w3", "ququint:B',w3*"}),
       {{1.98885, -0.694427, -0.694427, -0.2, -0.2},
        {-0.294427, 2.11335, -0.0189273, 0.651682, 0.148318},
        {-0.294427, -0.0189273, 2.11335, 0.148318, 0.651682},
        {1.09443, -0.498895, 0.00446812, 1.86614, -0.266141},
        {1.09443, 0.00446812, -0.498895, -0.266141, 1.86614}},
       1e-4},
  };
  for (const auto& c : w_cases) {
    const auto w = w_matrix(c.basis);
    t.near(max_diff(w, c.want), 0, c.tol, "W " + c.label);
    // Signed overlaps from the reference Wigner functions.
    const int d = c.basis.front().dims().d();
    std::vector<std::vector<double>> ref(c.basis.size(), std::vector<double>(c.basis.size()));
    for (std::size_t a = 0; a < c.basis.size(); ++a) {
      const auto wa = oracle::wigner(c.basis[a].vector(), d, 1);
      for (std::size_t b = 0; b < c.basis.size(); ++b) {
        const auto wb = oracle::wigner(c.basis[b].vector(), d, 1);
        for (std::size_t k = 0; k < wa.size(); ++k) ref[a][b] += (wa[k] > 1e-10 ? 1 : wa[k] < -1e-10 ? -1 : 0) * wb[k];
      }
    }
    t.near(max_diff(w, ref), 0, 1e-9, "W " + c.label + " against reference");
  }
  return t;
}

Tally sre_closed_forms() {
  Tally t;
  const std::vector<std::pair<const char*, double>> values{
      {"qubit:T0", std::log(1.5)},
      {"qubit:H0", std::log(4.0 / 3)},
      {"qutrit:S", std::log(2.0)},
      {"qutrit:N", std::log(2.0)},
      {"qutrit:H+", std::log(8.0 / 5)},
      {"qutrit:T0", std::log(9.0 / 5)},
      {"ququint:H,+i", std::log(2.0)},
      {"ququint:H,-i", std::log(2.0)},
      {"ququint:H,-1", std::log(2.0)},
      {"ququint:B',w3", std::log(2.0)},
      {"ququint:B',w3*", std::log(2.0)},
      {"ququint:A,-pi/5", std::log(2.0)},
      {"ququint:A,4pi/5", std::log(2.0)},
      {"ququint:XVS,1", std::log(25.0 / 9)},
      {"ququint:B',-1", std::log(27.0 / 11)},
      {"ququint:B',-w3", std::log(54.0 / 19)},
      {"ququint:B',-w3*", std::log(54.0 / 19)},
      {"2q:psi0", std::log(9.0 / 5)},
      {"2q:G16,1", std::log(25.0 / 12)},
      {"2q:G20,1", std::log(16.0 / 7)},
  };
  for (const auto& [name, want] : values) t.near(sre(build(name), 2), want, 1e-10, std::string(name) + " M2");

  for (const char* name : {"qubit:T0", "qutrit:S", "qutrit:N", "2q:G20,1"}) {
    const auto psi = build(name);
    const double m = sre(psi, 2), bound = sre_upper_bound(psi.dims(), 2);
    std::ostringstream os;
    os << name << " M2 " << m << " bound " << bound;
    t.expect(std::abs(m - bound) <= 1e-10, os.str() + " (saturation)");
    if (std::abs(m - bound) > 1e-10) t.note(os.str() + ", does not saturate");
  }
  int strict = 0;
  for (const auto& n : catalog_names("ququint:")) {
    const auto& e = catalog_entry(n);
    if (!e.eigen_operator) continue;
    const double gap = sre_upper_bound(e.dims, 2) - sre(e.state, 2);
    t.expect(gap > 1e-6, n + " strictly below bound");
    ++strict;
  }
  t.expect(strict >= 8, "ququint eigenstates checked");
  return t;
}

Tally extremality() {
  Tally t;
  std::mt19937_64 rng(2024);
  int states = 0;
  double worst = 0;
  for (const auto& n : catalog_names()) {
    const auto& e = catalog_entry(n);
    if (!e.clifford_stabilizer) continue;
    ++states;
    for (int k = 0; k < 100; ++k) {
      const auto frame = make_frame(e.state, random_direction(e.state, rng));
      const double first = std::abs(xi2_expansion(frame).coeffs[1]);
      worst = std::max(worst, first);
      if (first > 1e-9) t.expect(false, n + " first-order Xi2 " + std::to_string(first));
    }
  }
  t.expect(states > 0, "Clifford-stabilizer states present");
  std::ostringstream largest;
  largest << states << " states, largest first-order term " << worst;
  t.note(largest.str());

  const auto t0 = build("qubit:T0"), t1 = build("qubit:T1");
  for (int k = 0; k < 24; ++k) {
    const double phi = 2 * pi * k / 24;
    t.near(xi2_expansion(make_frame(t0, phase_direction(t1, phi))).coeffs[2], 4.0 / 3, 1e-9, "T0 second order at phi " + std::to_string(phi));
  }

  const auto nstate = build("qutrit:N");
  const auto flat = ket(PrimeDim(3, 1), {1, 0, -1});
  const auto& dict3 = stabilizer_dictionary(PrimeDim(3, 1));
  const auto nearest = stabilizer_fidelity(nstate).argmax;
  for (double phi : {0.0, 1.1, 2.5}) {
    const auto frame = make_frame(nstate, phase_direction(flat, phi));
    for (double eps : {0.05, 0.1, 0.2}) {
      const double want = 2 / (3 * (1 + eps * eps));
      const auto psi = frame.at(eps);
      // Off the real axis another stabilizer state overtakes at a phase-dependent radius, so
      // the global maximum is compared for phi = 0 and the nearest-set overlaps otherwise.
      if (phi == 0) t.near(stabilizer_fidelity(psi).value, want, 1e-9, "N flat direction at eps " + std::to_string(eps));
      for (auto k : nearest)
        t.near(std::norm(dict3.states()[k].state.vector().dot(psi.vector())), want, 1e-9,
               "N nearest-state overlap at eps " + std::to_string(eps) + " phi " + std::to_string(phi));
    }
  }

  const auto frame = make_frame(build("ququint:A,-pi/5"), phase_direction(build("ququint:A,4pi/5"), 0));
  const double q = mana_expansion(frame).quadratic_coeff;
  t.near(q, -1.2944, 5e-4, "quadratic mana coefficient");
  t.note("quadratic mana coefficient " + std::to_string(q));
  return t;
}

Tally classification() {
  Tally t;
  const auto qutrit = single_qudit_sweep(3);
  t.expect(qutrit.operators == 216, "qutrit operators " + std::to_string(qutrit.operators));
  t.expect(qutrit.nonstabilizer_classes() == 4, "qutrit classes " + std::to_string(qutrit.nonstabilizer_classes()));

  const auto start = std::chrono::steady_clock::now();
  const auto two = two_qubit_sweep();
  const double secs = seconds_since(start);
  t.expect(two.operators == 21, "two-qubit representatives " + std::to_string(two.operators));
  const std::vector<std::pair<double, int>> rows{
      {1, 1},
      {(2 + r2) / 4, 2},
      {(3 + r3) / 6, 3},
      {(3 + 2 * r2) / 8, 4},
      {(2 + r2) * (3 + r3) / 24, 6},
      {(2 + r3) / 6, 9},
      {0.75, 2},
      {(5 + r5 + 2 * std::sqrt(5 + 2 * r5)) / 20, 5},
      {5.0 / 8, 8},
  };
  t.expect(two.classes.size() == rows.size(), "two-qubit classes " + std::to_string(two.classes.size()));
  std::vector<bool> used(two.classes.size(), false);
  for (const auto& [f, count] : rows) {
    bool found = false;
    for (std::size_t k = 0; k < two.classes.size() && !found; ++k) {
      if (used[k]) continue;
      if (std::abs(two.classes[k].fidelity - f) < 1e-9 && two.classes[k].nearest_count == count) used[k] = found = true;
    }
    t.expect(found, "two-qubit row F=" + std::to_string(f) + " count " + std::to_string(count));
  }
  t.expect(secs < 300, "two-qubit sweep runtime " + std::to_string(secs) + " s");
  t.note("two-qubit sweep " + std::to_string(secs) + " s");

  const auto eq = verify_equivalences(1e-9);
  for (const auto& c : eq.checks) t.expect(c.pass, "equivalence " + c.name);
  t.note(std::to_string(eq.checks.size()) + " equivalence words");
  return t;
}

PairParams random_params(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0, 1);
  for (;;) {
    PairParams p{0.1 * u(rng), 0.1 * u(rng), 0.1 * u(rng), 0.1 * (u(rng) - 0.5), 0.1 * (u(rng) - 0.5)};
    if (p.valid()) return p;
  }
}

Tally distillation() {
  Tally t;
  double slowest = 0;
  const auto timed = [&](const auto& f) {
    const auto start = std::chrono::steady_clock::now();
    auto r = f();
    slowest = std::max(slowest, seconds_since(start));
    return r;
  };
  for (int k = 0; k <= 20; ++k) {
    const double e = 0.01 * k;
    const auto r = timed([&] { return distill_step(PairParams{0, 0, e, 0, 0}); });
    const double num = 49 - 240 * e + 600 * e * e - 640 * e * e * e + 240 * e * e * e * e;
    const double out = e * (5 + 100 * e - 240 * e * e + 160 * e * e * e - 16 * e * e * e * e) / num;
    t.near(r.p_success, num / 2304, 1e-10, "p at eps " + std::to_string(e));
    t.near(r.out.eps3, out, 1e-10, "output error at eps " + std::to_string(e));
  }
  const double h = 1e-6;
  const auto lin = [&](PairParams p) { return timed([&] { return distill_step(p); }).out; };
  t.near(lin({h, 0, 0, 0, 0}).eps1 / h, 45.0 / 49, 1e-4, "eps1 linear coefficient");
  t.near(lin({0, h, 0, 0, 0}).eps2 / h, 45.0 / 49, 1e-4, "eps2 linear coefficient");
  t.near(lin({0, 0, h, 0, 0}).eps3 / h, 5.0 / 49, 1e-4, "eps3 linear coefficient");
  t.near(lin({0, 0, 0, h, 0}).a / h, -5.0 / 7, 1e-4, "a linear coefficient");
  t.near(lin({0, 0, 0, 0, h}).b / h, -5.0 / 7, 1e-4, "b linear coefficient");

  std::mt19937_64 rng(99);
  double worst = 0;
  for (int k = 0; k < 50; ++k) {
    std::array<PairParams, 5> ps;
    for (auto& p : ps) p = random_params(rng);
    worst = std::max(worst, timed([&] { return distill_step(std::span<const PairParams, 5>(ps)); }).structure_residual);
  }
  t.near(worst, 0, 1e-9, "structure residual over 50 draws");

  const std::map<int, double> by_weight{{0, 1.0 / 6}, {1, 0}, {2, 1.0 / 12}, {3, 1.0 / 12}, {4, 0}, {5, 1.0 / 6}};
  const auto overlaps = project_T_overlaps();
  t.expect(overlaps.size() == 32, "overlap table size");
  for (const auto& o : overlaps) t.near(o.overlap, by_weight.at(o.weight), 1e-12, "overlap " + o.bits);
  t.expect(slowest < 60, "slowest step " + std::to_string(slowest) + " s");
  t.note("slowest step " + std::to_string(slowest) + " s");
  return t;
}

Tally extent() {
  Tally t;
  std::vector<std::string> names{"2q:00", "2q:H0", "2q:T0", "2q:HH", "2q:TH", "2q:TT", "2q:G4,2", "2q:G16,1", "2q:G20,1"};
  for (const char* prefix : {"qubit:", "qutrit:", "ququint:"})
    for (const auto& n : catalog_names(prefix))
      if (catalog_entry(n).clifford_stabilizer) names.push_back(n);
  std::map<std::pair<int, int>, std::vector<oracle::Vec>> stab;
  for (const auto& n : names) {
    const auto& e = catalog_entry(n);
    const auto key = std::pair{e.dims.d(), e.dims.n()};
    if (!stab.contains(key)) stab[key] = oracle::stabilizer_states(key.first, key.second);
    const double f = oracle::fidelity(e.state.vector(), stab[key]);
    t.near(solve_extent(ExtentProblem::stabilizer(e.state)).value, 1 / f, 1e-6, n + " extent vs inverse fidelity");
  }
  t.note(std::to_string(names.size()) + " states");

  const auto t0 = build("qubit:T0");
  const PureState tt(PrimeDim(2, 2), kron(t0.vector(), t0.vector()));
  t.near(solve_extent(ExtentProblem::stabilizer(tt)).value, std::pow(3 - r3, 2), 1e-6, "T0 tensor T0");

  std::mt19937_64 rng(31);
  for (int k = 0; k < 100; ++k) {
    const PrimeDim dims = k % 2 ? PrimeDim(3, 1) : PrimeDim(2, 1);
    const auto psi = random_state(dims, rng);
    const auto sol = solve_extent(ExtentProblem::stabilizer(psi));
    const double bound = witness_bound(psi, random_state(dims, rng));
    t.expect(sol.converged, "solver converged on instance " + std::to_string(k));
    t.expect(bound <= sol.value * (1 + 1e-8), "witness " + std::to_string(bound) + " vs " + std::to_string(sol.value));
  }
  return t;
}

struct Criterion {
  const char* title;
  std::function<Tally()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {"operator identities", operator_identities},
      {"stabilizer counts and Clifford orders", counts},
      {"qutrit Wigner, trace norm and fidelity tables", qutrit_tables},
      {"ququint trace norm and fidelity tables", ququint_tables},
      {"L and W matrices", l_and_w_matrices},
      {"stabilizer Renyi entropy closed forms and bound", sre_closed_forms},
      {"extremality expansions", extremality},
      {"eigenstate classification and equivalences", classification},
      {"doubled five-qubit distillation", distillation},
      {"stabilizer extent", extent},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--criterion N]\n";
      return 2;
    }
  }
  const auto& all = criteria();
  if (only < 0 || only > static_cast<int>(all.size())) {
    std::cerr << "criterion must be in 1.." << all.size() << "\n";
    return 2;
  }
  bool ok = true;
  for (std::size_t k = 0; k < all.size(); ++k) {
    if (only && static_cast<int>(k) + 1 != only) continue;
    const auto start = std::chrono::steady_clock::now();
    bool pass = false;
    std::string detail;
    try {
      const Tally t = all[k].run();
      pass = t.passed();
      detail = t.summary();
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << k + 1 << ": " << all[k].title << " (" << detail << ", "
              << seconds_since(start) << " s)" << std::endl;
    ok = ok && pass;
  }
  return ok ? 0 : 1;
}
