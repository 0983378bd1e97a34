#include "tables.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "qmagic/catalog.hpp"
#include "qmagic/distillation.hpp"
#include "qmagic/error.hpp"
#include "qmagic/extremality.hpp"
#include "qmagic/measures.hpp"
#include "qmagic/verify.hpp"

namespace qmagic::cli {

namespace {

std::string quoted(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string num(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

std::string expected_cols(const CatalogEntry& e, const char* key) {
  const auto it = e.expected.find(key);
  if (it == e.expected.end()) return ",";
  return num(it->second.value) + "," + quoted(it->second.exact);
}

const std::vector<std::string> kQutritStates{"qutrit:S", "qutrit:N", "qutrit:H+", "qutrit:T0"};

std::vector<std::string> tabulated(const std::string& prefix, const char* key) {
  std::vector<std::string> out;
  for (const auto& n : catalog_names(prefix))
    if (catalog_entry(n).expected.contains(key)) out.push_back(n);
  return out;
}

std::string wigner_table(const std::vector<std::string>& names) {
  std::ostringstream os;
  const int d = catalog_entry(names.front()).dims.d();
  os << "state,trace_norm,expected,exact,mana";
  for (int p = 0; p < d; ++p)
    for (int q = 0; q < d; ++q) os << ",w_" << p << "_" << q;
  os << "\n";
  for (const auto& n : names) {
    const auto& e = catalog_entry(n);
    const auto w = wigner_function(e.state);
    os << quoted(n) << "," << num(w.trace_norm()) << "," << expected_cols(e, kTraceNorm) << "," << num(std::log(w.trace_norm()));
    for (double v : w.values) os << "," << num(v);
    os << "\n";
  }
  return os.str();
}

std::string fidelity_table(const std::vector<std::string>& names, double tol) {
  std::ostringstream os;
  os << "state,fidelity,expected,exact,nearest_count,expected_nearest_count\n";
  for (const auto& n : names) {
    const auto& e = catalog_entry(n);
    const auto f = stabilizer_fidelity(e.state, tol);
    os << quoted(n) << "," << num(f.value) << "," << expected_cols(e, kFidelity) << "," << f.argmax.size() << ",";
    if (e.expected_nearest_count) os << *e.expected_nearest_count;
    os << "\n";
  }
  return os.str();
}

std::string sre_table() {
  std::ostringstream os;
  os << "state,d,N,sre2,expected,exact,upper_bound\n";
  for (const auto& n : catalog_names()) {
    const auto& e = catalog_entry(n);
    if (!e.expected.contains(kSre2)) continue;
    os << quoted(n) << "," << e.dims.d() << "," << e.dims.n() << "," << num(sre(e.state, 2)) << "," << expected_cols(e, kSre2)
       << "," << num(sre_upper_bound(e.dims, 2)) << "\n";
  }
  return os.str();
}

std::string two_qubit_table(double tol) {
  const auto sweep = two_qubit_sweep(tol);
  std::ostringstream os;
  os << "class,stabilizer,fidelity,nearest_count,eigenstates,catalog,expected_fidelity,expected_nearest_count\n";
  for (std::size_t k = 0; k < sweep.classes.size(); ++k) {
    const auto& c = sweep.classes[k];
    std::string matches;
    for (const auto& m : c.catalog_matches) matches += (matches.empty() ? "" : ";") + m;
    os << k << "," << (c.stabilizer ? 1 : 0) << "," << num(c.fidelity) << "," << c.nearest_count << "," << c.sources.size() << ","
       << quoted(matches) << ",";
    const CatalogEntry* ref = nullptr;
    for (const auto& m : c.catalog_matches)
      if (catalog_entry(m).expected.contains(kFidelity)) {
        ref = &catalog_entry(m);
        break;
      }
    if (ref) {
      os << num(ref->expected.at(kFidelity).value) << ",";
      if (ref->expected_nearest_count) os << *ref->expected_nearest_count;
    } else {
      os << ",";
    }
    os << "\n";
  }
  return os.str();
}

PureState ket(const PrimeDim& dims, std::initializer_list<cplx> amps) {
  CVector v(static_cast<Eigen::Index>(amps.size()));
  Eigen::Index i = 0;
  for (auto a : amps) v(i++) = a;
  return PureState(dims, std::move(v));
}

struct NamedBasis {
  std::string label;
  std::vector<PureState> states;
};

std::vector<PureState> from_names(std::initializer_list<const char*> names) {
  std::vector<PureState> out;
  for (const char* n : names) out.push_back(build(n));
  return out;
}

std::vector<NamedBasis> l_bases() {
  const PrimeDim qutrit(3, 1);
  return {
      {"T0;T1", from_names({"qubit:T0", "qubit:T1"})},
      {"H0;H1", from_names({"qubit:H0", "qubit:H1"})},
      {"S;H+;H-", from_names({"qutrit:S", "qutrit:H+", "qutrit:H-"})},
      {"H+;H-;S", from_names({"qutrit:H+", "qutrit:H-", "qutrit:S"})},
      {"N;(0-2);(0+1+2)", {build("qutrit:N"), ket(qutrit, {1, 0, -1}), ket(qutrit, {1, 1, 1})}},
      {"T0;T1;T2", from_names({"qutrit:T0", "qutrit:T1", "qutrit:T2"})},
  };
}

std::vector<NamedBasis> w_bases() {
  const PrimeDim qutrit(3, 1);
  return {
      {"S;H+;H-", from_names({"qutrit:S", "qutrit:H+", "qutrit:H-"})},
      {"N;(0-2);(0+1+2)", {build("qutrit:N"), ket(qutrit, {1, 0, -1}), ket(qutrit, {1, 1, 1})}},
      {"T0;T1;T2", from_names({"qutrit:T0", "qutrit:T1", "qutrit:T2"})},
      {"B'", from_names({"ququint:B',-1", "ququint:B',-w3", "ququint:B',-w3*", "ququint:B',w3", "ququint:B',w3*"})},
  };
}

std::string l_table(double tol) {
  std::ostringstream os;
  os << "basis,row,col,re,im\n";
  for (const auto& b : l_bases()) {
    const auto l = l_matrix(b.states, stabilizer_dictionary(b.states.front().dims()), tol);
    for (Eigen::Index r = 0; r < l.rows(); ++r)
      for (Eigen::Index c = 0; c < l.cols(); ++c)
        os << quoted(b.label) << "," << r << "," << c << "," << num(l(r, c).real()) << "," << num(l(r, c).imag()) << "\n";
  }
  return os.str();
}

std::string w_table() {
  std::ostringstream os;
  os << "basis,row,col,value\n";
  for (const auto& b : w_bases()) {
    const auto w = w_matrix(b.states);
    for (Eigen::Index r = 0; r < w.rows(); ++r)
      for (Eigen::Index c = 0; c < w.cols(); ++c) os << quoted(b.label) << "," << r << "," << c << "," << num(w(r, c)) << "\n";
  }
  return os.str();
}

std::string sphere_table(const Grid& g, double tol) {
  const PrimeDim q(2, 1);
  const auto& dict = stabilizer_dictionary(q);
  std::ostringstream os;
  os << "theta,phi,fidelity,x,y,z\n";
  for (int i = 0; i < g.rows; ++i) {
    const double theta = g.rows > 1 ? std::numbers::pi * i / (g.rows - 1) : 0.0;
    for (int j = 0; j < g.cols; ++j) {
      const double phi = g.cols > 1 ? 2 * std::numbers::pi * j / (g.cols - 1) : 0.0;
      const PureState psi = ket(q, {std::cos(theta / 2), std::polar(std::sin(theta / 2), phi)});
      const double f = max_overlap(psi, dict, tol).value;
      os << num(theta) << "," << num(phi) << "," << num(f) << "," << num(f * std::sin(theta) * std::cos(phi)) << ","
         << num(f * std::sin(theta) * std::sin(phi)) << "," << num(f * std::cos(theta)) << "\n";
    }
  }
  return os.str();
}

std::string overlap_table() {
  std::ostringstream os;
  os << "bits,weight,overlap,phase\n";
  for (const auto& o : project_T_overlaps()) os << o.bits << "," << o.weight << "," << num(o.overlap) << "," << num(o.phase) << "\n";
  return os.str();
}

}  // namespace

Grid parse_grid(const std::string& text) {
  const auto x = text.find('x');
  try {
    if (x == std::string::npos) throw std::invalid_argument("");
    Grid g{std::stoi(text.substr(0, x)), std::stoi(text.substr(x + 1))};
    if (g.rows < 1 || g.cols < 1) throw std::invalid_argument("");
    return g;
  } catch (const std::logic_error&) {
    throw Error(Errc::parse_error, "grid must look like ROWSxCOLS, got '" + text + "'");
  }
}

const std::vector<std::string>& table_ids() {
  static const std::vector<std::string> ids{"qutrit-wigner", "qutrit-fidelity", "ququint-wigner", "ququint-fidelity", "sre",
                                            "2q-eigenstates", "l-matrices",     "w-matrices",     "qubit-fidelity-sphere",
                                            "code-overlaps"};
  return ids;
}

std::string make_table(const std::string& id, const Grid& grid, double tol) {
  if (id == "qutrit-wigner") return wigner_table(kQutritStates);
  if (id == "qutrit-fidelity") return fidelity_table(kQutritStates, tol);
  if (id == "ququint-wigner") return wigner_table(tabulated("ququint:", kTraceNorm));
  if (id == "ququint-fidelity") return fidelity_table(tabulated("ququint:", kFidelity), tol);
  if (id == "sre") return sre_table();
  if (id == "2q-eigenstates") return two_qubit_table(1e-8);
  if (id == "l-matrices") return l_table(tol);
  if (id == "w-matrices") return w_table();
  if (id == "qubit-fidelity-sphere") return sphere_table(grid, tol);
  if (id == "code-overlaps") return overlap_table();
  throw Error(Errc::unknown_name, "unknown table '" + id + "'");
}

}  // namespace qmagic::cli
