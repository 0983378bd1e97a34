#include "qmagic/catalog.hpp"

#include <cmath>
#include <numbers>

#include "qmagic/error.hpp"

namespace qmagic {

namespace {

using std::numbers::pi;
const double r2 = std::sqrt(2.0);
const double r3 = std::sqrt(3.0);
const double r5 = std::sqrt(5.0);

CVector vec(std::initializer_list<cplx> xs) {
  CVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (auto x : xs) v(i++) = x;
  return v;
}

cplx expi(double t) { return std::polar(1.0, t); }

ExactValue ev(std::string exact, long double value) { return {std::move(exact), static_cast<double>(value)}; }

struct Registry {
  std::vector<CatalogEntry> entries;
  std::map<std::string, std::size_t> index;

  CatalogEntry& add(std::string name, const PrimeDim& dims, const CVector& amps, const char* word = nullptr) {
    PureState s(dims, amps);
    std::optional<EigenOperator> op;
    if (word) {
      auto w = CliffordWord::parse(word);
      op = EigenOperator{w, s.vector().dot(w.apply(s.vector(), dims))};
    }
    index[name] = entries.size();
    entries.push_back(CatalogEntry{std::move(name), dims, std::move(s), {}, std::nullopt, std::move(op), word != nullptr});
    return entries.back();
  }
};

CVector qubit_t0() { return vec({std::sqrt((3 + r3) / 6), expi(pi / 4) * std::sqrt((3 - r3) / 6)}); }
CVector qubit_t1() { return vec({-std::sqrt((3 - r3) / 6), expi(pi / 4) * std::sqrt((3 + r3) / 6)}); }
CVector qubit_h0() { return vec({std::sqrt((2 + r2) / 4), std::sqrt((2 - r2) / 4)}); }
CVector qubit_h1() { return vec({-std::sqrt((2 - r2) / 4), std::sqrt((2 + r2) / 4)}); }
CVector ket(int d, int j) {
  CVector v = CVector::Zero(d);
  v(j) = 1;
  return v;
}

constexpr const char* kRep2 = "S@2 S@1 H@2 H@1";
constexpr const char* kRep4 = "CZ@1,2 H@2 H@1";
constexpr const char* kRep6 = "S@2 S@1";
constexpr const char* kRep9 = "S@2 H@1";
constexpr const char* kRep14 = "S@2^2 S@1 H@1";
constexpr const char* kRep16 = "CZ@1,2 S@1 H@2 H@1";
constexpr const char* kRep18 = "H@1 H@2 S@2 S@1^-1 CZ@1,2 H@1 H@2 CZ@1,2";
constexpr const char* kRep19 = "S@1 H@2 H@1";
constexpr const char* kRep20 = "H@1 CZ@1,2 H@2 S@2 CZ@1,2";
// Rep 18 conjugated by the Clifford that takes |H0 H0> to |G18,1>.
constexpr const char* kHHOperator =
    "CNOT@1,2 Z@1 H@1 S@2 H@1 H@2 S@2 S@1^-1 CZ@1,2 H@1 H@2 CZ@1,2 Sdg@2 H@1 Z@1 CNOT@1,2";

void add_qubits(Registry& r) {
  const PrimeDim q(2, 1);
  const auto t_f = ev("(3+sqrt3)/6", 0.78867513459481288225457439025098L);
  const auto h_f = ev("(2+sqrt2)/4", 0.85355339059327376220042218105242L);
  for (auto [name, amps, word] : {std::tuple{"qubit:T0", qubit_t0(), "S@1 H@1"}, std::tuple{"qubit:T1", qubit_t1(), "S@1 H@1"}}) {
    auto& e = r.add(name, q, amps, word);
    e.expected[kFidelity] = t_f;
    e.expected[kSre2] = ev("log(3/2)", 0.40546510810816438197801311546435L);
    e.expected_nearest_count = 3;
  }
  for (auto [name, amps] : {std::pair{"qubit:H0", qubit_h0()}, std::pair{"qubit:H1", qubit_h1()}}) {
    auto& e = r.add(name, q, amps, "H@1");
    e.expected[kFidelity] = h_f;
    e.expected[kSre2] = ev("log(4/3)", 0.28768207245178092743921900599383L);
    e.expected_nearest_count = 2;
  }
  r.add("qubit:0", q, ket(2, 0));
  r.add("qubit:+", q, vec({1 / r2, 1 / r2}));
  r.add("qubit:R", q, vec({1 / r2, cplx(0, 1 / r2)}));
}

void add_qutrits(Registry& r) {
  const PrimeDim q(3, 1);
  {
    auto& e = r.add("qutrit:S", q, vec({0, 1, -1}), "H@1");
    e.expected[kTraceNorm] = ev("5/3", 1.6666666666666666666666666666667L);
    e.expected[kFidelity] = ev("1/2", 0.5L);
    e.expected[kSre2] = ev("log2", 0.69314718055994530941723212145818L);
    e.expected_nearest_count = 8;
  }
  {
    auto& e = r.add("qutrit:N", q, vec({-1, 2, -1}), "H@1 S@1^2 H@1");
    e.expected[kTraceNorm] = ev("5/3", 1.6666666666666666666666666666667L);
    e.expected[kFidelity] = ev("2/3", 0.66666666666666666666666666666667L);
    e.expected[kSre2] = ev("log2", 0.69314718055994530941723212145818L);
    e.expected_nearest_count = 3;
  }
  {
    auto& e = r.add("qutrit:H+", q, vec({1 + r3, 1, 1}), "H@1");
    e.expected[kTraceNorm] = ev("1/3+2/sqrt3", 1.4880338717125848623516308943372L);
    e.expected[kFidelity] = ev("(3+sqrt3)/6", 0.78867513459481288225457439025098L);
    e.expected[kSre2] = ev("log(8/5)", 0.47000362924573555365093703114834L);
    e.expected_nearest_count = 2;
  }
  r.add("qutrit:H-", q, vec({1 - r3, 1, 1}), "H@1");
  const double t = 2 * pi / 9;
  {
    auto& e = r.add("qutrit:T0", q, vec({expi(t), 1, expi(-t)}), "S@1 X@1 Z@1");
    e.expected[kTraceNorm] = ev("(1+4cos(pi/9))/3", 1.5862568277145445120721457030996L);
    e.expected[kFidelity] = ev("(1+2cos(2pi/9))^2/9", 0.7123860142010858709458893173067L);
    e.expected[kSre2] = ev("log(9/5)", 0.58778666490211900818973114061886L);
    e.expected_nearest_count = 3;
  }
  r.add("qutrit:T1", q, vec({expi(-2 * t), 1, expi(2 * t)}), "S@1 X@1 Z@1");
  r.add("qutrit:T2", q, vec({expi(4 * t), 1, expi(-4 * t)}), "S@1 X@1 Z@1");
  r.add("qutrit:0", q, ket(3, 0));
}

void add_ququints(Registry& r) {
  const PrimeDim q(5, 1);
  const auto c = ququint_constants();
  auto w = [](int k) { return omega(5, k); };
  const double a = std::sqrt(1 + c.chi_c), b = std::sqrt(1 - c.chi_c);
  const auto log2 = ev("log2", 0.69314718055994530941723212145818L);
  constexpr const char* kH = "H@1";
  constexpr const char* kXVS = "X@1 V:1,0,1,1@1";
  constexpr const char* kB = "V:1,2,2,0@1 H@1^3 V:1,0,1,1@1 V:1,2,2,0@1^-1";
  constexpr const char* kA = "V:1,0,1,1@1 H@1^2";
  {
    auto& e = r.add("ququint:H,+i", q, vec({0, a, b, -b, -a}), kH);
    e.expected[kTraceNorm] = ev("(3+2sqrt(5+2sqrt5))/5", 1.8310734148701013610281162304148L);
    e.expected[kFidelity] = ev("1/4+(3+sqrt5)/(8sqrt(5+2sqrt5))", 0.46266270208800998304538512426575L);
    e.expected[kSre2] = log2;
    e.expected_nearest_count = 4;
  }
  r.add("ququint:H,-i", q, vec({0, b, -a, a, -b}), kH);
  {
    auto& e = r.add("ququint:H,-1", q, vec({1 - r5, 1, 1, 1, 1}), kH);
    e.expected[kTraceNorm] = ev("9/5", 1.8L);
    e.expected[kFidelity] = ev("(5+sqrt5)/10", 0.72360679774997896964091736687313L);
    e.expected[kSre2] = log2;
    e.expected_nearest_count = 2;
  }
  // Degenerate eigenvalue +1 of H: basis vectors only.
  r.add("ququint:H,1;1", q, vec({1 + r5, 2, 0, 0, 2}));
  r.add("ququint:H,1;2", q, vec({1 + r5, 0, 2, 2, 0}));
  {
    auto& e = r.add("ququint:XVS,1", q, vec({1, 1, w(3), 1, w(2)}), kXVS);
    e.expected[kTraceNorm] = ev("1+2/sqrt5", 1.8944271909999158785636694674925L);
    e.expected[kFidelity] = ev("(3+sqrt5)/10", 0.52360679774997896964091736687313L);
    e.expected[kSre2] = ev("log(25/9)", 1.0216512475319813664110281926073L);
    e.expected_nearest_count = 5;
  }
  r.add("ququint:XVS,w", q, vec({w(4), w(3), 1, w(1), w(2)}), kXVS);
  r.add("ququint:XVS,w^-1", q, vec({w(1), w(2), w(1), w(4), w(2)}), kXVS);
  r.add("ququint:XVS,w^2", q, vec({w(3), w(1), w(2), w(2), w(2)}), kXVS);
  r.add("ququint:XVS,w^-2", q, vec({w(2), w(4), w(4), w(3), w(2)}), kXVS);
  {
    auto& e = r.add("ququint:B',-1", q, vec({3 + r5, -2, -2, -2, -2}), kB);
    e.expected[kTraceNorm] = ev("1/5+4/sqrt5", 1.988854381999831757127338934985L);
    e.expected[kFidelity] = ev("1/3+2sqrt5/15", 0.63147573033330529285455648916417L);
    e.expected[kSre2] = ev("log(27/11)", 0.89794159320595853012379213280245L);
    e.expected_nearest_count = 3;
  }
  {
    const double k = c.kappa_plus;
    auto& e = r.add("ququint:B',-w3", q, vec({4 * k, -k * k, 4, 4, -k * k}), kB);
    e.expected[kTraceNorm] = ev("(3+sqrt5+sqrt(15+6sqrt5))/5", 2.1133544467011252267445554558839L);
    e.expected[kFidelity] = ev("1/3+sqrt5/15", 0.48240453183331931309394491124875L);
    e.expected[kSre2] = ev("log(54/19)", 1.0445450673978339235939404003379L);
    e.expected_nearest_count = 3;
  }
  {
    const double k = c.kappa_minus;
    r.add("ququint:B',-w3*", q, vec({4 * k, -k * k, 4, 4, -k * k}), kB);
  }
  {
    auto& e = r.add("ququint:B',w3", q, vec({0, c.eta_plus, 4, -4, -c.eta_plus}), kB);
    e.expected[kTraceNorm] = ev("(4+sqrt(15+6sqrt5))/5", 1.8661408512011672874627207221377L);
    e.expected[kFidelity] = ev("1/4+sqrt(15+6sqrt5)/20-sqrt(30-6sqrt5)/60", 0.4486636180729415307388827320819L);
    e.expected[kSre2] = log2;
    e.expected_nearest_count = 6;
  }
  r.add("ququint:B',w3*", q, vec({0, c.eta_minus, 4, -4, -c.eta_minus}), kB);
  const auto a_tn = ev("6/5+1/sqrt5", 1.6472135954999579392818347337463L);
  for (auto [name, amps] : {std::pair{"ququint:A,-pi/5", vec({0, 0, 1, -1, 0})}, std::pair{"ququint:A,4pi/5", vec({0, 0, 1, 1, 0})}}) {
    auto& e = r.add(name, q, amps, kA);
    e.expected[kTraceNorm] = a_tn;
    e.expected[kFidelity] = ev("1/2", 0.5L);
    e.expected[kSre2] = log2;
    e.expected_nearest_count = 2;
  }
  r.add("ququint:A,-4pi/5", q, vec({0, 1, 0, 0, 1}), kA);
  r.add("ququint:A,pi/5", q, vec({0, -1, 0, 0, 1}), kA);
  r.add("ququint:A,1", q, ket(5, 0), kA);
}

void add_two_qubits(Registry& r) {
  const PrimeDim q(2, 2);
  const CVector z = ket(2, 0), o = ket(2, 1);
  const CVector t0 = qubit_t0(), t1 = qubit_t1(), h0 = qubit_h0();
  auto fid = [](CatalogEntry& e, ExactValue f, int n) {
    e.expected[kFidelity] = std::move(f);
    e.expected_nearest_count = n;
  };
  fid(r.add("2q:00", q, kron(z, z), kRep6), ev("1", 1.0L), 1);
  fid(r.add("2q:H0", q, kron(h0, z), kRep9), ev("(2+sqrt2)/4", 0.85355339059327376220042218105242L), 2);
  fid(r.add("2q:T0", q, kron(t0, z), kRep14), ev("(3+sqrt3)/6", 0.78867513459481288225457439025098L), 3);
  fid(r.add("2q:HH", q, kron(h0, h0), kHHOperator), ev("(3+2sqrt2)/8", 0.72855339059327376220042218105242L), 4);
  fid(r.add("2q:TH", q, kron(t0, h0), kRep19), ev("(2+sqrt2)(3+sqrt3)/24", 0.67317633521000907631905178876445L), 6);
  fid(r.add("2q:TT", q, kron(t0, t0), kRep2), ev("(2+sqrt3)/6", 0.62200846792814621558790772358431L), 9);
  r.add("2q:T1T0", q, kron(t1, t0));

  const auto log95 = ev("log(9/5)", 0.58778666490211900818973114061886L);
  {
    auto& e = r.add("2q:G4,2", q, vec({2, 1, 1, 0}), kRep4);
    fid(e, ev("3/4", 0.75L), 2);
    e.expected[kSre2] = log95;
  }
  const cplx i(0, 1);
  r.add("2q:G4,3", q, vec({-i, i, i, r3}), kRep4);
  r.add("2q:G4,4", q, vec({i, -i, -i, r3}), kRep4);

  const cplx e4 = expi(pi / 4);
  const double s5a = std::sqrt(5 * (5 + 2 * r5)), s5b = std::sqrt(5 * (5 - 2 * r5));
  const double big = std::sqrt(250 + 110 * r5);
  const double u1 = std::sqrt((5 + r5 + std::sqrt(2 * (5 + r5))) / 5) / 2;
  const double u2 = std::sqrt(1 + 1 / r5 - std::sqrt(2 * (5 + r5)) / 5) / 2;
  const double u3 = std::sqrt((5 - r5 + std::sqrt(10 - 2 * r5)) / 5) / 2;
  const std::vector<CVector> g16{
      vec({-std::pow(10 + 3 * r5 - 2 * s5a, 0.25) / std::sqrt(10.0) * e4, std::pow(10 + 3 * r5 + 2 * s5a, 0.25) / std::sqrt(10.0) * e4,
           i / std::sqrt(5 * (3 + r5) + big), 1 / std::sqrt(5 * (3 + r5) - big)}),
      vec({-std::pow(10 - 3 * r5 - 2 * s5b, 0.25) / std::sqrt(10.0) * e4, -std::pow(10 - 3 * r5 + 2 * s5b, 0.25) / std::sqrt(10.0) * e4,
           i * u1, u2}),
      vec({std::pow(10 - 3 * r5 + 2 * s5b, 0.25) / std::sqrt(10.0) * e4, -std::pow(10 - 3 * r5 - 2 * s5b, 0.25) / std::sqrt(10.0) * e4,
           -i * u2, u1}),
      vec({-std::pow(10 + 3 * r5 + 2 * s5a, 0.25) / std::sqrt(10.0) * e4, -std::pow(10 + 3 * r5 - 2 * s5a, 0.25) / std::sqrt(10.0) * e4,
           -i * u3, 1 / std::sqrt(5 * (3 + r5) + big)}),
  };
  for (std::size_t k = 0; k < g16.size(); ++k) {
    auto& e = r.add("2q:G16," + std::to_string(k + 1), q, g16[k], kRep16);
    fid(e, ev("(5+sqrt5+2sqrt(5+2sqrt5))/20", 0.66957175259251482507748774104025L), 5);
    e.expected[kSre2] = ev("log(25/12)", 0.7339691750802004389718091866135L);
  }

  const std::vector<CVector> g18{vec({i * r2, 0, 2.0 * i, r2}), vec({-i * r2, -2.0 * i, 0, r2}), vec({-i * r2, 2.0 * i, 0, r2}),
                                 vec({i * r2, 0, -2.0 * i, r2})};
  for (std::size_t k = 0; k < g18.size(); ++k) {
    auto& e = r.add("2q:G18," + std::to_string(k + 1), q, g18[k], kRep18);
    fid(e, ev("(3+2sqrt2)/8", 0.72855339059327376220042218105242L), 4);
  }

  const std::vector<CVector> g20{vec({i, -i, -(1.0 + 2.0 * i), 1}), vec({-(2.0 - i), -(2.0 - i), 1.0 + 2.0 * i, 5}),
                                 vec({-i, 2.0 + i, -1, 1}), vec({2.0 - i, -i, 1, 1})};
  for (std::size_t k = 0; k < g20.size(); ++k) {
    auto& e = r.add("2q:G20," + std::to_string(k + 1), q, g20[k], kRep20);
    fid(e, ev("5/8", 0.625L), 8);
    e.expected[kSre2] = ev("log(16/7)", 0.82667857318446793256357574238953L);
  }

  {
    auto& e = r.add("2q:psi0", q, (kron(t0, t0) - kron(t1, t1)) / r2);
    fid(e, ev("3/4", 0.75L), 2);
    e.expected[kSre2] = log95;
  }
  r.add("2q:psi1", q, kron(t0, t1));
  r.add("2q:psi2", q, kron(t1, t0));
  r.add("2q:psi3", q, (kron(t0, t0) + kron(t1, t1)) / r2);

  r.add("2q:psi_max,0", q, vec({1, i, i, i}));
  r.add("2q:psi_max,1", q, vec({i, 1, 1, -1}));
  r.add("2q:psi_max,2", q, vec({i, 1, -1, 1}));
  r.add("2q:psi_max,3", q, vec({-i, 1, -1, -1}));
}

void add_three_qubits(Registry& r) {
  const PrimeDim q(2, 3);
  auto basis = [](std::initializer_list<std::pair<int, cplx>> terms) {
    CVector v = CVector::Zero(8);
    for (auto [k, c] : terms) v(k) = c;
    return v;
  };
  r.add("3q:W", q, basis({{4, 1}, {2, 1}, {1, 1}}));
  r.add("3q:W+i111", q, basis({{4, 1}, {2, 1}, {1, 1}, {7, cplx(0, 1)}}));
  const CVector tof = basis({{0, 1}, {2, 1}, {4, 1}, {7, 1}});
  for (auto [name, amps] : {std::pair{"3q:TOF", tof}, std::pair{"3q:CCZ", CliffordWord::parse("H@3").apply(tof, q)}}) {
    auto& e = r.add(name, q, amps);
    e.expected[kFidelity] = ev("9/16", 0.5625L);
    e.expected_nearest_count = 8;
  }
}

const Registry& registry() {
  static const Registry r = [] {
    Registry reg;
    add_qubits(reg);
    add_qutrits(reg);
    add_ququints(reg);
    add_two_qubits(reg);
    add_three_qubits(reg);
    return reg;
  }();
  return r;
}

}  // namespace

QuquintConstants ququint_constants() {
  const double s = std::sqrt(30 - 6 * r5);
  const double k = std::sqrt(6 * (5 + r5));
  return {std::sqrt((5 + r5) / 10), -s + r5 - 3, s + r5 - 3, (k - r5 - 3) / 2, (-k - r5 - 3) / 2};
}

const CatalogEntry& catalog_entry(const std::string& name) {
  const auto& r = registry();
  const auto it = r.index.find(name);
  if (it == r.index.end()) throw Error(Errc::unknown_name, "unknown catalog state '" + name + "'");
  return r.entries[it->second];
}

PureState build(const std::string& name) { return catalog_entry(name).state; }

std::vector<std::string> catalog_names() { return catalog_names(""); }

std::vector<std::string> catalog_names(const std::string& prefix) {
  std::vector<std::string> out;
  for (const auto& e : registry().entries)
    if (e.name.starts_with(prefix)) out.push_back(e.name);
  return out;
}

const std::vector<std::string>& two_qubit_class_representatives() {
  static const std::vector<std::string> reps{
      "",  // identity
      kRep2,
      "CZ@1,2",
      kRep4,
      "S@1^2",
      kRep6,
      "CZ@1,2 H@1",
      "S@1",
      kRep9,
      "H@2 S@2^2 H@2 CZ@1,2",
      "S@2 S@1^2",
      "H@1",
      "S@1 H@1",
      kRep14,
      "S@2 S@1 H@1",
      kRep16,
      "H@2 H@1",
      kRep18,
      kRep19,
      kRep20,
      "CZ@1,2 S@2 H@1",
  };
  return reps;
}

}  // namespace qmagic
