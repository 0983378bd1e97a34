#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "../oracles.hpp"
#include "qmagic/catalog.hpp"
#include "qmagic/clifford.hpp"
#include "qmagic/error.hpp"
#include "qmagic/measures.hpp"
#include "qmagic/search.hpp"
#include "qmagic/words.hpp"

using namespace qmagic;

namespace {

CMatrix random_hermitian(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  CMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = cplx(g(rng), g(rng));
  return m + m.adjoint();
}

bool contains_state(const std::vector<Eigenpair>& pairs, const PureState& s) {
  for (const auto& p : pairs)
    if (equal_up_to_phase(p.state, s, 1e-9)) return true;
  return false;
}

}  // namespace

TEST(Gates, QutritHadamardOrder) {
  const CMatrix h = hadamard_matrix(3);
  const CMatrix h2 = h * h;
  // H^2 is the parity permutation up to phase and H^4 is a multiple of the identity.
  const CMatrix h4 = h2 * h2;
  EXPECT_TRUE(equal_up_to_phase(h4, CMatrix(CMatrix::Identity(3, 3))));
  EXPECT_NEAR(std::abs(h.determinant() - cplx(1)), 0, 1e-12);
  // H = (delta / sqrt d) sum w^{jk} |j><k|
  EXPECT_LT(max_abs_diff(h, hadamard_delta(3) * oracle::fourier(3)), 1e-12);
}

TEST(Gates, QubitHadamard) {
  const CVector plus = hadamard_matrix(2) * CVector::Unit(2, 0);
  EXPECT_NEAR(std::abs(plus(0) - plus(1)), 0, 1e-15);
  EXPECT_NEAR(std::abs(plus(0)), 1 / std::sqrt(2.0), 1e-15);
}

TEST(Gates, PhaseGateIsCliffordForOddD) {
  for (int d : {3, 5, 7}) {
    const CMatrix s = phase_gate_matrix(d);
    const cplx tau = -std::polar(1.0, std::numbers::pi / d);
    for (int j = 0; j < d; ++j) EXPECT_NEAR(std::abs(s(j, j) - std::pow(tau, j * (j + 1))), 0, 1e-12);
    EXPECT_TRUE(is_clifford(DenseOperator(PrimeDim(d, 1), s, Role::unitary)));
  }
}

TEST(Gates, TGateIsNotClifford) {
  CMatrix t = CMatrix::Identity(2, 2);
  t(1, 1) = std::polar(1.0, std::numbers::pi / 4);
  EXPECT_FALSE(is_clifford(DenseOperator(PrimeDim(2, 1), t, Role::unitary)));
  EXPECT_TRUE(is_clifford(DenseOperator(PrimeDim(2, 1), CMatrix::Identity(2, 2), Role::unitary)));
  EXPECT_TRUE(is_clifford(DenseOperator(PrimeDim(3, 1), hadamard_matrix(3), Role::unitary)));
}

TEST(Metaplectic, IdentityAndGenerators) {
  EXPECT_TRUE(equal_up_to_phase(metaplectic_V(ZdMatrix::identity(2, 3)).matrix(), CMatrix(CMatrix::Identity(3, 3))));
  for (int d : {3, 5}) {
    const DenseOperator vh = metaplectic_V(ZdMatrix(2, 2, d, {0, -1, 1, 0}));
    EXPECT_TRUE(equal_up_to_phase(vh.matrix(), hadamard_matrix(d)));
    // S = T_(0, 1/2) V_S_hat
    const DenseOperator vs = metaplectic_V(ZdMatrix(2, 2, d, {1, 0, 1, 1}));
    const CMatrix t = displacement_operator(PhasePoint({0}, {mod_inverse(2, d)}, d), PrimeDim(d, 1)).matrix();
    EXPECT_TRUE(equal_up_to_phase(CMatrix(t * vs.matrix()), phase_gate_matrix(d))) << d;
  }
}

TEST(Metaplectic, ImplementsSymplecticMap) {
  for (int d : {3, 5})
    for (const auto& f : enumerate_symplectic(PrimeDim(d, 1))) {
      const auto [s, a] = affine_from_clifford(metaplectic_V(f));
      EXPECT_EQ(s, f);
      EXPECT_TRUE(a.is_zero());
    }
}

TEST(Affine, Examples) {
  const PrimeDim q(3, 1);
  const auto [s_id, a_id] = affine_from_clifford(DenseOperator(q, CMatrix::Identity(3, 3), Role::unitary));
  EXPECT_EQ(s_id, ZdMatrix::identity(2, 3));
  EXPECT_TRUE(a_id.is_zero());
  const auto [s_h, a_h] = affine_from_clifford(DenseOperator(q, hadamard_matrix(3), Role::unitary));
  EXPECT_EQ(s_h, ZdMatrix(2, 2, 3, {0, -1, 1, 0}));
  const PhasePoint chi0({1}, {2}, 3);
  const auto [s_t, a_t] = affine_from_clifford(displacement_operator(chi0, q));
  EXPECT_EQ(s_t, ZdMatrix::identity(2, 3));
  // W(T rho T^dag)(chi) = W(rho)(chi - chi0)
  const PureState psi = build("qutrit:T0");
  const PureState moved(q, displacement_operator(chi0, q).matrix() * psi.vector());
  const auto w0 = wigner_function(psi), w1 = wigner_function(moved);
  for (const auto& chi : all_points(q)) EXPECT_NEAR(w1.at(chi), w0.at(chi - chi0), 1e-12);
  (void)a_t;
}

TEST(Affine, LawHoldsOnGroup) {
  for (int d : {3, 5})
    for (const auto& c : enumerate_reduced_clifford(PrimeDim(d, 1))) ASSERT_LT(affine_law_error(c), 1e-9);
}

TEST(Affine, RoundTripFromAffine) {
  const PrimeDim q(5, 1);
  const ZdMatrix s(2, 2, 5, {2, 1, 1, 1});
  const PhasePoint a({3}, {1}, 5);
  const auto c = clifford_from_affine(s, a);
  const auto [s2, a2] = affine_from_clifford(c.unitary);
  EXPECT_EQ(s2, s);
  EXPECT_EQ(a2, a);
}

TEST(CliffordGroup, ReducedOrders) {
  const std::vector<std::pair<PrimeDim, long long>> cases{
      {PrimeDim(2, 1), 24}, {PrimeDim(3, 1), 216}, {PrimeDim(5, 1), 3000}, {PrimeDim(2, 2), 11520}};
  for (const auto& [dims, order] : cases) {
    EXPECT_EQ(oracle::reduced_clifford_order(dims.d(), dims.n()), order);
    EXPECT_EQ(reduced_clifford_order(dims), order);
    EXPECT_EQ(static_cast<long long>(enumerate_reduced_clifford_unitaries(dims).size()), order) << to_string(dims);
  }
}

TEST(Eigenstates, IdentityHasNone) {
  EXPECT_TRUE(nondegenerate_eigenstates(DenseOperator(PrimeDim(3, 1), CMatrix::Identity(3, 3), Role::unitary)).empty());
}

TEST(Eigenstates, QubitTOperator) {
  const PrimeDim q(2, 1);
  const CMatrix t = std::polar(1.0, std::numbers::pi / 4) * phase_gate_matrix(2) * hadamard_matrix(2);
  const auto pairs = nondegenerate_eigenstates(DenseOperator(q, t, Role::unitary));
  ASSERT_EQ(pairs.size(), 2u);
  EXPECT_TRUE(contains_state(pairs, build("qubit:T0")));
  EXPECT_TRUE(contains_state(pairs, build("qubit:T1")));
}

TEST(Eigenstates, QutritHadamard) {
  const auto pairs = nondegenerate_eigenstates(DenseOperator(PrimeDim(3, 1), hadamard_matrix(3), Role::unitary));
  ASSERT_EQ(pairs.size(), 3u);
  for (const char* n : {"qutrit:S", "qutrit:H+", "qutrit:H-"}) EXPECT_TRUE(contains_state(pairs, build(n))) << n;
}

TEST(FiniteGroup, ProjectorExamples) {
  const PrimeDim q(3, 1);
  const auto trivial = FiniteUnitaryGroup::generate(q, {CMatrix::Identity(3, 3)});
  EXPECT_EQ(trivial.order(), 1u);
  EXPECT_LT(max_abs_diff(group_projector(trivial).matrix(), CMatrix::Identity(3, 3)), 1e-12);
  const auto zgroup = FiniteUnitaryGroup::generate(q, {displacement_operator(PhasePoint({0}, {1}, 3), q).matrix()});
  EXPECT_EQ(zgroup.order(), 3u);
  const CMatrix p0 = PureState::basis(q, 0).density().matrix();
  EXPECT_LT(max_abs_diff(group_projector(zgroup).matrix(), p0), 1e-12);
}

namespace {

FiniteUnitaryGroup order_twelve_group() {
  const PrimeDim q(2, 1);
  CMatrix x(2, 2), z(2, 2);
  x << 0, 1, 1, 0;
  z << 1, 0, 0, -1;
  const CMatrix id = CMatrix::Identity(2, 2);
  const double pi = std::numbers::pi;
  return FiniteUnitaryGroup::generate(q, {std::cos(pi / 3) * id + cplx(0, std::sin(pi / 3)) * x, cplx(0, 1) * z});
}

}  // namespace

TEST(FiniteGroup, OrderTwelveExample) {
  const auto g = order_twelve_group();
  EXPECT_EQ(g.order(), 12u);
  EXPECT_TRUE(g.closed());
  EXPECT_LT(group_projector(g).matrix().norm(), 1e-12);
  const auto states = group_stabilizer_states(g);
  const double r3 = std::sqrt(3.0);
  const PrimeDim q(2, 1);
  auto st = [&](cplx a, cplx b) {
    CVector v(2);
    v << a, b;
    return PureState(q, v);
  };
  const std::vector<PureState> listed{st(1, 0), st(0, 1), st(1, 1), st(1, -1), st(1, cplx(0, r3)),
                                      st(1, cplx(0, -r3)), st(r3, cplx(0, 1)), st(r3, cplx(0, -1))};
  ASSERT_EQ(states.size(), listed.size());
  for (const auto& s : listed) {
    bool found = false;
    for (const auto& t : states) found |= equal_up_to_phase(s, t);
    EXPECT_TRUE(found);
  }
  EXPECT_NEAR(group_stabilizer_fidelity(st(1, 0), states).value, 1, 1e-12);
}

TEST(FiniteGroup, EigenphaseExtendedCliffordStates) {
  // The eigen-operator of T0 with its eigenphases stabilizes exactly T0 and T1.
  const PrimeDim q(2, 1);
  const auto& e = catalog_entry("qubit:T0");
  const auto g = eigenphase_extended_group(DenseOperator(q, e.eigen_operator->word.matrix(q), Role::unitary));
  const auto states = group_stabilizer_states(g);
  EXPECT_EQ(states.size(), 2u);
  EXPECT_TRUE(equal_up_to_phase(states[0], build("qubit:T0")) || equal_up_to_phase(states[1], build("qubit:T0")));
}

TEST(Twirl, CommutesWithGroup) {
  std::mt19937_64 rng(3);
  const PrimeDim q(3, 1);
  const auto g = FiniteUnitaryGroup::generate(q, {hadamard_matrix(3)});
  const DenseOperator o(q, random_hermitian(3, rng), Role::hermitian);
  const CMatrix t = twirl(o, g).matrix();
  for (const auto& u : g.elements()) EXPECT_LT(max_abs_diff(u * t, t * u), 1e-12);
  // Idempotent, and fixes operators that already commute.
  EXPECT_LT(max_abs_diff(twirl(DenseOperator(q, t), g).matrix(), t), 1e-12);
}

TEST(Twirl, KillsCrossTermsWithInvariantState) {
  const PrimeDim q(3, 1);
  const auto& e = catalog_entry("qutrit:S");
  const auto g = eigenphase_extended_group(DenseOperator(q, e.eigen_operator->word.matrix(q), Role::unitary));
  const CMatrix psi = e.state.vector();
  const CMatrix phi = build("qutrit:H+").vector();
  const CMatrix cross = psi * phi.adjoint();
  EXPECT_LT(twirl(DenseOperator(q, cross), g).matrix().norm(), 1e-12);
}

TEST(Words, ParseAndOrder) {
  const auto w = CliffordWord::parse("S@1 H@1");
  EXPECT_EQ(w.size(), 2u);
  EXPECT_EQ(w.str(), "S@1 H@1");
  // The rightmost gate acts first.
  EXPECT_LT(max_abs_diff(w.matrix(PrimeDim(2, 1)), phase_gate_matrix(2) * hadamard_matrix(2)), 1e-15);
  EXPECT_EQ(CliffordWord::parse("H@1;CZ@1,2  Sdg@2^3").size(), 3u);
  EXPECT_THROW(CliffordWord::parse("Q@1"), Error);
  EXPECT_THROW(CliffordWord::parse("CZ@1"), Error);
  EXPECT_THROW(CliffordWord::parse("H1"), Error);
}

TEST(Words, InverseGates) {
  const PrimeDim q(3, 2);
  const auto w = CliffordWord::parse("Sdg@2 S@2 Hdg@1 H@1 CNOT@1,2 CNOT@1,2^2");
  EXPECT_TRUE(equal_up_to_phase(w.matrix(q), CMatrix(CMatrix::Identity(9, 9))));
}

TEST(Search, TrivialAndKnownPair) {
  const auto same = clifford_equivalence_search(build("2q:G4,2"), build("2q:G4,2"));
  ASSERT_TRUE(same.has_value());
  EXPECT_TRUE(same->empty());
  const PureState a = build("2q:psi0"), b = build("2q:G4,2");
  const auto w = clifford_equivalence_search(a, b);
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(equal_up_to_phase(CVector(w->apply(a.vector(), a.dims())), b.vector(), 1e-9));
}

TEST(Search, InvariantPrefilter) {
  EXPECT_TRUE(invariants_match(build("2q:psi0"), build("2q:G4,2")));
  EXPECT_FALSE(invariants_match(build("2q:TT"), build("2q:HH")));
  EXPECT_FALSE(clifford_equivalence_search(build("2q:TT"), build("2q:HH")).has_value());
}
