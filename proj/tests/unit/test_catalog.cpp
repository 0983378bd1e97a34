#include <gtest/gtest.h>

#include <set>

#include "qmagic/catalog.hpp"
#include "qmagic/error.hpp"
#include "qmagic/verify.hpp"

using namespace qmagic;

TEST(Catalog, NamesAreUniqueAndLookupWorks) {
  const auto names = catalog_names();
  const std::set<std::string> unique(names.begin(), names.end());
  EXPECT_EQ(unique.size(), names.size());
  for (const auto& n : names) {
    const auto& e = catalog_entry(n);
    EXPECT_EQ(e.name, n);
    EXPECT_NEAR(e.state.vector().norm(), 1, 1e-14);
    EXPECT_EQ(e.state.dim(), e.dims.hilbert());
  }
  EXPECT_THROW(catalog_entry("qutrit:nope"), Error);
}

TEST(Catalog, PrefixFilter) {
  const auto q = catalog_names("qutrit:");
  EXPECT_FALSE(q.empty());
  for (const auto& n : q) EXPECT_EQ(n.rfind("qutrit:", 0), 0u);
  EXPECT_TRUE(catalog_names("none:").empty());
}

TEST(Catalog, EigenOperatorsHoldExactly) {
  for (const auto& n : catalog_names()) {
    const auto& e = catalog_entry(n);
    if (!e.eigen_operator) continue;
    const CMatrix u = e.eigen_operator->word.matrix(e.dims);
    const CVector v = u * e.state.vector();
    EXPECT_LT((v - e.eigen_operator->eigenvalue * e.state.vector()).norm(), 1e-10) << n;
    EXPECT_NEAR(std::abs(e.eigen_operator->eigenvalue), 1, 1e-12) << n;
  }
}

TEST(Catalog, CliffordStabilizerFlagNeedsOperator) {
  for (const auto& n : catalog_names()) {
    const auto& e = catalog_entry(n);
    if (e.clifford_stabilizer) EXPECT_TRUE(e.eigen_operator.has_value()) << n;
  }
}

TEST(Catalog, QuquintConstants) {
  const auto c = ququint_constants();
  EXPECT_NEAR(c.chi_c, std::sqrt((5 + std::sqrt(5.0)) / 10), 1e-15);
}

TEST(Catalog, TwoQubitRepresentatives) { EXPECT_EQ(two_qubit_class_representatives().size(), 21u); }

TEST(Verify, CatalogPasses) {
  const auto rep = verify_catalog();
  EXPECT_GT(rep.checks.size(), 300u);
  for (const auto& c : rep.checks) EXPECT_TRUE(c.pass) << c.name << " expected " << c.expected << " got " << c.got;
}

TEST(Verify, EquivalencesPass) {
  const auto rep = verify_equivalences();
  EXPECT_FALSE(rep.checks.empty());
  for (const auto& c : rep.checks) EXPECT_TRUE(c.pass) << c.name;
}

TEST(Verify, ReportCountsFailures) {
  VerifyReport r;
  r.add("ok", "1", 1, 1 + 1e-12, 1e-9);
  r.add("bad", "1", 1, 1.1, 1e-9);
  r.add_residual("res", 1e-3, 1e-6);
  EXPECT_EQ(r.failures(), 2u);
  EXPECT_FALSE(r.passed());
}

TEST(Equivalence, SearchOverEnumeratedGroup) {
  EXPECT_TRUE(clifford_equivalent(build("qutrit:H+"), build("qutrit:H-")));
  EXPECT_TRUE(clifford_equivalent(build("qutrit:T0"), build("qutrit:T1")));
  EXPECT_FALSE(clifford_equivalent(build("qutrit:S"), build("qutrit:N")));
  EXPECT_FALSE(clifford_equivalent(build("qubit:T0"), build("qubit:H0")));
}

TEST(Sweep, QutritClasses) {
  const auto r = single_qudit_sweep(3);
  EXPECT_EQ(r.operators, 216u);
  EXPECT_EQ(r.nonstabilizer_classes(), 4u);
  std::set<std::string> matched;
  for (const auto& c : r.classes)
    for (const auto& m : c.catalog_matches) matched.insert(m);
  for (const char* n : {"qutrit:S", "qutrit:N", "qutrit:H+", "qutrit:T0"}) EXPECT_TRUE(matched.contains(n)) << n;
}
