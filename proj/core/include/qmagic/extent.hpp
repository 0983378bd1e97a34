#pragma once

// Stabilizer extent: min (sum |c_i|)^2 subject to sum c_i |s_i> = |psi>.

#include <optional>
#include <vector>

#include "qmagic/catalog.hpp"
#include "qmagic/operators.hpp"
#include "qmagic/stabilizer.hpp"
#include "qmagic/verify.hpp"

namespace qmagic {

struct ExtentProblem {
  PureState target;
  CMatrix dictionary;                    // columns are normalized states
  std::optional<CMatrix> projector;      // onto span of the dictionary, for the group variant

  static ExtentProblem stabilizer(const PureState& target);
  static ExtentProblem from_states(const PureState& target, const std::vector<PureState>& atoms,
                                   std::optional<CMatrix> projector = std::nullopt);
};

struct ExtentOptions {
  double tol = 1e-8;          // relative duality gap on the l1 norm
  int max_iterations = 100000;
  double feasibility_tol = 1e-9;
};

struct ExtentSolution {
  double value = 0;              // xi = ||c||_1^2 of the returned feasible point
  CVector coefficients;
  double residual = 0;           // || D c - target ||
  double dual_certificate = 0;   // lower bound on xi from a dual feasible point
  double gap = 0;                // value - dual_certificate
  int iterations = 0;
  bool converged = false;
};

// ADMM on x = z with x in {D x = b} and an l1 penalty on z, over-relaxed, with residual balancing.
// Throws infeasible when the (projected) target is outside the dictionary span.
ExtentSolution solve_extent(const ExtentProblem& problem, const ExtentOptions& opts = {});

// |<psi|w>|^2 / max_s |<s|w>|^2; throws invalid_input when w is orthogonal to every atom.
double witness_bound(const PureState& psi, const PureState& witness, const CMatrix& dictionary);
double witness_bound(const PureState& psi, const PureState& witness);

// Solved extent against 1 / fidelity for a catalog entry with an eigen-operator.
VerifyReport verify_clifford_stabilizer_extent(const CatalogEntry& entry, double tol = 1e-6);

}  // namespace qmagic
