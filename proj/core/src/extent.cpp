#include "qmagic/extent.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/QR>

#include "qmagic/error.hpp"
#include "qmagic/measures.hpp"

namespace qmagic {

ExtentProblem ExtentProblem::stabilizer(const PureState& target) {
  return ExtentProblem{target, stabilizer_dictionary(target.dims()).matrix(), std::nullopt};
}

ExtentProblem ExtentProblem::from_states(const PureState& target, const std::vector<PureState>& atoms,
                                         std::optional<CMatrix> projector) {
  CMatrix d(target.dim(), static_cast<Eigen::Index>(atoms.size()));
  for (std::size_t k = 0; k < atoms.size(); ++k) {
    if (atoms[k].dim() != target.dim()) throw Error(Errc::dimension_mismatch, "dictionary atom has the wrong dimension");
    d.col(static_cast<Eigen::Index>(k)) = atoms[k].vector();
  }
  if (projector) {
    const CMatrix& p = *projector;
    if (!satisfies_role(p, Role::hermitian, 1e-9) || max_abs_diff(p * p, p) > 1e-9)
      throw Error(Errc::invalid_input, "projector is not an orthogonal projector");
  }
  return ExtentProblem{target, std::move(d), std::move(projector)};
}

namespace {

double l1(const CVector& v) { return v.cwiseAbs().sum(); }

CVector soft_threshold(const CVector& w, double t) {
  CVector out(w.size());
  for (Eigen::Index k = 0; k < w.size(); ++k) {
    const double m = std::abs(w(k));
    out(k) = m > t ? w(k) * ((m - t) / m) : cplx(0);
  }
  return out;
}

}  // namespace

ExtentSolution solve_extent(const ExtentProblem& problem, const ExtentOptions& opts) {
  const CMatrix& a = problem.dictionary;
  const CVector b = problem.projector ? CVector(*problem.projector * problem.target.vector()) : problem.target.vector();
  if (a.rows() != b.size()) throw Error(Errc::dimension_mismatch, "dictionary rows do not match the target");

  const CMatrix pinv = Eigen::CompleteOrthogonalDecomposition<CMatrix>(a).pseudoInverse();
  const CVector x0 = pinv * b;
  const double feas = (a * x0 - b).norm();
  if (feas > opts.feasibility_tol)
    throw Error(Errc::infeasible, "target is outside the dictionary span (residual " + std::to_string(feas) + ")");
  auto project = [&](const CVector& v) -> CVector { return v - pinv * (a * v - b); };
  // y with A^dag y closest to g; any y gives ||c||_1 >= Re<y, b> / ||A^dag y||_inf.
  const CMatrix pinv_adj = pinv.adjoint();
  auto dual_bound = [&](const CVector& y) {
    const double inf = (a.adjoint() * y).cwiseAbs().maxCoeff();
    return inf > 0 ? y.dot(b).real() / inf : 0.0;
  };

  ExtentSolution sol;
  CVector best = x0;
  double ub = l1(x0);
  double lb = std::max(0.0, dual_bound(b));

  const double alpha = 1.6;
  double rho = 1.0;
  CVector z = x0, u = CVector::Zero(a.cols());
  int it = 0;
  for (; it < opts.max_iterations; ++it) {
    const CVector x = project(z - u);
    const CVector xh = alpha * x + (1 - alpha) * z;
    const CVector z_old = z;
    z = soft_threshold(xh + u, 1.0 / rho);
    u += xh - z;

    if (it % 10 == 0) {
      if (const double v = l1(x); v < ub) {
        ub = v;
        best = x;
      }
      // z is nearly feasible; its projection is a second primal candidate.
      if (const CVector pz = project(z); l1(pz) < ub) {
        ub = l1(pz);
        best = pz;
      }
      lb = std::max(lb, dual_bound(pinv_adj * (rho * u)));
      if (ub - lb <= opts.tol * ub) {
        sol.converged = true;
        break;
      }
      const double r = (x - z).norm();
      const double s = rho * (z - z_old).norm();
      if (r > 10 * s) {
        rho *= 2;
        u /= 2;
      } else if (s > 10 * r) {
        rho /= 2;
        u *= 2;
      }
    }
  }
  sol.iterations = it;
  sol.coefficients = best;
  sol.value = ub * ub;
  sol.residual = (a * best - b).norm();
  sol.dual_certificate = lb * lb;
  sol.gap = sol.value - sol.dual_certificate;
  return sol;
}

double witness_bound(const PureState& psi, const PureState& witness, const CMatrix& dictionary) {
  const double f = (dictionary.adjoint() * witness.vector()).cwiseAbs2().maxCoeff();
  if (f <= 0) throw Error(Errc::invalid_input, "witness has zero overlap with every dictionary state");
  return std::norm(witness.vector().dot(psi.vector())) / f;
}

double witness_bound(const PureState& psi, const PureState& witness) {
  return witness_bound(psi, witness, stabilizer_dictionary(psi.dims()).matrix());
}

VerifyReport verify_clifford_stabilizer_extent(const CatalogEntry& entry, double tol) {
  VerifyReport rep;
  if (!entry.eigen_operator) throw Error(Errc::invalid_input, entry.name + " has no eigen-operator");
  const double f = stabilizer_fidelity(entry.state).value;
  const auto sol = solve_extent(ExtentProblem::stabilizer(entry.state));
  rep.add(entry.name + " extent", "1/F", 1.0 / f, sol.value, tol);
  rep.add(entry.name + " extent certificate", "1/F", 1.0 / f, sol.dual_certificate, tol);
  rep.add_residual(entry.name + " extent residual", sol.residual, 1e-8);
  return rep;
}

}  // namespace qmagic
