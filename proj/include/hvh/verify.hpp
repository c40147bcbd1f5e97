// Named verification suites behind the `verify` CLI subcommand: exact
// operator-algebra identities, oracle-vs-closed-form marginal sweeps, PDE
// and Liouville residuals, and the expectation-value consistency check.
#pragma once

#include <string>
#include <vector>

namespace hvh {

struct CheckResult {
  std::string name;
  bool pass = false;
  double defect = 0.0;     // measured worst-case deviation
  double tolerance = 0.0;  // 0 for exact checks
};

// Exact symbolic checks (isomorphism, antisymmetry, Jacobi, power gaps).
// The defect of an exact check is the number of failing cases.
std::vector<CheckResult> verify_algebra();

// Quantum marginal at (grid_points, tol); hybrid marginal at
// (min(grid_points,401))^2 nodes and 100*tol, matching the closed forms
// entrywise over a time sweep.
std::vector<CheckResult> verify_oracle(int grid_points, double tol);

// Full-mode PDE residual and Liouville residual at (grid_points)^2 with
// dt = 1e-4, plus the second-order convergence ratio on step halving.
std::vector<CheckResult> verify_pde(int grid_points, double tol);

// Weak-equality expectation consistency for f in {1,q,p,qp,q^2,p^2,H0}.
std::vector<CheckResult> verify_expectation(int grid_points, double tol);

std::vector<CheckResult> verify_all(int grid_points, double tol);

// Prints one line per check ("PASS name ..."), returns true iff all passed.
bool report_checks(const std::vector<CheckResult>& checks);

}  // namespace hvh
