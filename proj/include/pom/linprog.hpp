#pragma once
// Two-phase primal simplex over dense tableaus.  Problems are given in the
// equality form  maximize c.x  s.t.  A x = b, x >= 0.  Bland's rule picks
// pivots, which rules out cycling on the degenerate vertices the classical
// strategy polytopes are full of.

#include <cstddef>
#include <string>
#include <vector>

namespace pom {

struct LPProblem {
    std::vector<double> objective;                 // c, one entry per variable
    std::vector<std::vector<double>> constraints;  // rows of A, each sized like c
    std::vector<double> rhs;                       // b, one entry per row
};

enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LPSolution {
    LPStatus status = LPStatus::Infeasible;
    double value = 0.0;
    std::vector<double> x;
};

// Pivot entries smaller than this are treated as zero.
inline constexpr double lp_pivot_tolerance = 1e-11;

LPSolution simplex_maximize(const LPProblem& problem);

}  // namespace pom
