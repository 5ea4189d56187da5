#include "pom/linprog.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace pom {

namespace {

// Tableau layout: body[i][j] holds B^{-1} A restricted to structural +
// artificial columns, rhs[i] = B^{-1} b.  basis[i] is the variable owning
// row i.  Reduced costs are recomputed from the cost vector on demand
// (column counts here are large, rows few, so that is the cheap direction).
struct Tableau {
    std::size_t rows = 0;
    std::size_t cols = 0;  // structural + artificial
    std::vector<std::vector<double>> body;
    std::vector<double> rhs;
    std::vector<std::size_t> basis;
};

void pivot(Tableau& t, std::size_t prow, std::size_t pcol) {
    const double pv = t.body[prow][pcol];
    std::vector<double>& prow_ref = t.body[prow];
    const double inv = 1.0 / pv;
    for (double& v : prow_ref) v *= inv;
    t.rhs[prow] *= inv;
    for (std::size_t i = 0; i < t.rows; ++i) {
        if (i == prow) continue;
        const double factor = t.body[i][pcol];
        if (factor == 0.0) continue;
        std::vector<double>& row = t.body[i];
        for (std::size_t j = 0; j < t.cols; ++j) row[j] -= factor * prow_ref[j];
        t.rhs[i] -= factor * t.rhs[prow];
        row[pcol] = 0.0;  // keep the basis column exactly unit
    }
    prow_ref[pcol] = 1.0;
    t.basis[prow] = pcol;
}

// Runs Bland-rule iterations maximizing cost over columns with allowed[j].
// Returns false when the problem is unbounded in the improving direction.
bool iterate(Tableau& t, const std::vector<double>& cost, const std::vector<char>& allowed) {
    for (;;) {
        // reduced cost for column j: c_j - sum_i c_basis[i] * body[i][j]
        std::size_t enter = t.cols;
        for (std::size_t j = 0; j < t.cols; ++j) {
            if (!allowed[j]) continue;
            double red = cost[j];
            for (std::size_t i = 0; i < t.rows; ++i) {
                const double cb = cost[t.basis[i]];
                if (cb != 0.0) red -= cb * t.body[i][j];
            }
            if (red > lp_pivot_tolerance) {
                enter = j;  // Bland: smallest improving index
                break;
            }
        }
        if (enter == t.cols) return true;  // optimal

        std::size_t leave = t.rows;
        double best_ratio = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < t.rows; ++i) {
            const double coef = t.body[i][enter];
            if (coef > lp_pivot_tolerance) {
                const double ratio = t.rhs[i] / coef;
                if (ratio < best_ratio - 1e-12 ||
                    (ratio < best_ratio + 1e-12 &&
                     (leave == t.rows || t.basis[i] < t.basis[leave]))) {
                    best_ratio = ratio;
                    leave = i;
                }
            }
        }
        if (leave == t.rows) return false;  // unbounded
        pivot(t, leave, enter);
    }
}

}  // namespace

LPSolution simplex_maximize(const LPProblem& problem) {
    const std::size_t ncols = problem.objective.size();
    const std::size_t nrows = problem.constraints.size();
    if (problem.rhs.size() != nrows)
        throw std::invalid_argument("simplex_maximize: rhs length does not match row count");
    for (const auto& row : problem.constraints)
        if (row.size() != ncols)
            throw std::invalid_argument("simplex_maximize: constraint row length does not match objective");
    for (double v : problem.objective)
        if (!std::isfinite(v)) throw std::invalid_argument("simplex_maximize: non-finite objective");
    for (const auto& row : problem.constraints)
        for (double v : row)
            if (!std::isfinite(v)) throw std::invalid_argument("simplex_maximize: non-finite constraint");
    for (double v : problem.rhs)
        if (!std::isfinite(v)) throw std::invalid_argument("simplex_maximize: non-finite rhs");

    LPSolution sol;
    if (nrows == 0) {
        // No constraints: optimum is 0 at x = 0 unless some coefficient is
        // positive, in which case the problem is unbounded.
        for (double v : problem.objective)
            if (v > lp_pivot_tolerance) {
                sol.status = LPStatus::Unbounded;
                return sol;
            }
        sol.status = LPStatus::Optimal;
        sol.x.assign(ncols, 0.0);
        sol.value = 0.0;
        return sol;
    }

    Tableau t;
    t.rows = nrows;
    t.cols = ncols + nrows;  // structural columns then one artificial per row
    t.body.assign(nrows, std::vector<double>(t.cols, 0.0));
    t.rhs.resize(nrows);
    t.basis.resize(nrows);
    for (std::size_t i = 0; i < nrows; ++i) {
        const double flip = problem.rhs[i] < 0.0 ? -1.0 : 1.0;
        for (std::size_t j = 0; j < ncols; ++j) t.body[i][j] = flip * problem.constraints[i][j];
        t.rhs[i] = flip * problem.rhs[i];
        t.body[i][ncols + i] = 1.0;
        t.basis[i] = ncols + i;
    }

    // Phase 1: drive the artificial variables to zero.
    std::vector<double> phase1_cost(t.cols, 0.0);
    for (std::size_t i = 0; i < nrows; ++i) phase1_cost[ncols + i] = -1.0;
    std::vector<char> allowed(t.cols, 1);
    if (!iterate(t, phase1_cost, allowed))
        throw std::runtime_error("simplex_maximize: phase 1 reported unbounded");
    double infeas = 0.0;
    for (std::size_t i = 0; i < nrows; ++i)
        if (t.basis[i] >= ncols) infeas += t.rhs[i];
    if (infeas > 1e-9) {
        sol.status = LPStatus::Infeasible;
        return sol;
    }

    // Kick lingering zero-level artificials out of the basis when a
    // structural pivot exists; otherwise the row is redundant and the
    // artificial stays pinned at zero.
    for (std::size_t i = 0; i < nrows; ++i) {
        if (t.basis[i] < ncols) continue;
        for (std::size_t j = 0; j < ncols; ++j) {
            if (std::abs(t.body[i][j]) > lp_pivot_tolerance) {
                pivot(t, i, j);
                break;
            }
        }
    }

    // Phase 2: the real objective, artificial columns locked out.
    std::vector<double> phase2_cost(t.cols, 0.0);
    for (std::size_t j = 0; j < ncols; ++j) phase2_cost[j] = problem.objective[j];
    for (std::size_t j = ncols; j < t.cols; ++j) allowed[j] = 0;
    if (!iterate(t, phase2_cost, allowed)) {
        sol.status = LPStatus::Unbounded;
        return sol;
    }

    sol.status = LPStatus::Optimal;
    sol.x.assign(ncols, 0.0);
    for (std::size_t i = 0; i < nrows; ++i)
        if (t.basis[i] < ncols) sol.x[t.basis[i]] = t.rhs[i];
    sol.value = 0.0;
    for (std::size_t j = 0; j < ncols; ++j) sol.value += problem.objective[j] * sol.x[j];
    return sol;
}

}  // namespace pom
