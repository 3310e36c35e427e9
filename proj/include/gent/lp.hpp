#pragma once

#include <atomic>
#include <cstdint>
#include <vector>

#include <gent/rational.hpp>
#include <gent/setfunction.hpp>

namespace gent {

enum class Relation { LessEq, Equal, GreaterEq };
enum class Sense { Maximize, Minimize };
enum class LPStatus { Optimal, Infeasible, Unbounded };

// Sparse constraint over set-function variables; subsets are bit masks over
// the owning program's ground set. Terms on the empty set are dropped
// (f(empty) = 0).
struct LinearConstraint {
    SparseForm terms;
    Relation rel = Relation::GreaterEq;
    Rational rhs = 0;

    void add(std::uint32_t subset, Rational coeff);
    // Sort by subset, merge duplicates, drop zeros.
    void normalize();
};

struct LinearProgram {
    int ground = 0;  // variables are the subsets 1 .. (1<<ground)-1
    std::vector<LinearConstraint> constraints;
    SparseForm objective;
    Sense sense = Sense::Maximize;
};

struct LPResult {
    LPStatus status = LPStatus::Infeasible;
    Rational value;
    SetFunction primal;           // meaningful when Optimal
    std::vector<Rational> duals;  // one per constraint, original order
    bool verified = false;        // exact certificate re-check passed
};

// Exact rational simplex (two-phase, bounded largest-coefficient pivoting
// then Bland's rule). Optimal results carry primal and dual certificates that
// have been re-verified constraint by constraint before returning.
LPResult solve_lp(const LinearProgram& lp);

// Same contract, but pivots on the dual formulation; much faster when the
// program has many more constraints than variables. Requires the program to
// be feasible and bounded.
LPResult solve_lp_via_dual(const LinearProgram& lp);

struct LPStats {
    std::atomic<unsigned long> optimal_solves{0};
    std::atomic<unsigned long> verified_solves{0};
};

LPStats& lp_stats();

}  // namespace gent
