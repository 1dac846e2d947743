#pragma once

#include <cstdint>
#include <vector>

#include "dk/rational.hpp"

namespace dk {

// Counters for deterministic cost reporting; shared across a query.
struct LpStats {
    std::uint64_t lp_calls = 0;
    std::uint64_t pivots = 0;
};

// max objective . x  subject to  rows[i] . x  rel[i]  rhs[i],  x >= 0.
struct LinearProgram {
    enum class Rel { Eq, Le, Ge };

    std::vector<Rational> objective;
    std::vector<std::vector<Rational>> rows;
    std::vector<Rel> rels;
    std::vector<Rational> rhs;

    std::size_t num_vars() const { return objective.size(); }
    std::size_t num_rows() const { return rows.size(); }

    void add_row(std::vector<Rational> row, Rel rel, Rational b);
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpOutcome {
    LpStatus status = LpStatus::Infeasible;
    Rational value;                  // when Optimal
    std::vector<Rational> solution;  // when Optimal; one entry per variable
    std::vector<Rational> farkas;    // when Infeasible; one multiplier per row
};

// Exact two-phase simplex, Bland's rule, no tolerances. Deterministic.
LpOutcome lp_solve(const LinearProgram& lp, LpStats* stats = nullptr);

// Re-checks an infeasibility witness by exact arithmetic, independent of the
// pivot path that produced it.
bool check_farkas(const LinearProgram& lp, const std::vector<Rational>& y);

// Exact constraint satisfaction check for a candidate solution.
bool check_solution(const LinearProgram& lp, const std::vector<Rational>& x);

}  // namespace dk
