#include "dk/lp.hpp"

#include <cstddef>
#include <limits>

#include "dk/errors.hpp"

namespace dk {

void LinearProgram::add_row(std::vector<Rational> row, Rel rel, Rational b) {
    if (row.size() != num_vars())
        throw SpaceMismatchError("LP row length does not match variable count");
    rows.push_back(std::move(row));
    rels.push_back(rel);
    rhs.push_back(std::move(b));
}

namespace {

// Equality form: max c.x  s.t.  A x = b, x >= 0, b >= 0 row-wise.
// Columns: [structural | slack/surplus | artificial]; every row carries a
// column that starts as +e_i (slack for Le rows, artificial otherwise), so
// B^{-1} stays readable from those columns.
struct EqForm {
    std::vector<std::vector<Rational>> a;  // m x ncols
    std::vector<Rational> b;
    std::vector<Rational> c;  // structural objective, zero elsewhere
    std::size_t m = 0, nstruct = 0, ncols = 0;
    std::size_t art_begin = 0;            // first artificial column
    std::vector<std::size_t> unit_col;    // per row: the initial +e_i column
    std::vector<bool> row_flipped;        // negated relative to the input row
};

EqForm to_equality_form(const LinearProgram& lp) {
    const std::size_t m = lp.num_rows();
    const std::size_t n = lp.num_vars();
    for (const auto& r : lp.rows)
        if (r.size() != n) throw SpaceMismatchError("LP row length mismatch");
    if (lp.rels.size() != m || lp.rhs.size() != m)
        throw SpaceMismatchError("LP relation/rhs count mismatch");

    EqForm eq;
    eq.m = m;
    eq.nstruct = n;
    eq.unit_col.resize(m);
    eq.row_flipped.resize(m);

    // Count extra columns: one slack/surplus per inequality row, one
    // artificial per row whose initial column cannot serve as a basis.
    std::size_t nextra = 0;
    for (auto rel : lp.rels)
        if (rel != LinearProgram::Rel::Eq) ++nextra;

    std::vector<LinearProgram::Rel> rel(m);
    std::vector<bool> flip(m);
    for (std::size_t i = 0; i < m; ++i) {
        rel[i] = lp.rels[i];
        flip[i] = lp.rhs[i] < 0;
        if (flip[i]) {
            if (rel[i] == LinearProgram::Rel::Le) rel[i] = LinearProgram::Rel::Ge;
            else if (rel[i] == LinearProgram::Rel::Ge) rel[i] = LinearProgram::Rel::Le;
        }
        eq.row_flipped[i] = flip[i];
    }
    std::size_t nart = 0;
    for (std::size_t i = 0; i < m; ++i)
        if (rel[i] != LinearProgram::Rel::Le) ++nart;

    eq.art_begin = n + nextra;
    eq.ncols = n + nextra + nart;
    eq.a.assign(m, std::vector<Rational>(eq.ncols, Rational(0)));
    eq.b.resize(m);
    eq.c.assign(eq.ncols, Rational(0));
    for (std::size_t j = 0; j < n; ++j) eq.c[j] = lp.objective[j];

    std::size_t next_extra = n;
    std::size_t next_art = eq.art_begin;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            eq.a[i][j] = flip[i] ? Rational(-lp.rows[i][j]) : lp.rows[i][j];
        eq.b[i] = flip[i] ? Rational(-lp.rhs[i]) : lp.rhs[i];
        switch (rel[i]) {
            case LinearProgram::Rel::Le:
                eq.a[i][next_extra] = 1;
                eq.unit_col[i] = next_extra++;
                break;
            case LinearProgram::Rel::Ge:
                eq.a[i][next_extra++] = -1;
                eq.a[i][next_art] = 1;
                eq.unit_col[i] = next_art++;
                break;
            case LinearProgram::Rel::Eq:
                eq.a[i][next_art] = 1;
                eq.unit_col[i] = next_art++;
                break;
        }
    }
    return eq;
}

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Dense tableau simplex with Bland's rule. `allowed_end` limits which columns
// may enter (used to freeze artificials in phase 2).
struct Simplex {
    EqForm& eq;
    std::vector<std::size_t> basis;  // per row, column index
    LpStats* stats;

    explicit Simplex(EqForm& e, LpStats* s) : eq(e), stats(s) {
        basis.resize(eq.m);
        for (std::size_t i = 0; i < eq.m; ++i) basis[i] = eq.unit_col[i];
    }

    void pivot(std::size_t r, std::size_t col) {
        if (stats) ++stats->pivots;
        Rational p = eq.a[r][col];
        for (auto& v : eq.a[r]) v /= p;
        eq.b[r] /= p;
        for (std::size_t i = 0; i < eq.m; ++i) {
            if (i == r) continue;
            Rational f = eq.a[i][col];
            if (f == 0) continue;
            for (std::size_t j = 0; j < eq.ncols; ++j) eq.a[i][j] -= f * eq.a[r][j];
            eq.b[i] -= f * eq.b[r];
        }
        basis[r] = col;
    }

    // Maximizes obj over the current basis. Returns false when unbounded.
    bool run(const std::vector<Rational>& obj, std::size_t allowed_end) {
        while (true) {
            // Simplex multipliers y = c_B B^{-1} via the current tableau.
            std::vector<Rational> ybar(eq.m, Rational(0));
            for (std::size_t i = 0; i < eq.m; ++i) ybar[i] = obj[basis[i]];
            // Entering column: smallest index with positive reduced cost.
            std::size_t enter = kNone;
            for (std::size_t j = 0; j < allowed_end; ++j) {
                Rational rc = obj[j];
                for (std::size_t i = 0; i < eq.m; ++i)
                    if (ybar[i] != 0) rc -= ybar[i] * eq.a[i][j];
                if (rc > 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == kNone) return true;
            // Leaving row: min ratio, ties broken by smallest basis column.
            std::size_t leave = kNone;
            Rational best;
            for (std::size_t i = 0; i < eq.m; ++i) {
                if (eq.a[i][enter] <= 0) continue;
                Rational ratio = eq.b[i] / eq.a[i][enter];
                if (leave == kNone || ratio < best ||
                    (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == kNone) return false;
            pivot(leave, enter);
        }
    }
};

}  // namespace

LpOutcome lp_solve(const LinearProgram& lp, LpStats* stats) {
    if (stats) ++stats->lp_calls;
    EqForm eq = to_equality_form(lp);
    Simplex sx(eq, stats);

    // Phase 1: drive the artificials to zero.
    bool has_art = eq.art_begin < eq.ncols;
    if (has_art) {
        std::vector<Rational> phase1(eq.ncols, Rational(0));
        for (std::size_t j = eq.art_begin; j < eq.ncols; ++j) phase1[j] = -1;
        sx.run(phase1, eq.ncols);  // bounded by construction
        Rational w(0);
        for (std::size_t i = 0; i < eq.m; ++i)
            if (sx.basis[i] >= eq.art_begin) w += eq.b[i];
        if (w > 0) {
            // Farkas multipliers from y = c_B B^{-1}; the initial unit columns
            // hold B^{-1}.
            LpOutcome out;
            out.status = LpStatus::Infeasible;
            out.farkas.assign(eq.m, Rational(0));
            for (std::size_t i = 0; i < eq.m; ++i) {
                Rational yi(0);
                for (std::size_t k = 0; k < eq.m; ++k)
                    if (sx.basis[k] >= eq.art_begin)
                        yi -= eq.a[k][eq.unit_col[i]];
                if (eq.row_flipped[i]) yi = -yi;
                out.farkas[i] = yi;
            }
            return out;
        }
        // Pivot remaining zero-valued artificials out of the basis where
        // possible; rows that cannot are redundant and stay at zero.
        for (std::size_t i = 0; i < eq.m; ++i) {
            if (sx.basis[i] < eq.art_begin) continue;
            for (std::size_t j = 0; j < eq.art_begin; ++j) {
                if (eq.a[i][j] != 0) {
                    sx.pivot(i, j);
                    break;
                }
            }
        }
    }

    // Phase 2: artificials frozen out of the entering set.
    if (!sx.run(eq.c, eq.art_begin)) {
        LpOutcome out;
        out.status = LpStatus::Unbounded;
        return out;
    }

    LpOutcome out;
    out.status = LpStatus::Optimal;
    out.solution.assign(lp.num_vars(), Rational(0));
    for (std::size_t i = 0; i < eq.m; ++i)
        if (sx.basis[i] < lp.num_vars()) out.solution[sx.basis[i]] = eq.b[i];
    out.value = 0;
    for (std::size_t j = 0; j < lp.num_vars(); ++j)
        out.value += lp.objective[j] * out.solution[j];
    return out;
}

bool check_farkas(const LinearProgram& lp, const std::vector<Rational>& y) {
    if (y.size() != lp.num_rows()) return false;
    // y proves infeasibility of {A x rel b, x >= 0}: the y-combination of the
    // rows reads sum_j (y^T A)_j x_j <= y.b, with every column coefficient
    // >= 0 and y.b < 0. Requires y_i >= 0 for Le rows, y_i <= 0 for Ge rows.
    Rational yb(0);
    for (std::size_t i = 0; i < lp.num_rows(); ++i) {
        if (lp.rels[i] == LinearProgram::Rel::Le && y[i] < 0) return false;
        if (lp.rels[i] == LinearProgram::Rel::Ge && y[i] > 0) return false;
        yb += y[i] * lp.rhs[i];
    }
    if (yb >= 0) return false;
    for (std::size_t j = 0; j < lp.num_vars(); ++j) {
        Rational col(0);
        for (std::size_t i = 0; i < lp.num_rows(); ++i) col += y[i] * lp.rows[i][j];
        if (col < 0) return false;
    }
    return true;
}

bool check_solution(const LinearProgram& lp, const std::vector<Rational>& x) {
    if (x.size() != lp.num_vars()) return false;
    for (const auto& v : x)
        if (v < 0) return false;
    for (std::size_t i = 0; i < lp.num_rows(); ++i) {
        Rational lhs(0);
        for (std::size_t j = 0; j < lp.num_vars(); ++j) lhs += lp.rows[i][j] * x[j];
        switch (lp.rels[i]) {
            case LinearProgram::Rel::Eq:
                if (lhs != lp.rhs[i]) return false;
                break;
            case LinearProgram::Rel::Le:
                if (lhs > lp.rhs[i]) return false;
                break;
            case LinearProgram::Rel::Ge:
                if (lhs < lp.rhs[i]) return false;
                break;
        }
    }
    return true;
}

}  // namespace dk
