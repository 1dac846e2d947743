#include "dk/cone.hpp"

#include "dk/errors.hpp"

namespace dk {

namespace {

using Rel = LinearProgram::Rel;

ConeWitness extract_witness(const std::vector<Rational>& x, std::size_t n,
                            std::size_t k) {
    // Layout: [s_1..s_n | lambda_1..lambda_k].
    ConeWitness w;
    w.slack.coords.assign(x.begin(), x.begin() + n);
    w.lambda.assign(x.begin() + n, x.begin() + n + k);
    return w;
}

// Feasibility system  s + sum lambda_g g = f,  s, lambda >= 0, with an
// optional sum-to-one normalization for the f = 0 case.
LinearProgram membership_lp(const GambleAssessment& G, const Gamble& f,
                            bool normalize, bool with_slack) {
    const std::size_t n = G.space.size();
    const std::size_t k = G.gambles.size();
    const std::size_t ns = with_slack ? n : 0;
    LinearProgram lp;
    lp.objective.assign(ns + k, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rational> row(ns + k, Rational(0));
        if (with_slack) row[i] = 1;
        for (std::size_t g = 0; g < k; ++g) row[ns + g] = G.gambles[g].coords[i];
        lp.add_row(std::move(row), Rel::Eq, f.coords[i]);
    }
    if (normalize)
        lp.add_row(std::vector<Rational>(ns + k, Rational(1)), Rel::Eq, Rational(1));
    return lp;
}

ConeResult cone_contains_nonneg(const GambleAssessment& G, const Gamble& f,
                                LpStats* stats) {
    LinearProgram lp = membership_lp(G, f, f.is_zero(), /*with_slack=*/true);
    LpOutcome out = lp_solve(lp, stats);
    ConeResult res;
    if (out.status == LpStatus::Optimal) {
        res.member = true;
        res.witness = extract_witness(out.solution, G.space.size(), G.gambles.size());
    }
    return res;
}

ConeResult cone_contains_strict(const GambleAssessment& G, const Gamble& f,
                                LpStats* stats) {
    const std::size_t n = G.space.size();
    const std::size_t k = G.gambles.size();
    // Route 1: no background part at all, f = sum lambda_g g.
    {
        LinearProgram lp = membership_lp(G, f, f.is_zero(), /*with_slack=*/false);
        LpOutcome out = lp_solve(lp, stats);
        if (out.status == LpStatus::Optimal) {
            ConeResult res;
            res.member = true;
            ConeWitness w;
            w.slack = zero_gamble(n);
            w.lambda = out.solution;
            res.witness = std::move(w);
            return res;
        }
    }
    // Route 2: a strictly positive background part; maximize the uniform
    // floor t with  f = t*1 + r + sum lambda_g g,  r, lambda, t >= 0.
    // Layout: [t | r_1..r_n | lambda].
    LinearProgram lp;
    lp.objective.assign(1 + n + k, Rational(0));
    lp.objective[0] = 1;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rational> row(1 + n + k, Rational(0));
        row[0] = 1;
        row[1 + i] = 1;
        for (std::size_t g = 0; g < k; ++g) row[1 + n + g] = G.gambles[g].coords[i];
        lp.add_row(std::move(row), Rel::Eq, f.coords[i]);
    }
    LpOutcome out = lp_solve(lp, stats);
    ConeResult res;
    if (out.status == LpStatus::Unbounded) {
        // A feasible point with t > 0 exists; recover one by bounding t.
        lp.add_row([&] {
            std::vector<Rational> row(1 + n + k, Rational(0));
            row[0] = 1;
            return row;
        }(), Rel::Le, Rational(1));
        out = lp_solve(lp, stats);
    }
    if (out.status == LpStatus::Optimal && out.value > 0) {
        res.member = true;
        ConeWitness w;
        Rational t = out.solution[0];
        w.slack.coords.resize(n);
        for (std::size_t i = 0; i < n; ++i) w.slack.coords[i] = t + out.solution[1 + i];
        w.lambda.assign(out.solution.begin() + 1 + n, out.solution.end());
        res.witness = std::move(w);
    }
    return res;
}

}  // namespace

ConeResult cone_contains(const GambleAssessment& G, const Gamble& f, LpStats* stats) {
    require_on_space(f, G.space);
    if (G.ordering == BackgroundOrdering::StrictlyPositive)
        return cone_contains_strict(G, f, stats);
    return cone_contains_nonneg(G, f, stats);
}

bool cone_consistent(const GambleAssessment& G, LpStats* stats) {
    return !cone_contains(G, zero_gamble(G.space.size()), stats).member;
}

bool verify_witness(const GambleAssessment& G, const Gamble& f, const ConeWitness& w) {
    // Deserialized witnesses store lambda sparsely; missing tail entries are
    // zero coefficients.
    if (w.lambda.size() > G.gambles.size()) return false;
    if (w.slack.size() != G.space.size()) return false;
    bool nontrivial = false;
    for (const auto& c : w.slack.coords) {
        if (c < 0) return false;
        if (c != 0) nontrivial = true;
    }
    if (G.ordering == BackgroundOrdering::StrictlyPositive && nontrivial) {
        // The background part must itself dominate zero strictly.
        if (!dominates_background(w.slack, G.ordering)) return false;
    }
    for (const auto& l : w.lambda) {
        if (l < 0) return false;
        if (l != 0) nontrivial = true;
    }
    if (!nontrivial) return false;
    Gamble sum = w.slack;
    for (std::size_t g = 0; g < w.lambda.size(); ++g)
        if (w.lambda[g] != 0)
            sum = gamble_add(sum, gamble_scale(w.lambda[g], G.gambles[g]));
    return sum == f;
}

PosiMeetResult posi_meets_cone(const OptionSet& B, const GambleAssessment& G,
                               LpStats* stats) {
    if (B.empty()) throw EmptySetError("posi_meets_cone: empty option set");
    require_on_space(B, G.space);
    const std::size_t n = G.space.size();
    const std::size_t k = G.gambles.size();
    const std::size_t m = B.size();
    const bool strict = G.ordering == BackgroundOrdering::StrictlyPositive;

    // Layout: [mu_1..mu_m | t? | s_1..s_n | lambda_1..lambda_k].
    // Under the strict ordering the background part is t*1 + s with floor t;
    // maximizing t decides whether a strictly positive part is reachable.
    const std::size_t nt = strict ? 1 : 0;
    auto build = [&](bool with_background) {
        LinearProgram lp;
        std::size_t cols = m + (with_background ? nt + n : 0) + k;
        lp.objective.assign(cols, Rational(0));
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<Rational> row(cols, Rational(0));
            for (std::size_t b = 0; b < m; ++b) row[b] = B.gambles[b].coords[i];
            std::size_t off = m;
            if (with_background) {
                if (strict) row[off++] = -1;
                row[off + i] = -1;
                off += n;
            }
            for (std::size_t g = 0; g < k; ++g) row[off + g] = -G.gambles[g].coords[i];
            lp.add_row(std::move(row), Rel::Eq, Rational(0));
        }
        {
            std::vector<Rational> row(cols, Rational(0));
            for (std::size_t b = 0; b < m; ++b) row[b] = 1;
            lp.add_row(std::move(row), Rel::Eq, Rational(1));
        }
        return lp;
    };

    PosiMeetResult res;
    if (!strict) {
        LinearProgram lp = build(true);
        // Maximize the total background + generator mass; > 0 means the
        // common element admits a non-trivial cone representation.
        for (std::size_t j = m; j < lp.num_vars(); ++j) lp.objective[j] = 1;
        LpOutcome out = lp_solve(lp, stats);
        if (out.status == LpStatus::Unbounded ||
            (out.status == LpStatus::Optimal && out.value > 0)) {
            if (out.status == LpStatus::Unbounded) {
                // Re-solve with a bounded mass to recover a witness point.
                std::vector<Rational> capRow(lp.num_vars(), Rational(0));
                for (std::size_t j = m; j < lp.num_vars(); ++j) capRow[j] = 1;
                lp.add_row(std::move(capRow), Rel::Le, Rational(1));
                out = lp_solve(lp, stats);
            }
            res.meets = true;
            res.mu.assign(out.solution.begin(), out.solution.begin() + m);
            ConeWitness w;
            w.slack.coords.assign(out.solution.begin() + m,
                                  out.solution.begin() + m + n);
            w.lambda.assign(out.solution.begin() + m + n, out.solution.end());
            res.witness = std::move(w);
        }
        return res;
    }

    // Strict ordering. Route 1: generators only, with a non-trivial lambda.
    {
        LinearProgram lp = build(false);
        for (std::size_t j = m; j < lp.num_vars(); ++j) lp.objective[j] = 1;
        LpOutcome out = lp_solve(lp, stats);
        if (out.status == LpStatus::Unbounded) {
            std::vector<Rational> capRow(lp.num_vars(), Rational(0));
            for (std::size_t j = m; j < lp.num_vars(); ++j) capRow[j] = 1;
            lp.add_row(std::move(capRow), Rel::Le, Rational(1));
            out = lp_solve(lp, stats);
        }
        if (out.status == LpStatus::Optimal && out.value > 0) {
            res.meets = true;
            res.mu.assign(out.solution.begin(), out.solution.begin() + m);
            ConeWitness w;
            w.slack = zero_gamble(n);
            w.lambda.assign(out.solution.begin() + m, out.solution.end());
            res.witness = std::move(w);
            return res;
        }
    }
    // Route 2: strictly positive background floor.
    LinearProgram lp = build(true);
    lp.objective[m] = 1;  // maximize t
    LpOutcome out = lp_solve(lp, stats);
    if (out.status == LpStatus::Unbounded) {
        std::vector<Rational> capRow(lp.num_vars(), Rational(0));
        capRow[m] = 1;
        lp.add_row(std::move(capRow), Rel::Le, Rational(1));
        out = lp_solve(lp, stats);
    }
    if (out.status == LpStatus::Optimal && out.value > 0) {
        res.meets = true;
        res.mu.assign(out.solution.begin(), out.solution.begin() + m);
        ConeWitness w;
        Rational t = out.solution[m];
        w.slack.coords.resize(n);
        for (std::size_t i = 0; i < n; ++i)
            w.slack.coords[i] = t + out.solution[m + 1 + i];
        w.lambda.assign(out.solution.begin() + m + 1 + n, out.solution.end());
        res.witness = std::move(w);
    }
    return res;
}

LowerPrevisionResult lower_prevision(const GambleAssessment& G, const Gamble& f,
                                     LpStats* stats) {
    require_on_space(f, G.space);
    const std::size_t n = G.space.size();
    const std::size_t k = G.gambles.size();
    // max mu  s.t.  mu + sum lambda_g g(x) <= f(x) per state; mu free
    // (split), lambda >= 0. Layout: [mu+ | mu- | lambda].
    LinearProgram lp;
    lp.objective.assign(2 + k, Rational(0));
    lp.objective[0] = 1;
    lp.objective[1] = -1;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rational> row(2 + k, Rational(0));
        row[0] = 1;
        row[1] = -1;
        for (std::size_t g = 0; g < k; ++g) row[2 + g] = G.gambles[g].coords[i];
        lp.add_row(std::move(row), Rel::Le, f.coords[i]);
    }
    LpOutcome out = lp_solve(lp, stats);
    LowerPrevisionResult res;
    if (out.status == LpStatus::Unbounded) {
        res.unbounded = true;
        return res;
    }
    res.value = out.value;
    return res;
}

bool credal_accepts(const CredalSet& M, const OptionSet& B, LpStats* stats) {
    if (B.empty()) throw EmptySetError("credal_accepts: empty option set");
    if (M.vertices.empty()) throw EmptySetError("credal_accepts: empty credal set");
    require_on_space(B, M.space);
    const std::size_t v = M.vertices.size();
    // min t  s.t.  sum_j w_j P_j(b) <= t for all b in B, w in simplex.
    // Layout: [w_1..w_v | t+ | t-], maximize -(t+ - t-).
    LinearProgram lp;
    lp.objective.assign(v + 2, Rational(0));
    lp.objective[v] = -1;
    lp.objective[v + 1] = 1;
    for (const auto& b : B.gambles) {
        std::vector<Rational> row(v + 2, Rational(0));
        for (std::size_t j = 0; j < v; ++j) row[j] = dot(M.vertices[j], b);
        row[v] = -1;
        row[v + 1] = 1;
        lp.add_row(std::move(row), Rel::Le, Rational(0));
    }
    {
        std::vector<Rational> row(v + 2, Rational(0));
        for (std::size_t j = 0; j < v; ++j) row[j] = 1;
        lp.add_row(std::move(row), Rel::Eq, Rational(1));
    }
    LpOutcome out = lp_solve(lp, stats);
    // Compact domain: the minimum is attained, strictness decidable exactly.
    return out.status == LpStatus::Optimal && out.value < 0;
}

}  // namespace dk
