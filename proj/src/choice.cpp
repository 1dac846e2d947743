#include "dk/choice.hpp"

#include <algorithm>
#include <thread>

#include "dk/errors.hpp"
#include "dk/operators.hpp"

namespace dk {

std::uint64_t selection_count(const OptionSetAssessment& A, std::uint64_t cap) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < A.sets.size(); ++i) {
        const auto& s = A.sets[i];
        if (s.empty())
            throw EmptySetError("assessed option set " + std::to_string(i) +
                                " is empty");
        if (count > cap / s.size())
            throw CapExceededError("selection count exceeds cap of " +
                                   std::to_string(cap));
        count *= s.size();
    }
    return count;
}

Selection decode_selection(const OptionSetAssessment& A, std::uint64_t index) {
    Selection phi(A.sets.size());
    for (std::size_t i = A.sets.size(); i-- > 0;) {
        std::uint64_t radix = A.sets[i].size();
        phi[i] = static_cast<std::size_t>(index % radix);
        index /= radix;
    }
    return phi;
}

GambleAssessment selection_image(const OptionSetAssessment& A, const Selection& phi) {
    std::vector<Gamble> picks;
    picks.reserve(phi.size());
    for (std::size_t i = 0; i < phi.size(); ++i)
        picks.push_back(A.sets[i].gambles.at(phi[i]));
    return make_gamble_assessment(std::move(picks), A.space, A.ordering);
}

namespace {

// Evaluates fn(i) for every selection index; per-thread LP stats are merged
// in index order so counters stay deterministic across thread counts.
void for_each_selection(std::uint64_t count, const QueryOptions& opts,
                        const std::function<void(std::uint64_t, LpStats&)>& fn) {
    int threads = std::max(1, opts.threads);
    if (threads == 1 || count < 2) {
        LpStats local;
        for (std::uint64_t i = 0; i < count; ++i) fn(i, local);
        if (opts.stats) {
            opts.stats->lp_calls += local.lp_calls;
            opts.stats->pivots += local.pivots;
        }
        return;
    }
    std::uint64_t nchunks = std::min<std::uint64_t>(threads, count);
    std::vector<LpStats> stats(nchunks);
    std::vector<std::thread> pool;
    for (std::uint64_t c = 0; c < nchunks; ++c) {
        std::uint64_t lo = count * c / nchunks;
        std::uint64_t hi = count * (c + 1) / nchunks;
        pool.emplace_back([&, lo, hi, c] {
            for (std::uint64_t i = lo; i < hi; ++i) fn(i, stats[c]);
        });
    }
    for (auto& t : pool) t.join();
    if (opts.stats)
        for (const auto& s : stats) {
            opts.stats->lp_calls += s.lp_calls;
            opts.stats->pivots += s.pivots;
        }
}

struct BranchOutcome {
    bool pass = false;
    BranchWitness witness;
};

// Every selection branch is evaluated in full (no early exit) so that results
// and counters do not depend on scheduling.
template <typename BranchFn>
Verdict entailment_scan(const OptionSetAssessment& A, const QueryOptions& opts,
                        BranchFn&& branch) {
    std::uint64_t count = selection_count(A, opts.selection_cap);
    std::vector<BranchOutcome> results(count);
    for_each_selection(count, opts, [&](std::uint64_t i, LpStats& stats) {
        results[i] = branch(decode_selection(A, i), stats);
    });
    Verdict v;
    for (std::uint64_t i = 0; i < count; ++i) {
        if (!results[i].pass) {
            v.answer = false;
            v.certificate.kind = Certificate::Kind::NotEntailed;
            v.certificate.selection = decode_selection(A, i);
            v.certificate.separators = selection_image(A, v.certificate.selection);
            return v;
        }
    }
    v.answer = true;
    v.certificate.kind = Certificate::Kind::Entailed;
    v.certificate.branches.reserve(count);
    for (auto& r : results) v.certificate.branches.push_back(std::move(r.witness));
    return v;
}

void require_consistent(const OptionSetAssessment& A, const QueryOptions& opts) {
    if (!k_consistent(A, opts).answer)
        throw InconsistentAssessmentError("option-set assessment is inconsistent");
}

void require_probe(const OptionSet& B, const SpaceSpec& space) {
    if (B.empty()) throw EmptySetError("queried option set is empty");
    require_on_space(B, space);
}

Verdict k_entails_impl(const OptionSetAssessment& A, const OptionSet& B,
                       const QueryOptions& opts) {
    return entailment_scan(A, opts, [&](Selection phi, LpStats& stats) {
        GambleAssessment gens = selection_image(A, phi);
        BranchOutcome out;
        out.witness.selection = phi;
        auto zero = cone_contains(gens, zero_gamble(A.space.size()), &stats);
        if (zero.member) {  // inconsistent branch passes vacuously
            out.pass = true;
            out.witness.vacuous = true;
            out.witness.witness = *zero.witness;
            return out;
        }
        for (std::size_t b = 0; b < B.size(); ++b) {
            auto hit = cone_contains(gens, B.gambles[b], &stats);
            if (hit.member) {
                out.pass = true;
                out.witness.witness_index = b;
                out.witness.witness = *hit.witness;
                return out;
            }
        }
        return out;
    });
}

Verdict k_entails_mixing_impl(const OptionSetAssessment& A, const OptionSet& B,
                              const QueryOptions& opts) {
    return entailment_scan(A, opts, [&](Selection phi, LpStats& stats) {
        GambleAssessment gens = selection_image(A, phi);
        BranchOutcome out;
        out.witness.selection = phi;
        auto zero = cone_contains(gens, zero_gamble(A.space.size()), &stats);
        if (zero.member) {
            out.pass = true;
            out.witness.vacuous = true;
            out.witness.witness = *zero.witness;
            return out;
        }
        auto meet = posi_meets_cone(B, gens, &stats);
        if (meet.meets) {
            out.pass = true;
            out.witness.mu = meet.mu;
            out.witness.witness = *meet.witness;
        }
        return out;
    });
}

}  // namespace

Verdict k_consistent(const OptionSetAssessment& A, const QueryOptions& opts) {
    Verdict v;
    for (std::size_t i = 0; i < A.sets.size(); ++i) {
        if (A.sets[i].empty()) {
            v.answer = false;
            v.certificate.kind = Certificate::Kind::Inconsistent;
            v.certificate.empty_set_index = i;
            return v;
        }
    }
    std::uint64_t count = selection_count(A, opts.selection_cap);
    struct Row {
        bool consistent = false;
        ConeWitness zero_witness;
    };
    std::vector<Row> rows(count);
    for_each_selection(count, opts, [&](std::uint64_t i, LpStats& stats) {
        GambleAssessment gens = selection_image(A, decode_selection(A, i));
        auto zero = cone_contains(gens, zero_gamble(A.space.size()), &stats);
        rows[i].consistent = !zero.member;
        if (zero.member) rows[i].zero_witness = *zero.witness;
    });
    for (std::uint64_t i = 0; i < count; ++i) {
        if (rows[i].consistent) {
            v.answer = true;
            v.certificate.kind = Certificate::Kind::Consistent;
            v.certificate.selection = decode_selection(A, i);
            return v;
        }
    }
    v.answer = false;
    v.certificate.kind = Certificate::Kind::Inconsistent;
    for (std::uint64_t i = 0; i < count; ++i) {
        BranchWitness bw;
        bw.selection = decode_selection(A, i);
        bw.vacuous = true;
        bw.witness = std::move(rows[i].zero_witness);
        v.certificate.branches.push_back(std::move(bw));
    }
    return v;
}

Verdict k_entails(const OptionSetAssessment& A, const OptionSet& B,
                  const QueryOptions& opts) {
    require_probe(B, A.space);
    require_consistent(A, opts);
    return k_entails_impl(A, B, opts);
}

Verdict k_entails_mixing(const OptionSetAssessment& A, const OptionSet& B,
                         const QueryOptions& opts) {
    require_probe(B, A.space);
    require_consistent(A, opts);
    return k_entails_mixing_impl(A, B, opts);
}

OptionSet reject_set(const OptionSetAssessment& A, const OptionSet& S, bool mixing,
                     const QueryOptions& opts) {
    require_probe(S, A.space);
    require_consistent(A, opts);
    std::vector<Gamble> rejected;
    for (const auto& u : S.gambles) {
        // T = (S \ {u}) - u; the zero image of u is dropped up front.
        std::vector<Gamble> shifted;
        for (const auto& v : S.gambles) {
            if (v == u) continue;
            Gamble w = gamble_sub(v, u);
            if (!w.is_zero()) shifted.push_back(std::move(w));
        }
        if (shifted.empty()) continue;  // R({u}) is empty
        OptionSet T = make_option_set(std::move(shifted));
        Verdict v = mixing ? k_entails_mixing_impl(A, T, opts)
                           : k_entails_impl(A, T, opts);
        if (v.answer) rejected.push_back(u);
    }
    return make_option_set(std::move(rejected));
}

OptionSet choice_set(const OptionSetAssessment& A, const OptionSet& S, bool mixing,
                     const QueryOptions& opts) {
    OptionSet r = reject_set(A, S, mixing, opts);
    std::vector<Gamble> kept;
    for (const auto& u : S.gambles)
        if (!r.contains(u)) kept.push_back(u);
    return make_option_set(std::move(kept));
}

OptionSet e_admissible_choice(const CredalSet& M, const OptionSet& S, LpStats* stats) {
    if (S.empty()) throw EmptySetError("e_admissible_choice: empty option set");
    if (M.vertices.empty()) throw EmptySetError("e_admissible_choice: empty credal set");
    require_on_space(S, M.space);
    const std::size_t nv = M.vertices.size();
    std::vector<Gamble> chosen;
    for (const auto& u : S.gambles) {
        // Feasibility: some P in conv(M) with P(v - u) <= 0 for all v in S.
        LinearProgram lp;
        lp.objective.assign(nv, Rational(0));
        for (const auto& v : S.gambles) {
            if (v == u) continue;
            Gamble diff = gamble_sub(v, u);
            std::vector<Rational> row(nv);
            for (std::size_t j = 0; j < nv; ++j) row[j] = dot(M.vertices[j], diff);
            lp.add_row(std::move(row), LinearProgram::Rel::Le, Rational(0));
        }
        lp.add_row(std::vector<Rational>(nv, Rational(1)), LinearProgram::Rel::Eq,
                   Rational(1));
        if (lp_solve(lp, stats).status == LpStatus::Optimal) chosen.push_back(u);
    }
    return make_option_set(std::move(chosen));
}

ArchMargin arch_margin(const OptionSetAssessment& A, const OptionSet& B,
                       const QueryOptions& opts) {
    require_probe(B, A.space);
    require_consistent(A, opts);
    if (!k_entails_impl(A, B, opts).answer)
        throw NotEntailedError("arch_margin: option set is not entailed");

    const std::size_t n = A.space.size();
    std::uint64_t count = selection_count(A, opts.selection_cap);
    ArchMargin margin;
    bool first = true;
    LpStats local;
    for (std::uint64_t i = 0; i < count; ++i) {
        GambleAssessment gens = selection_image(A, decode_selection(A, i));
        if (!cone_consistent(gens, &local)) continue;  // vacuous branch
        // Per branch: the best uniform shift over the elements of B.
        bool branch_unbounded = false;
        bool have = false;
        Rational best;
        for (const auto& b : B.gambles) {
            // max eps >= 0  s.t.  b - eps*1 - sum lambda_g g >= 0.
            const std::size_t k = gens.gambles.size();
            LinearProgram lp;
            lp.objective.assign(1 + k, Rational(0));
            lp.objective[0] = 1;
            for (std::size_t x = 0; x < n; ++x) {
                std::vector<Rational> row(1 + k, Rational(0));
                row[0] = 1;
                for (std::size_t g = 0; g < k; ++g) row[1 + g] = gens.gambles[g].coords[x];
                lp.add_row(std::move(row), LinearProgram::Rel::Le, b.coords[x]);
            }
            LpOutcome out = lp_solve(lp, &local);
            if (out.status == LpStatus::Unbounded) {
                branch_unbounded = true;
                break;
            }
            if (out.status != LpStatus::Optimal) continue;  // eps = 0 infeasible
            if (!have || out.value > best) {
                best = out.value;
                have = true;
            }
        }
        if (branch_unbounded) continue;  // this branch never binds the minimum
        // Entailment guarantees some b admits eps = 0 on a consistent branch.
        if (first || best < margin.value) {
            margin.value = best;
            first = false;
        }
    }
    if (opts.stats) {
        opts.stats->lp_calls += local.lp_calls;
        opts.stats->pivots += local.pivots;
    }
    if (first) {
        margin.unbounded = true;  // every branch unbounded
        return margin;
    }
    // Attainment: is B - margin itself entailed (the supremum is half-open in
    // general)?
    std::vector<Gamble> shifted;
    for (const auto& b : B.gambles) {
        Gamble s = gamble_sub(b, constant_gamble(margin.value, n));
        if (!s.is_zero()) shifted.push_back(std::move(s));
    }
    margin.attained =
        !shifted.empty() &&
        k_entails_impl(A, make_option_set(std::move(shifted)), opts).answer;
    return margin;
}

Verdict totality_query(const OptionSetAssessment& A, const Gamble& u,
                       const QueryOptions& opts) {
    require_on_space(u, A.space);
    if (u.is_zero()) throw EmptySetError("totality_query: zero gamble");
    return k_entails(A, make_option_set({u, gamble_neg(u)}), opts);
}

bool verify_certificate(const OptionSetAssessment& A, const OptionSet& B,
                        const Certificate& cert, bool mixing,
                        const QueryOptions& opts) {
    LpStats* stats = opts.stats;
    switch (cert.kind) {
        case Certificate::Kind::Consistent: {
            if (cert.selection.size() != A.sets.size()) return false;
            for (std::size_t i = 0; i < cert.selection.size(); ++i)
                if (cert.selection[i] >= A.sets[i].size()) return false;
            return cone_consistent(selection_image(A, cert.selection), stats);
        }
        case Certificate::Kind::Inconsistent: {
            if (cert.empty_set_index) {
                return *cert.empty_set_index < A.sets.size() &&
                       A.sets[*cert.empty_set_index].empty();
            }
            // Every selection must appear with a valid 0-in-posi witness.
            std::uint64_t count = selection_count(A, opts.selection_cap);
            if (cert.branches.size() != count) return false;
            for (std::uint64_t i = 0; i < count; ++i) {
                const auto& bw = cert.branches[i];
                if (bw.selection != decode_selection(A, i)) return false;
                GambleAssessment gens = selection_image(A, bw.selection);
                if (!verify_witness(gens, zero_gamble(A.space.size()), bw.witness))
                    return false;
            }
            return true;
        }
        case Certificate::Kind::NotEntailed: {
            // The separating cone D_phi = posi(V_{>0} u phi(A)) must accept
            // every assessed set and refuse every element of B.
            if (cert.selection.size() != A.sets.size()) return false;
            for (std::size_t i = 0; i < cert.selection.size(); ++i)
                if (cert.selection[i] >= A.sets[i].size()) return false;
            GambleAssessment gens = selection_image(A, cert.selection);
            if (!cone_consistent(gens, stats)) return false;
            for (const auto& assessed : A.sets) {
                bool met = false;
                for (const auto& a : assessed.gambles)
                    if (cone_contains(gens, a, stats).member) {
                        met = true;
                        break;
                    }
                if (!met) return false;
            }
            if (!mixing) {
                for (const auto& b : B.gambles)
                    if (cone_contains(gens, b, stats).member) return false;
            } else {
                if (posi_meets_cone(B, gens, stats).meets) return false;
            }
            return true;
        }
        case Certificate::Kind::Entailed: {
            std::uint64_t count = selection_count(A, opts.selection_cap);
            if (cert.branches.size() != count) return false;
            for (std::uint64_t i = 0; i < count; ++i) {
                const auto& bw = cert.branches[i];
                if (bw.selection != decode_selection(A, i)) return false;
                GambleAssessment gens = selection_image(A, bw.selection);
                if (bw.vacuous) {
                    if (!verify_witness(gens, zero_gamble(A.space.size()), bw.witness))
                        return false;
                    continue;
                }
                if (!mixing) {
                    if (bw.witness_index >= B.size()) return false;
                    if (!verify_witness(gens, B.gambles[bw.witness_index], bw.witness))
                        return false;
                } else {
                    // The common element sum mu_b b must be a convex mix of B
                    // and carry a valid cone decomposition.
                    if (bw.mu.size() != B.size()) return false;
                    Rational total(0);
                    Gamble mix = zero_gamble(A.space.size());
                    for (std::size_t b = 0; b < B.size(); ++b) {
                        if (bw.mu[b] < 0) return false;
                        total += bw.mu[b];
                        if (bw.mu[b] != 0)
                            mix = gamble_add(mix, gamble_scale(bw.mu[b], B.gambles[b]));
                    }
                    if (total != 1) return false;
                    if (!verify_witness(gens, mix, bw.witness)) return false;
                }
            }
            return true;
        }
    }
    return false;
}

}  // namespace dk
