#pragma once

#include <optional>
#include <vector>

#include "dk/lp.hpp"
#include "dk/model.hpp"

namespace dk {

// Conic coefficients witnessing membership of a target in
// posi(V_{>0} u G):  target = slack + sum_g lambda_g * g, all signs exact.
struct ConeWitness {
    std::vector<Rational> lambda;  // one coefficient per generator, canonical order
    Gamble slack;                  // the background-cone part, coords >= 0
};

struct ConeResult {
    bool member = false;
    std::optional<ConeWitness> witness;  // present when member
};

// Decides f in posi(V_{>0} u G). For f = 0 the combination is required to be
// non-trivial via a sum-to-one normalization.
ConeResult cone_contains(const GambleAssessment& generators, const Gamble& f,
                         LpStats* stats = nullptr);

// 0 not in posi(V_{>0} u G).
bool cone_consistent(const GambleAssessment& generators, LpStats* stats = nullptr);

// Exact re-verification of a witness, independent of the solver path.
bool verify_witness(const GambleAssessment& generators, const Gamble& f,
                    const ConeWitness& w);

struct PosiMeetResult {
    bool meets = false;
    std::vector<Rational> mu;            // convex weights over B, when meets
    std::optional<ConeWitness> witness;  // cone side of the common element
};

// Decides posi(B) n posi(V_{>0} u G) != {} -- the mixing-query kernel.
// Precondition: B non-empty, generators consistent.
PosiMeetResult posi_meets_cone(const OptionSet& B, const GambleAssessment& generators,
                               LpStats* stats = nullptr);

struct LowerPrevisionResult {
    bool unbounded = false;  // inconsistent generators
    Rational value;
};

// Natural-extension lower prevision P(f) = sup{ mu : f - mu in D } via the
// closed LP relaxation (suprema agree).
LowerPrevisionResult lower_prevision(const GambleAssessment& generators,
                                     const Gamble& f, LpStats* stats = nullptr);

// Decides B in K_M: every P in conv(M) has some b in B with P(b) > 0.
bool credal_accepts(const CredalSet& M, const OptionSet& B, LpStats* stats = nullptr);

}  // namespace dk
