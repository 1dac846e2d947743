#pragma once

#include <functional>
#include <vector>

#include "dk/lp.hpp"
#include "dk/model.hpp"

namespace dk {

// An explicitly enumerated finite family K of option sets (not a closure).
struct FiniteFamily {
    std::vector<OptionSet> sets;  // sorted, unique
    SpaceSpec space;
    BackgroundOrdering ordering = BackgroundOrdering::NonNegNonZero;
};

FiniteFamily make_finite_family(std::vector<OptionSet> sets, SpaceSpec space,
                                BackgroundOrdering ordering);

// { v - u : v in B }.
OptionSet translate(const OptionSet& B, const Gamble& u);

// Per-pair coefficients for the positive-combination axiom; each pair must
// satisfy lambda >= 0, mu >= 0, lambda + mu > 0.
using CoeffMap = std::function<std::pair<Rational, Rational>(const Gamble&, const Gamble&)>;

// { lambda_{u,v} u + mu_{u,v} v : u in B1, v in B2 }, deduplicated.
OptionSet k3_combine(const OptionSet& B1, const OptionSet& B2, const CoeffMap& coeffs);

// Element-wise positive rescaling { lambda_u * u : u in B }.
OptionSet rescale(const OptionSet& B,
                  const std::function<Rational(const Gamble&)>& lambda);

// Explicit RN: every B with C \ V_{<=0} subset B subset C for some member C,
// enumerated over subsets of C n V_{<=0}. Throws CapExceededError past the cap.
FiniteFamily rn_transform(const FiniteFamily& K, std::uint64_t cap = 100'000);

// SU: some member of K is a subset of B.
bool su_contains(const FiniteFamily& K, const OptionSet& B);

// RS: some member C of K has C \ V_{<=0} subset B.
bool rs_contains(const FiniteFamily& K, const OptionSet& B);

// RP: some member C has B subset C with every element of C in posi(B).
bool rp_contains(const FiniteFamily& K, const OptionSet& B, LpStats* stats = nullptr);

// f in chull(B): convex-combination membership.
bool chull_contains(const OptionSet& B, const Gamble& f, LpStats* stats = nullptr);

// f in posi(B) (non-trivial combination when f = 0).
bool posi_hull_contains(const OptionSet& B, const Gamble& f, LpStats* stats = nullptr);

}  // namespace dk
