#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dk/cone.hpp"
#include "dk/model.hpp"

namespace dk {

// One pick per assessed option set (an element of Phi_A), as indices into the
// canonical order of each set.
using Selection = std::vector<std::size_t>;

struct QueryOptions {
    std::uint64_t selection_cap = 1'000'000;
    int threads = 1;
    LpStats* stats = nullptr;
};

// Product of the assessed set sizes; throws CapExceededError past the cap and
// EmptySetError when some assessed set is empty.
std::uint64_t selection_count(const OptionSetAssessment& A, std::uint64_t cap);

// Mixed-radix decode of the k-th selection in lexicographic order.
Selection decode_selection(const OptionSetAssessment& A, std::uint64_t index);

// The image phi(A) of a selection, as a generator set.
GambleAssessment selection_image(const OptionSetAssessment& A, const Selection& phi);

// Per-branch evidence. For an accepting branch: the index of the witnessing
// element of B and its conic coefficients. A vacuous branch carries the
// inconsistency witness (0 in posi) of its own generators instead.
struct BranchWitness {
    Selection selection;
    bool vacuous = false;
    std::size_t witness_index = 0;  // into B, when !vacuous
    ConeWitness witness;
    std::vector<Rational> mu;  // mixing queries only: convex weights over B
};

struct Certificate {
    enum class Kind { Entailed, NotEntailed, Consistent, Inconsistent };

    Kind kind = Kind::Consistent;
    std::vector<BranchWitness> branches;  // Entailed; Inconsistent (all branches)
    Selection selection;                  // NotEntailed failing phi / Consistent phi
    std::optional<GambleAssessment> separators;      // NotEntailed: phi(A)
    std::optional<std::size_t> empty_set_index;      // Inconsistent via {} in A
};

struct Verdict {
    bool answer = false;
    Certificate certificate;
};

// Consistency of an option-set assessment: false when {} in A, otherwise true
// iff some selection image is a consistent gamble assessment.
Verdict k_consistent(const OptionSetAssessment& A, const QueryOptions& opts = {});

// Natural-extension entailment B in cl(A): every consistent selection branch
// contains some b in B inside its cone; inconsistent branches pass vacuously.
// Throws InconsistentAssessmentError / EmptySetError on bad preconditions.
Verdict k_entails(const OptionSetAssessment& A, const OptionSet& B,
                  const QueryOptions& opts = {});

// Mixing (convex) entailment B in RP(cl(A)): posi(B) must meet every
// consistent branch cone.
Verdict k_entails_mixing(const OptionSetAssessment& A, const OptionSet& B,
                         const QueryOptions& opts = {});

// R(S) = { u in S : (S \ {u}) - u in cl(A) } (zero image dropped first).
OptionSet reject_set(const OptionSetAssessment& A, const OptionSet& S, bool mixing,
                     const QueryOptions& opts = {});
OptionSet choice_set(const OptionSetAssessment& A, const OptionSet& S, bool mixing,
                     const QueryOptions& opts = {});

// u chosen iff some P in conv(M) has P(v - u) <= 0 for all v in S.
OptionSet e_admissible_choice(const CredalSet& M, const OptionSet& S,
                              LpStats* stats = nullptr);

struct ArchMargin {
    bool unbounded = false;
    Rational value;        // supremum eps with B - eps in cl(A)
    bool attained = false; // whether B - value is itself entailed
};

// Largest eps >= 0 with B - eps*1 in cl(A); Archimedean entailment holds iff
// the supremum is > 0. Throws NotEntailedError when B is not entailed.
ArchMargin arch_margin(const OptionSetAssessment& A, const OptionSet& B,
                       const QueryOptions& opts = {});

// {u, -u} in cl(A). Throws EmptySetError for u = 0.
Verdict totality_query(const OptionSetAssessment& A, const Gamble& u,
                       const QueryOptions& opts = {});

// Independent certificate re-validation using only cone-engine primitives.
// B is the queried set (ignored for consistency certificates).
bool verify_certificate(const OptionSetAssessment& A, const OptionSet& B,
                        const Certificate& cert, bool mixing = false,
                        const QueryOptions& opts = {});

}  // namespace dk
