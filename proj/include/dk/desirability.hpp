#pragma once

#include "dk/cone.hpp"
#include "dk/model.hpp"

namespace dk {

// A consistent finite generator set, denoting its natural extension
// D = posi(V_{>0} u generators).
class DesirabilityModel {
public:
    // Throws InconsistentAssessmentError when 0 in posi(V_{>0} u A).
    explicit DesirabilityModel(GambleAssessment generators, LpStats* stats = nullptr);

    const GambleAssessment& generators() const { return generators_; }

private:
    GambleAssessment generators_;
};

bool d_consistent(const GambleAssessment& assessment, LpStats* stats = nullptr);

// f in D. Always false for f = 0.
ConeResult d_entails(const DesirabilityModel& model, const Gamble& f,
                     LpStats* stats = nullptr);

// Walley-Sen maximality: { u in A : no v in A with v - u in D }.
// Never empty for a consistent model.
OptionSet d_maximality_choice(const DesirabilityModel& model, const OptionSet& A,
                              LpStats* stats = nullptr);

Rational lowprev_from_model(const DesirabilityModel& model, const Gamble& f,
                            LpStats* stats = nullptr);

// Membership in D_P = { u : P(u) > 0 } for P the lower envelope of conv(M),
// decided exactly by vertex enumeration.
bool strict_desirable_under_lowprev(const CredalSet& M, const Gamble& f);

// Lower-envelope value min over vertices of the expectation of f.
Rational credal_lower_expectation(const CredalSet& M, const Gamble& f);

}  // namespace dk
