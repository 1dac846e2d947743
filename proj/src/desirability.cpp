#include "dk/desirability.hpp"

#include "dk/errors.hpp"

namespace dk {

DesirabilityModel::DesirabilityModel(GambleAssessment generators, LpStats* stats)
    : generators_(std::move(generators)) {
    if (!cone_consistent(generators_, stats))
        throw InconsistentAssessmentError(
            "gamble assessment is inconsistent: 0 lies in the generated cone");
}

bool d_consistent(const GambleAssessment& assessment, LpStats* stats) {
    return cone_consistent(assessment, stats);
}

ConeResult d_entails(const DesirabilityModel& model, const Gamble& f, LpStats* stats) {
    require_on_space(f, model.generators().space);
    if (f.is_zero()) return {};  // 0 is never desirable
    return cone_contains(model.generators(), f, stats);
}

OptionSet d_maximality_choice(const DesirabilityModel& model, const OptionSet& A,
                              LpStats* stats) {
    if (A.empty()) throw EmptySetError("d_maximality_choice: empty option set");
    std::vector<Gamble> chosen;
    for (const auto& u : A.gambles) {
        bool dominated = false;
        for (const auto& v : A.gambles) {
            if (v == u) continue;
            if (d_entails(model, gamble_sub(v, u), stats).member) {
                dominated = true;
                break;
            }
        }
        if (!dominated) chosen.push_back(u);
    }
    return make_option_set(std::move(chosen));
}

Rational lowprev_from_model(const DesirabilityModel& model, const Gamble& f,
                            LpStats* stats) {
    auto res = lower_prevision(model.generators(), f, stats);
    // Finite by consistency of the model.
    return res.value;
}

Rational credal_lower_expectation(const CredalSet& M, const Gamble& f) {
    require_on_space(f, M.space);
    Rational best = dot(M.vertices.at(0), f);
    for (const auto& v : M.vertices) {
        Rational e = dot(v, f);
        if (e < best) best = e;
    }
    return best;
}

bool strict_desirable_under_lowprev(const CredalSet& M, const Gamble& f) {
    if (M.vertices.empty()) throw EmptySetError("empty credal set");
    // The minimum of a linear functional over a polytope sits at a vertex.
    return credal_lower_expectation(M, f) > 0;
}

}  // namespace dk
