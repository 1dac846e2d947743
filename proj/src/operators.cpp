#include "dk/operators.hpp"

#include <algorithm>

#include "dk/cone.hpp"
#include "dk/errors.hpp"

namespace dk {

FiniteFamily make_finite_family(std::vector<OptionSet> sets, SpaceSpec space,
                                BackgroundOrdering ordering) {
    for (const auto& s : sets) require_on_space(s, space);
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    return FiniteFamily{std::move(sets), std::move(space), ordering};
}

OptionSet translate(const OptionSet& B, const Gamble& u) {
    std::vector<Gamble> out;
    out.reserve(B.size());
    for (const auto& v : B.gambles) out.push_back(gamble_sub(v, u));
    return make_option_set(std::move(out));
}

OptionSet k3_combine(const OptionSet& B1, const OptionSet& B2, const CoeffMap& coeffs) {
    if (B1.empty() || B2.empty()) throw EmptySetError("k3_combine: empty option set");
    std::vector<Gamble> out;
    out.reserve(B1.size() * B2.size());
    for (const auto& u : B1.gambles)
        for (const auto& v : B2.gambles) {
            auto [lambda, mu] = coeffs(u, v);
            if (lambda < 0 || mu < 0 || (lambda == 0 && mu == 0))
                throw ModelError("coeffs",
                                 "combination coefficients must be nonnegative "
                                 "with a positive sum");
            out.push_back(gamble_add(gamble_scale(lambda, u), gamble_scale(mu, v)));
        }
    return make_option_set(std::move(out));
}

OptionSet rescale(const OptionSet& B,
                  const std::function<Rational(const Gamble&)>& lambda) {
    std::vector<Gamble> out;
    out.reserve(B.size());
    for (const auto& u : B.gambles) {
        Rational l = lambda(u);
        if (l <= 0) throw ModelError("lambda", "rescaling factor must be positive");
        out.push_back(gamble_scale(l, u));
    }
    return make_option_set(std::move(out));
}

FiniteFamily rn_transform(const FiniteFamily& K, std::uint64_t cap) {
    std::vector<OptionSet> out;
    for (const auto& C : K.sets) {
        std::vector<Gamble> keep, removable;
        for (const auto& g : C.gambles)
            (nonpositive(g) ? removable : keep).push_back(g);
        if (removable.size() >= 64 ||
            (std::uint64_t{1} << removable.size()) > cap)
            throw CapExceededError("rn_transform: too many removable elements");
        std::uint64_t subsets = std::uint64_t{1} << removable.size();
        if (out.size() + subsets > cap)
            throw CapExceededError("rn_transform: family size exceeds cap");
        for (std::uint64_t mask = 0; mask < subsets; ++mask) {
            std::vector<Gamble> b = keep;
            for (std::size_t i = 0; i < removable.size(); ++i)
                if (mask & (std::uint64_t{1} << i)) b.push_back(removable[i]);
            out.push_back(make_option_set(std::move(b)));
        }
    }
    return make_finite_family(std::move(out), K.space, K.ordering);
}

bool su_contains(const FiniteFamily& K, const OptionSet& B) {
    for (const auto& C : K.sets)
        if (is_subset(C, B)) return true;
    return false;
}

bool rs_contains(const FiniteFamily& K, const OptionSet& B) {
    for (const auto& C : K.sets) {
        bool ok = true;
        for (const auto& g : C.gambles)
            if (!nonpositive(g) && !B.contains(g)) {
                ok = false;
                break;
            }
        if (ok) return true;
    }
    return false;
}

bool rp_contains(const FiniteFamily& K, const OptionSet& B, LpStats* stats) {
    for (const auto& C : K.sets) {
        if (!is_subset(B, C)) continue;
        bool ok = true;
        for (const auto& g : C.gambles)
            if (!posi_hull_contains(B, g, stats)) {
                ok = false;
                break;
            }
        if (ok) return true;
    }
    return false;
}

namespace {

// Membership of f in the hull of B with the given row semantics: coefficients
// lambda >= 0, sum constrained to 1 (chull) or merely normalized away from the
// trivial combination (posi when f = 0).
bool hull_member(const OptionSet& B, const Gamble& f, bool convex, LpStats* stats) {
    if (B.empty()) return false;
    for (const auto& g : B.gambles)
        if (g.size() != f.size())
            throw SpaceMismatchError("gambles live on different spaces");
    const std::size_t k = B.size();
    const std::size_t n = f.size();
    LinearProgram lp;
    lp.objective.assign(k, Rational(0));
    for (std::size_t x = 0; x < n; ++x) {
        std::vector<Rational> row(k);
        for (std::size_t j = 0; j < k; ++j) row[j] = B.gambles[j].coords[x];
        lp.add_row(std::move(row), LinearProgram::Rel::Eq, f.coords[x]);
    }
    if (convex || f.is_zero())
        lp.add_row(std::vector<Rational>(k, Rational(1)), LinearProgram::Rel::Eq,
                   Rational(1));
    return lp_solve(lp, stats).status == LpStatus::Optimal;
}

}  // namespace

bool chull_contains(const OptionSet& B, const Gamble& f, LpStats* stats) {
    return hull_member(B, f, true, stats);
}

bool posi_hull_contains(const OptionSet& B, const Gamble& f, LpStats* stats) {
    return hull_member(B, f, false, stats);
}

}  // namespace dk
