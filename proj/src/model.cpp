#include "dk/model.hpp"

#include <algorithm>
#include <set>

#include "dk/errors.hpp"

namespace dk {

SpaceSpec make_space(std::vector<std::string> atoms) {
    if (atoms.empty()) throw ModelError("space", "possibility space is empty");
    std::set<std::string> seen;
    for (const auto& a : atoms)
        if (!seen.insert(a).second)
            throw ModelError("space", "duplicate atom '" + a + "'");
    return SpaceSpec{std::move(atoms)};
}

bool Gamble::is_zero() const {
    for (const auto& c : coords)
        if (c != 0) return false;
    return true;
}

bool operator==(const Gamble& a, const Gamble& b) { return a.coords == b.coords; }
bool operator!=(const Gamble& a, const Gamble& b) { return !(a == b); }

bool operator<(const Gamble& a, const Gamble& b) {
    if (a.coords.size() != b.coords.size()) return a.coords.size() < b.coords.size();
    for (std::size_t i = 0; i < a.coords.size(); ++i) {
        int c = cmp(a.coords[i], b.coords[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

Gamble zero_gamble(std::size_t n) { return Gamble{std::vector<Rational>(n, Rational(0))}; }

Gamble constant_gamble(const Rational& mu, std::size_t n) {
    return Gamble{std::vector<Rational>(n, mu)};
}

namespace {
void require_same_length(const Gamble& u, const Gamble& v) {
    if (u.size() != v.size())
        throw SpaceMismatchError("gambles live on different spaces");
}
}  // namespace

Gamble gamble_add(const Gamble& u, const Gamble& v) {
    require_same_length(u, v);
    Gamble r = u;
    for (std::size_t i = 0; i < r.size(); ++i) r.coords[i] += v.coords[i];
    return r;
}

Gamble gamble_sub(const Gamble& u, const Gamble& v) {
    require_same_length(u, v);
    Gamble r = u;
    for (std::size_t i = 0; i < r.size(); ++i) r.coords[i] -= v.coords[i];
    return r;
}

Gamble gamble_scale(const Rational& lambda, const Gamble& u) {
    Gamble r = u;
    for (auto& c : r.coords) c *= lambda;
    return r;
}

Gamble gamble_neg(const Gamble& u) { return gamble_scale(Rational(-1), u); }

Rational dot(const Gamble& u, const Gamble& v) {
    require_same_length(u, v);
    Rational s(0);
    for (std::size_t i = 0; i < u.size(); ++i) s += u.coords[i] * v.coords[i];
    return s;
}

Rational min_coord(const Gamble& u) {
    Rational m = u.coords.at(0);
    for (const auto& c : u.coords)
        if (c < m) m = c;
    return m;
}

bool dominates_background(const Gamble& u, BackgroundOrdering ordering) {
    if (ordering == BackgroundOrdering::StrictlyPositive) {
        for (const auto& c : u.coords)
            if (c <= 0) return false;
        return !u.coords.empty();
    }
    bool nonzero = false;
    for (const auto& c : u.coords) {
        if (c < 0) return false;
        if (c > 0) nonzero = true;
    }
    return nonzero;
}

bool nonpositive(const Gamble& u) {
    for (const auto& c : u.coords)
        if (c > 0) return false;
    return true;
}

bool OptionSet::contains(const Gamble& g) const {
    return std::binary_search(gambles.begin(), gambles.end(), g);
}

OptionSet make_option_set(std::vector<Gamble> gambles) {
    std::sort(gambles.begin(), gambles.end());
    gambles.erase(std::unique(gambles.begin(), gambles.end()), gambles.end());
    return OptionSet{std::move(gambles)};
}

bool operator==(const OptionSet& a, const OptionSet& b) { return a.gambles == b.gambles; }

bool operator<(const OptionSet& a, const OptionSet& b) {
    return std::lexicographical_compare(a.gambles.begin(), a.gambles.end(),
                                        b.gambles.begin(), b.gambles.end());
}

bool is_subset(const OptionSet& a, const OptionSet& b) {
    return std::includes(b.gambles.begin(), b.gambles.end(), a.gambles.begin(),
                         a.gambles.end());
}

void require_on_space(const Gamble& g, const SpaceSpec& space) {
    if (g.size() != space.size())
        throw SpaceMismatchError("gamble has " + std::to_string(g.size()) +
                                 " coordinates, space has " +
                                 std::to_string(space.size()));
}

void require_on_space(const OptionSet& s, const SpaceSpec& space) {
    for (const auto& g : s.gambles) require_on_space(g, space);
}

GambleAssessment make_gamble_assessment(std::vector<Gamble> gambles, SpaceSpec space,
                                        BackgroundOrdering ordering) {
    for (const auto& g : gambles) require_on_space(g, space);
    std::sort(gambles.begin(), gambles.end());
    gambles.erase(std::unique(gambles.begin(), gambles.end()), gambles.end());
    return GambleAssessment{std::move(gambles), std::move(space), ordering};
}

OptionSetAssessment make_option_set_assessment(std::vector<OptionSet> sets,
                                               SpaceSpec space,
                                               BackgroundOrdering ordering) {
    for (const auto& s : sets) require_on_space(s, space);
    std::sort(sets.begin(), sets.end());
    return OptionSetAssessment{std::move(sets), std::move(space), ordering};
}

CredalSet make_credal_set(std::vector<Gamble> vertices, SpaceSpec space) {
    if (vertices.empty()) throw ModelError("credal", "credal set has no vertices");
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const auto& v = vertices[i];
        require_on_space(v, space);
        Rational total(0);
        for (const auto& c : v.coords) {
            if (c < 0)
                throw ModelError("credal[" + std::to_string(i) + "]",
                                 "vertex has a negative coordinate");
            total += c;
        }
        if (total != 1)
            throw ModelError("credal[" + std::to_string(i) + "]",
                             "vertex not normalized");
    }
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    return CredalSet{std::move(vertices), std::move(space)};
}

}  // namespace dk
