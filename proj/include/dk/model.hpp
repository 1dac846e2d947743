#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dk/rational.hpp"

namespace dk {

// The finite possibility space. Atom order fixes coordinate positions.
struct SpaceSpec {
    std::vector<std::string> atoms;

    std::size_t size() const { return atoms.size(); }
    bool operator==(const SpaceSpec&) const = default;
};

// Validates non-emptiness and label uniqueness.
SpaceSpec make_space(std::vector<std::string> atoms);

// The a-priori strict vector ordering on gambles.
enum class BackgroundOrdering {
    NonNegNonZero,    // u > 0  iff  u >= 0 coordinate-wise and u != 0
    StrictlyPositive  // u > 0  iff  every coordinate > 0
};

// A gamble (option): an exact-rational coordinate vector over the space.
struct Gamble {
    std::vector<Rational> coords;

    std::size_t size() const { return coords.size(); }
    bool is_zero() const;
};

bool operator==(const Gamble& a, const Gamble& b);
bool operator!=(const Gamble& a, const Gamble& b);
// Lexicographic; fixes the canonical order used everywhere.
bool operator<(const Gamble& a, const Gamble& b);

Gamble zero_gamble(std::size_t n);
Gamble constant_gamble(const Rational& mu, std::size_t n);
Gamble gamble_add(const Gamble& u, const Gamble& v);
Gamble gamble_sub(const Gamble& u, const Gamble& v);
Gamble gamble_scale(const Rational& lambda, const Gamble& u);
Gamble gamble_neg(const Gamble& u);
Rational dot(const Gamble& u, const Gamble& v);
Rational min_coord(const Gamble& u);

// Decides u > 0 under the given background ordering.
bool dominates_background(const Gamble& u, BackgroundOrdering ordering);
// All coordinates <= 0 (membership in the non-positive orthant).
bool nonpositive(const Gamble& u);

// A finite set of gambles, deduplicated and canonically (lexicographically)
// ordered. May be empty: consistency checking must detect an empty assessed
// set.
struct OptionSet {
    std::vector<Gamble> gambles;  // sorted, unique

    std::size_t size() const { return gambles.size(); }
    bool empty() const { return gambles.empty(); }
    bool contains(const Gamble& g) const;
};

OptionSet make_option_set(std::vector<Gamble> gambles);
bool operator==(const OptionSet& a, const OptionSet& b);
bool operator<(const OptionSet& a, const OptionSet& b);
bool is_subset(const OptionSet& a, const OptionSet& b);

// Finite generator set for a set of desirable gambles D.
struct GambleAssessment {
    std::vector<Gamble> gambles;  // sorted, unique
    SpaceSpec space;
    BackgroundOrdering ordering = BackgroundOrdering::NonNegNonZero;
};

GambleAssessment make_gamble_assessment(std::vector<Gamble> gambles,
                                        SpaceSpec space,
                                        BackgroundOrdering ordering);

// A finite family of assessed option sets, canonically sorted so selection
// enumeration is deterministic.
struct OptionSetAssessment {
    std::vector<OptionSet> sets;  // sorted
    SpaceSpec space;
    BackgroundOrdering ordering = BackgroundOrdering::NonNegNonZero;
};

OptionSetAssessment make_option_set_assessment(std::vector<OptionSet> sets,
                                               SpaceSpec space,
                                               BackgroundOrdering ordering);

// Vertices of a closed convex set of linear previsions: probability mass
// vectors, normalized, non-negative, deduplicated.
struct CredalSet {
    std::vector<Gamble> vertices;  // sorted, unique
    SpaceSpec space;
};

CredalSet make_credal_set(std::vector<Gamble> vertices, SpaceSpec space);

// Throws SpaceMismatchError unless the coordinate count matches the space.
void require_on_space(const Gamble& g, const SpaceSpec& space);
void require_on_space(const OptionSet& s, const SpaceSpec& space);

}  // namespace dk
