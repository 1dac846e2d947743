#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dk/choice.hpp"
#include "dk/errors.hpp"
#include "dk/operators.hpp"
#include "fix.hpp"
#include "gen.hpp"

using namespace dk;
using fix::g;
using fix::os;

namespace {
FiniteFamily fam2(std::vector<OptionSet> sets) {
    return make_finite_family(std::move(sets), fix::space2(),
                              BackgroundOrdering::NonNegNonZero);
}
}  // namespace

TEST_CASE("translate") {
    CHECK(translate(os({g({"1", "0"})}), g({"1", "0"})) == os({g({"0", "0"})}));
    OptionSet T = os({g({"1", "-1"}), g({"-1", "1"})});
    CHECK(translate(T, g({"0", "0"})) == T);
    CHECK(translate(os({g({"2", "1"})}), g({"1", "1"})) == os({g({"1", "0"})}));
    CHECK_THROWS_AS(translate(T, g({"1"})), SpaceMismatchError);
}

TEST_CASE("k3_combine reproduces the footnote set") {
    Gamble a = g({"1", "-1"}), b = g({"-1", "1"});
    OptionSet B = os({a, b});
    // per-pair coefficients: (a,a)->(1,0), otherwise (1,1)
    auto coeffs = [&](const Gamble& u, const Gamble& v) {
        if (u == a && v == a) return std::pair<Rational, Rational>(1, 0);
        return std::pair<Rational, Rational>(1, 1);
    };
    CHECK(k3_combine(B, B, coeffs) ==
          os({a, g({"0", "0"}), g({"-2", "2"})}));  // {a, a+b, 2b}

    auto first = [](const Gamble&, const Gamble&) {
        return std::pair<Rational, Rational>(1, 0);
    };
    auto second = [](const Gamble&, const Gamble&) {
        return std::pair<Rational, Rational>(0, 1);
    };
    OptionSet C = os({g({"1", "0"}), g({"0", "1"})});
    CHECK(k3_combine(B, C, first) == B);
    CHECK(k3_combine(B, C, second) == C);
    auto bad = [](const Gamble&, const Gamble&) {
        return std::pair<Rational, Rational>(0, 0);
    };
    CHECK_THROWS_AS(k3_combine(B, C, bad), ModelError);
}

TEST_CASE("rescale") {
    OptionSet B = os({g({"1", "-1"})});
    auto unit = [](const Gamble&) { return Rational(1); };
    CHECK(rescale(B, unit) == B);
    auto twice = [](const Gamble&) { return Rational(2); };
    CHECK(rescale(B, twice) == os({g({"2", "-2"})}));
    OptionSet C = os({g({"1", "0"}), g({"0", "1"})});
    auto per = [](const Gamble& u) {
        return u.coords[0] == 1 ? Rational(1) : Rational(3);
    };
    CHECK(rescale(C, per) == os({g({"1", "0"}), g({"0", "3"})}));
    auto zero = [](const Gamble&) { return Rational(0); };
    CHECK_THROWS_AS(rescale(B, zero), ModelError);
}

TEST_CASE("rn_transform, frozen") {
    FiniteFamily K1 = fam2({os({g({"-1", "0"}), g({"1", "1"})})});
    FiniteFamily R1 = rn_transform(K1);
    CHECK(R1.sets.size() == 2);
    CHECK(su_contains(R1, os({g({"1", "1"})})));  // the trimmed set appears

    FiniteFamily K2 = fam2({os({g({"1", "1"})}), os({g({"2", "-1"})})});
    CHECK(rn_transform(K2).sets == K2.sets);  // nothing removable

    FiniteFamily K3 = fam2({os({g({"0", "0"})})});
    FiniteFamily R3 = rn_transform(K3);
    REQUIRE(R3.sets.size() == 2);
    CHECK(R3.sets[0].empty());  // the empty set joins

    CHECK_THROWS_AS(rn_transform(K1, 1), CapExceededError);
}

TEST_CASE("rn properties") {
    gen::Rng rng(41);
    for (int i = 0; i < 30; ++i) {
        std::vector<OptionSet> sets;
        std::uniform_int_distribution<int> c(0, 3);
        int k = c(rng);
        for (int j = 0; j < k; ++j) sets.push_back(gen::option_set(rng, 2, 3));
        FiniteFamily K = fam2(std::move(sets));
        FiniteFamily R = rn_transform(K);
        // K subset RN(K); RN idempotent
        for (const auto& s : K.sets) CHECK(su_contains(R, s));
        CHECK(rn_transform(R).sets == R.sets);
        // combine lemma: rs = su after rn
        for (int j = 0; j < 4; ++j) {
            OptionSet B = gen::option_set(rng, 2, 3);
            CHECK(rs_contains(K, B) == su_contains(R, B));
        }
    }
}

TEST_CASE("su and rs, frozen") {
    OptionSet B = os({g({"1", "-1"}), g({"-1", "1"})});
    FiniteFamily K = fam2({B});
    CHECK(su_contains(K, B));
    CHECK(rs_contains(K, B));
    OptionSet super = os({g({"1", "-1"}), g({"-1", "1"}), g({"3", "3"})});
    CHECK(su_contains(K, super));
    CHECK(!su_contains(K, os({g({"1", "-1"})})));
    FiniteFamily K2 = fam2({os({g({"-1", "0"}), g({"1", "1"})})});
    CHECK(rs_contains(K2, os({g({"1", "1"})})));   // (-1,0) is removable
    CHECK(!su_contains(K2, os({g({"1", "1"})})));
    CHECK(!rs_contains(K2, os({g({"2", "2"})})));  // missing the positive member
}

TEST_CASE("rp_contains, frozen") {
    FiniteFamily K = fam2({os({g({"-1", "1"}), g({"-2", "2"})})});
    CHECK(rp_contains(K, os({g({"-1", "1"})})));  // (-2,2) = 2*(-1,1)
    FiniteFamily K2 = fam2({os({g({"1", "0"}), g({"0", "1"})})});
    CHECK(!rp_contains(K2, os({g({"1", "0"})})));
    CHECK(rp_contains(K2, os({g({"1", "0"}), g({"0", "1"})})));  // B in K
}

TEST_CASE("chull and posi membership") {
    OptionSet B = os({g({"1", "0"}), g({"0", "1"})});
    CHECK(chull_contains(B, g({"1", "0"})));
    CHECK(chull_contains(B, g({"1/2", "1/2"})));
    CHECK(!chull_contains(B, g({"1", "1"})));  // coordinates sum to 2
    CHECK(posi_hull_contains(B, g({"1", "1"})));
    CHECK(posi_hull_contains(B, g({"3", "1/2"})));
    CHECK(!posi_hull_contains(B, g({"-1", "0"})));
    CHECK(!posi_hull_contains(B, g({"0", "0"})));  // no nontrivial zero combo
    OptionSet C = os({g({"1", "-1"}), g({"-1", "1"})});
    CHECK(posi_hull_contains(C, g({"0", "0"})));
}

TEST_CASE("closure predicate satisfies the coherence axioms (samples)") {
    gen::Rng rng(42);
    QueryOptions opts;
    int done = 0;
    while (done < 25) {
        auto A = gen::assessment(rng, 2, 2, 2);
        if (!k_consistent(A).answer) continue;
        ++done;
        OptionSet B = gen::option_set(rng, 2, 3);
        bool inB = k_entails(A, B).answer;

        // K0: zero-removal
        if (inB && B.contains(zero_gamble(2)) && B.size() > 1) {
            std::vector<Gamble> trimmed;
            for (const auto& u : B.gambles)
                if (!u.is_zero()) trimmed.push_back(u);
            CHECK(k_entails(A, make_option_set(std::move(trimmed))).answer);
        }
        // K1: {0} never entailed
        CHECK(!k_entails(A, os({g({"0", "0"})})).answer);
        // K2: background positives entailed as singletons
        CHECK(k_entails(A, os({g({"1/2", "0"})})).answer);
        CHECK(k_entails(A, os({g({"1", "2"})})).answer);
        // K3: positive combinations of entailed sets stay entailed
        OptionSet C = gen::option_set(rng, 2, 3);
        if (inB && k_entails(A, C).answer) {
            auto coeffs = [&rng](const Gamble&, const Gamble&) {
                std::uniform_int_distribution<int> c(0, 2);
                int lam = c(rng), mu = c(rng);
                if (lam == 0 && mu == 0) lam = 1;
                return std::pair<Rational, Rational>(lam, mu);
            };
            OptionSet comb = k3_combine(B, C, coeffs);
            if (!comb.contains(zero_gamble(2)) || comb.size() > 1)
                CHECK(k_entails(A, comb).answer);
        }
        // K4: supersets of entailed sets are entailed
        if (inB) {
            std::vector<Gamble> wide = B.gambles;
            wide.push_back(gen::gamble(rng, 2));
            CHECK(k_entails(A, make_option_set(std::move(wide))).answer);
        }
    }
}

TEST_CASE("Aizermann property (samples)") {
    gen::Rng rng(43);
    int done = 0;
    while (done < 20) {
        auto A = gen::assessment(rng, 2, 2, 2);
        if (!k_consistent(A).answer) continue;
        OptionSet B = gen::option_set(rng, 2, 3, false);
        if (B.size() < 2 || !k_entails(A, B).answer) continue;
        ++done;
        for (const auto& u : B.gambles) {
            // B - u always contains 0, which never witnesses anything
            if (!k_entails(A, translate(B, u)).answer) continue;
            std::vector<Gamble> rest;
            for (const auto& v : B.gambles)
                if (v != u) rest.push_back(v);
            CHECK(k_entails(A, make_option_set(std::move(rest))).answer);
        }
    }
}
