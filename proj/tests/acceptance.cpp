// Acceptance gate: one line of output per criterion, process exit code equals
// the number of failed criteria.

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "dk/choice.hpp"
#include "dk/desirability.hpp"
#include "dk/errors.hpp"
#include "dk/model_io.hpp"
#include "dk/operators.hpp"
#include "fix.hpp"
#include "gen.hpp"

using namespace dk;
using fix::g;
using fix::os;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& what) {
    std::cout << "criterion " << criterion << ": " << (pass ? "PASS" : "FAIL")
              << " - " << what << std::endl;
    if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

struct CliResult {
    int exit = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    CliResult r;
    std::string cmd = std::string(DK_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    int status = pclose(p);
    r.exit = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string write_temp(const std::string& name, const std::string& text) {
    std::string path = "/tmp/dk_accept_" + name;
    std::ofstream f(path, std::ios::trunc);
    f << text;
    return path;
}

// --- criterion 1: footnote reproduction through the CLI -------------------

void criterion1() {
    auto t0 = std::chrono::steady_clock::now();
    std::string model = write_temp(
        "footnote.json",
        R"({"space":["x1","x2"],"assessment":[[["1","-1"],["-1","1"]]]})");
    CliResult r = run_cli("entail " + model +
                          R"( --set '[["1","-1"],["0","0"],["-2","2"]]')" +
                          " --certify --json");
    bool pass = r.exit == 0;
    std::size_t branches = 0;
    if (pass) {
        auto j = nlohmann::json::parse(r.out, nullptr, false);
        pass = !j.is_discarded() && j["verdict"] == true &&
               j["certificate"]["kind"] == "entailed";
        if (pass) branches = j["certificate"]["branches"].size();
        pass = pass && branches == 2;
    }
    double dt = seconds_since(t0);
    pass = pass && dt < 0.1;
    std::ostringstream ss;
    ss << "footnote set accepted with " << branches << " branches in " << dt
       << "s";
    report(1, pass, ss.str());
}

// --- criterion 2: binary collapse -----------------------------------------

void criterion2() {
    auto t0 = std::chrono::steady_clock::now();
    gen::Rng rng(1002);
    std::uniform_int_distribution<std::size_t> nx(1, 4), ng(0, 5);
    bool pass = true;
    for (int i = 0; i < 200 && pass; ++i) {
        std::size_t n = nx(rng);
        std::vector<Gamble> gs;
        std::size_t k = ng(rng);
        for (std::size_t j = 0; j < k; ++j) gs.push_back(gen::nonzero_gamble(rng, n));
        auto G = make_gamble_assessment(gs, gen::space(n),
                                        BackgroundOrdering::NonNegNonZero);
        std::vector<OptionSet> lifted;
        for (const auto& h : G.gambles) lifted.push_back(make_option_set({h}));
        auto A = make_option_set_assessment(std::move(lifted), G.space, G.ordering);
        bool kc = k_consistent(A).answer;
        if (kc != d_consistent(G)) {
            pass = false;
            break;
        }
        if (!kc) continue;
        DesirabilityModel m(G);
        for (int p = 0; p < 10; ++p) {
            Gamble f = gen::nonzero_gamble(rng, n);
            if (k_entails(A, make_option_set({f})).answer != d_entails(m, f).member) {
                pass = false;
                break;
            }
        }
    }
    double dt = seconds_since(t0);
    pass = pass && dt < 30;
    std::ostringstream ss;
    ss << "200 singleton lifts agree with the binary model in " << dt << "s";
    report(2, pass, ss.str());
}

// --- criterion 3: certificate soundness -----------------------------------

void criterion3() {
    auto t0 = std::chrono::steady_clock::now();
    gen::Rng rng(1003);
    bool pass = true;
    int done = 0;
    while (done < 100 && pass) {
        auto A = gen::assessment(rng, 3, 3, 3);
        Verdict kc = k_consistent(A);
        if (!verify_certificate(A, OptionSet{}, kc.certificate)) {
            pass = false;
            break;
        }
        if (!kc.answer) continue;
        ++done;
        for (int p = 0; p < 5 && pass; ++p) {
            OptionSet B = gen::option_set(rng, 3, 3, false);
            Verdict v = k_entails(A, B);
            if (!verify_certificate(A, B, v.certificate)) pass = false;
        }
    }
    double dt = seconds_since(t0);
    pass = pass && dt < 60;
    std::ostringstream ss;
    ss << "all certificates over 100 assessments re-verify in " << dt << "s";
    report(3, pass, ss.str());
}

// --- criterion 4: coherence axioms + Aizermann ----------------------------

void criterion4() {
    gen::Rng rng(1004);
    int k0 = 0, k1 = 0, k2 = 0, k3 = 0, k4 = 0, ka = 0;
    bool pass = true;

    auto consistent_assessment = [&rng]() {
        for (;;) {
            auto A = gen::assessment(rng, 2, 2, 2);
            if (k_consistent(A).answer) return A;
        }
    };

    while (pass && (k0 < 500 || k1 < 500 || k2 < 500 || k3 < 500 || k4 < 500)) {
        auto A = consistent_assessment();
        OptionSet B = gen::option_set(rng, 2, 3);
        bool inB = k_entails(A, B).answer;

        if (k1 < 500) {
            ++k1;
            if (k_entails(A, os({g({"0", "0"})})).answer) pass = false;
        }
        if (k2 < 500) {
            ++k2;
            Gamble u = gen::gamble(rng, 2);
            if (dominates_background(u, A.ordering) &&
                !k_entails(A, make_option_set({u})).answer)
                pass = false;
            if (!k_entails(A, os({g({"1/2", "1/3"})})).answer) pass = false;
        }
        if (!inB) continue;
        if (k0 < 500 && B.contains(zero_gamble(2)) && B.size() > 1) {
            ++k0;
            std::vector<Gamble> trimmed;
            for (const auto& u : B.gambles)
                if (!u.is_zero()) trimmed.push_back(u);
            if (!k_entails(A, make_option_set(std::move(trimmed))).answer)
                pass = false;
        } else if (k0 < 500 && !B.contains(zero_gamble(2))) {
            ++k0;  // zero-free sets are fixed points of zero-removal
        }
        if (k4 < 500) {
            ++k4;
            std::vector<Gamble> wide = B.gambles;
            wide.push_back(gen::gamble(rng, 2));
            if (!k_entails(A, make_option_set(std::move(wide))).answer)
                pass = false;
        }
        if (k3 < 500) {
            OptionSet C = gen::option_set(rng, 2, 3);
            if (k_entails(A, C).answer) {
                ++k3;
                std::uniform_int_distribution<int> c(0, 2);
                auto coeffs = [&](const Gamble&, const Gamble&) {
                    int lam = c(rng), mu = c(rng);
                    if (lam == 0 && mu == 0) lam = 1;
                    return std::pair<Rational, Rational>(lam, mu);
                };
                OptionSet comb = k3_combine(B, C, coeffs);
                if (!(comb.size() == 1 && comb.contains(zero_gamble(2))) &&
                    !k_entails(A, comb).answer)
                    pass = false;
            }
        }
    }
    while (pass && ka < 200) {
        auto A = consistent_assessment();
        OptionSet B = gen::option_set(rng, 2, 3, false);
        if (B.size() < 2 || !k_entails(A, B).answer) continue;
        ++ka;
        for (const auto& u : B.gambles) {
            if (!k_entails(A, translate(B, u)).answer) continue;
            std::vector<Gamble> rest;
            for (const auto& v : B.gambles)
                if (v != u) rest.push_back(v);
            if (!k_entails(A, make_option_set(std::move(rest))).answer)
                pass = false;
        }
    }
    report(4, pass,
           "K0-K4 hold on 500 samples each; Aizermann on 200 samples");
}

// --- criterion 5: mixing ---------------------------------------------------

// A is convex consistent iff some selection branch's cone misses posi({0});
// for a consistent branch that intersection is empty, for an inconsistent one
// the meet LP is unbounded.
bool convex_consistent(const OptionSetAssessment& A) {
    for (const auto& s : A.sets)
        if (s.empty()) return false;
    std::uint64_t count = selection_count(A, 1'000'000);
    OptionSet zero = make_option_set({zero_gamble(A.space.size())});
    for (std::uint64_t i = 0; i < count; ++i) {
        GambleAssessment gens = selection_image(A, decode_selection(A, i));
        if (!posi_meets_cone(zero, gens).meets) return true;
    }
    return false;
}

void criterion5() {
    gen::Rng rng(1005);
    bool a = true, b = true, c = true;

    int done = 0;
    while (done < 60) {
        auto A = gen::assessment(rng, 2, 2, 2);
        if (!k_consistent(A).answer) continue;
        ++done;
        OptionSet B = gen::option_set(rng, 2, 3, false);
        if (k_entails(A, B).answer && !k_entails_mixing(A, B).answer) a = false;
    }

    auto vac = make_option_set_assessment({}, fix::space2(),
                                          BackgroundOrdering::NonNegNonZero);
    OptionSet sep = os({g({"-1", "2"}), g({"2", "-1"})});
    b = k_entails_mixing(vac, sep).answer && !k_entails(vac, sep).answer;

    for (int i = 0; i < 100; ++i) {
        auto A = gen::assessment(rng, 2, 2, 2);
        if (convex_consistent(A) != k_consistent(A).answer) c = false;
    }
    report(5, a && b && c,
           "mixing extends plain entailment; separator reproduced; convex "
           "consistency = consistency on 100 assessments");
}

// --- criterion 6: lower previsions ----------------------------------------

void criterion6() {
    gen::Rng rng(1006);
    auto G0 = make_gamble_assessment({g({"-1", "2"})}, fix::space2(),
                                     BackgroundOrdering::NonNegNonZero);
    bool pass = lower_prevision(G0, g({"1", "0"})).value == Rational(0) &&
                lower_prevision(G0, g({"0", "1"})).value == make_rational(1, 3);
    int done = 0;
    while (pass && done < 500) {
        auto G = gen::gamble_assessment(rng, 3, 3);
        if (!cone_consistent(G)) continue;
        ++done;
        Gamble f = gen::gamble(rng, 3), h = gen::gamble(rng, 3);
        Rational lam = gen::rational(rng, 1, 5, 3);
        Rational pf = lower_prevision(G, f).value;
        if (pf < min_coord(f)) pass = false;                               // LP1
        if (lower_prevision(G, gamble_scale(lam, f)).value != lam * pf)    // LP2
            pass = false;
        if (lower_prevision(G, gamble_add(f, h)).value <
            pf + lower_prevision(G, h).value)                              // LP3
            pass = false;
    }
    report(6, pass, "frozen lowprev values and LP1-LP3 on 500 random triples");
}

// --- criterion 7: envelope round-trip -------------------------------------

void criterion7() {
    gen::Rng rng(1007);
    bool pass = true;
    for (int i = 0; i < 50 && pass; ++i) {
        CredalSet M = gen::credal(rng, 3, 4);
        for (int p = 0; p < 10; ++p) {
            Gamble f = gen::gamble(rng, 3);
            Rational env = credal_lower_expectation(M, f);
            // sup{mu : P(f - mu) > 0}: strictly below env qualifies, env does
            // not, so the supremum equals env exactly.
            Gamble below = gamble_sub(
                f, constant_gamble(env - make_rational(1, 9), f.size()));
            Gamble at = gamble_sub(f, constant_gamble(env, f.size()));
            if (!strict_desirable_under_lowprev(M, below) ||
                strict_desirable_under_lowprev(M, at)) {
                pass = false;
                break;
            }
        }
    }
    report(7, pass, "envelope functional round-trips on 50 credal sets");
}

// --- criterion 8: decision rules ------------------------------------------

void criterion8() {
    gen::Rng rng(1008);
    bool pass = true;
    for (int i = 0; i < 200 && pass; ++i) {
        CredalSet M = gen::credal(rng, 3, 3);
        OptionSet S = gen::option_set(rng, 3, 4);
        OptionSet ea = e_admissible_choice(M, S);
        std::vector<Gamble> maximal;
        for (const auto& u : S.gambles) {
            bool dom = false;
            for (const auto& v : S.gambles)
                if (v != u && credal_lower_expectation(M, gamble_sub(v, u)) > 0)
                    dom = true;
            if (!dom) maximal.push_back(u);
        }
        OptionSet mx = make_option_set(std::move(maximal));
        if (!is_subset(ea, mx)) pass = false;
        if (M.vertices.size() == 1 && ea != mx) pass = false;
    }
    report(8, pass,
           "E-admissible subset of maximal on 200 instances; singleton sets "
           "coincide");
}

// --- criterion 9: determinism across thread counts ------------------------

void criterion9() {
    gen::Rng rng(1009);
    std::vector<std::string> commands;

    std::string foot = write_temp(
        "det_foot.json",
        R"({"space":["x1","x2"],"assessment":[[["1","-1"],["-1","1"]]]})");
    commands.push_back("entail " + foot +
                       R"( --set '[["1","-1"],["0","0"],["-2","2"]]')" +
                       " --certify --json");
    commands.push_back("check " + foot + " --certify --json");
    commands.push_back("margin " + foot + R"( --set '[["1","-1"],["-1","1"]]')" +
                       " --json");

    for (int i = 0; i < 8; ++i) {
        auto A = gen::assessment(rng, 2, 3, 3);
        std::string path = write_temp("det_model_" + std::to_string(i) + ".json",
                                      to_json(ParsedModel(A)).dump());
        std::string probe =
            option_set_to_json(gen::option_set(rng, 2, 3, false)).dump();
        commands.push_back("check " + path + " --certify --json");
        commands.push_back("entail " + path + " --set '" + probe +
                           "' --certify --json");
        commands.push_back("entail-mixing " + path + " --set '" + probe +
                           "' --certify --json");
        commands.push_back("choose " + path + " --set '" + probe + "' --json");
    }

    bool pass = true;
    for (const auto& cmd : commands) {
        CliResult base = run_cli(cmd + " --threads 1");
        for (int t : {3, 7}) {
            CliResult other = run_cli(cmd + " --threads " + std::to_string(t));
            if (other.exit != base.exit || other.out != base.out) pass = false;
        }
    }
    std::ostringstream ss;
    ss << commands.size() << " commands byte-identical at 1/3/7 threads";
    report(9, pass, ss.str());
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    return failures;
}
