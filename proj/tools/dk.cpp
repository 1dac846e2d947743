#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "dk/choice.hpp"
#include "dk/desirability.hpp"
#include "dk/errors.hpp"
#include "dk/model_io.hpp"
#include "dk/operators.hpp"

namespace {

using dk::Rational;
using nlohmann::json;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw dk::ModelError(path, "cannot read file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Inline payloads, or @file indirection.
std::string payload_text(const std::string& arg) {
    if (!arg.empty() && arg[0] == '@') return slurp(arg.substr(1));
    return arg;
}

json parse_payload(const std::string& arg, const std::string& what) {
    try {
        return json::parse(payload_text(arg));
    } catch (const json::parse_error& e) {
        throw dk::ModelError(what, std::string("malformed JSON: ") + e.what());
    }
}

std::uint64_t fnv1a(const std::string& s, std::uint64_t h = 0xcbf29ce484222325ull) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

struct Session {
    dk::ParsedModel model;
    dk::QueryOptions opts;
    dk::LpStats stats;
    std::uint64_t selections = 0;
    std::uint64_t hash = 0;
    bool json_out = false;
    bool certify = false;

    const dk::SpaceSpec& space() const {
        return std::visit([](const auto& m) -> const dk::SpaceSpec& { return m.space; },
                          model);
    }

    dk::OptionSetAssessment assessment() const {
        if (const auto* a = std::get_if<dk::OptionSetAssessment>(&model)) return *a;
        if (const auto* d = std::get_if<dk::GambleAssessment>(&model)) {
            // Singleton lift of a desirable-gamble model.
            std::vector<dk::OptionSet> sets;
            for (const auto& g : d->gambles)
                sets.push_back(dk::make_option_set({g}));
            return dk::make_option_set_assessment(std::move(sets), d->space,
                                                  d->ordering);
        }
        throw dk::ModelError("$", "this command needs an assessment model");
    }

    dk::GambleAssessment desirable() const {
        if (const auto* d = std::get_if<dk::GambleAssessment>(&model)) return *d;
        throw dk::ModelError("$", "this command needs a 'desirable' model");
    }

    const dk::CredalSet& credal() const {
        if (const auto* m = std::get_if<dk::CredalSet>(&model)) return *m;
        throw dk::ModelError("$", "this command needs a 'credal' model");
    }

    dk::OptionSet read_set(const std::string& arg) {
        json j = parse_payload(arg, "--set");
        dk::OptionSet s = dk::option_set_from_json(j, space(), "--set");
        hash = fnv1a(dk::option_set_to_json(s).dump(), hash);
        return s;
    }

    dk::Gamble read_gamble(const std::string& arg) {
        json j = parse_payload(arg, "--gamble");
        dk::Gamble g = dk::gamble_from_json(j, space(), "--gamble");
        hash = fnv1a(dk::gamble_to_json(g).dump(), hash);
        return g;
    }

    void count_selections() {
        if (const auto* a = std::get_if<dk::OptionSetAssessment>(&model))
            selections = dk::selection_count(*a, opts.selection_cap);
        else if (const auto* d = std::get_if<dk::GambleAssessment>(&model))
            selections = d->gambles.empty() ? 1 : 1;  // singleton lift: one branch
    }

    // Single JSON object on stdout; counters stand in for wall time so reruns
    // byte-compare.
    int report(bool verdict, const dk::Certificate* cert, json extra = {}) {
        if (json_out) {
            json out = json::object();
            out["verdict"] = verdict;
            if (certify && cert) out["certificate"] = dk::certificate_to_json(*cert);
            for (auto& [k, v] : extra.items()) out[k] = v;
            out["input_hash"] = hex64(hash);
            out["timing"] = {{"lp_calls", stats.lp_calls},
                             {"selections", selections}};
            std::cout << out.dump() << "\n";
        } else if (certify && cert) {
            std::cout << dk::certificate_to_json(*cert).dump() << "\n";
        }
        return verdict ? 0 : 1;
    }
};

int dispatch(Session& s, const std::string& verb, const std::string& set_arg,
             const std::string& gamble_arg, const std::string& cert_arg,
             const std::string& op, bool mixing) {
    if (verb == "check") {
        auto A = s.assessment();
        s.count_selections();
        dk::Verdict v = dk::k_consistent(A, s.opts);
        if (!s.json_out)
            std::cout << (v.answer ? "consistent" : "inconsistent") << "\n";
        return s.report(v.answer, &v.certificate);
    }
    if (verb == "entail" || verb == "entail-mixing" || verb == "total") {
        auto A = s.assessment();
        s.count_selections();
        dk::Verdict v;
        if (verb == "total")
            v = dk::totality_query(A, s.read_gamble(gamble_arg), s.opts);
        else if (verb == "entail-mixing" || mixing)
            v = dk::k_entails_mixing(A, s.read_set(set_arg), s.opts);
        else
            v = dk::k_entails(A, s.read_set(set_arg), s.opts);
        if (!s.json_out)
            std::cout << (v.answer ? "entailed" : "not entailed") << "\n";
        return s.report(v.answer, &v.certificate);
    }
    if (verb == "choose") {
        auto A = s.assessment();
        s.count_selections();
        dk::OptionSet S = s.read_set(set_arg);
        dk::OptionSet rejected = dk::reject_set(A, S, mixing, s.opts);
        std::vector<dk::Gamble> kept;
        for (const auto& u : S.gambles)
            if (!rejected.contains(u)) kept.push_back(u);
        dk::OptionSet chosen = dk::make_option_set(std::move(kept));
        if (!s.json_out)
            std::cout << "chosen " << dk::option_set_to_json(chosen).dump() << "\n";
        return s.report(true, nullptr,
                        {{"chosen", dk::option_set_to_json(chosen)},
                         {"rejected", dk::option_set_to_json(rejected)}});
    }
    if (verb == "e-admit") {
        const auto& M = s.credal();
        dk::OptionSet S = s.read_set(set_arg);
        dk::OptionSet chosen = dk::e_admissible_choice(M, S, &s.stats);
        if (!s.json_out)
            std::cout << "chosen " << dk::option_set_to_json(chosen).dump() << "\n";
        return s.report(true, nullptr, {{"chosen", dk::option_set_to_json(chosen)}});
    }
    if (verb == "lowprev") {
        dk::Gamble f = s.read_gamble(gamble_arg);
        if (const auto* m = std::get_if<dk::CredalSet>(&s.model)) {
            Rational v = dk::credal_lower_expectation(*m, f);
            if (!s.json_out) std::cout << dk::to_string(v) << "\n";
            return s.report(true, nullptr, {{"value", dk::to_string(v)}});
        }
        auto res = dk::lower_prevision(s.desirable(), f, &s.stats);
        if (res.unbounded) {
            if (!s.json_out) std::cout << "inconsistent\n";
            return s.report(false, nullptr, {{"unbounded", true}});
        }
        if (!s.json_out) std::cout << dk::to_string(res.value) << "\n";
        return s.report(true, nullptr, {{"value", dk::to_string(res.value)}});
    }
    if (verb == "margin") {
        auto A = s.assessment();
        s.count_selections();
        dk::ArchMargin m = dk::arch_margin(A, s.read_set(set_arg), s.opts);
        bool arch = !m.unbounded && m.value > 0;
        if (m.unbounded) {
            if (!s.json_out) std::cout << "unbounded\n";
            return s.report(true, nullptr, {{"unbounded", true}});
        }
        if (!s.json_out)
            std::cout << dk::to_string(m.value)
                      << (m.attained ? " (attained)" : " (not attained)") << "\n";
        return s.report(arch, nullptr,
                        {{"value", dk::to_string(m.value)}, {"attained", m.attained}});
    }
    if (verb == "operators") {
        auto A = s.assessment();
        dk::FiniteFamily K =
            dk::make_finite_family(A.sets, A.space, A.ordering);
        if (op == "rn") {
            dk::FiniteFamily out = dk::rn_transform(K, s.opts.selection_cap);
            json sets = json::array();
            for (const auto& c : out.sets) sets.push_back(dk::option_set_to_json(c));
            if (!s.json_out) std::cout << sets.dump() << "\n";
            return s.report(true, nullptr, {{"family", sets}});
        }
        if (op == "su" || op == "rs" || op == "rp") {
            dk::OptionSet B = s.read_set(set_arg);
            bool ans = op == "su"   ? dk::su_contains(K, B)
                       : op == "rs" ? dk::rs_contains(K, B)
                                    : dk::rp_contains(K, B, &s.stats);
            if (!s.json_out) std::cout << (ans ? "yes" : "no") << "\n";
            return s.report(ans, nullptr);
        }
        if (op == "chull" || op == "posi") {
            dk::OptionSet B = s.read_set(set_arg);
            dk::Gamble f = s.read_gamble(gamble_arg);
            bool ans = op == "chull" ? dk::chull_contains(B, f, &s.stats)
                                     : dk::posi_hull_contains(B, f, &s.stats);
            if (!s.json_out) std::cout << (ans ? "yes" : "no") << "\n";
            return s.report(ans, nullptr);
        }
        if (op == "translate") {
            dk::OptionSet B = s.read_set(set_arg);
            dk::Gamble u = s.read_gamble(gamble_arg);
            json out = dk::option_set_to_json(dk::translate(B, u));
            if (!s.json_out) std::cout << out.dump() << "\n";
            return s.report(true, nullptr, {{"set", out}});
        }
        throw dk::ModelError("--op", "unknown operator '" + op + "'");
    }
    if (verb == "verify-cert") {
        auto A = s.assessment();
        s.count_selections();
        dk::OptionSet B =
            set_arg.empty() ? dk::OptionSet{} : s.read_set(set_arg);
        json jc = parse_payload(cert_arg, "--cert");
        dk::Certificate cert = dk::certificate_from_json(jc, A.space, A.ordering);
        bool ok = dk::verify_certificate(A, B, cert, mixing, s.opts);
        if (!s.json_out) std::cout << (ok ? "valid" : "invalid") << "\n";
        return s.report(ok, nullptr);
    }
    throw dk::ModelError("verb", "unknown verb '" + verb + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"desire-kernel: exact inference for sets of desirable option sets"};
    app.require_subcommand(1);

    std::string model_path, set_arg, gamble_arg, cert_arg, op;
    bool certify = false, json_out = false, mixing = false;
    std::uint64_t cap = 1'000'000;
    int threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;

    std::vector<std::pair<std::string, CLI::App*>> verbs;
    for (const char* name :
         {"check", "entail", "entail-mixing", "choose", "e-admit", "lowprev",
          "margin", "total", "operators", "verify-cert"}) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("model", model_path, "model JSON file")->required();
        sub->add_option("--set", set_arg, "option set payload (JSON or @file)");
        sub->add_option("--gamble", gamble_arg, "gamble payload (JSON or @file)");
        sub->add_option("--cert", cert_arg, "certificate payload (JSON or @file)");
        sub->add_option("--op", op, "operator name (operators verb)");
        sub->add_flag("--certify", certify, "emit a certificate");
        sub->add_flag("--json", json_out, "machine-readable output");
        sub->add_flag("--mixing", mixing, "use the convex (mixing) closure");
        sub->add_option("--cap", cap, "selection/enumeration budget");
        sub->add_option("--threads", threads, "worker threads");
        verbs.emplace_back(name, sub);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Session s{dk::parse_model(slurp(model_path))};
        s.opts.selection_cap = cap;
        s.opts.threads = threads;
        s.opts.stats = &s.stats;
        s.json_out = json_out;
        s.certify = certify;
        s.hash = fnv1a(dk::to_json(s.model).dump());
        for (auto& [name, sub] : verbs)
            if (sub->parsed())
                return dispatch(s, name, set_arg, gamble_arg, cert_arg, op, mixing);
        std::cerr << "error: no verb\n";
        return 2;
    } catch (const dk::CapExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const dk::InconsistentAssessmentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const dk::NotEntailedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const dk::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
