#include "dk/model_io.hpp"

#include "dk/errors.hpp"

namespace dk {

using nlohmann::json;

namespace {

Rational rational_from_json(const json& j, const std::string& path) {
    try {
        if (j.is_number_integer())
            return parse_rational(std::to_string(j.get<long long>()));
        if (j.is_string()) return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
        throw ModelError(path, e.what());
    }
    throw ModelError(path, "expected an integer or a rational string");
}

json rational_to_json(const Rational& q) { return to_string(q); }

BackgroundOrdering ordering_from_json(const json& j) {
    if (!j.contains("ordering")) return BackgroundOrdering::NonNegNonZero;
    const json& o = j.at("ordering");
    if (o == "nonneg") return BackgroundOrdering::NonNegNonZero;
    if (o == "strict") return BackgroundOrdering::StrictlyPositive;
    throw ModelError("ordering", "unknown ordering variant");
}

std::string ordering_to_string(BackgroundOrdering o) {
    return o == BackgroundOrdering::StrictlyPositive ? "strict" : "nonneg";
}

}  // namespace

Gamble gamble_from_json(const json& j, const SpaceSpec& space, const std::string& path) {
    if (!j.is_array())
        throw ModelError(path, "expected an array of rationals");
    if (j.size() != space.size())
        throw ModelError(path, "gamble has " + std::to_string(j.size()) +
                                   " coordinates, space has " +
                                   std::to_string(space.size()));
    Gamble g;
    g.coords.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        g.coords.push_back(
            rational_from_json(j[i], path + "[" + std::to_string(i) + "]"));
    return g;
}

json gamble_to_json(const Gamble& g) {
    json out = json::array();
    for (const auto& c : g.coords) out.push_back(rational_to_json(c));
    return out;
}

OptionSet option_set_from_json(const json& j, const SpaceSpec& space,
                               const std::string& path) {
    if (!j.is_array()) throw ModelError(path, "expected an array of gambles");
    std::vector<Gamble> gambles;
    gambles.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        gambles.push_back(
            gamble_from_json(j[i], space, path + "[" + std::to_string(i) + "]"));
    return make_option_set(std::move(gambles));
}

json option_set_to_json(const OptionSet& s) {
    json out = json::array();
    for (const auto& g : s.gambles) out.push_back(gamble_to_json(g));
    return out;
}

ParsedModel parse_model(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ModelError("$", std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ModelError("$", "top level must be an object");
    if (!doc.contains("space")) throw ModelError("space", "missing");
    const json& js = doc.at("space");
    if (!js.is_array()) throw ModelError("space", "expected an array of strings");
    std::vector<std::string> atoms;
    for (std::size_t i = 0; i < js.size(); ++i) {
        if (!js[i].is_string())
            throw ModelError("space[" + std::to_string(i) + "]",
                             "expected a string");
        atoms.push_back(js[i].get<std::string>());
    }
    SpaceSpec space = make_space(std::move(atoms));
    BackgroundOrdering ordering = ordering_from_json(doc);

    int kinds = doc.contains("assessment") + doc.contains("desirable") +
                doc.contains("credal");
    if (kinds != 1)
        throw ModelError(
            "$", "exactly one of 'assessment', 'desirable', 'credal' required");

    for (auto& [key, value] : doc.items())
        if (key != "space" && key != "ordering" && key != "assessment" &&
            key != "desirable" && key != "credal")
            throw ModelError(key, "unknown field");

    if (doc.contains("assessment")) {
        const json& ja = doc.at("assessment");
        if (!ja.is_array())
            throw ModelError("assessment", "expected an array of option sets");
        std::vector<OptionSet> sets;
        for (std::size_t i = 0; i < ja.size(); ++i)
            sets.push_back(option_set_from_json(
                ja[i], space, "assessment[" + std::to_string(i) + "]"));
        return make_option_set_assessment(std::move(sets), std::move(space), ordering);
    }
    if (doc.contains("desirable")) {
        const json& jd = doc.at("desirable");
        if (!jd.is_array())
            throw ModelError("desirable", "expected an array of gambles");
        std::vector<Gamble> gambles;
        for (std::size_t i = 0; i < jd.size(); ++i)
            gambles.push_back(gamble_from_json(
                jd[i], space, "desirable[" + std::to_string(i) + "]"));
        return make_gamble_assessment(std::move(gambles), std::move(space), ordering);
    }
    const json& jc = doc.at("credal");
    if (!jc.is_array()) throw ModelError("credal", "expected an array of vertices");
    std::vector<Gamble> vertices;
    for (std::size_t i = 0; i < jc.size(); ++i)
        vertices.push_back(
            gamble_from_json(jc[i], space, "credal[" + std::to_string(i) + "]"));
    if (ordering != BackgroundOrdering::NonNegNonZero)
        throw ModelError("ordering", "credal models fix the ordering");
    return make_credal_set(std::move(vertices), std::move(space));
}

json to_json(const ParsedModel& model) {
    json out = json::object();
    if (const auto* a = std::get_if<OptionSetAssessment>(&model)) {
        out["space"] = a->space.atoms;
        out["ordering"] = ordering_to_string(a->ordering);
        json sets = json::array();
        for (const auto& s : a->sets) sets.push_back(option_set_to_json(s));
        out["assessment"] = std::move(sets);
    } else if (const auto* d = std::get_if<GambleAssessment>(&model)) {
        out["space"] = d->space.atoms;
        out["ordering"] = ordering_to_string(d->ordering);
        json gs = json::array();
        for (const auto& g : d->gambles) gs.push_back(gamble_to_json(g));
        out["desirable"] = std::move(gs);
    } else {
        const auto& m = std::get<CredalSet>(model);
        out["space"] = m.space.atoms;
        out["ordering"] = "nonneg";
        json vs = json::array();
        for (const auto& v : m.vertices) vs.push_back(gamble_to_json(v));
        out["credal"] = std::move(vs);
    }
    return out;
}

namespace {

json witness_to_json(const ConeWitness& w) {
    json lambda = json::object();
    for (std::size_t i = 0; i < w.lambda.size(); ++i)
        if (w.lambda[i] != 0)
            lambda[std::to_string(i)] = rational_to_json(w.lambda[i]);
    return json{{"lambda", std::move(lambda)}, {"slack", gamble_to_json(w.slack)}};
}

ConeWitness witness_from_json(const json& j, const SpaceSpec& space,
                              const std::string& path) {
    ConeWitness w;
    const json& jl = j.at("lambda");
    std::size_t max_index = 0;
    for (const auto& [key, value] : jl.items()) {
        std::size_t idx = std::stoul(key);
        if (idx + 1 > max_index) max_index = idx + 1;
    }
    w.lambda.assign(max_index, Rational(0));
    for (const auto& [key, value] : jl.items())
        w.lambda[std::stoul(key)] =
            rational_from_json(value, path + ".lambda." + key);
    w.slack = gamble_from_json(j.at("slack"), space, path + ".slack");
    return w;
}

json selection_to_json(const Selection& phi) {
    json out = json::array();
    for (auto i : phi) out.push_back(i);
    return out;
}

json branch_to_json(const BranchWitness& bw) {
    json out = json::object();
    out["selection"] = selection_to_json(bw.selection);
    if (bw.vacuous) {
        out["vacuous"] = true;
    } else {
        out["witness_index"] = bw.witness_index;
        if (!bw.mu.empty()) {
            json mu = json::array();
            for (const auto& m : bw.mu) mu.push_back(rational_to_json(m));
            out["mu"] = std::move(mu);
        }
    }
    out["witness"] = witness_to_json(bw.witness);
    return out;
}

BranchWitness branch_from_json(const json& j, const SpaceSpec& space,
                               const std::string& path) {
    BranchWitness bw;
    for (const auto& idx : j.at("selection"))
        bw.selection.push_back(idx.get<std::size_t>());
    bw.vacuous = j.value("vacuous", false);
    if (!bw.vacuous && j.contains("witness_index"))
        bw.witness_index = j.at("witness_index").get<std::size_t>();
    if (j.contains("mu"))
        for (std::size_t i = 0; i < j.at("mu").size(); ++i)
            bw.mu.push_back(rational_from_json(
                j.at("mu")[i], path + ".mu[" + std::to_string(i) + "]"));
    bw.witness = witness_from_json(j.at("witness"), space, path + ".witness");
    return bw;
}

}  // namespace

json certificate_to_json(const Certificate& cert) {
    json out = json::object();
    switch (cert.kind) {
        case Certificate::Kind::Entailed: out["kind"] = "entailed"; break;
        case Certificate::Kind::NotEntailed: out["kind"] = "not_entailed"; break;
        case Certificate::Kind::Consistent: out["kind"] = "consistent"; break;
        case Certificate::Kind::Inconsistent: out["kind"] = "inconsistent"; break;
    }
    if (cert.kind == Certificate::Kind::Entailed ||
        (cert.kind == Certificate::Kind::Inconsistent && !cert.empty_set_index)) {
        json branches = json::array();
        for (const auto& bw : cert.branches) branches.push_back(branch_to_json(bw));
        out["branches"] = std::move(branches);
    }
    if (cert.kind == Certificate::Kind::NotEntailed ||
        cert.kind == Certificate::Kind::Consistent)
        out["selection"] = selection_to_json(cert.selection);
    if (cert.separators) {
        json seps = json::array();
        for (const auto& g : cert.separators->gambles)
            seps.push_back(gamble_to_json(g));
        out["separators"] = std::move(seps);
    }
    if (cert.empty_set_index) out["empty_set_index"] = *cert.empty_set_index;
    return out;
}

Certificate certificate_from_json(const json& j, const SpaceSpec& space,
                                  BackgroundOrdering ordering) {
    Certificate cert;
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "entailed") cert.kind = Certificate::Kind::Entailed;
    else if (kind == "not_entailed") cert.kind = Certificate::Kind::NotEntailed;
    else if (kind == "consistent") cert.kind = Certificate::Kind::Consistent;
    else if (kind == "inconsistent") cert.kind = Certificate::Kind::Inconsistent;
    else throw ModelError("kind", "unknown certificate kind");

    if (j.contains("branches"))
        for (std::size_t i = 0; i < j.at("branches").size(); ++i)
            cert.branches.push_back(
                branch_from_json(j.at("branches")[i], space,
                                 "branches[" + std::to_string(i) + "]"));
    if (j.contains("selection"))
        for (const auto& idx : j.at("selection"))
            cert.selection.push_back(idx.get<std::size_t>());
    if (j.contains("separators")) {
        std::vector<Gamble> gambles;
        const json& js = j.at("separators");
        for (std::size_t i = 0; i < js.size(); ++i)
            gambles.push_back(gamble_from_json(
                js[i], space, "separators[" + std::to_string(i) + "]"));
        cert.separators =
            make_gamble_assessment(std::move(gambles), space, ordering);
    }
    if (j.contains("empty_set_index"))
        cert.empty_set_index = j.at("empty_set_index").get<std::size_t>();
    return cert;
}

}  // namespace dk
