/**
 * @file io.hpp
 * @brief Wire formats: field spec strings, JSON code descriptors,
 *        sigma-polynomial and report serialization.
 *
 * Field spec: "p^ell:n:m[:modulus_qm_hex]" with the modulus given as the hex
 * form of its integer encoding (little-endian base p), e.g. "2^1:4:4:13" for
 * F_16 with modulus x^4+x+1 (0b10011 = 0x13).
 *
 * Structural integers (k, s, h, tau, term indices) are plain JSON numbers;
 * field element encodings, bounds, and counts are decimal strings so
 * arbitrarily large values survive the round trip. Serialization uses
 * ordered JSON and fixed key order, and identical inputs produce
 * byte-identical output.
 */

#ifndef RANKMETRIC_IO_HPP
#define RANKMETRIC_IO_HPP

#include <memory>
#include <sstream>

#include <json.hpp>

#include "rankmetric/adversary.hpp"

namespace rankmetric {

using Json = nlohmann::ordered_json;

struct FieldSpec {
    std::uint32_t p = 2, ell = 1, n = 1, m = 1;
    std::optional<std::vector<std::uint32_t>> modulus_qm;
};

inline FieldSpec parse_field_spec(const std::string& text) {
    FieldSpec spec;
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == ':') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    if (parts.size() < 3 || parts.size() > 4)
        throw std::invalid_argument("field spec must be p^ell:n:m[:modulus_qm_hex], got '" + text + "'");
    const auto caret = parts[0].find('^');
    try {
        if (caret == std::string::npos) {
            spec.p = static_cast<std::uint32_t>(std::stoul(parts[0]));
            spec.ell = 1;
        } else {
            spec.p = static_cast<std::uint32_t>(std::stoul(parts[0].substr(0, caret)));
            spec.ell = static_cast<std::uint32_t>(std::stoul(parts[0].substr(caret + 1)));
        }
        spec.n = static_cast<std::uint32_t>(std::stoul(parts[1]));
        spec.m = static_cast<std::uint32_t>(std::stoul(parts[2]));
        if (parts.size() == 4) {
            std::uint64_t enc = std::stoull(parts[3], nullptr, 16);
            std::vector<std::uint32_t> coeffs;
            while (enc) {
                coeffs.push_back(static_cast<std::uint32_t>(enc % spec.p));
                enc /= spec.p;
            }
            spec.modulus_qm = std::move(coeffs);
        }
    } catch (const std::logic_error&) {
        throw std::invalid_argument("malformed field spec '" + text + "'");
    }
    return spec;
}

inline std::string print_field_spec(const FieldTower& tower) {
    std::uint64_t enc = 0;
    const auto mod = tower.level_modulus(Level::fqm);
    for (std::size_t i = mod.size(); i-- > 0;) enc = enc * tower.p() + mod[i];
    std::ostringstream os;
    os << tower.p() << '^' << tower.ell() << ':' << tower.n() << ':' << tower.m() << ':' << std::hex << enc;
    return os.str();
}

inline std::unique_ptr<FieldTower> make_tower(const FieldSpec& spec) {
    return std::make_unique<FieldTower>(spec.p, spec.ell, spec.n, spec.m, std::nullopt, spec.modulus_qm);
}

// ---- sigma-polynomials: {"s": 1, "terms": [[i, "coeff-encoding"], ...]} ----

inline Json poly_to_json(const SigmaPoly& f) {
    Json terms = Json::array();
    for (int i = 0; i <= f.degree(); ++i)
        if (!f.coeff(i).is_zero()) terms.push_back(Json::array({i, std::to_string(f.coeff(i).encoding())}));
    return Json{{"s", f.twist()}, {"terms", std::move(terms)}};
}

inline SigmaPoly poly_from_json(const FieldTower& tower, const Json& j) {
    const std::uint32_t s = j.at("s").get<std::uint32_t>();
    std::vector<FieldElement> coeffs;
    for (const auto& term : j.at("terms")) {
        const std::size_t i = term.at(0).get<std::size_t>();
        const std::uint64_t enc = std::stoull(term.at(1).get<std::string>());
        if (coeffs.size() <= i) coeffs.resize(i + 1, tower.zero());
        coeffs[i] = tower.element(Level::fqm, enc);
    }
    return SigmaPoly(tower, s, std::move(coeffs));
}

// ---- words: arrays of decimal encoding strings ----

inline Json word_to_json(const Word& w) {
    Json arr = Json::array();
    for (const auto& e : w.entries) arr.push_back(std::to_string(e.encoding()));
    return arr;
}

inline Word word_from_json(const FieldTower& tower, const Json& j) {
    Word w;
    for (const auto& e : j) w.entries.push_back(tower.element(Level::fqm, std::stoull(e.get<std::string>())));
    return w;
}

// ---- code descriptors ----

/// Owns the tower a parsed code lives in.
struct CodeHandle {
    std::unique_ptr<const FieldTower> tower;
    std::unique_ptr<RankCode> code;
};

inline Json code_to_json(const RankCode& code) {
    Json j;
    j["field"] = print_field_spec(code.tower());
    j["family"] = family_tag(code.family());
    j["k"] = code.k();
    j["s"] = code.twist();
    if (code.eta()) {
        j["eta"] = std::to_string(code.eta()->encoding());
        j["h"] = code.h();
    }
    bool default_alpha = code.tower().has_embedding() &&
                         code.alpha() == Subspace::embedded_subfield(code.tower()).basis();
    if (default_alpha) {
        j["alpha"] = "default";
    } else {
        Json arr = Json::array();
        for (const auto& a : code.alpha()) arr.push_back(std::to_string(a.encoding()));
        j["alpha"] = std::move(arr);
    }
    if (!code.complement().empty()) {
        Json arr = Json::array();
        for (const auto& g : code.complement()) arr.push_back(poly_to_json(g));
        j["complement"] = std::move(arr);
    }
    return j;
}

inline CodeHandle code_from_json(const Json& j) {
    CodeHandle handle;
    handle.tower = make_tower(parse_field_spec(j.at("field").get<std::string>()));
    const FieldTower& tw = *handle.tower;
    const CodeFamily family = family_from_tag(j.at("family").get<std::string>());
    const auto k = j.at("k").get<std::uint32_t>();
    const auto s = j.value("s", 1u);
    FamilyParams params;
    if (j.contains("eta")) {
        params.eta = tw.element(Level::fqm, std::stoull(j.at("eta").get<std::string>()));
        params.h = j.value("h", 0u);
    }
    if (j.contains("complement"))
        for (const auto& g : j.at("complement")) params.complement.push_back(poly_from_json(tw, g));
    std::optional<std::vector<FieldElement>> alpha;
    if (j.contains("alpha") && j.at("alpha").is_array()) {
        std::vector<FieldElement> a;
        for (const auto& e : j.at("alpha")) a.push_back(tw.element(Level::fqm, std::stoull(e.get<std::string>())));
        alpha = std::move(a);
    }
    handle.code = std::make_unique<RankCode>(tw, family, k, s, std::move(params), std::move(alpha));
    return handle;
}

// ---- experiment configuration ----

/// One experiment: a code, a strategy, a radius (or "auto"), and flags.
/// parse/print round-trips are the identity.
struct ExperimentConfig {
    Json code;  // descriptor as above
    Strategy strategy = Strategy::trace_gab;
    std::optional<std::uint32_t> tau;  // nullopt = "auto"
    bool oracle = false;
    std::string format = "json";  // "json" or "csv"
};

inline Json config_to_json(const ExperimentConfig& cfg) {
    Json j;
    j["code"] = cfg.code;
    j["strategy"] = strategy_tag(cfg.strategy);
    if (cfg.tau)
        j["tau"] = *cfg.tau;
    else
        j["tau"] = "auto";
    j["oracle"] = cfg.oracle;
    j["format"] = cfg.format;
    return j;
}

inline ExperimentConfig config_from_json(const Json& j) {
    ExperimentConfig cfg;
    cfg.code = j.at("code");
    cfg.strategy = strategy_from_tag(j.at("strategy").get<std::string>());
    if (j.at("tau").is_string()) {
        if (j.at("tau").get<std::string>() != "auto") throw std::invalid_argument("tau must be an integer or 'auto'");
        cfg.tau = std::nullopt;
    } else {
        cfg.tau = j.at("tau").get<std::uint32_t>();
    }
    cfg.oracle = j.value("oracle", false);
    cfg.format = j.value("format", "json");
    return cfg;
}

/// The automatic radius: one past unique decoding, or the trinomial radius
/// for the trinomial strategy.
inline std::uint32_t auto_tau(const RankCode& code, Strategy strategy) {
    if (strategy == Strategy::trinomial) {
        const auto t = trinomial_radius(code.n());
        if (!t) throw std::invalid_argument("no trinomial radius exists for n = " + std::to_string(code.n()));
        return *t;
    }
    return (code.d() - 1) / 2 + 1;
}

// ---- adversary reports ----

inline Json report_to_json(const AdversaryReport& rep, const ExperimentConfig& cfg) {
    Json j;
    j["config"] = config_to_json(cfg);
    j["strategy"] = strategy_tag(rep.strategy);
    j["tau"] = rep.tau;
    j["ball_radius"] = rep.ball_radius;
    j["claimed_bound"] = rep.claimed_bound.str();
    j["achieved"] = rep.achieved().str();
    j["center"] = word_to_json(rep.center);
    Json lst = Json::array();
    for (const auto& w : rep.list) lst.push_back(word_to_json(w));
    j["list"] = std::move(lst);
    j["checks"] = Json{{"center_outside", rep.checks.center_outside},
                       {"all_members_in_code", rep.checks.all_members_in_code},
                       {"all_within_radius", rep.checks.all_within_radius},
                       {"all_distinct", rep.checks.all_distinct}};
    if (rep.oracle_count)
        j["oracle_count"] = rep.oracle_count->str();
    else
        j["oracle_count"] = nullptr;
    j["witness"] = rep.witness;
    j["valid"] = rep.valid();
    return j;
}

inline AdversaryReport report_from_json(const FieldTower& tower, const Json& j) {
    AdversaryReport rep;
    rep.strategy = strategy_from_tag(j.at("strategy").get<std::string>());
    rep.tau = j.at("tau").get<std::uint32_t>();
    rep.ball_radius = j.at("ball_radius").get<std::uint32_t>();
    rep.claimed_bound = BigInt(j.at("claimed_bound").get<std::string>());
    rep.center = word_from_json(tower, j.at("center"));
    for (const auto& w : j.at("list")) rep.list.push_back(word_from_json(tower, w));
    const auto& checks = j.at("checks");
    rep.checks.center_outside = checks.at("center_outside").get<bool>();
    rep.checks.all_members_in_code = checks.at("all_members_in_code").get<bool>();
    rep.checks.all_within_radius = checks.at("all_within_radius").get<bool>();
    rep.checks.all_distinct = checks.at("all_distinct").get<bool>();
    if (j.contains("oracle_count") && !j.at("oracle_count").is_null())
        rep.oracle_count = BigInt(j.at("oracle_count").get<std::string>());
    rep.witness = j.value("witness", "");
    return rep;
}

/// CSV row for the sweep output; oracle_count prints "-" when absent.
inline std::string report_csv_row(const RankCode& code, const AdversaryReport& rep) {
    std::ostringstream os;
    os << family_tag(code.family()) << ',' << code.tower().q() << ',' << code.n() << ',' << code.tower().m()
       << ',' << code.k() << ',' << code.d() << ',' << rep.tau << ',' << rep.claimed_bound.str() << ','
       << rep.achieved().str() << ',' << (rep.oracle_count ? rep.oracle_count->str() : "-") << ','
       << (rep.valid() ? "true" : "false");
    return os.str();
}

inline const char* report_csv_header() {
    return "family,q,n,m,k,d,tau,claimed_bound,achieved_list,oracle_count,valid";
}

}  // namespace rankmetric

#endif  // RANKMETRIC_IO_HPP
