/**
 * @file rankmetric_cli.cpp
 * @brief Command-line front end: construct polynomial families, run attacks,
 *        verify reports, sweep parameter tables, run the selftest battery.
 *
 * Exit code 0 means every produced report was valid (or every selftest
 * criterion passed); parse errors and invalid reports exit nonzero.
 *
 * The enumeration guard defaults to 2^24 states and can be overridden with
 * the RANKMETRIC_GUARD environment variable.
 */

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "rankmetric/rankmetric.hpp"

namespace {

using namespace rankmetric;

EnumGuard guard_from_env() {
    EnumGuard guard;
    if (const char* env = std::getenv("RANKMETRIC_GUARD")) guard.max_states = BigInt(env);
    return guard;
}

int cmd_construct(const std::string& kind, const std::string& field, std::uint32_t t, std::uint32_t s,
                  std::uint32_t r, std::uint32_t g) {
    auto tower = make_tower(parse_field_spec(field));
    const EnumGuard guard = guard_from_env();
    PolyFamily fam;
    if (kind == "trace") {
        fam = trace_family(*tower, t, s);
    } else if (kind == "trinomial") {
        fam = trinomial_family(*tower, t);
    } else if (kind == "pigeonhole") {
        fam = pigeonhole_family(Subspace::embedded_subfield(*tower), r, g, s, guard);
    } else {
        throw CLI::ValidationError("--family must be trace, trinomial, or pigeonhole");
    }
    Json j;
    j["family"] = kind_tag(fam.kind);
    j["field"] = print_field_spec(*tower);
    j["degree"] = fam.degree;
    j["kernel_dim"] = fam.kernel_dim;
    j["size"] = std::to_string(fam.size());
    Json members = Json::array();
    for (const auto& f : fam.members) members.push_back(poly_to_json(f));
    j["members"] = std::move(members);
    std::cout << j.dump(2) << "\n";
    return 0;
}

int run_attack(const ExperimentConfig& cfg, bool emit_json) {
    CodeHandle handle = code_from_json(cfg.code);
    const EnumGuard guard = guard_from_env();
    const std::uint32_t tau = cfg.tau ? *cfg.tau : auto_tau(*handle.code, cfg.strategy);
    AdversaryReport rep = build_adversary(*handle.code, cfg.strategy, tau, guard);
    if (cfg.oracle) rep = verify_adversary(*handle.code, std::move(rep), /*use_oracle=*/true, guard);
    if (emit_json)
        std::cout << report_to_json(rep, cfg).dump(2) << "\n";
    else
        std::cout << report_csv_row(*handle.code, rep) << "\n";
    return rep.valid() ? 0 : 1;
}

int cmd_attack(const std::string& code_json, const std::string& strategy, const std::string& tau,
               bool oracle, const std::string& format) {
    ExperimentConfig cfg;
    cfg.code = Json::parse(code_json);
    cfg.strategy = strategy_from_tag(strategy);
    if (tau != "auto") cfg.tau = static_cast<std::uint32_t>(std::stoul(tau));
    cfg.oracle = oracle;
    cfg.format = format;
    if (format == "csv") std::cout << report_csv_header() << "\n";
    return run_attack(cfg, format != "csv");
}

int cmd_verify(const std::string& path, bool oracle) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("cannot open report file: " + path);
    Json j = Json::parse(in);
    ExperimentConfig cfg = config_from_json(j.at("config"));
    CodeHandle handle = code_from_json(cfg.code);
    AdversaryReport rep = report_from_json(*handle.tower, j);
    rep = verify_adversary(*handle.code, std::move(rep), oracle || cfg.oracle, guard_from_env());
    std::cout << report_to_json(rep, cfg).dump(2) << "\n";
    if (!rep.valid()) {
        std::cerr << "invalid report: " << rep.witness << "\n";
        return 1;
    }
    return 0;
}

std::vector<std::uint32_t> parse_list(const std::string& csv) {
    std::vector<std::uint32_t> out;
    std::string cur;
    for (char c : csv + ",") {
        if (c == ',') {
            if (!cur.empty()) out.push_back(static_cast<std::uint32_t>(std::stoul(cur)));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    return out;
}

int cmd_table(const std::string& family, const std::string& q_str, const std::string& n_list,
              const std::string& k_list, const std::string& tau_str, const std::string& strategy,
              std::uint32_t s, bool oracle) {
    // q = p^ell for prime p
    const std::uint32_t q = static_cast<std::uint32_t>(std::stoul(q_str));
    std::uint32_t p = q, ell = 1;
    for (std::uint32_t d = 2; (std::uint64_t)d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    if (p != q) {
        std::uint32_t v = q;
        ell = 0;
        while (v % p == 0) {
            v /= p;
            ++ell;
        }
        if (v != 1) throw CLI::ValidationError("q must be a prime power");
    }
    std::cout << report_csv_header() << "\n";
    int worst = 0;
    for (std::uint32_t n : parse_list(n_list)) {
        for (std::uint32_t k : parse_list(k_list)) {
            ExperimentConfig cfg;
            std::ostringstream field;
            field << p << '^' << ell << ':' << n << ':' << n;
            cfg.code = Json{{"field", field.str()}, {"family", family}, {"k", k}, {"s", s}};
            if (family == "H" || family == "Hbar" || family == "D") {
                // pick the smallest admissible eta for the sweep cell
                auto tower = make_tower(parse_field_spec(field.str()));
                FieldElement eta = selftest_detail::find_eta(*tower, family_from_tag(family), k);
                cfg.code["eta"] = std::to_string(eta.encoding());
                cfg.code["h"] = 1;
            }
            cfg.strategy = strategy_from_tag(strategy);
            if (tau_str != "auto") cfg.tau = static_cast<std::uint32_t>(std::stoul(tau_str));
            cfg.oracle = oracle;
            cfg.format = "csv";
            try {
                worst = std::max(worst, run_attack(cfg, /*emit_json=*/false));
            } catch (const std::exception& e) {
                std::cerr << "sweep cell (n=" << n << ", k=" << k << ") failed: " << e.what() << "\n";
                worst = 1;
            }
        }
    }
    return worst;
}

int cmd_selftest() {
    const EnumGuard guard = guard_from_env();
    bool all = true;
    for (const CriterionResult& r : run_acceptance(guard)) {
        std::cout << "criterion " << r.id << ": " << (r.pass ? "PASS" : "FAIL") << " — " << r.name << " ("
                  << r.detail << ") [" << r.seconds << "s]\n";
        all = all && r.pass;
    }
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rank-metric MRD codes and list-decoding lower-bound certification"};
    app.require_subcommand(1);

    auto* construct = app.add_subcommand("construct", "emit a polynomial family as JSON");
    std::string c_family, c_field;
    std::uint32_t c_t = 1, c_s = 1, c_r = 1, c_g = 0;
    construct->add_option("--family", c_family, "trace | trinomial | pigeonhole")->required();
    construct->add_option("--field", c_field, "field spec p^ell:n:m[:modulus_hex]")->required();
    construct->add_option("--t", c_t, "t parameter (trace: t | n; trinomial: n = (t-1)t+1)");
    construct->add_option("--s", c_s, "twist exponent (sigma = q^s)")->default_val(1);
    construct->add_option("--r", c_r, "pigeonhole: subspace dimension");
    construct->add_option("--g", c_g, "pigeonhole: agreed coefficients below the leading one");

    auto* attack = app.add_subcommand("attack", "build and check an adversarial report");
    std::string a_code, a_strategy, a_tau = "auto", a_format = "json";
    bool a_oracle = false;
    attack->add_option("--code", a_code, "code descriptor JSON")->required();
    attack->add_option("--strategy", a_strategy, "trace | trace-gen | trinomial | pigeonhole | pigeonhole-gen")
        ->required();
    attack->add_option("--tau", a_tau, "radius parameter or 'auto'");
    attack->add_flag("--oracle", a_oracle, "confirm with the exhaustive ball count");
    attack->add_option("--format", a_format, "json | csv")->default_val("json");

    auto* verify = app.add_subcommand("verify", "re-check a stored report");
    std::string v_path;
    bool v_oracle = false;
    verify->add_option("--report", v_path, "report JSON file")->required();
    verify->add_flag("--oracle", v_oracle, "also run the exhaustive ball count");

    auto* table = app.add_subcommand("table", "sweep parameters, one CSV row per cell");
    std::string t_family = "G", t_q = "2", t_n, t_k = "2", t_tau = "auto", t_strategy = "trace";
    std::uint32_t t_s = 1;
    bool t_oracle = false;
    table->add_option("--family", t_family, "G | Gsigma | H | Hbar | D");
    table->add_option("--q", t_q, "field size q (prime power)");
    table->add_option("--n", t_n, "comma-separated n values (m = n)")->required();
    table->add_option("--k", t_k, "comma-separated k values");
    table->add_option("--tau", t_tau, "radius or 'auto'");
    table->add_option("--strategy", t_strategy, "attack strategy");
    table->add_option("--s", t_s, "twist exponent");
    table->add_flag("--oracle", t_oracle, "confirm each cell with the oracle");

    auto* selftest = app.add_subcommand("selftest", "run the acceptance battery");

    CLI11_PARSE(app, argc, argv);

    try {
        if (construct->parsed()) return cmd_construct(c_family, c_field, c_t, c_s, c_r, c_g);
        if (attack->parsed()) return cmd_attack(a_code, a_strategy, a_tau, a_oracle, a_format);
        if (verify->parsed()) return cmd_verify(v_path, v_oracle);
        if (table->parsed()) return cmd_table(t_family, t_q, t_n, t_k, t_tau, t_strategy, t_s, t_oracle);
        if (selftest->parsed()) return cmd_selftest();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
