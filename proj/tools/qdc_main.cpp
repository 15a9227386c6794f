// qdc - command-line front end for the differential-analysis workbench.
//
// Every command writes JSON lines; the first record echoes the full
// effective configuration (seed included, generated if absent) so any run
// can be replayed bit-identically.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "qdc/json_io.hpp"

using nlohmann::json;

namespace {

struct Options {
    uint64_t seed = 0;
    bool seed_given = false;
    std::string out;
    std::string config_path;
    std::string fixture;
    std::string sbox_path;
    std::string spec_path;
    std::string csv_path;
    std::string dump_sbox;
    int component = 0;  // 0 = all components
    uint64_t p = 0;     // 0 = use choose_p
    double c = 2.0;
    double c1 = 2.0;
    double c2 = 0.0;  // 0 = default 1 + ln(n)/2
    std::size_t cap = qdc::kDefaultEnumCap;
    int min_known = 1;
    std::size_t pairs = 0;  // 0 = ceil(8/prob)
    std::size_t trials = 0;
    int m = 8;
    int n = 4;
    double epsilon = 0.25;
    bool partial = false;
    int max_groups = 3;
    std::size_t top = 16;
};

// The config file takes precedence over flags: any key present replaces
// the parsed value.
void apply_config_file(Options& o) {
    if (o.config_path.empty()) return;
    std::ifstream in(o.config_path);
    if (!in) throw std::invalid_argument("cannot open config file " + o.config_path);
    json j = json::parse(in);
    if (j.contains("seed")) {
        o.seed = j["seed"].get<uint64_t>();
        o.seed_given = true;
    }
    if (j.contains("fixture")) o.fixture = j["fixture"].get<std::string>();
    if (j.contains("sbox")) o.sbox_path = j["sbox"].get<std::string>();
    if (j.contains("spec")) o.spec_path = j["spec"].get<std::string>();
    if (j.contains("csv")) o.csv_path = j["csv"].get<std::string>();
    if (j.contains("component")) o.component = j["component"].get<int>();
    if (j.contains("p")) o.p = j["p"].get<uint64_t>();
    if (j.contains("c")) o.c = j["c"].get<double>();
    if (j.contains("c1")) o.c1 = j["c1"].get<double>();
    if (j.contains("c2")) o.c2 = j["c2"].get<double>();
    if (j.contains("cap")) o.cap = j["cap"].get<std::size_t>();
    if (j.contains("min_known")) o.min_known = j["min_known"].get<int>();
    if (j.contains("pairs")) o.pairs = j["pairs"].get<std::size_t>();
    if (j.contains("trials")) o.trials = j["trials"].get<std::size_t>();
    if (j.contains("m")) o.m = j["m"].get<int>();
    if (j.contains("n")) o.n = j["n"].get<int>();
    if (j.contains("epsilon")) o.epsilon = j["epsilon"].get<double>();
    if (j.contains("partial")) o.partial = j["partial"].get<bool>();
    if (j.contains("max_groups")) o.max_groups = j["max_groups"].get<int>();
    if (j.contains("top")) o.top = j["top"].get<std::size_t>();
}

void ensure_seed(Options& o) {
    if (!o.seed_given) {
        std::random_device rd;
        o.seed = (uint64_t(rd()) << 32) | rd();
        o.seed_given = true;
    }
}

qdc::TruthTable load_sbox(const Options& o) {
    if (!o.fixture.empty() && !o.sbox_path.empty())
        throw std::invalid_argument("give either --fixture or --sbox, not both");
    if (!o.fixture.empty()) return qdc::fixture_sbox(o.fixture);
    if (!o.sbox_path.empty()) {
        std::ifstream in(o.sbox_path);
        if (!in) throw std::invalid_argument("cannot open S-box file " + o.sbox_path);
        return qdc::truth_table_from_json(json::parse(in));
    }
    throw std::invalid_argument("an S-box is required: --fixture NAME or --sbox FILE");
}

qdc::SpnSpec load_spec(const Options& o) {
    if (o.spec_path.empty()) return qdc::SpnSpec::reference();
    std::ifstream in(o.spec_path);
    if (!in) throw std::invalid_argument("cannot open cipher spec " + o.spec_path);
    return qdc::spn_spec_from_json(json::parse(in));
}

qdc::ParamConfig params_of(const Options& o) {
    qdc::ParamConfig cfg;
    cfg.c = o.c;
    cfg.c1 = o.c1;
    if (o.c2 > 0) cfg.c2 = o.c2;
    if (o.p > 0) cfg.p_override = o.p;
    return cfg;
}

json base_config(const std::string& command, const Options& o) {
    json j{{"type", "config"}, {"command", command}, {"seed", o.seed}};
    if (!o.fixture.empty()) j["fixture"] = o.fixture;
    if (!o.sbox_path.empty()) j["sbox"] = o.sbox_path;
    return j;
}

void emit(std::ostream& os, const json& j) { os << j.dump() << "\n"; }

void write_output(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output file " + o.out);
    f << text;
}

// ----------------------------------------------------------------------
// commands

void cmd_spectrum(Options& o) {
    apply_config_file(o);
    const qdc::TruthTable F = load_sbox(o);
    if (!o.dump_sbox.empty()) {
        std::ofstream f(o.dump_sbox, std::ios::binary);
        if (!f) throw std::invalid_argument("cannot open " + o.dump_sbox);
        f << qdc::to_json(F).dump() << "\n";
    }
    std::ostringstream os;
    json cfg = base_config("spectrum", o);
    cfg["component"] = o.component;
    emit(os, cfg);
    const int lo = o.component == 0 ? 1 : o.component;
    const int hi = o.component == 0 ? F.n() : o.component;
    for (int j = lo; j <= hi; ++j) {
        const auto spec = qdc::walsh_spectrum(qdc::component(F, j));
        emit(os, json{{"type", "spectrum"}, {"component", j}, {"m", spec.m}, {"coeffs", spec.coeffs}});
    }
    write_output(o, os.str());
}

void cmd_bv_sample(Options& o) {
    apply_config_file(o);
    ensure_seed(o);
    const qdc::TruthTable F = load_sbox(o);
    const int j = o.component == 0 ? 1 : o.component;
    const uint64_t p = o.p ? o.p : qdc::choose_p(F.m(), F.n(), params_of(o));
    std::ostringstream os;
    json cfg = base_config("bv-sample", o);
    cfg["component"] = j;
    cfg["p"] = p;
    emit(os, cfg);
    qdc::Rng rng(o.seed);
    const auto samples = qdc::bv_batch(qdc::component(F, j), std::size_t(p), rng);
    json rec = qdc::to_json(samples);
    rec["type"] = "samples";
    rec["component"] = j;
    emit(os, rec);
    write_output(o, os.str());
}

json effective_algo_config(const std::string& command, const Options& o, const qdc::TruthTable& F,
                           uint64_t p) {
    json cfg = base_config(command, o);
    cfg["p"] = p;
    cfg["c"] = o.c;
    cfg["c1"] = o.c1;
    cfg["c2"] = params_of(o).effective_c2(F.n());
    cfg["epsilon"] = params_of(o).epsilon(F.n());
    return cfg;
}

void cmd_algo1(Options& o) {
    apply_config_file(o);
    ensure_seed(o);
    const qdc::TruthTable F = load_sbox(o);
    const uint64_t p = o.p ? o.p : qdc::choose_p(F.m(), F.n(), params_of(o));
    std::ostringstream os;
    emit(os, effective_algo_config("algo1", o, F, p));
    const auto sets = qdc::algorithm1(F, std::size_t(p), qdc::Rng(o.seed));
    for (int j = 1; j <= F.n(); ++j) {
        json rec = qdc::to_json(sets[j - 1]);
        rec["type"] = "solution_sets";
        rec["component"] = j;
        emit(os, rec);
    }
    write_output(o, os.str());
}

void cmd_algo2(Options& o) {
    apply_config_file(o);
    ensure_seed(o);
    const qdc::TruthTable F = load_sbox(o);
    const uint64_t p = o.p ? o.p : qdc::choose_p(F.m(), F.n(), params_of(o));
    std::ostringstream os;
    json cfg = effective_algo_config("algo2", o, F, p);
    cfg["partial"] = o.partial;
    cfg["min_known"] = o.min_known;
    cfg["cap"] = o.cap;
    emit(os, cfg);
    const auto sets = qdc::algorithm1(F, std::size_t(p), qdc::Rng(o.seed));
    const auto cands = o.partial ? qdc::algorithm2_partial(sets, o.min_known, o.cap)
                                 : qdc::algorithm2_full(sets, o.cap);
    for (const auto& c : cands) {
        json rec = qdc::to_json(c);
        rec["type"] = "candidate";
        emit(os, rec);
    }
    write_output(o, os.str());
}

void cmd_ddt(Options& o) {
    apply_config_file(o);
    const qdc::TruthTable F = load_sbox(o);
    const qdc::Ddt table = qdc::ddt(F);
    std::ostringstream os;
    json cfg = base_config("ddt", o);
    if (!o.csv_path.empty()) cfg["csv"] = o.csv_path;
    emit(os, cfg);
    const std::size_t row_len = std::size_t(1) << table.n;
    for (std::size_t a = 0; a < (std::size_t(1) << table.m); ++a) {
        std::vector<uint32_t> row(table.counts.begin() + a * row_len,
                                  table.counts.begin() + (a + 1) * row_len);
        emit(os, json{{"type", "ddt_row"}, {"a", a}, {"counts", row}});
    }
    if (!o.csv_path.empty()) {
        std::ofstream f(o.csv_path, std::ios::binary);
        if (!f) throw std::invalid_argument("cannot open " + o.csv_path);
        f << qdc::ddt_to_csv(table);
    }
    write_output(o, os.str());
}

void cmd_verify(Options& o) {
    apply_config_file(o);
    ensure_seed(o);
    const qdc::TruthTable F = load_sbox(o);
    const uint64_t p = o.p ? o.p : qdc::choose_p(F.m(), F.n(), params_of(o));
    std::ostringstream os;
    json cfg = effective_algo_config("verify", o, F, p);
    cfg["partial"] = o.partial;
    emit(os, cfg);
    const auto sets = qdc::algorithm1(F, std::size_t(p), qdc::Rng(o.seed));
    const auto cands = o.partial ? qdc::algorithm2_partial(sets, o.min_known, o.cap)
                                 : qdc::algorithm2_full(sets, o.cap);
    for (const auto& v : qdc::verify_candidates(F, cands)) {
        json rec = qdc::to_json(v);
        rec["type"] = "verified";
        emit(os, rec);
    }
    write_output(o, os.str());
}

void cmd_attack(Options& o) {
    apply_config_file(o);
    ensure_seed(o);
    const qdc::SpnSpec spec = load_spec(o);
    qdc::AttackConfig cfg;
    cfg.params = params_of(o);
    cfg.min_known = o.min_known;
    cfg.cap = o.cap;
    cfg.max_groups = o.max_groups;
    cfg.num_pairs = o.pairs;
    cfg.top = o.top;

    const qdc::SpnKey key = qdc::SpnKey::from_seed(spec, o.seed);
    const auto outcome = qdc::run_method2_attack(spec, key, cfg, qdc::Rng(o.seed));

    std::ostringstream os;
    json c = base_config("attack", o);
    if (!o.spec_path.empty()) c["spec"] = o.spec_path;
    c["p"] = qdc::choose_p(spec.k(), spec.k(), cfg.params);
    c["pairs"] = o.pairs;
    c["min_known"] = o.min_known;
    c["cap"] = o.cap;
    c["max_groups"] = o.max_groups;
    c["top"] = o.top;
    emit(os, c);

    if (!outcome.found_candidate) {
        emit(os, json{{"type", "attack_summary"},
                      {"found_candidate", false},
                      {"hint", "no usable differential; increase p or lower min_known"}});
        write_output(o, os.str());
        return;
    }
    json cand = qdc::to_json(outcome.candidate);
    cand["type"] = "attack_candidate";
    cand["num"] = outcome.prob.num;
    cand["den"] = outcome.prob.den;
    cand["prob"] = outcome.prob.value();
    emit(os, cand);
    for (std::size_t i = 0; i < outcome.ranking.size(); ++i)
        emit(os, json{{"type", "guess"},
                      {"rank", i},
                      {"value", outcome.ranking[i].value},
                      {"counter", outcome.ranking[i].counter}});
    emit(os, json{{"type", "attack_summary"},
                  {"found_candidate", true},
                  {"num_pairs", outcome.num_pairs},
                  {"group_mask", outcome.group_mask},
                  {"true_subkey", outcome.true_subkey},
                  {"success", outcome.success}});
    write_output(o, os.str());
}

void cmd_validate_t1(Options& o) {
    apply_config_file(o);
    ensure_seed(o);
    const std::size_t trials = o.trials ? o.trials : 200;
    const uint64_t p = o.p ? o.p : 64;
    std::ostringstream os;
    json cfg = base_config("validate-t1", o);
    cfg["m"] = o.m;
    cfg["trials"] = trials;
    cfg["p"] = p;
    cfg["epsilon"] = o.epsilon;
    emit(os, cfg);
    const auto rep = qdc::validate_theorem1(o.m, trials, p, o.epsilon, qdc::Rng(o.seed));
    json rec = qdc::to_json(rep);
    rec["type"] = "validation_report";
    emit(os, rec);
    write_output(o, os.str());
}

void cmd_validate_joint(Options& o) {
    apply_config_file(o);
    ensure_seed(o);
    const std::size_t trials = o.trials ? o.trials : 100;
    const qdc::ParamConfig params = params_of(o);
    std::ostringstream os;
    json cfg = base_config("validate-joint", o);
    cfg["m"] = o.m;
    cfg["n"] = o.n;
    cfg["trials"] = trials;
    cfg["p"] = qdc::choose_p(o.m, o.n, params);
    cfg["c"] = o.c;
    cfg["c1"] = o.c1;
    cfg["c2"] = params.effective_c2(o.n);
    cfg["epsilon"] = params.epsilon(o.n);
    emit(os, cfg);
    const auto rep = qdc::validate_joint_bound(o.m, o.n, trials, params, qdc::Rng(o.seed));
    json rec = qdc::to_json(rep);
    rec["type"] = "validation_report";
    emit(os, rec);
    write_output(o, os.str());
}

void add_common(CLI::App* cmd, Options& o) {
    cmd->add_option("--seed", o.seed, "64-bit seed (generated and echoed when omitted)")
        ->each([&o](const std::string&) { o.seed_given = true; });
    cmd->add_option("--out", o.out, "write JSON lines to this file instead of stdout");
    cmd->add_option("--config", o.config_path, "JSON config file; overrides flags");
}

void add_sbox_opts(CLI::App* cmd, Options& o) {
    cmd->add_option("--fixture", o.fixture, "built-in S-box name");
    cmd->add_option("--sbox", o.sbox_path, "S-box JSON file {\"m\",\"n\",\"table\"}");
}

void add_param_opts(CLI::App* cmd, Options& o) {
    cmd->add_option("--p", o.p, "BV run count (default max{c*m, ceil(c2*c1^2*n^2)})");
    cmd->add_option("--c", o.c, "p(m) multiplier, p(m) = c*m");
    cmd->add_option("--c1", o.c1, "epsilon denominator factor, epsilon = 1/(c1*n)");
    cmd->add_option("--c2", o.c2, "exponent constant (default 1 + ln(n)/2)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "qdc: Bernstein-Vazirani differential analysis of S-boxes and toy SPN ciphers.\n"
        "Built-in fixtures: identity4, linear4 (multiplication by x in GF(16)),\n"
        "ls4 (one exact linear structure 1 -> 2), present4 (PRESENT cipher S-box),\n"
        "biased4 (no structures, one 3/4-probability differential), bent4 (4 -> 1,\n"
        "flat spectrum)."};
    app.require_subcommand(1);
    Options o;

    auto* spectrum = app.add_subcommand("spectrum", "exact Walsh spectra of S-box components");
    add_common(spectrum, o);
    add_sbox_opts(spectrum, o);
    spectrum->add_option("--component", o.component, "component index 1..n (default: all)");
    spectrum->add_option("--dump-sbox", o.dump_sbox, "also write the S-box as JSON");
    spectrum->callback([&] { cmd_spectrum(o); });

    auto* bv = app.add_subcommand("bv-sample", "draw exact BV measurement samples");
    add_common(bv, o);
    add_sbox_opts(bv, o);
    add_param_opts(bv, o);
    bv->add_option("--component", o.component, "component index (default 1)");
    bv->callback([&] { cmd_bv_sample(o); });

    auto* a1 = app.add_subcommand("algo1", "per-component BV sampling and GF(2) solving");
    add_common(a1, o);
    add_sbox_opts(a1, o);
    add_param_opts(a1, o);
    a1->callback([&] { cmd_algo1(o); });

    auto* a2 = app.add_subcommand("algo2", "combine solution sets into differential candidates");
    add_common(a2, o);
    add_sbox_opts(a2, o);
    add_param_opts(a2, o);
    a2->add_flag("--partial", o.partial, "keep going on unknown bits (line-5-free walk)");
    a2->add_option("--min-known", o.min_known, "minimum known output bits (partial walk)");
    a2->add_option("--cap", o.cap, "max solution-set dimension to enumerate");
    a2->callback([&] { cmd_algo2(o); });

    auto* dd = app.add_subcommand("ddt", "exact difference distribution table");
    add_common(dd, o);
    add_sbox_opts(dd, o);
    dd->add_option("--csv", o.csv_path, "also dump the table as CSV");
    dd->callback([&] { cmd_ddt(o); });

    auto* ver = app.add_subcommand("verify", "run the pipeline and attach exact probabilities");
    add_common(ver, o);
    add_sbox_opts(ver, o);
    add_param_opts(ver, o);
    ver->add_flag("--partial", o.partial, "use the line-5-free walk");
    ver->add_option("--min-known", o.min_known, "minimum known output bits (partial walk)");
    ver->add_option("--cap", o.cap, "max solution-set dimension to enumerate");
    ver->callback([&] { cmd_verify(o); });

    auto* att = app.add_subcommand(
        "attack",
        "whole-cipher pipeline plus last-round subkey recovery. The sampler reads component "
        "spectra straight from (spec, key): the quantum-oracle model, not a classical attack.");
    add_common(att, o);
    add_param_opts(att, o);
    att->add_option("--spec", o.spec_path, "cipher spec JSON (default: built-in reference)");
    att->add_option("--pairs", o.pairs, "plaintext pairs (default ceil(8/prob))");
    att->add_option("--min-known", o.min_known, "minimum known output bits in the walk");
    att->add_option("--cap", o.cap, "max solution-set dimension to enumerate");
    att->add_option("--max-groups", o.max_groups, "max S-box groups to guess at once");
    att->add_option("--top", o.top, "ranking entries to report");
    att->callback([&] { cmd_attack(o); });

    auto* v1 = app.add_subcommand("validate-t1", "Monte Carlo check of the per-bit bound");
    add_common(v1, o);
    v1->add_option("--m", o.m, "input width (<= 12)");
    v1->add_option("--trials", o.trials, "random-function trials (default 200)");
    v1->add_option("--p", o.p, "BV run count (default 64)");
    v1->add_option("--epsilon", o.epsilon, "probability slack in (0,1)");
    v1->callback([&] { cmd_validate_t1(o); });

    auto* vj = app.add_subcommand("validate-joint", "Monte Carlo check of the whole-S-box bound");
    add_common(vj, o);
    add_param_opts(vj, o);
    vj->add_option("--m", o.m, "input width (<= 12)");
    vj->add_option("--n", o.n, "output width");
    vj->add_option("--trials", o.trials, "random S-box trials (default 100)");
    vj->callback([&] { cmd_validate_joint(o); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const qdc::DimensionTooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const qdc::GuessSpaceTooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
