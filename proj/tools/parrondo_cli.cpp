// Command-line front door: analyze, pattern, simulate, sweep, verify.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 computation error.

#include <CLI11.hpp>

#include "parrondo/engine.hpp"
#include "parrondo/io.hpp"
#include "parrondo/runtime.hpp"
#include "parrondo/sim.hpp"
#include "parrondo/verify.hpp"

#include <fstream>
#include <iostream>
#include <mutex>

namespace {

using namespace parrondo;

struct NumberFlag {
    std::string literal;
    Rational value{0};
    bool fraction = false;

    void set(const std::string& text) {
        literal = text;
        value = parse_rational(text);
        fraction = is_fraction_literal(text);
    }
};

Mode resolve_mode(const std::vector<const NumberFlag*>& flags, bool force_exact, bool force_float) {
    if (force_exact && force_float) throw ValidationError("--exact and --float are mutually exclusive");
    if (force_exact) return Mode::exact;
    if (force_float) return Mode::floating;
    for (const auto* f : flags)
        if (f->fraction) return Mode::exact;
    return Mode::floating;
}

std::string mode_name(Mode m) { return m == Mode::exact ? "exact" : "float"; }

void echo_params(const ModelParams& p, std::ostream& out) {
    out << "parameters: rho=" << rational_str(p.rho) << " eps=" << rational_str(p.eps) << " N=" << p.players
        << " mode=" << mode_name(p.mode) << "\n";
}

// Inclusive rational range "start:stop:step", or a comma list.
std::vector<Rational> parse_range(const std::string& text) {
    std::vector<Rational> out;
    if (text.find(':') != std::string::npos) {
        auto first = text.find(':'), second = text.find(':', first + 1);
        if (second == std::string::npos) throw ValidationError("range must be start:stop:step");
        Rational start = parse_rational(text.substr(0, first));
        Rational stop = parse_rational(text.substr(first + 1, second - first - 1));
        Rational step = parse_rational(text.substr(second + 1));
        if (step <= 0) throw ValidationError("range step must be positive");
        for (Rational v = start; v <= stop; v += step) out.push_back(v);
    } else {
        size_t pos = 0;
        while (pos <= text.size()) {
            size_t comma = text.find(',', pos);
            std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            if (!tok.empty()) out.push_back(parse_rational(tok));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    }
    if (out.empty()) throw ValidationError("empty range");
    return out;
}

std::vector<std::pair<int, int>> parse_rs_list(const std::string& text) {
    std::vector<std::pair<int, int>> out;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t semi = text.find(';', pos);
        std::string tok = text.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos);
        auto comma = tok.find(',');
        if (comma == std::string::npos) throw ValidationError("rs list entries look like r,s;r,s;...");
        int r = std::stoi(tok.substr(0, comma)), s = std::stoi(tok.substr(comma + 1));
        out.emplace_back(r, s);
        if (semi == std::string::npos) break;
        pos = semi + 1;
    }
    if (out.empty()) throw ValidationError("empty rs list");
    return out;
}

int cmd_analyze(const ModelParams& params, const Rational& gamma, bool json, const std::string& dump_dir) {
    auto rep = run_analyze(params, gamma);
    if (!dump_dir.empty()) {
        auto coins = derive_coin_probs(params);
        auto one = build_mixture(build_lumped_one<Rational>(Rational(params.players), coins, GameKind::a_prime),
                                 build_lumped_one<Rational>(Rational(params.players), coins, GameKind::b),
                                 gamma);
        auto pair = build_mixture(build_lumped_pair<Rational>(Rational(params.players), coins, GameKind::a_prime),
                                  build_lumped_pair<Rational>(Rational(params.players), coins, GameKind::b),
                                  gamma);
        auto dump = [&](const Matrix<Rational>& m, const std::string& base) {
            std::ofstream csv(dump_dir + "/" + base + ".csv");
            write_matrix_csv(csv, m);
            std::ofstream js(dump_dir + "/" + base + ".json");
            js << matrix_json(m) << "\n";
        };
        dump(one.P, "one_player_P");
        dump(*one.W, "one_player_W");
        dump(pair.P, "pair_P");
        dump(*pair.W1, "pair_W1");
        dump(*pair.W2, "pair_W2");
    }
    if (json) {
        std::cout << analyze_json(rep) << "\n";
        return 0;
    }
    echo_params(params, std::cout);
    std::cout << "gamma: " << rational_str(gamma) << "\n"
              << "per-player mu:      " << rep.per_player_mu.pretty() << "\n"
              << "per-player sigma2:  " << rep.per_player_sigma2.pretty() << "\n"
              << "pair covariance:    " << rep.pair_cov.pretty() << "\n"
              << "ensemble mu:        " << rep.ensemble_mu.pretty() << "\n"
              << "ensemble sigma2:    " << rep.ensemble_sigma2.pretty() << "\n";
    std::cout << "one-player stationary law: [";
    for (size_t i = 0; i < rep.pi_one.size(); ++i) std::cout << (i ? ", " : "") << rep.pi_one[i].str();
    std::cout << "]\n";
    if (!rep.sigma2_nonnegative) std::cout << "warning: sigma2 <= 0; CLT does not apply\n";
    return 0;
}

int cmd_pattern(const ModelParams& params, int r, int s, bool limit, bool json) {
    auto rep = run_pattern(params, r, s, limit);
    if (json) {
        std::cout << pattern_json(rep) << "\n";
        return 0;
    }
    echo_params(params, std::cout);
    std::cout << "pattern: [" << r << "," << s << "]\n"
              << "ensemble mu:        " << rep.ensemble_mu.pretty() << "\n"
              << "ensemble sigma2:    " << rep.ensemble_sigma2.pretty() << "\n"
              << "pair covariance:    " << rep.pair_cov.pretty() << "\n"
              << "per-player mu:      " << rep.per_player_mu.pretty() << "\n"
              << "per-player sigma2:  " << rep.per_player_sigma2.pretty() << "\n"
              << "sample-var slope:   " << rep.svar_slope.pretty() << "\n"
              << "phase-chain check:  " << (rep.methods_agree ? "agrees" : "DISAGREES") << "\n";
    if (rep.mu_limit)
        std::cout << "limit mu:           " << rep.mu_limit->pretty() << "\n"
                  << "limit sigma2:       " << rep.sigma2_limit->pretty() << "\n";
    return 0;
}

int cmd_simulate(SimConfig cfg, bool want_clt, const std::string& trace_file, long trace_every) {
    cfg.validate();
    if (!trace_file.empty()) {
        std::ofstream out(trace_file);
        if (!out) throw Error("cannot write " + trace_file);
        simulate_trace(cfg, 0, trace_every, out);
    }
    auto res = simulate(cfg);
    std::optional<CltDiagnostic> clt;
    if (want_clt) {
        double mu = 0, s2 = 0;
        ModelParams exact_params = cfg.params;
        exact_params.mode = Mode::exact;
        if (cfg.schedule == ScheduleKind::mixture) {
            auto a = analyze_mixture_lumped<Rational>(Rational(cfg.params.players), cfg.gamma,
                                                      derive_coin_probs(exact_params));
            mu = scalar_traits<Rational>::to_double(a.ensemble_mu);
            s2 = scalar_traits<Rational>::to_double(a.ensemble_sigma2);
        } else if (cfg.schedule == ScheduleKind::pattern) {
            auto e = pattern_ensemble_stats<Rational>(cfg.pattern.r, cfg.pattern.s, Rational(cfg.params.players),
                                                      derive_coin_probs(exact_params));
            mu = scalar_traits<Rational>::to_double(e.ensemble_mu);
            s2 = scalar_traits<Rational>::to_double(e.ensemble_sigma2);
        } else {
            throw ValidationError("--clt needs a mixture or pattern schedule");
        }
        clt = clt_check(res, mu, s2);
    }
    std::cout << simulation_json(cfg, res, clt) << "\n";
    return 0;
}

int cmd_sweep(const std::string& var, const std::string& range, const std::string& rs_list, ModelParams params,
              Rational gamma, const std::string& out_path, int threads) {
    std::ofstream out(out_path);
    if (!out) throw Error("cannot write " + out_path);

    struct Row {
        std::string r, s, n, rho, gamma_equiv, mu, sigma2, method;
    };
    std::vector<Row> rows;
    auto analyze_row = [&](const ModelParams& p, const Rational& g) {
        auto rep = run_analyze(p, g);
        return Row{"", "", std::to_string(p.players), rational_str(p.rho), rational_str(g),
                   rep.ensemble_mu.str(), rep.ensemble_sigma2.str(), "lumped"};
    };

    if (var == "gamma") {
        auto grid = parse_range(range);
        rows.resize(grid.size());
        parallel_for(static_cast<int>(grid.size()), threads,
                     [&](int i) { rows[static_cast<size_t>(i)] = analyze_row(params, grid[static_cast<size_t>(i)]); });
    } else if (var == "rho") {
        auto grid = parse_range(range);
        rows.resize(grid.size());
        parallel_for(static_cast<int>(grid.size()), threads, [&](int i) {
            ModelParams p = params;
            p.rho = grid[static_cast<size_t>(i)];
            rows[static_cast<size_t>(i)] = analyze_row(p, gamma);
        });
    } else if (var == "N") {
        auto grid = parse_range(range);
        rows.resize(grid.size());
        parallel_for(static_cast<int>(grid.size()), threads, [&](int i) {
            const Rational& v = grid[static_cast<size_t>(i)];
            if (denominator(v) != 1) throw ValidationError("N sweep needs integers");
            ModelParams p = params;
            p.players = static_cast<int>(numerator(v).convert_to<long>());
            rows[static_cast<size_t>(i)] = analyze_row(p, gamma);
        });
    } else if (var == "rs") {
        auto grid = parse_rs_list(rs_list.empty() ? range : rs_list);
        rows.resize(grid.size());
        parallel_for(static_cast<int>(grid.size()), threads, [&](int i) {
            auto [r, s] = grid[static_cast<size_t>(i)];
            auto rep = run_pattern(params, r, s, false);
            rows[static_cast<size_t>(i)] =
                Row{std::to_string(r), std::to_string(s), std::to_string(params.players), rational_str(params.rho),
                    rational_str(Rational(r) / Rational(r + s)), rep.ensemble_mu.str(), rep.ensemble_sigma2.str(),
                    "cycle-sums"};
        });
    } else {
        throw ValidationError("--var must be one of gamma|rho|N|rs");
    }

    out << sweep_csv_header() << "\n";
    const std::string mode = mode_name(params.mode);
    for (const auto& r : rows)
        out << r.r << "," << r.s << "," << r.n << "," << r.rho << "," << r.gamma_equiv << "," << r.mu << ","
            << r.sigma2 << "," << r.method << "," << mode << "\n";
    std::cout << "wrote " << rows.size() << " rows to " << out_path << "\n";
    return 0;
}

int cmd_verify(const std::string& case_id, const std::string& group, bool run_all, bool list_only, int threads) {
    using verify::Case;
    std::vector<const Case*> selected;
    if (list_only) {
        for (const auto& c : verify::all_cases())
            std::cout << c.id << "  [" << c.group << "] " << c.description << "\n";
        return 0;
    }
    if (!case_id.empty()) {
        const Case* c = verify::find_case(case_id);
        if (!c) throw ValidationError("unknown case id: " + case_id + " (use `verify --list`)");
        selected.push_back(c);
    } else if (!group.empty()) {
        selected = verify::cases_in_group(group);
        if (selected.empty()) throw ValidationError("unknown group: " + group);
    } else if (run_all) {
        for (const auto& c : verify::all_cases()) selected.push_back(&c);
    } else {
        throw ValidationError("choose --case ID, --group G, --all, or --list");
    }

    std::vector<verify::CaseResult> results(selected.size());
    parallel_for(static_cast<int>(selected.size()), threads,
                 [&](int i) { results[static_cast<size_t>(i)] = selected[static_cast<size_t>(i)]->run(); });

    int failures = 0;
    for (size_t i = 0; i < selected.size(); ++i) {
        const auto& c = *selected[i];
        const auto& r = results[i];
        std::cout << (r.pass ? "PASS" : "FAIL") << "  " << c.id << "\n";
        std::cout << "      expected: " << r.expected << "\n";
        std::cout << "      computed: " << r.computed << "\n";
        if (!r.note.empty()) std::cout << "      note:     " << r.note << "\n";
        if (!r.pass) ++failures;
    }
    std::cout << (failures == 0 ? "all checks passed" : std::to_string(failures) + " check(s) FAILED") << " ("
              << selected.size() << " run)\n";
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"analysis engine for N-player capital-redistribution games"};
    app.require_subcommand(1);

    // analyze
    auto* analyze = app.add_subcommand("analyze", "mean/variance parameters of a random mixture");
    NumberFlag a_rho, a_eps, a_gamma;
    a_eps.set("0");
    int a_n = 2;
    bool a_exact = false, a_float = false, a_json = false;
    std::string a_dump;
    analyze->add_option_function<std::string>("--rho", [&](const std::string& v) { a_rho.set(v); }, "rho (a/b or decimal)")->required();
    analyze->add_option_function<std::string>("--eps", [&](const std::string& v) { a_eps.set(v); }, "bias parameter");
    analyze->add_option_function<std::string>("--gamma", [&](const std::string& v) { a_gamma.set(v); }, "probability of the redistribution game")->required();
    analyze->add_option("--N", a_n, "number of players")->required();
    analyze->add_flag("--exact", a_exact, "force exact rational arithmetic");
    analyze->add_flag("--float", a_float, "force floating-point arithmetic");
    analyze->add_flag("--json", a_json, "JSON output");
    analyze->add_option("--dump-chains", a_dump, "directory for CSV/JSON exports of the chain matrices");

    // pattern
    auto* pattern = app.add_subcommand("pattern", "mean/variance parameters of the periodic pattern (A')^r B^s");
    NumberFlag p_rho, p_eps;
    p_eps.set("0");
    int p_r = 1, p_s = 1, p_n = 2;
    bool p_exact = false, p_float = false, p_json = false, p_limit = false;
    pattern->add_option_function<std::string>("--rho", [&](const std::string& v) { p_rho.set(v); }, "rho")->required();
    pattern->add_option_function<std::string>("--eps", [&](const std::string& v) { p_eps.set(v); }, "bias parameter");
    pattern->add_option("--r", p_r, "redistribution turns per period")->required();
    pattern->add_option("--s", p_s, "game-B turns per period")->required();
    pattern->add_option("--N", p_n, "number of players (ignored with --limit-only output)");
    pattern->add_flag("--exact", p_exact, "force exact rational arithmetic");
    pattern->add_flag("--float", p_float, "force floating-point arithmetic");
    pattern->add_flag("--limit", p_limit, "also report exact N -> infinity values");
    pattern->add_flag("--json", p_json, "JSON output");

    // simulate
    auto* simulate_cmd = app.add_subcommand("simulate", "seeded Monte Carlo simulation");
    NumberFlag s_rho, s_eps, s_gamma;
    s_eps.set("0");
    int s_n = 2, s_reps = 100, s_r = 0, s_s = 0, s_threads = 0;
    long s_turns = 100000, s_trace_every = 1;
    uint64_t s_seed = 1;
    bool s_pure_a = false, s_pure_b = false, s_clt = false;
    std::string s_trace;
    simulate_cmd->add_option_function<std::string>("--rho", [&](const std::string& v) { s_rho.set(v); }, "rho")->required();
    simulate_cmd->add_option_function<std::string>("--eps", [&](const std::string& v) { s_eps.set(v); }, "bias parameter");
    simulate_cmd->add_option_function<std::string>("--gamma", [&](const std::string& v) { s_gamma.set(v); }, "mixture schedule");
    simulate_cmd->add_option("--r", s_r, "pattern schedule: redistribution turns");
    simulate_cmd->add_option("--s", s_s, "pattern schedule: game-B turns");
    simulate_cmd->add_flag("--pure-a", s_pure_a, "play only the redistribution game");
    simulate_cmd->add_flag("--pure-b", s_pure_b, "play only game B");
    simulate_cmd->add_option("--N", s_n, "number of players")->required();
    simulate_cmd->add_option("--turns", s_turns, "turns per replication");
    simulate_cmd->add_option("--reps", s_reps, "replications");
    simulate_cmd->add_option("--seed", s_seed, "master seed");
    simulate_cmd->add_option("--threads", s_threads, "worker threads (default: PARRONDO_THREADS or hardware)");
    simulate_cmd->add_flag("--clt", s_clt, "report CLT diagnostics against the analytic parameters");
    simulate_cmd->add_option("--trace", s_trace, "write a per-turn CSV trace of replication 0");
    simulate_cmd->add_option("--trace-every", s_trace_every, "trace stride in turns");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "grid sweep to CSV");
    NumberFlag w_rho, w_eps, w_gamma;
    w_rho.set("1/3");
    w_eps.set("0");
    w_gamma.set("1/2");
    std::string w_var, w_range, w_rs, w_out;
    int w_n = 2, w_threads = 0;
    bool w_exact = false, w_float = false;
    sweep->add_option("--var", w_var, "gamma|rho|N|rs")->required();
    sweep->add_option("--range", w_range, "start:stop:step or comma list (rs: r,s;r,s;...)");
    sweep->add_option("--list", w_rs, "alias of --range for rs pairs");
    sweep->add_option_function<std::string>("--rho", [&](const std::string& v) { w_rho.set(v); }, "fixed rho");
    sweep->add_option_function<std::string>("--eps", [&](const std::string& v) { w_eps.set(v); }, "fixed eps");
    sweep->add_option_function<std::string>("--gamma", [&](const std::string& v) { w_gamma.set(v); }, "fixed gamma");
    sweep->add_option("--N", w_n, "fixed number of players");
    sweep->add_option("--out", w_out, "output CSV path")->required();
    sweep->add_option("--threads", w_threads, "worker threads");
    sweep->add_flag("--exact", w_exact, "exact rational arithmetic");
    sweep->add_flag("--float", w_float, "floating-point arithmetic");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run registered value and property checks");
    std::string v_case, v_group;
    bool v_all = false, v_list = false;
    int v_threads = 0;
    verify_cmd->add_option("--case", v_case, "run one case by id");
    verify_cmd->add_option("--group", v_group, "run one group: exact|crosspath|properties|montecarlo");
    verify_cmd->add_flag("--all", v_all, "run every registered case");
    verify_cmd->add_flag("--list", v_list, "list case ids");
    verify_cmd->add_option("--threads", v_threads, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (analyze->parsed()) {
            ModelParams params;
            params.rho = a_rho.value;
            params.eps = a_eps.value;
            params.players = a_n;
            params.mode = resolve_mode({&a_rho, &a_eps, &a_gamma}, a_exact, a_float);
            return cmd_analyze(params, a_gamma.value, a_json, a_dump);
        }
        if (pattern->parsed()) {
            ModelParams params;
            params.rho = p_rho.value;
            params.eps = p_eps.value;
            params.players = p_n;
            params.mode = resolve_mode({&p_rho, &p_eps}, p_exact, p_float);
            return cmd_pattern(params, p_r, p_s, p_limit, p_json);
        }
        if (simulate_cmd->parsed()) {
            SimConfig cfg;
            cfg.params.rho = s_rho.value;
            cfg.params.eps = s_eps.value;
            cfg.params.players = s_n;
            cfg.params.mode = Mode::floating;
            int schedules = (s_gamma.literal.empty() ? 0 : 1) + ((s_r > 0 || s_s > 0) ? 1 : 0) + (s_pure_a ? 1 : 0) +
                            (s_pure_b ? 1 : 0);
            if (schedules != 1)
                throw ValidationError("choose exactly one schedule: --gamma, --r/--s, --pure-a, or --pure-b");
            if (!s_gamma.literal.empty()) {
                cfg.schedule = ScheduleKind::mixture;
                cfg.gamma = s_gamma.value;
            } else if (s_r > 0 || s_s > 0) {
                cfg.schedule = ScheduleKind::pattern;
                cfg.pattern = PatternSpec{s_r, s_s};
            } else {
                cfg.schedule = s_pure_a ? ScheduleKind::pure_a_prime : ScheduleKind::pure_b;
            }
            cfg.turns = s_turns;
            cfg.replications = s_reps;
            cfg.seed = s_seed;
            cfg.threads = s_threads;
            return cmd_simulate(cfg, s_clt, s_trace, s_trace_every);
        }
        if (sweep->parsed()) {
            ModelParams params;
            params.rho = w_rho.value;
            params.eps = w_eps.value;
            params.players = w_n;
            params.mode = resolve_mode({&w_rho, &w_eps, &w_gamma}, w_exact, w_float);
            return cmd_sweep(w_var, w_range, w_rs, params, w_gamma.value, w_out, w_threads);
        }
        if (verify_cmd->parsed()) return cmd_verify(v_case, v_group, v_all, v_list, v_threads);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "computation error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
