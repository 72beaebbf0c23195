#include "parrondo/io.hpp"

#include <json.hpp>

namespace parrondo {

namespace {

using nlohmann::json;

json scalar_json(const ScalarValue& v) { return v.str(); }

json params_json(const ModelParams& p) {
    return {{"rho", rational_str(p.rho)},
            {"eps", rational_str(p.eps)},
            {"N", p.players},
            {"mode", p.mode == Mode::exact ? "exact" : "float"}};
}

}  // namespace

std::string analyze_json(const AnalyzeReport& rep) {
    json j;
    j["mu"] = scalar_json(rep.ensemble_mu);
    j["sigma2"] = scalar_json(rep.ensemble_sigma2);
    j["sigma12"] = scalar_json(rep.pair_cov);
    j["mode"] = rep.params.mode == Mode::exact ? "exact" : "float";
    j["params"] = params_json(rep.params);
    j["params"]["gamma"] = rational_str(rep.gamma);
    j["per_player"] = {{"mu", scalar_json(rep.per_player_mu)}, {"sigma2", scalar_json(rep.per_player_sigma2)}};
    json pi = json::array();
    for (const auto& x : rep.pi_one) pi.push_back(scalar_json(x));
    j["pi_one_player"] = pi;
    if (!rep.sigma2_nonnegative) j["warning"] = "sigma2 <= 0";
    return j.dump(2);
}

std::string pattern_json(const PatternReport& rep) {
    json j;
    j["mu"] = scalar_json(rep.ensemble_mu);
    j["sigma2"] = scalar_json(rep.ensemble_sigma2);
    j["sigma12"] = scalar_json(rep.pair_cov);
    j["mode"] = rep.params.mode == Mode::exact ? "exact" : "float";
    j["params"] = params_json(rep.params);
    j["params"]["r"] = rep.r;
    j["params"]["s"] = rep.s;
    j["per_player"] = {{"mu", scalar_json(rep.per_player_mu)},
                       {"sigma2", scalar_json(rep.per_player_sigma2)},
                       {"sample_variance_slope", scalar_json(rep.svar_slope)}};
    j["phase_chain"] = {{"mu", scalar_json(rep.mu_phase)},
                        {"sigma2", scalar_json(rep.sigma2_phase)},
                        {"agrees_with_cycle_sums", rep.methods_agree}};
    if (rep.mu_limit) {
        j["limit"] = {{"mu", scalar_json(*rep.mu_limit)}, {"sigma2", scalar_json(*rep.sigma2_limit)}};
    }
    return j.dump(2);
}

std::string simulation_json(const SimConfig& cfg, const SimulationResult& res,
                            const std::optional<CltDiagnostic>& clt) {
    json j;
    j["params"] = params_json(cfg.params);
    j["schedule"] = schedule_name(cfg.schedule);
    if (cfg.schedule == ScheduleKind::mixture) j["gamma"] = rational_str(cfg.gamma);
    if (cfg.schedule == ScheduleKind::pattern) {
        j["r"] = cfg.pattern.r;
        j["s"] = cfg.pattern.s;
    }
    j["turns"] = res.turns;
    j["replications"] = res.replications;
    j["seed"] = res.seed;
    j["rng"] = res.rng_algorithm;
    j["estimates"] = {
        {"mean_slope", double_str(res.mean_slope)},
        {"mean_slope_se", double_str(res.mean_slope_se)},
        {"var_slope", double_str(res.var_slope)},
        {"var_slope_se", double_str(res.var_slope_se)},
        {"sample_variance_slope", double_str(res.svar_slope)},
        {"sample_variance_slope_se", double_str(res.svar_slope_se)},
    };
    j["total_always_zero"] = res.total_always_zero;
    if (clt) {
        j["clt"] = {{"standardized_mean", double_str(clt->sample_mean)},
                    {"standardized_variance", double_str(clt->sample_var)},
                    {"ks_distance", double_str(clt->ks_distance)}};
    }
    return j.dump(2);
}

namespace {

template <class T>
void matrix_csv_impl(std::ostream& out, const Matrix<T>& m) {
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j) out << ",";
            out << scalar_traits<T>::str(m(i, j));
        }
        out << "\n";
    }
}

template <class T>
std::string matrix_json_impl(const Matrix<T>& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(scalar_traits<T>::str(m(i, j)));
        rows.push_back(row);
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}}.dump();
}

}  // namespace

void write_matrix_csv(std::ostream& out, const Matrix<Rational>& m) { matrix_csv_impl(out, m); }
void write_matrix_csv(std::ostream& out, const Matrix<double>& m) { matrix_csv_impl(out, m); }
std::string matrix_json(const Matrix<Rational>& m) { return matrix_json_impl(m); }
std::string matrix_json(const Matrix<double>& m) { return matrix_json_impl(m); }

}  // namespace parrondo
