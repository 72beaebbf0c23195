#include "parrondo/sim.hpp"

#include "parrondo/runtime.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>

namespace parrondo {

std::string schedule_name(ScheduleKind kind) {
    switch (kind) {
        case ScheduleKind::mixture: return "mixture";
        case ScheduleKind::pattern: return "pattern";
        case ScheduleKind::pure_a_prime: return "pure-A'";
        case ScheduleKind::pure_b: return "pure-B";
    }
    return "?";
}

void SimConfig::validate() const {
    params.validate();
    if (params.players < 2) throw ValidationError("simulation requires N >= 2");
    if (turns < 1) throw ValidationError("turns must be >= 1");
    if (replications < 1) throw ValidationError("replications must be >= 1");
    if (schedule == ScheduleKind::mixture) MixtureSpec{gamma}.validate();
    if (schedule == ScheduleKind::pattern) pattern.validate();
    derive_coin_probs(params);  // rejects out-of-range coin probabilities
}

namespace {

struct Coins {
    double p[3];
};

struct RepOutcome {
    long long total = 0;
    double svar = 0;  // unbiased sample variance of capitals at the horizon
    bool always_zero = true;
    std::vector<long long> capitals;
};

inline int residue(long long capital) { return static_cast<int>(((capital % 3) + 3) % 3); }

// One replication: evolve integer capitals for `turns` turns.
RepOutcome run_replication(const SimConfig& cfg, const Coins& coins, double gamma, int rep) {
    const int n = cfg.params.players;
    Rng rng(cfg.seed, static_cast<uint64_t>(rep));
    std::vector<long long> cap(static_cast<size_t>(n), 0);
    long long total = 0;
    bool always_zero = true;
    const int period = cfg.pattern.r + cfg.pattern.s;

    for (long t = 0; t < cfg.turns; ++t) {
        bool play_a;
        switch (cfg.schedule) {
            case ScheduleKind::mixture: play_a = rng.bernoulli(gamma); break;
            case ScheduleKind::pattern: play_a = static_cast<int>(t % period) < cfg.pattern.r; break;
            case ScheduleKind::pure_a_prime: play_a = true; break;
            case ScheduleKind::pure_b: play_a = false; break;
        }
        if (play_a) {
            int donor = rng.next_below(n);
            int other = rng.next_below(n - 1);
            int beneficiary = other >= donor ? other + 1 : other;
            --cap[static_cast<size_t>(donor)];
            ++cap[static_cast<size_t>(beneficiary)];
        } else {
            int player = rng.next_below(n);
            bool win = rng.bernoulli(coins.p[residue(cap[static_cast<size_t>(player)])]);
            if (win) {
                ++cap[static_cast<size_t>(player)];
                ++total;
            } else {
                --cap[static_cast<size_t>(player)];
                --total;
            }
        }
        if (total != 0) always_zero = false;
    }

    RepOutcome out;
    out.total = total;
    out.always_zero = always_zero;
    long long sum_sq = 0;
    for (long long c : cap) sum_sq += c * c;
    double mean = static_cast<double>(total) / n;
    out.svar = (static_cast<double>(sum_sq) - n * mean * mean) / (n - 1);
    out.capitals = std::move(cap);
    return out;
}

double sample_sd(const std::vector<double>& xs, double mean) {
    if (xs.size() < 2) return 0;
    double acc = 0;
    for (double x : xs) acc += (x - mean) * (x - mean);
    return std::sqrt(acc / (static_cast<double>(xs.size()) - 1));
}

}  // namespace

SimulationResult simulate(const SimConfig& cfg) {
    cfg.validate();
    auto rc = derive_coin_probs(cfg.params);
    Coins coins{{scalar_traits<Rational>::to_double(rc.p0), scalar_traits<Rational>::to_double(rc.p1),
                 scalar_traits<Rational>::to_double(rc.p2)}};
    const double gamma = scalar_traits<Rational>::to_double(cfg.gamma);
    const int reps = cfg.replications;
    const int n = cfg.params.players;

    std::vector<RepOutcome> outcomes(static_cast<size_t>(reps));
    parallel_for(reps, cfg.threads, [&](int rep) { outcomes[static_cast<size_t>(rep)] = run_replication(cfg, coins, gamma, rep); });

    SimulationResult res;
    res.rng_algorithm = Rng::kAlgorithm;
    res.seed = cfg.seed;
    res.turns = cfg.turns;
    res.replications = reps;
    res.residue_counts.assign(static_cast<size_t>(n), {0, 0, 0});

    std::vector<double> mean_slopes, svar_slopes;
    mean_slopes.reserve(static_cast<size_t>(reps));
    svar_slopes.reserve(static_cast<size_t>(reps));
    for (const auto& o : outcomes) {  // replication-index order
        res.final_totals.push_back(o.total);
        mean_slopes.push_back(static_cast<double>(o.total) / static_cast<double>(cfg.turns));
        svar_slopes.push_back(o.svar / static_cast<double>(cfg.turns));
        res.total_always_zero = res.total_always_zero && o.always_zero;
        for (int i = 0; i < n; ++i) ++res.residue_counts[static_cast<size_t>(i)][static_cast<size_t>(residue(o.capitals[static_cast<size_t>(i)]))];
    }
    res.first_rep_capitals = outcomes.front().capitals;

    double mean = 0;
    for (double m : mean_slopes) mean += m;
    mean /= reps;
    res.mean_slope = mean;
    res.mean_slope_se = sample_sd(mean_slopes, mean) / std::sqrt(static_cast<double>(reps));

    // Var(S_n)/n from the across-replication sample variance of totals; its
    // standard error uses the normal-theory value Var(s^2) = 2 sigma^4/(R-1),
    // appropriate here since S_n is asymptotically normal.
    double total_mean = mean * cfg.turns;
    double acc = 0;
    for (long long t : res.final_totals) {
        double d = static_cast<double>(t) - total_mean;
        acc += d * d;
    }
    double s2 = reps > 1 ? acc / (reps - 1) : 0;
    res.var_slope = s2 / static_cast<double>(cfg.turns);
    res.var_slope_se = reps > 1 ? res.var_slope * std::sqrt(2.0 / (reps - 1)) : 0;

    double svar_mean = 0;
    for (double v : svar_slopes) svar_mean += v;
    svar_mean /= reps;
    res.svar_slope = svar_mean;
    res.svar_slope_se = sample_sd(svar_slopes, svar_mean) / std::sqrt(static_cast<double>(reps));
    return res;
}

void simulate_trace(const SimConfig& cfg, int rep, long stride, std::ostream& out) {
    cfg.validate();
    if (stride < 1) stride = 1;
    auto rc = derive_coin_probs(cfg.params);
    Coins coins{{scalar_traits<Rational>::to_double(rc.p0), scalar_traits<Rational>::to_double(rc.p1),
                 scalar_traits<Rational>::to_double(rc.p2)}};
    const double gamma = scalar_traits<Rational>::to_double(cfg.gamma);
    const int n = cfg.params.players;
    Rng rng(cfg.seed, static_cast<uint64_t>(rep));
    std::vector<long long> cap(static_cast<size_t>(n), 0);
    long long total = 0;
    const int period = cfg.pattern.r + cfg.pattern.s;

    out << "turn,total,sample_variance\n";
    for (long t = 0; t < cfg.turns; ++t) {
        bool play_a;
        switch (cfg.schedule) {
            case ScheduleKind::mixture: play_a = rng.bernoulli(gamma); break;
            case ScheduleKind::pattern: play_a = static_cast<int>(t % period) < cfg.pattern.r; break;
            case ScheduleKind::pure_a_prime: play_a = true; break;
            case ScheduleKind::pure_b: play_a = false; break;
        }
        if (play_a) {
            int donor = rng.next_below(n);
            int other = rng.next_below(n - 1);
            int beneficiary = other >= donor ? other + 1 : other;
            --cap[static_cast<size_t>(donor)];
            ++cap[static_cast<size_t>(beneficiary)];
        } else {
            int player = rng.next_below(n);
            if (rng.bernoulli(coins.p[residue(cap[static_cast<size_t>(player)])])) {
                ++cap[static_cast<size_t>(player)];
                ++total;
            } else {
                --cap[static_cast<size_t>(player)];
                --total;
            }
        }
        if ((t + 1) % stride == 0 || t + 1 == cfg.turns) {
            long long sum_sq = 0;
            for (long long c : cap) sum_sq += c * c;
            double mean = static_cast<double>(total) / n;
            double svar = (static_cast<double>(sum_sq) - n * mean * mean) / (n - 1);
            out << (t + 1) << "," << total << "," << double_str(svar) << "\n";
        }
    }
}

SlopeEstimate estimate_sample_variance_slope(const SimConfig& cfg) {
    auto res = simulate(cfg);
    return {res.svar_slope, res.svar_slope_se};
}

CltDiagnostic clt_check(const SimulationResult& res, double mu, double sigma2) {
    if (!(sigma2 > 0)) throw ValidationError("clt_check requires sigma2 > 0");
    const double n = static_cast<double>(res.turns);
    const double denom = std::sqrt(n * sigma2);
    std::vector<double> z;
    z.reserve(res.final_totals.size());
    for (long long t : res.final_totals) z.push_back((static_cast<double>(t) - n * mu) / denom);

    CltDiagnostic d;
    d.replications = static_cast<int>(z.size());
    double mean = 0;
    for (double v : z) mean += v;
    mean /= static_cast<double>(z.size());
    d.sample_mean = mean;
    double acc = 0;
    for (double v : z) acc += (v - mean) * (v - mean);
    d.sample_var = z.size() > 1 ? acc / (static_cast<double>(z.size()) - 1) : 0;

    std::sort(z.begin(), z.end());
    auto phi = [](double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); };
    double ks = 0;
    for (size_t i = 0; i < z.size(); ++i) {
        double cdf = phi(z[i]);
        double lo = static_cast<double>(i) / static_cast<double>(z.size());
        double hi = static_cast<double>(i + 1) / static_cast<double>(z.size());
        ks = std::max({ks, std::fabs(cdf - lo), std::fabs(cdf - hi)});
    }
    d.ks_distance = ks;
    return d;
}

}  // namespace parrondo
