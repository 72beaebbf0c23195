#pragma once

// Seeded Monte Carlo simulation of the ensemble games.  Capitals are exact
// integers; estimates are per-turn slopes with standard errors computed
// across independent replications.  Replication streams derive from
// (master seed, replication index), so results are reproducible and
// independent of the number of worker threads.

#include "parrondo/params.hpp"

#include <array>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace parrondo {

// splitmix64, seeded per stream.
class Rng {
  public:
    static constexpr const char* kAlgorithm = "splitmix64";

    Rng(uint64_t master_seed, uint64_t stream) : state_(mix(master_seed ^ mix(stream + 0x9E3779B97F4A7C15ULL))) {}

    uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix(state_);
    }
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }
    bool bernoulli(double p) { return next_double() < p; }

    // Uniform on 0..n-1 without modulo bias.
    int next_below(int n) {
        uint64_t bound = static_cast<uint64_t>(n);
        uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return static_cast<int>(x % bound);
    }

  private:
    static uint64_t mix(uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    uint64_t state_;
};

enum class ScheduleKind { mixture, pattern, pure_a_prime, pure_b };

std::string schedule_name(ScheduleKind kind);

struct SimConfig {
    ModelParams params;  // rho, eps, N
    ScheduleKind schedule = ScheduleKind::mixture;
    Rational gamma{1, 2};   // mixture only
    PatternSpec pattern{};  // pattern only
    long turns = 100000;
    int replications = 100;
    uint64_t seed = 1;
    int threads = 0;  // 0 = default_threads()

    void validate() const;
};

struct SimulationResult {
    std::string rng_algorithm;
    uint64_t seed = 0;
    long turns = 0;
    int replications = 0;

    double mean_slope = 0, mean_slope_se = 0;  // E[S_n]/n
    double var_slope = 0, var_slope_se = 0;    // Var(S_n)/n
    double svar_slope = 0, svar_slope_se = 0;  // E[sample variance]/n
    bool total_always_zero = true;             // S_k == 0 for every turn of every replication

    std::vector<long long> final_totals;       // S_n per replication
    std::vector<long long> first_rep_capitals; // per-player capitals of replication 0
    // counts of capital mod 3 per player at the horizon, across replications
    std::vector<std::array<long, 3>> residue_counts;
};

SimulationResult simulate(const SimConfig& config);

// Per-turn trace of replication `rep`: CSV rows "turn,total,sample_variance"
// every `stride` turns.
void simulate_trace(const SimConfig& config, int rep, long stride, std::ostream& out);

struct SlopeEstimate {
    double value = 0, se = 0;
};

SlopeEstimate estimate_sample_variance_slope(const SimConfig& config);

struct CltDiagnostic {
    double sample_mean = 0;    // of (S_n - n mu) / sqrt(n sigma^2)
    double sample_var = 0;     // unbiased
    double ks_distance = 0;    // sup |F_emp - Phi|
    int replications = 0;
};

// Standardizes the per-replication totals by the analytic parameters.
// Rejects sigma2 <= 0.
CltDiagnostic clt_check(const SimulationResult& result, double mu, double sigma2);

}  // namespace parrondo
