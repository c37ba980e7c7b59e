#include "entbounds/fuzz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace entbounds {

namespace {

constexpr double kViolationThreshold = -1e-9;

// Largest finite gamma keeping the head conditions of the partitioned bound
// satisfied for the given relabeling; 1 when every later sum vanishes.
double auto_gamma_head(const std::vector<double>& e, int m) {
    double gamma = std::numeric_limits<double>::infinity();
    double suffix = std::accumulate(e.begin() + m, e.end(), 0.0);
    for (int i = m - 1; i >= 0; --i) {
        if (suffix > 0.0) gamma = std::min(gamma, e[i] / suffix);
        suffix += e[i];
    }
    if (!std::isfinite(gamma)) return 1.0;
    return std::min(std::max(gamma, 1.0), 1e12);
}

// Largest finite gamma' keeping the tail conditions satisfied.
double auto_gamma_tail(const std::vector<double>& e, int m) {
    const int n_pair = static_cast<int>(e.size());
    double gamma = std::numeric_limits<double>::infinity();
    double suffix = e[n_pair - 1];
    for (int j = n_pair - 2; j >= m; --j) {
        if (e[j] > 0.0) gamma = std::min(gamma, suffix / e[j]);
        suffix += e[j];
    }
    if (!std::isfinite(gamma)) return 1.0;
    return std::min(std::max(gamma, 1.0), 1e12);
}

struct TrialResult {
    long evaluations = 0;
    long satisfied = 0;
    double worst_gap = std::numeric_limits<double>::infinity();
    std::vector<FuzzViolation> violations;
};

void record(TrialResult& acc, const BoundReport& report, int trial, const StateVector& state) {
    acc.evaluations += 1;
    if (!report.conditions.satisfied) return;
    acc.satisfied += 1;
    acc.worst_gap = std::min(acc.worst_gap, report.gap);
    if (report.gap < kViolationThreshold)
        acc.violations.push_back(FuzzViolation{trial, report.theorem, report.eta, report.gap, state});
}

TrialResult run_trial(const FuzzConfig& cfg, int trial) {
    TrialResult acc;
    const StateVector state = haar_random_state(cfg.n_qubits, cfg.seed + static_cast<std::uint64_t>(trial));
    const MeasureVector mv = measure_vector(state, cfg.kind);
    const bool mono = cfg.kind == MeasureKind::Concurrence;
    const int n_pair = static_cast<int>(mv.pairwise.size());

    for (double eta : cfg.etas) {
        const ExponentConfig exp_cfg = mono ? ExponentConfig::monogamy(cfg.base_power, eta)
                                            : ExponentConfig::polygamy(cfg.base_power, eta);

        // Sorted weighted sum: no threshold conditions beyond relabeling.
        {
            BoundReport r = mono ? theorem1_bound(mv, exp_cfg) : theorem4_bound(mv, exp_cfg);
            record(acc, r, trial, state);
        }

        if (n_pair == 2) {
            // Pair bound with the tightest admissible gamma.
            const double e1 = mv.pairwise[0];
            const double e2 = mv.pairwise[1];
            const double big = std::max(e1, e2);
            const double small = std::min(e1, e2);
            const double gamma = small > 0.0 ? std::min(big / small, 1e12) : 1.0;
            BoundReport r = mono ? theorem2_bound(e1, e2, exp_cfg, gamma)
                                 : theorem5_bound(e1, e2, exp_cfg, gamma);
            attach_lhs(r, mv.one_to_rest);
            record(acc, r, trial, state);
        } else {
            // Partitioned bound: any relabeling of the subsystems is a valid
            // hypothesis, so try every ordering and partition index and
            // evaluate those whose conditions admit gamma, gamma' >= 1.
            std::vector<int> perm(n_pair);
            std::iota(perm.begin(), perm.end(), 0);
            std::sort(perm.begin(), perm.end());
            MeasureVector relabeled = mv;
            do {
                for (int i = 0; i < n_pair; ++i) relabeled.pairwise[i] = mv.pairwise[perm[i]];
                for (int m = 1; m <= n_pair - 2; ++m) {
                    const double gamma = auto_gamma_head(relabeled.pairwise, m);
                    const double gamma_prime = auto_gamma_tail(relabeled.pairwise, m);
                    BoundReport r = mono
                                        ? theorem3_bound(relabeled, exp_cfg, gamma, gamma_prime, m)
                                        : theorem6_bound(relabeled, exp_cfg, gamma, gamma_prime, m);
                    if (!r.conditions.satisfied) continue;  // inadmissible relabeling
                    record(acc, r, trial, state);
                }
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
    }
    return acc;
}

FuzzSummary finalize(std::vector<TrialResult>& per_trial) {
    FuzzSummary summary;
    summary.worst_gap = std::numeric_limits<double>::infinity();
    for (auto& r : per_trial) {
        summary.evaluations += r.evaluations;
        summary.satisfied += r.satisfied;
        summary.worst_gap = std::min(summary.worst_gap, r.worst_gap);
        for (auto& v : r.violations) summary.violations.push_back(std::move(v));
    }
    if (summary.satisfied == 0) summary.worst_gap = 0.0;
    return summary;
}

FuzzConfig with_defaults(const FuzzConfig& cfg) {
    if (cfg.trials < 1) throw std::invalid_argument("fuzz: need trials >= 1");
    if (cfg.n_qubits < 3 || cfg.n_qubits > 5)
        throw std::invalid_argument("fuzz: n_qubits must be in 3..5");
    FuzzConfig out = cfg;
    if (out.etas.empty()) out.etas.push_back(out.base_power);
    // Validate the exponent grid up front; nothing may throw inside the
    // parallel trial loop.
    for (double eta : out.etas) {
        if (out.kind == MeasureKind::Concurrence)
            ExponentConfig::monogamy(out.base_power, eta);
        else
            ExponentConfig::polygamy(out.base_power, eta);
    }
    return out;
}

}  // namespace

FuzzSummary run_fuzz_serial(const FuzzConfig& cfg) {
    const FuzzConfig c = with_defaults(cfg);
    std::vector<TrialResult> per_trial(c.trials);
    for (int trial = 0; trial < c.trials; ++trial) per_trial[trial] = run_trial(c, trial);
    return finalize(per_trial);
}

FuzzSummary run_fuzz(const FuzzConfig& cfg) {
    const FuzzConfig c = with_defaults(cfg);
    std::vector<TrialResult> per_trial(c.trials);
#pragma omp parallel for schedule(dynamic)
    for (int trial = 0; trial < c.trials; ++trial) per_trial[trial] = run_trial(c, trial);
    return finalize(per_trial);
}

}  // namespace entbounds
