#pragma once

#include <optional>
#include <vector>

#include "entbounds/measures.hpp"

namespace entbounds {

enum class BoundMode { Monogamy, Polygamy };

// Exponent pair driving every bound: eta is the tested power, base_power is
// alpha_c (monogamy) or beta_c (polygamy), t = eta/base_power. Monogamy use
// requires t >= 1, polygamy use 0 <= t <= 1.
struct ExponentConfig {
    double base_power = 2.0;
    double eta = 2.0;
    double t = 1.0;
    BoundMode mode = BoundMode::Monogamy;

    static ExponentConfig monogamy(double base_power, double eta);
    static ExponentConfig polygamy(double base_power, double eta);
};

// Threshold parameters and their per-index satisfaction record.
struct PartitionConditions {
    double gamma = 1.0;
    double gamma_prime = 1.0;
    double k = 1.0;        // gamma^base_power
    double k_prime = 1.0;  // gamma_prime^base_power
    int m = 0;             // partition index; 0 when unused or none admissible
    std::vector<bool> head_ok;  // E_i >= gamma * sum_{l>i} E_l, i = 1..m
    std::vector<bool> tail_ok;  // gamma' * E_j <= sum_{l>j} E_l, j = m+1..N-2
    bool satisfied = true;
};

// Evaluated bound plus the weaker chain comparison forms. For monogamy
// reports lhs >= bound_new >= bound_chain_mid >= bound_chain_tail whenever
// the conditions hold; for polygamy the order reverses and bound_poly_tail
// extends the chain.
struct BoundReport {
    BoundMode mode = BoundMode::Monogamy;
    int theorem = 0;
    int swap_case = 0;  // theorems 2/5: 1 or 2 depending on which side leads
    double eta = 0.0;
    double t = 0.0;
    double lhs = 0.0;
    bool has_lhs = false;
    double bound_new = 0.0;
    double bound_chain_mid = 0.0;
    double bound_chain_tail = 0.0;
    std::optional<double> bound_poly_tail;
    PartitionConditions conditions;
    double gap = 0.0;  // lhs - bound_new (monogamy) or bound_new - lhs (polygamy)
    bool degenerate = false;  // every measure value zero
};

// Result of the largest-gamma query for a pair of measure values.
struct AdmissibleGamma {
    double gamma = 1.0;  // +infinity when e2 == 0 < e1
    bool swap_roles = false;  // e1 < e2: the caller must exchange the pair
    bool degenerate = false;  // both values zero
};

// Powers of measure values: zero base maps to zero for every exponent, so
// vanishing cross terms stay finite and all-zero inputs give zero bounds.
double measure_pow(double base, double exponent);

// Weighted power-sum lower bound over the sorted pairwise values; sorts
// internally (relabeling), so the result is permutation invariant.
BoundReport theorem1_bound(const MeasureVector& mv, const ExponentConfig& cfg);

// Pair bound with a cross term; picks whichever threshold case applies
// (head = e1 when e1 >= gamma e2, head = e2 when gamma e1 <= e2). When both
// apply the two case evaluations differ; theorem2_case_bound exposes them.
BoundReport theorem2_bound(double e1, double e2, const ExponentConfig& cfg, double gamma);
BoundReport theorem2_case_bound(double e1, double e2, const ExponentConfig& cfg, double gamma,
                                int which_case);

// Partitioned bound for N >= 4: head block i = 1..m under gamma conditions,
// flat middle block, cross-term tail block under gamma' conditions.
BoundReport theorem3_bound(const MeasureVector& mv, const ExponentConfig& cfg, double gamma,
                           double gamma_prime, int m);

// Polygamy duals of the three monogamy evaluators.
BoundReport theorem4_bound(const MeasureVector& mv, const ExponentConfig& cfg);
BoundReport theorem5_bound(double e1, double e2, const ExponentConfig& cfg, double gamma);
BoundReport theorem5_case_bound(double e1, double e2, const ExponentConfig& cfg, double gamma,
                                int which_case);
BoundReport theorem6_bound(const MeasureVector& mv, const ExponentConfig& cfg, double gamma,
                           double gamma_prime, int m);

// Largest admissible partition index at the given thresholds, with
// per-index flags (evaluated at the returned m, or at the largest candidate
// when none is admissible). Comparisons carry relative slack 1e-9.
PartitionConditions check_conditions(const MeasureVector& mv, double gamma, double gamma_prime,
                                     double base_power = 2.0);

AdmissibleGamma max_admissible_gamma(double e1, double e2);

// Fills lhs and gap from the one-to-rest measure value.
void attach_lhs(BoundReport& report, double one_to_rest);

}  // namespace entbounds
