#include "entbounds/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "entbounds/scalar_kernel.hpp"

namespace entbounds {

namespace {

// Relative slack for threshold comparisons, so paper-exact boundary cases
// (e1 == gamma e2 up to rounding) are not rejected.
constexpr double kConditionSlack = 1e-9;

bool ge_with_slack(double lhs, double rhs) { return lhs >= rhs * (1.0 - kConditionSlack); }

bool all_zero(const std::vector<double>& values) {
    return std::all_of(values.begin(), values.end(), [](double v) { return v == 0.0; });
}

void require_nonnegative(const std::vector<double>& values, const char* what) {
    for (double v : values)
        if (!(v >= 0.0)) throw std::domain_error(std::string(what) + ": measure values must be >= 0");
}

double pow2t_minus_1(double t) { return std::pow(2.0, t) - 1.0; }

}  // namespace

double measure_pow(double base, double exponent) {
    if (base <= 0.0) return 0.0;
    return std::pow(base, exponent);
}

ExponentConfig ExponentConfig::monogamy(double base_power, double eta) {
    if (!(base_power > 0.0)) throw std::domain_error("ExponentConfig: base power must be > 0");
    if (!(eta >= base_power))
        throw std::domain_error("ExponentConfig: monogamy use requires eta >= base power");
    return ExponentConfig{base_power, eta, eta / base_power, BoundMode::Monogamy};
}

ExponentConfig ExponentConfig::polygamy(double base_power, double eta) {
    if (!(base_power > 0.0)) throw std::domain_error("ExponentConfig: base power must be > 0");
    if (!(eta >= 0.0 && eta <= base_power))
        throw std::domain_error("ExponentConfig: polygamy use requires 0 <= eta <= base power");
    return ExponentConfig{base_power, eta, eta / base_power, BoundMode::Polygamy};
}

void attach_lhs(BoundReport& report, double one_to_rest) {
    report.lhs = measure_pow(one_to_rest, report.eta);
    report.has_lhs = true;
    report.gap = report.mode == BoundMode::Monogamy ? report.lhs - report.bound_new
                                                    : report.bound_new - report.lhs;
}

AdmissibleGamma max_admissible_gamma(double e1, double e2) {
    if (!(e1 >= 0.0) || !(e2 >= 0.0))
        throw std::domain_error("max_admissible_gamma: values must be >= 0");
    AdmissibleGamma out;
    if (e1 == 0.0 && e2 == 0.0) {
        out.degenerate = true;
        return out;
    }
    if (e2 == 0.0) {
        out.gamma = std::numeric_limits<double>::infinity();
        return out;
    }
    if (e1 < e2) {
        out.swap_roles = true;
        return out;
    }
    out.gamma = e1 / e2;
    return out;
}

namespace {

// Sorted-weighted-sum bound shared by theorems 1 and 4. The chain-mid and
// chain-tail comparisons coincide here: both are the flat (2^t - 1) form
// the literal k = 1 step coefficient reduces to.
BoundReport sorted_sum_bound(const MeasureVector& mv, const ExponentConfig& cfg, int theorem) {
    require_nonnegative(mv.pairwise, "theorem bound");
    if (mv.pairwise.empty()) throw std::invalid_argument("theorem bound: empty pairwise list");

    std::vector<double> sorted = mv.pairwise;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());

    BoundReport report;
    report.mode = cfg.mode;
    report.theorem = theorem;
    report.eta = cfg.eta;
    report.t = cfg.t;
    report.degenerate = all_zero(sorted) && mv.one_to_rest == 0.0;

    const double flat = pow2t_minus_1(cfg.t);
    double weighted = 0.0;
    double flat_sum = 0.0;
    double poly_flat_sum = 0.0;
    for (std::size_t j = 0; j < sorted.size(); ++j) {
        const double term = measure_pow(sorted[j], cfg.eta);
        weighted += coeff_step(static_cast<int>(j) + 1, cfg.t) * term;
        flat_sum += (j == 0 ? 1.0 : flat) * term;
        poly_flat_sum += (j == 0 ? 1.0 : cfg.t) * term;
    }
    report.bound_new = weighted;
    report.bound_chain_mid = flat_sum;
    report.bound_chain_tail = flat_sum;
    if (cfg.mode == BoundMode::Polygamy) report.bound_poly_tail = poly_flat_sum;

    report.conditions.m = 0;
    report.conditions.satisfied = true;  // ordering is established by sorting
    attach_lhs(report, mv.one_to_rest);
    return report;
}

// Pair bound head^eta (1 + cross x + full x^t) with x = (other/head)^base;
// shared by theorems 2 and 5. `head` is the side the threshold condition
// puts in front.
BoundReport pair_bound(double head, double other, const ExponentConfig& cfg, double gamma,
                       int which_case, bool condition_ok, int theorem) {
    BoundReport report;
    report.mode = cfg.mode;
    report.theorem = theorem;
    report.swap_case = which_case;
    report.eta = cfg.eta;
    report.t = cfg.t;
    report.degenerate = head == 0.0 && other == 0.0;

    const double k = std::pow(gamma, cfg.base_power);
    report.conditions.gamma = gamma;
    report.conditions.k = k;
    report.conditions.head_ok = {condition_ok};
    report.conditions.satisfied = condition_ok;

    const double head_eta = measure_pow(head, cfg.eta);
    const double other_eta = measure_pow(other, cfg.eta);
    // Cross term: the base-power factor decides; when it vanishes the whole
    // term is zero before any negative power of a zero head is formed.
    const double cross_base = measure_pow(other, cfg.base_power);
    const double cross =
        cross_base == 0.0 ? 0.0 : cross_base * measure_pow(head, cfg.eta - cfg.base_power);

    if (cfg.mode == BoundMode::Monogamy) {
        report.bound_new =
            head_eta + mono_cross_coef(k, cfg.t) * cross + mono_full_coef(k, cfg.t) * other_eta;
        report.bound_chain_mid = head_eta + step_coef(k, cfg.t) * other_eta;
        report.bound_chain_tail = head_eta + pow2t_minus_1(cfg.t) * other_eta;
    } else {
        report.bound_new =
            head_eta + poly_cross_coef(k, cfg.t) * cross + poly_full_coef(k, cfg.t) * other_eta;
        report.bound_chain_mid = head_eta + step_coef(k, cfg.t) * other_eta;
        report.bound_chain_tail = head_eta + pow2t_minus_1(cfg.t) * other_eta;
        report.bound_poly_tail = head_eta + cfg.t * other_eta;
    }
    return report;
}

BoundReport pair_theorem(double e1, double e2, const ExponentConfig& cfg, double gamma,
                         int which_case, int theorem) {
    if (!(gamma >= 1.0)) throw std::domain_error("pair bound: gamma must be >= 1");
    if (!(e1 >= 0.0) || !(e2 >= 0.0))
        throw std::domain_error("pair bound: measure values must be >= 0");

    const bool case1 = ge_with_slack(e1, gamma * e2);
    const bool case2 = ge_with_slack(e2, gamma * e1);
    int chosen = which_case;
    if (chosen == 0) {
        if (case1)
            chosen = 1;
        else if (case2)
            chosen = 2;
        else
            chosen = e1 >= e2 ? 1 : 2;  // formula still evaluated, flagged unsatisfied
    }
    if (chosen != 1 && chosen != 2)
        throw std::invalid_argument("pair bound: case must be 1 or 2");
    const bool ok = chosen == 1 ? case1 : case2;
    const double head = chosen == 1 ? e1 : e2;
    const double other = chosen == 1 ? e2 : e1;
    return pair_bound(head, other, cfg, gamma, chosen, ok, theorem);
}

// Shared assembly for theorems 3 and 6. The chain-mid comparison replaces
// the cross-term tail block by its plain step-coefficient form; the
// chain-tail (and polygamy poly-tail) use the k = k' = 1 style flat
// coefficients (2^t - 1) and t throughout.
BoundReport partition_bound(const MeasureVector& mv, const ExponentConfig& cfg, double gamma,
                            double gamma_prime, int m, int theorem) {
    require_nonnegative(mv.pairwise, "partition bound");
    if (!(gamma >= 1.0) || !(gamma_prime >= 1.0))
        throw std::domain_error("partition bound: gamma and gamma' must be >= 1");
    const int n_pair = static_cast<int>(mv.pairwise.size());  // N - 1
    if (n_pair < 3)
        throw std::invalid_argument("partition bound: need at least four parties (N >= 4)");
    if (m < 1 || m > n_pair - 2)
        throw std::invalid_argument("partition bound: need 1 <= m <= N - 3");

    BoundReport report;
    report.mode = cfg.mode;
    report.theorem = theorem;
    report.eta = cfg.eta;
    report.t = cfg.t;
    report.degenerate = all_zero(mv.pairwise) && mv.one_to_rest == 0.0;

    const std::vector<double>& e = mv.pairwise;
    const double k = std::pow(gamma, cfg.base_power);
    const double kp = std::pow(gamma_prime, cfg.base_power);

    PartitionConditions& cond = report.conditions;
    cond.gamma = gamma;
    cond.gamma_prime = gamma_prime;
    cond.k = k;
    cond.k_prime = kp;
    cond.m = m;
    double suffix = 0.0;
    std::vector<double> suffix_sum(n_pair + 1, 0.0);  // suffix_sum[i] = sum_{l >= i} e[l]
    for (int i = n_pair - 1; i >= 0; --i) {
        suffix += e[i];
        suffix_sum[i] = suffix;
    }
    for (int i = 0; i < m; ++i) cond.head_ok.push_back(ge_with_slack(e[i], gamma * suffix_sum[i + 1]));
    for (int j = m; j < n_pair - 1; ++j)
        cond.tail_ok.push_back(ge_with_slack(suffix_sum[j + 1], gamma_prime * e[j]));
    cond.satisfied = std::all_of(cond.head_ok.begin(), cond.head_ok.end(), [](bool b) { return b; }) &&
                     std::all_of(cond.tail_ok.begin(), cond.tail_ok.end(), [](bool b) { return b; });

    const double sc = step_coef(k, cfg.t);
    const double sc_prime = step_coef(kp, cfg.t);
    const double flat = pow2t_minus_1(cfg.t);
    const bool mono = cfg.mode == BoundMode::Monogamy;
    const double full_coef = mono ? mono_full_coef(kp, cfg.t) : poly_full_coef(kp, cfg.t);
    const double cross_coef = mono ? mono_cross_coef(kp, cfg.t) : poly_cross_coef(kp, cfg.t);

    double bound_new = 0.0;
    double bound_mid = 0.0;
    double bound_tail = 0.0;
    double bound_poly = 0.0;

    // Head block i = 1..m with geometric step coefficients.
    double head_pow = 1.0;   // [(k+1)^t - k^t]^{i-1}
    double flat_pow = 1.0;   // (2^t - 1)^{i-1}
    double t_pow = 1.0;      // t^{i-1}
    for (int i = 0; i < m; ++i) {
        const double term = measure_pow(e[i], cfg.eta);
        bound_new += head_pow * term;
        bound_mid += head_pow * term;
        bound_tail += flat_pow * term;
        bound_poly += t_pow * term;
        head_pow *= sc;
        flat_pow *= flat;
        t_pow *= cfg.t;
    }
    // head_pow, flat_pow, t_pow now carry the block factors to the power m.

    // Flat middle block i = m+1..N-3.
    double middle = 0.0;
    for (int i = m; i < n_pair - 2; ++i) middle += measure_pow(e[i], cfg.eta);
    bound_new += head_pow * sc_prime * middle;
    bound_mid += head_pow * sc_prime * middle;
    bound_tail += flat_pow * flat * middle;
    bound_poly += t_pow * cfg.t * middle;

    // Tail block on (B_{N-2}, B_{N-1}).
    const double e_n2 = e[n_pair - 2];
    const double e_n1 = e[n_pair - 1];
    const double lead_eta = measure_pow(e_n2, cfg.eta);
    const double last_eta = measure_pow(e_n1, cfg.eta);
    const double cross_base = measure_pow(e_n2, cfg.base_power);
    const double cross =
        cross_base == 0.0 ? 0.0 : cross_base * measure_pow(e_n1, cfg.eta - cfg.base_power);
    bound_new += head_pow * (full_coef * lead_eta + cross_coef * cross + last_eta);
    bound_mid += head_pow * (sc_prime * lead_eta + last_eta);
    bound_tail += flat_pow * (flat * lead_eta + last_eta);
    bound_poly += t_pow * (cfg.t * lead_eta + last_eta);

    report.bound_new = bound_new;
    report.bound_chain_mid = bound_mid;
    report.bound_chain_tail = bound_tail;
    if (!mono) report.bound_poly_tail = bound_poly;
    attach_lhs(report, mv.one_to_rest);
    return report;
}

}  // namespace

BoundReport theorem1_bound(const MeasureVector& mv, const ExponentConfig& cfg) {
    if (cfg.mode != BoundMode::Monogamy || cfg.t < 1.0)
        throw std::domain_error("theorem1_bound: monogamy use requires t >= 1");
    return sorted_sum_bound(mv, cfg, 1);
}

BoundReport theorem4_bound(const MeasureVector& mv, const ExponentConfig& cfg) {
    if (cfg.mode != BoundMode::Polygamy || cfg.t > 1.0)
        throw std::domain_error("theorem4_bound: polygamy use requires 0 <= t <= 1");
    return sorted_sum_bound(mv, cfg, 4);
}

BoundReport theorem2_bound(double e1, double e2, const ExponentConfig& cfg, double gamma) {
    if (cfg.mode != BoundMode::Monogamy)
        throw std::domain_error("theorem2_bound: requires a monogamy exponent config");
    return pair_theorem(e1, e2, cfg, gamma, 0, 2);
}

BoundReport theorem2_case_bound(double e1, double e2, const ExponentConfig& cfg, double gamma,
                                int which_case) {
    if (cfg.mode != BoundMode::Monogamy)
        throw std::domain_error("theorem2_bound: requires a monogamy exponent config");
    return pair_theorem(e1, e2, cfg, gamma, which_case, 2);
}

BoundReport theorem5_bound(double e1, double e2, const ExponentConfig& cfg, double gamma) {
    if (cfg.mode != BoundMode::Polygamy)
        throw std::domain_error("theorem5_bound: requires a polygamy exponent config");
    return pair_theorem(e1, e2, cfg, gamma, 0, 5);
}

BoundReport theorem5_case_bound(double e1, double e2, const ExponentConfig& cfg, double gamma,
                                int which_case) {
    if (cfg.mode != BoundMode::Polygamy)
        throw std::domain_error("theorem5_bound: requires a polygamy exponent config");
    return pair_theorem(e1, e2, cfg, gamma, which_case, 5);
}

BoundReport theorem3_bound(const MeasureVector& mv, const ExponentConfig& cfg, double gamma,
                           double gamma_prime, int m) {
    if (cfg.mode != BoundMode::Monogamy)
        throw std::domain_error("theorem3_bound: requires a monogamy exponent config");
    return partition_bound(mv, cfg, gamma, gamma_prime, m, 3);
}

BoundReport theorem6_bound(const MeasureVector& mv, const ExponentConfig& cfg, double gamma,
                           double gamma_prime, int m) {
    if (cfg.mode != BoundMode::Polygamy)
        throw std::domain_error("theorem6_bound: requires a polygamy exponent config");
    return partition_bound(mv, cfg, gamma, gamma_prime, m, 6);
}

PartitionConditions check_conditions(const MeasureVector& mv, double gamma, double gamma_prime,
                                     double base_power) {
    if (!(gamma >= 1.0) || !(gamma_prime >= 1.0))
        throw std::domain_error("check_conditions: gamma and gamma' must be >= 1");
    require_nonnegative(mv.pairwise, "check_conditions");
    const int n_pair = static_cast<int>(mv.pairwise.size());
    const std::vector<double>& e = mv.pairwise;

    std::vector<double> suffix_sum(n_pair + 1, 0.0);
    for (int i = n_pair - 1; i >= 0; --i) suffix_sum[i] = suffix_sum[i + 1] + e[i];

    auto flags_for = [&](int m, PartitionConditions& cond) {
        cond.head_ok.clear();
        cond.tail_ok.clear();
        for (int i = 0; i < m; ++i)
            cond.head_ok.push_back(ge_with_slack(e[i], gamma * suffix_sum[i + 1]));
        for (int j = m; j < n_pair - 1; ++j)
            cond.tail_ok.push_back(ge_with_slack(suffix_sum[j + 1], gamma_prime * e[j]));
        cond.satisfied =
            std::all_of(cond.head_ok.begin(), cond.head_ok.end(), [](bool b) { return b; }) &&
            std::all_of(cond.tail_ok.begin(), cond.tail_ok.end(), [](bool b) { return b; });
    };

    PartitionConditions cond;
    cond.gamma = gamma;
    cond.gamma_prime = gamma_prime;
    cond.k = std::pow(gamma, base_power);
    cond.k_prime = std::pow(gamma_prime, base_power);
    const int max_m = n_pair - 2;
    for (int m = max_m; m >= 1; --m) {
        flags_for(m, cond);
        if (cond.satisfied) {
            cond.m = m;
            return cond;
        }
    }
    // None admissible: report the flags of the largest candidate.
    if (max_m >= 1) flags_for(max_m, cond);
    cond.m = 0;
    cond.satisfied = false;
    return cond;
}

}  // namespace entbounds
