#include "entbounds/scalar_kernel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace entbounds {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw std::domain_error(what);
}

}  // namespace

double coeff_step(int j, double t) {
    require(j >= 1, "coeff_step: j must be a positive integer");
    require(std::isfinite(t), "coeff_step: t must be finite");
    // c_1 = 1 for every t, including t = 0 where pow(0,0) would spoil it.
    if (j == 1) return 1.0;
    return std::pow(static_cast<double>(j), t) - std::pow(static_cast<double>(j - 1), t);
}

std::vector<double> weighted_coefficients(int n, double t) {
    require(n >= 0, "weighted_coefficients: n must be nonnegative");
    std::vector<double> coeffs;
    coeffs.reserve(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) coeffs.push_back(coeff_step(j, t));
    return coeffs;
}

double lemma1_gap(double x, double m, double mu) {
    require(m >= 1.0, "lemma1_gap: need m >= 1");
    require(x >= m, "lemma1_gap: need x >= m");
    require(mu >= 1.0, "lemma1_gap: need mu >= 1");
    return std::pow(1.0 + x, mu) - std::pow(x, mu) - std::pow(m + 1.0, mu) + std::pow(m, mu);
}

double lemma4_gap(double x, double m, double mu) {
    require(m >= 1.0, "lemma4_gap: need m >= 1");
    require(x >= m, "lemma4_gap: need x >= m");
    require(mu >= 0.0 && mu <= 1.0, "lemma4_gap: need 0 <= mu <= 1");
    return std::pow(x, mu) + std::pow(m + 1.0, mu) - std::pow(m, mu) - std::pow(1.0 + x, mu);
}

namespace {

double weighted_power_sum(std::span<const double> a, double mu) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        require(a[i] >= 0.0, "weighted power sum: entries must be nonnegative");
        if (i > 0) require(a[i - 1] >= a[i], "weighted power sum: input must be sorted nonincreasing");
        sum += coeff_step(static_cast<int>(i) + 1, mu) * std::pow(a[i], mu);
    }
    return sum;
}

}  // namespace

double weighted_power_lower(std::span<const double> a, double mu) {
    require(mu >= 1.0, "weighted_power_lower: need mu >= 1");
    return weighted_power_sum(a, mu);
}

double weighted_power_upper(std::span<const double> a, double mu) {
    require(mu >= 0.0 && mu <= 1.0, "weighted_power_upper: need 0 <= mu <= 1");
    return weighted_power_sum(a, mu);
}

double step_coef(double k, double t) { return std::pow(k + 1.0, t) - std::pow(k, t); }

double mono_cross_coef(double k, double t) { return k * t / (k + 1.0); }

double mono_full_coef(double k, double t) {
    return std::pow(k + 1.0, t) - (1.0 + t / (k + 1.0)) * std::pow(k, t);
}

double poly_cross_coef(double k, double t) {
    const double kp1 = k + 1.0;
    return k * k * t / (kp1 * kp1);
}

double poly_full_coef(double k, double t) {
    const double kp1 = k + 1.0;
    return std::pow(kp1, t) - (k * t / (kp1 * kp1) + 1.0) * std::pow(k, t);
}

MonoChain mono_chain(const ChainParams& params, double x) {
    const double k = params.k;
    const double mu = params.mu;
    require(k >= 1.0, "mono_chain: need k >= 1");
    require(mu >= 1.0, "mono_chain: need mu >= 1");
    require(x >= 0.0 && x <= 1.0 / k, "mono_chain: need x in [0, 1/k]");
    const double xmu = std::pow(x, mu);
    return MonoChain{
        1.0 + mono_cross_coef(k, mu) * x + mono_full_coef(k, mu) * xmu,
        1.0 + step_coef(k, mu) * xmu,
        1.0 + (std::pow(2.0, mu) - 1.0) * xmu,
    };
}

PolyChain poly_chain(const ChainParams& params, double x) {
    const double k = params.k;
    const double mu = params.mu;
    require(k >= 1.0, "poly_chain: need k >= 1");
    require(mu >= 0.0 && mu <= 1.0, "poly_chain: need 0 <= mu <= 1");
    require(x >= 0.0 && x <= 1.0 / k, "poly_chain: need x in [0, 1/k]");
    // At mu = 0 every coefficient multiplying x^mu vanishes, so the IEEE
    // convention pow(0,0) = 1 keeps all chain members equal to 1.
    const double xmu = std::pow(x, mu);
    return PolyChain{
        1.0 + poly_cross_coef(k, mu) * x + poly_full_coef(k, mu) * xmu,
        1.0 + step_coef(k, mu) * xmu,
        1.0 + (std::pow(2.0, mu) - 1.0) * xmu,
        1.0 + mu * xmu,
    };
}

}  // namespace entbounds
