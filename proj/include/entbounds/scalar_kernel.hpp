#pragma once

#include <span>
#include <vector>

namespace entbounds {

// Ratio parameter k >= 1 and exponent mu. Monogamy chains require mu >= 1,
// polygamy chains 0 <= mu <= 1; both live on x in [0, 1/k].
struct ChainParams {
    double k = 1.0;
    double mu = 1.0;
};

// Members of the monogamy chain (1+x)^mu >= b1 >= b2 >= b3.
struct MonoChain {
    double b1;  // 1 + (k mu/(k+1)) x + [(k+1)^mu - (1 + mu/(k+1)) k^mu] x^mu
    double b2;  // 1 + [(k+1)^mu - k^mu] x^mu
    double b3;  // 1 + (2^mu - 1) x^mu
};

// Members of the polygamy chain (1+x)^mu <= u1 <= u2 <= u3 <= u4.
struct PolyChain {
    double u1;  // 1 + (k^2 mu/(k+1)^2) x + ((k+1)^mu - [k mu/(k+1)^2 + 1] k^mu) x^mu
    double u2;  // 1 + [(k+1)^mu - k^mu] x^mu
    double u3;  // 1 + (2^mu - 1) x^mu
    double u4;  // 1 + mu x^mu
};

// j^t - (j-1)^t, the weighted power-sum coefficient step. c_1 == 1 for any t.
double coeff_step(int j, double t);

// Coefficients c_j = j^t - (j-1)^t for j = 1..n.
std::vector<double> weighted_coefficients(int n, double t);

// (1+x)^mu - x^mu - (m+1)^mu + m^mu for x >= m >= 1, mu >= 1; nonnegative.
double lemma1_gap(double x, double m, double mu);

// x^mu + (m+1)^mu - m^mu - (1+x)^mu for x >= m >= 1, 0 <= mu <= 1; nonnegative.
double lemma4_gap(double x, double m, double mu);

// Sum of c_j a_j^mu over a nonincreasing nonnegative vector; lower-bounds
// (sum a)^mu for mu >= 1 and upper-bounds it for 0 <= mu <= 1.
double weighted_power_lower(std::span<const double> a, double mu);
double weighted_power_upper(std::span<const double> a, double mu);

MonoChain mono_chain(const ChainParams& params, double x);
PolyChain poly_chain(const ChainParams& params, double x);

// Coefficient builders shared with the bound evaluators.
double step_coef(double k, double t);        // (k+1)^t - k^t
double mono_cross_coef(double k, double t);  // k t/(k+1)
double mono_full_coef(double k, double t);   // (k+1)^t - (1 + t/(k+1)) k^t
double poly_cross_coef(double k, double t);  // k^2 t/(k+1)^2
double poly_full_coef(double k, double t);   // (k+1)^t - (k t/(k+1)^2 + 1) k^t

}  // namespace entbounds
