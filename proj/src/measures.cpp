#include "entbounds/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "entbounds/rng.hpp"

namespace entbounds {

namespace {

// Eigenvalues of sqrt(rho) rho~ sqrt(rho) below this fraction of the largest
// are numerical zeros; square-rooting them raw would inject ~1e-8 noise into
// the lambda spectrum and break the 1e-9 closed-form regressions.
constexpr double kRelativeEigCutoff = 1e-14;

double clamp_small_negative(double v) { return v < 0.0 ? 0.0 : v; }

}  // namespace

double pure_bipartite_concurrence(const StateVector& psi, const std::vector<int>& side_a) {
    validate_state(psi);
    if (side_a.empty() || static_cast<int>(side_a.size()) >= psi.n_qubits)
        throw std::invalid_argument(
            "pure_bipartite_concurrence: side_a must be a proper nonempty subset");
    const DensityMatrix reduced = partial_trace(density_matrix(psi), side_a);
    double purity = 0.0;
    const ComplexMatrix& m = reduced.matrix;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) purity += std::real(m(i, j) * m(j, i));
    return std::sqrt(clamp_small_negative(2.0 * (1.0 - purity)));
}

DensityMatrix spin_flip(const DensityMatrix& rho) {
    if (rho.matrix.rows() != 4 || rho.dims != std::vector<int>{2, 2})
        throw std::invalid_argument("spin_flip: expects a two-qubit density matrix");
    // (sigma_y x sigma_y) has +-1 entries on the anti-diagonal:
    // Y x Y |b1 b2> = (-1)^{b1 + b2 + 1} ... folded into the sign table below.
    static constexpr double sign[4] = {-1.0, 1.0, 1.0, -1.0};
    ComplexMatrix out(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            out(i, j) = sign[i] * sign[j] * std::conj(rho.matrix(3 - i, 3 - j));
    return DensityMatrix{rho.dims, std::move(out)};
}

std::array<double, 4> spin_flip_lambdas(const DensityMatrix& rho) {
    validate_density(rho);
    if (rho.matrix.rows() != 4)
        throw std::invalid_argument("spin_flip_lambdas: expects a two-qubit density matrix");
    const ComplexMatrix root = psd_sqrt(rho.matrix);
    const ComplexMatrix fidelity = root * spin_flip(rho).matrix * root;
    EigenSystem sys = hermitian_eig(fidelity);
    const double cutoff = kRelativeEigCutoff * std::max(sys.eigenvalues.front(), 0.0);
    std::array<double, 4> lambdas{};
    for (int i = 0; i < 4; ++i) {
        const double ev = sys.eigenvalues[i] <= cutoff ? 0.0 : sys.eigenvalues[i];
        lambdas[i] = std::sqrt(ev);
    }
    return lambdas;  // descending, inherited from hermitian_eig
}

double wootters_concurrence(const DensityMatrix& rho) {
    const auto l = spin_flip_lambdas(rho);
    return clamp_small_negative(l[0] - l[1] - l[2] - l[3]);
}

double concurrence_of_assistance(const DensityMatrix& rho) {
    const auto l = spin_flip_lambdas(rho);
    return l[0] + l[1] + l[2] + l[3];
}

MeasureVector measure_vector(const StateVector& psi, MeasureKind kind) {
    validate_state(psi);
    if (psi.n_qubits < 3)
        throw std::invalid_argument("measure_vector: need at least three qubits");
    MeasureVector mv;
    mv.one_to_rest = pure_bipartite_concurrence(psi, {0});
    const DensityMatrix rho = density_matrix(psi);
    for (int i = 1; i < psi.n_qubits; ++i) {
        const DensityMatrix pair = partial_trace(rho, {0, i});
        mv.pairwise.push_back(kind == MeasureKind::Concurrence
                                  ? wootters_concurrence(pair)
                                  : concurrence_of_assistance(pair));
    }
    return mv;
}

double tangle_three_qubit(const StateVector& psi) {
    validate_state(psi);
    if (psi.n_qubits != 3)
        throw std::invalid_argument("tangle_three_qubit: expects a three-qubit state");
    const DensityMatrix rho = density_matrix(psi);
    const double c_cut = pure_bipartite_concurrence(psi, {0});
    const double c_ab = wootters_concurrence(partial_trace(rho, {0, 1}));
    const double c_ac = wootters_concurrence(partial_trace(rho, {0, 2}));
    return clamp_small_negative(c_cut * c_cut - c_ab * c_ab - c_ac * c_ac);
}

namespace {

// Subnormalized eigenensemble: columns sqrt(lambda_i) v_i of the kept rank.
struct RoofEnsemble {
    int rank = 0;
    std::vector<std::array<cxd, 4>> members;
};

RoofEnsemble roof_ensemble(const DensityMatrix& rho) {
    const EigenSystem sys = hermitian_eig(rho.matrix);
    RoofEnsemble ens;
    for (int col = 0; col < 4; ++col) {
        if (sys.eigenvalues[col] <= 1e-12) continue;
        const double w = std::sqrt(sys.eigenvalues[col]);
        std::array<cxd, 4> member;
        for (int row = 0; row < 4; ++row) member[row] = w * sys.eigenvectors(row, col);
        ens.members.push_back(member);
        ++ens.rank;
    }
    return ens;
}

double pure_two_qubit_concurrence(const std::array<cxd, 4>& a) {
    return 2.0 * std::abs(a[0] * a[3] - a[1] * a[2]);
}

// Average concurrence of one random-size random-isometry decomposition.
double roof_trial(const RoofEnsemble& ens, int trial, std::uint64_t seed) {
    Rng rng(seed + static_cast<std::uint64_t>(trial));
    const int r = ens.rank;
    const int s = r + trial % (r + 1);  // ensemble sizes r..2r, cycling

    // Haar unitary from QR of a complex Ginibre sample (modified
    // Gram-Schmidt keeps the R diagonal positive); first r columns form
    // the mixing isometry.
    std::vector<std::vector<cxd>> g(s, std::vector<cxd>(s));
    for (auto& row : g)
        for (cxd& v : row) v = cxd{rng.gaussian(), rng.gaussian()};
    for (int col = 0; col < s; ++col) {
        for (int prev = 0; prev < col; ++prev) {
            cxd proj = 0.0;
            for (int i = 0; i < s; ++i) proj += std::conj(g[i][prev]) * g[i][col];
            for (int i = 0; i < s; ++i) g[i][col] -= proj * g[i][prev];
        }
        double nrm = 0.0;
        for (int i = 0; i < s; ++i) nrm += std::norm(g[i][col]);
        nrm = std::sqrt(nrm);
        if (nrm < 1e-12) return roof_trial(ens, trial, seed + 0x9E37);  // degenerate draw
        for (int i = 0; i < s; ++i) g[i][col] /= nrm;
    }

    double avg = 0.0;
    for (int j = 0; j < s; ++j) {
        std::array<cxd, 4> phi{};
        for (int i = 0; i < r; ++i) {
            const cxd w = g[j][i];
            for (int row = 0; row < 4; ++row) phi[row] += w * ens.members[i][row];
        }
        double p = 0.0;
        for (const cxd& v : phi) p += std::norm(v);
        if (p <= 1e-15) continue;
        const double inv = 1.0 / std::sqrt(p);
        std::array<cxd, 4> unit;
        for (int row = 0; row < 4; ++row) unit[row] = inv * phi[row];
        avg += p * pure_two_qubit_concurrence(unit);
    }
    return avg;
}

}  // namespace

double convex_roof_oracle_serial(const DensityMatrix& rho, RoofMode mode, int trials,
                                 std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("convex_roof_oracle: need trials >= 1");
    const RoofEnsemble ens = roof_ensemble(rho);
    double best = mode == RoofMode::Min ? std::numeric_limits<double>::infinity()
                                        : -std::numeric_limits<double>::infinity();
    for (int trial = 0; trial < trials; ++trial) {
        const double v = roof_trial(ens, trial, seed);
        best = mode == RoofMode::Min ? std::min(best, v) : std::max(best, v);
    }
    return best;
}

double convex_roof_oracle(const DensityMatrix& rho, RoofMode mode, int trials,
                          std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("convex_roof_oracle: need trials >= 1");
    const RoofEnsemble ens = roof_ensemble(rho);
    if (mode == RoofMode::Min) {
        double best = std::numeric_limits<double>::infinity();
#pragma omp parallel for schedule(static) reduction(min : best)
        for (int trial = 0; trial < trials; ++trial)
            best = std::min(best, roof_trial(ens, trial, seed));
        return best;
    }
    double best = -std::numeric_limits<double>::infinity();
#pragma omp parallel for schedule(static) reduction(max : best)
    for (int trial = 0; trial < trials; ++trial)
        best = std::max(best, roof_trial(ens, trial, seed));
    return best;
}

}  // namespace entbounds
