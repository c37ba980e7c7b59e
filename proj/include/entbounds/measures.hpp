#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "entbounds/linalg.hpp"
#include "entbounds/states.hpp"

namespace entbounds {

enum class MeasureKind { Concurrence, ConcurrenceOfAssistance };

// Default power making the squared measure monogamous (concurrence) or
// polygamous (concurrence of assistance) on qubit systems.
constexpr double default_power(MeasureKind) { return 2.0; }

// One-to-rest value E(A|B1..B_{N-1}) plus the pairwise values E(A|B_i)
// in original label order.
struct MeasureVector {
    double one_to_rest = 0.0;
    std::vector<double> pairwise;
};

// sqrt(2 (1 - tr rho_A^2)) across the side_a | rest cut of a pure state.
double pure_bipartite_concurrence(const StateVector& psi, const std::vector<int>& side_a);

// rho~ = (sigma_y x sigma_y) rho* (sigma_y x sigma_y) on a two-qubit state.
DensityMatrix spin_flip(const DensityMatrix& rho);

// Square roots of the eigenvalues of rho rho~, descending. Evaluated as the
// (Hermitian) eigenvalues of sqrt(rho) rho~ sqrt(rho) so the Jacobi solver
// applies; eigenvalues below 1e-14 of the largest are treated as exact
// zeros before the square root.
std::array<double, 4> spin_flip_lambdas(const DensityMatrix& rho);

// Wootters formula max(0, l1 - l2 - l3 - l4) (Phys. Rev. Lett. 80, 2245).
double wootters_concurrence(const DensityMatrix& rho);

// Dual quantity l1 + l2 + l3 + l4; never below the concurrence.
double concurrence_of_assistance(const DensityMatrix& rho);

// One-to-rest plus all pairwise measures of a pure N >= 3 qubit state with
// party A on qubit 0. Across the pure one-to-rest cut the assisted measure
// coincides with the plain concurrence.
MeasureVector measure_vector(const StateVector& psi, MeasureKind kind);

// Residual quantity C^2(A|BC) - C^2_AB - C^2_AC of a three-qubit pure state.
double tangle_three_qubit(const StateVector& psi);

enum class RoofMode { Min, Max };

// Random-decomposition search for the convex-roof optimum: mixes the
// eigenensemble of rho by Haar-random isometries into ensembles of size
// rank..2*rank and returns the best average pure-state concurrence seen.
// Deterministic for fixed (rho, mode, trials, seed); trial i draws its
// randomness from seed + i, so the parallel kernel and the serial
// reference produce identical results.
double convex_roof_oracle(const DensityMatrix& rho, RoofMode mode, int trials,
                          std::uint64_t seed);
double convex_roof_oracle_serial(const DensityMatrix& rho, RoofMode mode, int trials,
                                 std::uint64_t seed);

}  // namespace entbounds
