#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "entbounds/linalg.hpp"

namespace entbounds {

// Pure multiqubit state. Qubit 0 is party A and the leftmost tensor factor;
// amplitude index b addresses the big-endian basis string of b.
struct StateVector {
    int n_qubits = 0;
    std::vector<cxd> amplitudes;
};

// Canonical five-amplitude form of a three-qubit pure state:
// l0|000> + l1 e^{i phi}|100> + l2|101> + l3|110> + l4|111>.
struct GeneralizedSchmidt {
    std::array<double, 5> lambdas{};
    double phi = 0.0;
};

double norm_squared(const StateVector& psi);

// Throws unless the amplitudes are normalized within 1e-9.
void validate_state(const StateVector& psi);

DensityMatrix density_matrix(const StateVector& psi);

// Equal superposition of the n single-excitation basis states.
StateVector w_state(int n);

// (|0...0> + |1...1>)/sqrt(2).
StateVector ghz_state(int n);

StateVector generalized_schmidt_state(const GeneralizedSchmidt& p);

// Haar-distributed pure state on n in 2..5 qubits, deterministic per seed.
StateVector haar_random_state(int n, std::uint64_t seed);

// State files are JSON documents:
//   {"n_qubits": N, "amplitudes": [[re, im], ...]}   (length 2^N)
// Normalization is validated on load (tolerance 1e-9).
StateVector load_state_file(const std::string& path);
void save_state_file(const StateVector& psi, const std::string& path);

}  // namespace entbounds
