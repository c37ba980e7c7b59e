#pragma once

#include <cstdint>
#include <vector>

#include "entbounds/bounds.hpp"
#include "entbounds/states.hpp"

namespace entbounds {

struct FuzzConfig {
    int n_qubits = 3;
    int trials = 100;
    std::uint64_t seed = 0;
    MeasureKind kind = MeasureKind::Concurrence;
    std::vector<double> etas;      // defaults to {base_power} when empty
    double base_power = 2.0;
};

struct FuzzViolation {
    int trial = 0;
    int theorem = 0;
    double eta = 0.0;
    double gap = 0.0;
    StateVector state;
};

struct FuzzSummary {
    long evaluations = 0;  // theorem evaluations attempted
    long satisfied = 0;    // evaluations whose conditions held
    double worst_gap = 0.0;  // smallest gap over satisfied evaluations
    std::vector<FuzzViolation> violations;  // satisfied evaluations with gap < -1e-9
};

// Samples Haar states (trial i uses seed + i), builds the measure vector for
// the configured kind and evaluates every applicable bound: the sorted
// weighted sum always, the pair bound with the largest admissible gamma for
// three parties, and the partitioned bound over all relabelings and
// partition indices that admit the threshold conditions for four or more.
//
// Concurrence fuzzes the monogamy side (etas >= base_power); assistance
// fuzzes the polygamy side (etas <= base_power).
//
// run_fuzz parallelizes over trials with OpenMP; per-trial seeding makes the
// summary identical to the serial reference.
FuzzSummary run_fuzz(const FuzzConfig& cfg);
FuzzSummary run_fuzz_serial(const FuzzConfig& cfg);

}  // namespace entbounds
