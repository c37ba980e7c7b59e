#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "entbounds/measures.hpp"
#include "entbounds/rng.hpp"
#include "entbounds/states.hpp"

using namespace entbounds;

TEST_CASE("w_state amplitudes") {
    const StateVector w4 = w_state(4);
    CHECK(w4.n_qubits == 4);
    // single-excitation indices in big-endian order: 1000, 0100, 0010, 0001
    for (int idx : {8, 4, 2, 1})
        CHECK(std::abs(w4.amplitudes[idx] - cxd{0.5, 0.0}) <= 1e-15);
    CHECK(std::abs(w4.amplitudes[0]) == 0.0);
    CHECK(std::abs(norm_squared(w4) - 1.0) <= 1e-15);

    const StateVector w2 = w_state(2);
    CHECK(std::abs(w2.amplitudes[1] - cxd{1.0 / std::sqrt(2.0), 0.0}) <= 1e-15);
    CHECK(std::abs(w2.amplitudes[2] - cxd{1.0 / std::sqrt(2.0), 0.0}) <= 1e-15);

    CHECK_THROWS_AS(w_state(1), std::invalid_argument);
}

TEST_CASE("ghz_state amplitudes") {
    const StateVector g = ghz_state(3);
    CHECK(std::abs(g.amplitudes[0] - cxd{1.0 / std::sqrt(2.0), 0.0}) <= 1e-15);
    CHECK(std::abs(g.amplitudes[7] - cxd{1.0 / std::sqrt(2.0), 0.0}) <= 1e-15);
    CHECK_THROWS_AS(ghz_state(0), std::invalid_argument);
}

TEST_CASE("generalized_schmidt_state layout and phase") {
    GeneralizedSchmidt p;
    p.lambdas = {0.6, 0.3, 0.5, 0.4, std::sqrt(1.0 - 0.36 - 0.09 - 0.25 - 0.16)};
    p.phi = 1.25;
    const StateVector psi = generalized_schmidt_state(p);
    CHECK(std::abs(psi.amplitudes[0b000] - cxd{0.6, 0.0}) <= 1e-15);
    CHECK(std::abs(psi.amplitudes[0b100] - 0.3 * cxd{std::cos(1.25), std::sin(1.25)}) <= 1e-15);
    CHECK(std::abs(psi.amplitudes[0b101] - cxd{0.5, 0.0}) <= 1e-15);
    CHECK(std::abs(psi.amplitudes[0b110] - cxd{0.4, 0.0}) <= 1e-15);
    CHECK(std::abs(psi.amplitudes[0b001]) == 0.0);

    GeneralizedSchmidt ghz_params;
    ghz_params.lambdas = {1.0 / std::sqrt(2.0), 0.0, 0.0, 0.0, 1.0 / std::sqrt(2.0)};
    const StateVector ghz_like = generalized_schmidt_state(ghz_params);
    const StateVector ghz = ghz_state(3);
    for (int i = 0; i < 8; ++i)
        CHECK(std::abs(ghz_like.amplitudes[i] - ghz.amplitudes[i]) <= 1e-15);

    GeneralizedSchmidt bad_norm;
    bad_norm.lambdas = {1.0, 1.0, 0.0, 0.0, 0.0};
    CHECK_THROWS_AS(generalized_schmidt_state(bad_norm), std::invalid_argument);

    GeneralizedSchmidt bad_phi;
    bad_phi.lambdas = {1.0, 0.0, 0.0, 0.0, 0.0};
    bad_phi.phi = 4.0;
    CHECK_THROWS_AS(generalized_schmidt_state(bad_phi), std::invalid_argument);

    GeneralizedSchmidt negative;
    negative.lambdas = {1.0, -0.1, 0.0, 0.0, 0.0};
    CHECK_THROWS_AS(generalized_schmidt_state(negative), std::invalid_argument);
}

TEST_CASE("biseparable generalized Schmidt state: A entangled with C only") {
    GeneralizedSchmidt p;
    p.lambdas = {1.0 / std::sqrt(2.0), 0.0, 1.0 / std::sqrt(2.0), 0.0, 0.0};
    const StateVector psi = generalized_schmidt_state(p);
    const DensityMatrix rho = density_matrix(psi);
    CHECK(wootters_concurrence(partial_trace(rho, {0, 2})) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(wootters_concurrence(partial_trace(rho, {0, 1})) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("haar_random_state determinism and normalization") {
    for (int n : {2, 3, 4, 5}) {
        const StateVector a = haar_random_state(n, 12345);
        const StateVector b = haar_random_state(n, 12345);
        REQUIRE(a.amplitudes.size() == b.amplitudes.size());
        for (std::size_t i = 0; i < a.amplitudes.size(); ++i)
            CHECK(a.amplitudes[i] == b.amplitudes[i]);  // bitwise
        CHECK(std::abs(norm_squared(a) - 1.0) <= 1e-12);

        const StateVector c = haar_random_state(n, 12346);
        CHECK(a.amplitudes[0] != c.amplitudes[0]);
    }
    CHECK_THROWS_AS(haar_random_state(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(haar_random_state(6, 0), std::invalid_argument);
}

TEST_CASE("haar ensemble purity moment matches (dA+dB)/(dA dB + 1)") {
    // one-qubit marginal of a Haar three-qubit state: mean purity 6/9
    double total = 0.0;
    const int samples = 10000;
    for (int i = 0; i < samples; ++i) {
        const StateVector psi = haar_random_state(3, 50000 + i);
        const DensityMatrix a = partial_trace(density_matrix(psi), {0});
        double purity = 0.0;
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) purity += std::real(a.matrix(r, c) * a.matrix(c, r));
        total += purity;
    }
    CHECK(total / samples == doctest::Approx(2.0 / 3.0).epsilon(0.015));
}

TEST_CASE("state file round trip and validation") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "entbounds_states_test";
    fs::create_directories(dir);
    const std::string path = (dir / "state.json").string();

    const StateVector psi = haar_random_state(3, 777);
    save_state_file(psi, path);
    const StateVector loaded = load_state_file(path);
    CHECK(loaded.n_qubits == psi.n_qubits);
    for (std::size_t i = 0; i < psi.amplitudes.size(); ++i)
        CHECK(std::abs(loaded.amplitudes[i] - psi.amplitudes[i]) <= 1e-15);

    CHECK_THROWS(load_state_file((dir / "missing.json").string()));

    const std::string bad_json = (dir / "bad.json").string();
    std::ofstream(bad_json) << "{not json";
    CHECK_THROWS(load_state_file(bad_json));

    const std::string unnormalized = (dir / "unnormalized.json").string();
    std::ofstream(unnormalized)
        << R"({"n_qubits": 1, "amplitudes": [[0.5, 0.0], [0.5, 0.0]]})";
    CHECK_THROWS(load_state_file(unnormalized));

    fs::remove_all(dir);
}

TEST_CASE("generalized Schmidt closed forms on random parameters") {
    // C_AB = 2 l0 l3, C_AC = 2 l0 l2, C(A|BC) = 2 l0 sqrt(l2^2 + l3^2 + l4^2)
    Rng rng(321);
    for (int rep = 0; rep < 100; ++rep) {
        double raw[5];
        double norm = 0.0;
        for (double& v : raw) {
            v = rng.uniform() + 1e-3;
            norm += v * v;
        }
        GeneralizedSchmidt p;
        for (int i = 0; i < 5; ++i) p.lambdas[i] = raw[i] / std::sqrt(norm);
        p.phi = rng.uniform() * std::acos(-1.0);

        const StateVector psi = generalized_schmidt_state(p);
        const DensityMatrix rho = density_matrix(psi);
        const auto& l = p.lambdas;

        const double c_ab = wootters_concurrence(partial_trace(rho, {0, 1}));
        const double c_ac = wootters_concurrence(partial_trace(rho, {0, 2}));
        const double c_cut = pure_bipartite_concurrence(psi, {0});
        CHECK(std::abs(c_ab - 2.0 * l[0] * l[3]) <= 1e-9);
        CHECK(std::abs(c_ac - 2.0 * l[0] * l[2]) <= 1e-9);
        CHECK(std::abs(c_cut - 2.0 * l[0] * std::sqrt(l[2] * l[2] + l[3] * l[3] + l[4] * l[4])) <=
              1e-9);
    }
}
