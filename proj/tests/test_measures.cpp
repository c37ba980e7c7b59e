#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "entbounds/measures.hpp"
#include "entbounds/rng.hpp"
#include "entbounds/states.hpp"

using namespace entbounds;

namespace {

StateVector example2_state() {
    GeneralizedSchmidt p;
    p.lambdas = {0.5, std::sqrt(2.0) / 12.0, std::sqrt(2.0) / 2.0, std::sqrt(2.0) / 3.0,
                 std::sqrt(2.0) / 12.0};
    return generalized_schmidt_state(p);
}

DensityMatrix random_two_qubit_density(std::uint64_t seed) {
    // full-rank sample: normalized G G^dagger
    Rng rng(seed);
    ComplexMatrix g(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) g(i, j) = cxd{rng.gaussian(), rng.gaussian()};
    ComplexMatrix rho = g * g.adjoint();
    rho = cxd{1.0 / rho.trace().real(), 0.0} * rho;
    return DensityMatrix{{2, 2}, std::move(rho)};
}

ComplexMatrix random_single_qubit_unitary(Rng& rng) {
    // Gram-Schmidt of a Ginibre pair
    cxd a{rng.gaussian(), rng.gaussian()}, b{rng.gaussian(), rng.gaussian()};
    double n1 = std::sqrt(std::norm(a) + std::norm(b));
    a /= n1;
    b /= n1;
    ComplexMatrix u(2, 2);
    u(0, 0) = a;
    u(1, 0) = b;
    u(0, 1) = -std::conj(b);
    u(1, 1) = std::conj(a);
    return u;
}

}  // namespace

TEST_CASE("pure bipartite concurrence") {
    CHECK(pure_bipartite_concurrence(ghz_state(2), {0}) == doctest::Approx(1.0).epsilon(1e-12));

    // |0> x |psi> across the first cut
    StateVector product{2, {cxd{0.6, 0.0}, cxd{0.8, 0.0}, cxd{}, cxd{}}};
    CHECK(pure_bipartite_concurrence(product, {0}) == doctest::Approx(0.0).epsilon(1e-12));

    CHECK(pure_bipartite_concurrence(w_state(4), {0}) ==
          doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-12));

    CHECK_THROWS_AS(pure_bipartite_concurrence(w_state(3), {}), std::invalid_argument);
    CHECK_THROWS_AS(pure_bipartite_concurrence(w_state(3), {0, 1, 2}), std::invalid_argument);
}

TEST_CASE("spin flip fixed points") {
    const DensityMatrix bell = density_matrix(ghz_state(2));
    const DensityMatrix bell_flipped = spin_flip(bell);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            CHECK(std::abs(bell_flipped.matrix(i, j) - bell.matrix(i, j)) <= 1e-14);

    ComplexMatrix iso = cxd{0.25, 0.0} * ComplexMatrix::identity(4);
    const DensityMatrix mixed{{2, 2}, iso};
    const DensityMatrix mixed_flipped = spin_flip(mixed);
    for (int i = 0; i < 4; ++i) CHECK(std::abs(mixed_flipped.matrix(i, i) - cxd{0.25, 0.0}) <= 1e-14);

    ComplexMatrix zz(4, 4);
    zz(0, 0) = 1.0;  // |00><00|
    const DensityMatrix flipped = spin_flip(DensityMatrix{{2, 2}, zz});
    CHECK(std::abs(flipped.matrix(3, 3) - cxd{1.0, 0.0}) <= 1e-14);
    CHECK(std::abs(flipped.matrix(0, 0)) <= 1e-14);

    CHECK_THROWS_AS(spin_flip(DensityMatrix{{2}, ComplexMatrix::identity(2)}),
                    std::invalid_argument);
}

TEST_CASE("wootters concurrence on reference states") {
    CHECK(wootters_concurrence(density_matrix(ghz_state(2))) == doctest::Approx(1.0).epsilon(1e-12));

    const DensityMatrix w4_ab = partial_trace(density_matrix(w_state(4)), {0, 1});
    CHECK(wootters_concurrence(w4_ab) == doctest::Approx(0.5).epsilon(1e-12));

    const DensityMatrix ex2_ab = partial_trace(density_matrix(example2_state()), {0, 1});
    CHECK(std::abs(wootters_concurrence(ex2_ab) - std::sqrt(2.0) / 3.0) <= 1e-12);

    const DensityMatrix ghz_ab = partial_trace(density_matrix(ghz_state(3)), {0, 1});
    CHECK(wootters_concurrence(ghz_ab) == doctest::Approx(0.0).epsilon(1e-12));

    CHECK_THROWS(wootters_concurrence(DensityMatrix{{2, 2}, ComplexMatrix::identity(4)}));
}

TEST_CASE("concurrence of assistance on reference states") {
    const DensityMatrix w4_ab = partial_trace(density_matrix(w_state(4)), {0, 1});
    CHECK(concurrence_of_assistance(w4_ab) == doctest::Approx(0.5).epsilon(1e-12));

    const DensityMatrix rho = density_matrix(example2_state());
    CHECK(std::abs(concurrence_of_assistance(partial_trace(rho, {0, 1})) -
                   std::sqrt(34.0) / 12.0) <= 1e-12);
    CHECK(std::abs(concurrence_of_assistance(partial_trace(rho, {0, 2})) -
                   std::sqrt(74.0) / 12.0) <= 1e-12);

    // separable-looking GHZ marginal still has full assistance
    const DensityMatrix ghz_ab = partial_trace(density_matrix(ghz_state(3)), {0, 1});
    CHECK(concurrence_of_assistance(ghz_ab) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("measure_vector") {
    const MeasureVector w4 = measure_vector(w_state(4), MeasureKind::Concurrence);
    CHECK(std::abs(w4.one_to_rest - std::sqrt(3.0) / 2.0) <= 1e-12);
    REQUIRE(w4.pairwise.size() == 3);
    for (double v : w4.pairwise) CHECK(std::abs(v - 0.5) <= 1e-12);

    const MeasureVector ex2 = measure_vector(example2_state(), MeasureKind::Concurrence);
    CHECK(std::abs(ex2.one_to_rest - std::sqrt(106.0) / 12.0) <= 1e-12);
    CHECK(std::abs(ex2.pairwise[0] - std::sqrt(2.0) / 3.0) <= 1e-12);
    CHECK(std::abs(ex2.pairwise[1] - std::sqrt(2.0) / 2.0) <= 1e-12);

    const MeasureVector ghz3 = measure_vector(ghz_state(3), MeasureKind::Concurrence);
    CHECK(std::abs(ghz3.one_to_rest - 1.0) <= 1e-12);
    CHECK(std::abs(ghz3.pairwise[0]) <= 1e-12);
    CHECK(std::abs(ghz3.pairwise[1]) <= 1e-12);

    CHECK_THROWS_AS(measure_vector(ghz_state(2), MeasureKind::Concurrence), std::invalid_argument);
}

TEST_CASE("three-qubit tangle") {
    CHECK(tangle_three_qubit(ghz_state(3)) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(tangle_three_qubit(w_state(3)) == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(std::abs(tangle_three_qubit(example2_state()) - 1.0 / 72.0) <= 1e-12);
    CHECK_THROWS_AS(tangle_three_qubit(w_state(4)), std::invalid_argument);
}

TEST_CASE("assistance dominates concurrence; equality on pure states") {
    for (int rep = 0; rep < 50; ++rep) {
        const DensityMatrix rho = random_two_qubit_density(600 + rep);
        CHECK(concurrence_of_assistance(rho) >= wootters_concurrence(rho) - 1e-10);
    }
    for (int rep = 0; rep < 50; ++rep) {
        const DensityMatrix pure = density_matrix(haar_random_state(2, 800 + rep));
        CHECK(std::abs(concurrence_of_assistance(pure) - wootters_concurrence(pure)) <= 1e-10);
    }
}

TEST_CASE("squared-measure baselines on random three-qubit states") {
    for (int rep = 0; rep < 200; ++rep) {
        const StateVector psi = haar_random_state(3, 900 + rep);
        const DensityMatrix rho = density_matrix(psi);
        const double c_cut = pure_bipartite_concurrence(psi, {0});
        const double c_ab = wootters_concurrence(partial_trace(rho, {0, 1}));
        const double c_ac = wootters_concurrence(partial_trace(rho, {0, 2}));
        CHECK(c_cut * c_cut - c_ab * c_ab - c_ac * c_ac >= -1e-10);

        const double a_ab = concurrence_of_assistance(partial_trace(rho, {0, 1}));
        const double a_ac = concurrence_of_assistance(partial_trace(rho, {0, 2}));
        CHECK(a_ab * a_ab + a_ac * a_ac - c_cut * c_cut >= -1e-10);
    }
}

TEST_CASE("wootters concurrence invariant under local unitaries") {
    Rng rng(2718);
    for (int rep = 0; rep < 40; ++rep) {
        const DensityMatrix rho = random_two_qubit_density(1200 + rep);
        const ComplexMatrix u = tensor(random_single_qubit_unitary(rng),
                                       random_single_qubit_unitary(rng));
        const DensityMatrix rotated{{2, 2}, u * rho.matrix * u.adjoint()};
        CHECK(std::abs(wootters_concurrence(rotated) - wootters_concurrence(rho)) <= 1e-10);
    }
}

TEST_CASE("assistance-concurrence split equals the tangle on the canonical family") {
    Rng rng(1618);
    for (int rep = 0; rep < 60; ++rep) {
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
        const DensityMatrix ab = partial_trace(density_matrix(psi), {0, 1});
        const double c = wootters_concurrence(ab);
        const double ca = concurrence_of_assistance(ab);
        const double tau = 4.0 * p.lambdas[0] * p.lambdas[0] * p.lambdas[4] * p.lambdas[4];
        CHECK(std::abs(ca * ca - c * c - tau) <= 1e-9);
    }
}

TEST_CASE("convex roof oracle basics") {
    const DensityMatrix bell = density_matrix(ghz_state(2));
    CHECK(convex_roof_oracle(bell, RoofMode::Min, 50, 1) == doctest::Approx(1.0).epsilon(1e-9));

    ComplexMatrix iso = cxd{0.25, 0.0} * ComplexMatrix::identity(4);
    const DensityMatrix mixed{{2, 2}, iso};
    CHECK(convex_roof_oracle(mixed, RoofMode::Min, 2000, 2) <= 0.05);  // separable

    CHECK_THROWS_AS(convex_roof_oracle(bell, RoofMode::Min, 0, 1), std::invalid_argument);
}

TEST_CASE("oracle decomposition values bracket the closed forms") {
    for (int rep = 0; rep < 25; ++rep) {
        const DensityMatrix rho = partial_trace(density_matrix(haar_random_state(3, 40 + rep)), {0, 1});
        const double c = wootters_concurrence(rho);
        // every decomposition average upper-bounds the infimum
        CHECK(convex_roof_oracle(rho, RoofMode::Min, 60, 7 * rep + 1) >= c - 1e-9);
        // and lower-bounds the supremum
        CHECK(convex_roof_oracle(rho, RoofMode::Max, 60, 7 * rep + 2) <=
              concurrence_of_assistance(rho) + 1e-9);
    }
}

TEST_CASE("oracle approaches the assistance closed form from below") {
    const DensityMatrix ex2_ab = partial_trace(density_matrix(example2_state()), {0, 1});
    const double best = convex_roof_oracle(ex2_ab, RoofMode::Max, 5000, 99);
    CHECK(std::abs(best - std::sqrt(34.0) / 12.0) <= 1e-2);
    CHECK(best <= std::sqrt(34.0) / 12.0 + 1e-9);
}
