#include "entbounds/states.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

#include "entbounds/rng.hpp"

namespace entbounds {

double norm_squared(const StateVector& psi) {
    double s = 0.0;
    for (const cxd& a : psi.amplitudes) s += std::norm(a);
    return s;
}

void validate_state(const StateVector& psi) {
    if (psi.n_qubits < 1) throw std::invalid_argument("state: need at least one qubit");
    if (psi.amplitudes.size() != (std::size_t{1} << psi.n_qubits))
        throw std::invalid_argument("state: amplitude count must be 2^n");
    if (std::abs(norm_squared(psi) - 1.0) > 1e-9)
        throw std::invalid_argument("state: not normalized");
}

DensityMatrix density_matrix(const StateVector& psi) {
    validate_state(psi);
    const int dim = 1 << psi.n_qubits;
    ComplexMatrix rho(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            rho(i, j) = psi.amplitudes[i] * std::conj(psi.amplitudes[j]);
    return DensityMatrix{std::vector<int>(psi.n_qubits, 2), std::move(rho)};
}

StateVector w_state(int n) {
    if (n < 2) throw std::invalid_argument("w_state: need n >= 2");
    StateVector psi{n, std::vector<cxd>(std::size_t{1} << n)};
    const double amp = 1.0 / std::sqrt(static_cast<double>(n));
    for (int q = 0; q < n; ++q) psi.amplitudes[std::size_t{1} << (n - 1 - q)] = amp;
    return psi;
}

StateVector ghz_state(int n) {
    if (n < 2) throw std::invalid_argument("ghz_state: need n >= 2");
    StateVector psi{n, std::vector<cxd>(std::size_t{1} << n)};
    psi.amplitudes.front() = 1.0 / std::sqrt(2.0);
    psi.amplitudes.back() = 1.0 / std::sqrt(2.0);
    return psi;
}

StateVector generalized_schmidt_state(const GeneralizedSchmidt& p) {
    double norm = 0.0;
    for (double l : p.lambdas) {
        if (l < 0.0) throw std::invalid_argument("generalized_schmidt_state: lambdas must be >= 0");
        norm += l * l;
    }
    if (std::abs(norm - 1.0) > 1e-9)
        throw std::invalid_argument("generalized_schmidt_state: lambdas must satisfy sum l^2 = 1");
    if (p.phi < 0.0 || p.phi > std::acos(-1.0))
        throw std::invalid_argument("generalized_schmidt_state: phi must lie in [0, pi]");
    StateVector psi{3, std::vector<cxd>(8)};
    psi.amplitudes[0b000] = p.lambdas[0];
    psi.amplitudes[0b100] = p.lambdas[1] * cxd{std::cos(p.phi), std::sin(p.phi)};
    psi.amplitudes[0b101] = p.lambdas[2];
    psi.amplitudes[0b110] = p.lambdas[3];
    psi.amplitudes[0b111] = p.lambdas[4];
    return psi;
}

StateVector haar_random_state(int n, std::uint64_t seed) {
    if (n < 2 || n > 5) throw std::invalid_argument("haar_random_state: n must be in 2..5");
    Rng rng(seed);
    StateVector psi{n, std::vector<cxd>(std::size_t{1} << n)};
    for (cxd& a : psi.amplitudes) {
        const double re = rng.gaussian();
        const double im = rng.gaussian();
        a = cxd{re, im};
    }
    const double inv = 1.0 / std::sqrt(norm_squared(psi));
    for (cxd& a : psi.amplitudes) a *= inv;
    return psi;
}

StateVector load_state_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open state file: " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("state file " + path + ": " + e.what());
    }
    if (!doc.contains("n_qubits") || !doc.contains("amplitudes"))
        throw std::runtime_error("state file " + path + ": missing n_qubits or amplitudes");
    StateVector psi;
    psi.n_qubits = doc.at("n_qubits").get<int>();
    for (const auto& pair : doc.at("amplitudes")) {
        if (!pair.is_array() || pair.size() != 2)
            throw std::runtime_error("state file " + path + ": amplitudes must be [re, im] pairs");
        psi.amplitudes.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    }
    validate_state(psi);
    return psi;
}

void save_state_file(const StateVector& psi, const std::string& path) {
    validate_state(psi);
    nlohmann::json doc;
    doc["n_qubits"] = psi.n_qubits;
    auto& amps = doc["amplitudes"] = nlohmann::json::array();
    for (const cxd& a : psi.amplitudes) amps.push_back({a.real(), a.imag()});
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write state file: " + path);
    out << doc.dump(2) << '\n';
}

}  // namespace entbounds
