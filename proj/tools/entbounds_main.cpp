// entbounds command line: measure evaluation, bound reports, exponent
// sweeps, inequality fuzzing and the built-in worked examples.
//
// Exit codes: 0 success (bounds sound), 1 usage or input error,
// 2 theorem conditions unsatisfied or fuzz violations found.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "entbounds/bounds.hpp"
#include "entbounds/fuzz.hpp"
#include "entbounds/measures.hpp"
#include "entbounds/states.hpp"

namespace {

using namespace entbounds;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitUnsatisfied = 2;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

StateVector resolve_state(const std::string& catalog, const std::string& state_path) {
    if (!catalog.empty() && !state_path.empty())
        throw std::invalid_argument("give either --catalog or --state, not both");
    if (!state_path.empty()) return load_state_file(state_path);
    if (catalog.empty()) throw std::invalid_argument("a state source is required (--catalog or --state)");

    if (catalog == "example2") {
        GeneralizedSchmidt p;
        p.lambdas = {0.5, std::sqrt(2.0) / 12.0, std::sqrt(2.0) / 2.0, std::sqrt(2.0) / 3.0,
                     std::sqrt(2.0) / 12.0};
        return generalized_schmidt_state(p);
    }
    if (catalog == "example1") return w_state(4);
    if (catalog.size() == 2 && catalog[0] == 'w' && catalog[1] >= '2' && catalog[1] <= '5')
        return w_state(catalog[1] - '0');
    if (catalog.size() == 4 && catalog.rfind("ghz", 0) == 0 && catalog[3] >= '2' && catalog[3] <= '5')
        return ghz_state(catalog[3] - '0');
    throw std::invalid_argument("unknown catalog state: " + catalog +
                                " (known: w2..w5, ghz2..ghz5, example1, example2)");
}

MeasureKind parse_kind(const std::string& kind) {
    if (kind == "concurrence") return MeasureKind::Concurrence;
    if (kind == "assistance") return MeasureKind::ConcurrenceOfAssistance;
    throw std::invalid_argument("unknown measure kind: " + kind);
}

// key/value emission shared by the text, csv and structured formats.
void emit(const std::string& format, const std::vector<std::pair<std::string, std::string>>& rows) {
    if (format == "structured") {
        for (const auto& [key, value] : rows) std::cout << key << "=" << value << "\n";
    } else if (format == "csv") {
        std::cout << "key,value\n";
        for (const auto& [key, value] : rows) std::cout << key << "," << value << "\n";
    } else {
        std::size_t width = 0;
        for (const auto& [key, value] : rows) width = std::max(width, key.size());
        for (const auto& [key, value] : rows)
            std::cout << key << std::string(width - key.size() + 2, ' ') << value << "\n";
    }
}

int cmd_measure(const std::string& catalog, const std::string& state_path,
                const std::string& kind_name, const std::string& format) {
    const StateVector psi = resolve_state(catalog, state_path);
    const MeasureKind kind = parse_kind(kind_name);

    MeasureVector mv;
    if (psi.n_qubits == 2) {
        mv.one_to_rest = pure_bipartite_concurrence(psi, {0});
        const DensityMatrix rho = density_matrix(psi);
        mv.pairwise.push_back(kind == MeasureKind::Concurrence ? wootters_concurrence(rho)
                                                               : concurrence_of_assistance(rho));
    } else {
        mv = measure_vector(psi, kind);
    }

    std::vector<std::pair<std::string, std::string>> rows;
    rows.emplace_back("n_qubits", std::to_string(psi.n_qubits));
    rows.emplace_back("kind", kind_name);
    rows.emplace_back("one_to_rest", fmt(mv.one_to_rest));
    for (std::size_t i = 0; i < mv.pairwise.size(); ++i)
        rows.emplace_back("pairwise_" + std::to_string(i + 1), fmt(mv.pairwise[i]));
    emit(format, rows);
    return kExitOk;
}

void report_rows(const BoundReport& r, std::vector<std::pair<std::string, std::string>>& rows,
                 const std::string& prefix) {
    rows.emplace_back(prefix + "theorem", std::to_string(r.theorem));
    if (r.swap_case != 0) rows.emplace_back(prefix + "case", std::to_string(r.swap_case));
    rows.emplace_back(prefix + "eta", fmt(r.eta));
    rows.emplace_back(prefix + "t", fmt(r.t));
    if (r.has_lhs) rows.emplace_back(prefix + "lhs", fmt(r.lhs));
    rows.emplace_back(prefix + "bound_new", fmt(r.bound_new));
    rows.emplace_back(prefix + "bound_chain_mid", fmt(r.bound_chain_mid));
    rows.emplace_back(prefix + "bound_chain_tail", fmt(r.bound_chain_tail));
    if (r.bound_poly_tail) rows.emplace_back(prefix + "bound_poly_tail", fmt(*r.bound_poly_tail));
    if (r.conditions.m > 0) rows.emplace_back(prefix + "m", std::to_string(r.conditions.m));
    rows.emplace_back(prefix + "conditions_ok", r.conditions.satisfied ? "true" : "false");
    if (r.has_lhs) rows.emplace_back(prefix + "gap", fmt(r.gap));
    if (r.degenerate) rows.emplace_back(prefix + "degenerate", "true");
}

int cmd_bounds(const std::string& catalog, const std::string& state_path, int theorem, double eta,
               double base_power, double gamma, double gamma_prime, int m,
               std::string kind_name, const std::string& format) {
    const StateVector psi = resolve_state(catalog, state_path);
    if (kind_name.empty()) kind_name = theorem <= 3 ? "concurrence" : "assistance";
    const MeasureKind kind = parse_kind(kind_name);
    const MeasureVector mv = measure_vector(psi, kind);
    const int n_pair = static_cast<int>(mv.pairwise.size());

    const bool mono = theorem <= 3;
    const ExponentConfig cfg = mono ? ExponentConfig::monogamy(base_power, eta)
                                    : ExponentConfig::polygamy(base_power, eta);

    std::vector<BoundReport> reports;
    switch (theorem) {
        case 1:
            reports.push_back(theorem1_bound(mv, cfg));
            break;
        case 4:
            reports.push_back(theorem4_bound(mv, cfg));
            break;
        case 2:
        case 5: {
            if (n_pair != 2)
                throw std::invalid_argument("theorems 2 and 5 require a three-party state");
            const double e1 = mv.pairwise[0];
            const double e2 = mv.pairwise[1];
            // When both threshold cases apply they give different bounds;
            // report every applicable case.
            for (int which : {1, 2}) {
                BoundReport r = theorem == 2 ? theorem2_case_bound(e1, e2, cfg, gamma, which)
                                             : theorem5_case_bound(e1, e2, cfg, gamma, which);
                attach_lhs(r, mv.one_to_rest);
                if (r.conditions.satisfied || which == 1) reports.push_back(r);
            }
            if (reports.size() == 2 && !reports[0].conditions.satisfied)
                reports.erase(reports.begin());
            break;
        }
        case 3:
        case 6: {
            if (n_pair < 3)
                throw std::invalid_argument("theorems 3 and 6 require at least four parties");
            int use_m = m;
            if (use_m == 0) {  // auto: largest admissible, else largest candidate
                const PartitionConditions pc = check_conditions(mv, gamma, gamma_prime, base_power);
                use_m = pc.m > 0 ? pc.m : n_pair - 2;
            }
            reports.push_back(theorem == 3 ? theorem3_bound(mv, cfg, gamma, gamma_prime, use_m)
                                           : theorem6_bound(mv, cfg, gamma, gamma_prime, use_m));
            break;
        }
        default:
            throw std::invalid_argument("theorem must be in 1..6");
    }

    std::vector<std::pair<std::string, std::string>> rows;
    rows.emplace_back("kind", kind_name);
    bool any_satisfied = false;
    bool gap_ok = true;
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const std::string prefix = reports.size() > 1 ? "case" + std::to_string(i + 1) + "." : "";
        report_rows(reports[i], rows, prefix);
        if (reports[i].conditions.satisfied) {
            any_satisfied = true;
            if (reports[i].gap < -1e-9) gap_ok = false;
        }
    }
    if (!any_satisfied) rows.emplace_back("verdict", "not applicable (conditions unsatisfied)");
    emit(format, rows);
    if (!any_satisfied) return kExitUnsatisfied;
    return gap_ok ? kExitOk : kExitError;
}

int cmd_sweep(const std::string& catalog, const std::string& state_path, const std::string& mode_name,
              double eta_min, double eta_max, int steps, double base_power, double k,
              const std::string& out_path) {
    const StateVector psi = resolve_state(catalog, state_path);
    const bool mono = mode_name == "monogamy";
    if (!mono && mode_name != "polygamy")
        throw std::invalid_argument("sweep mode must be monogamy or polygamy");
    if (steps < 1) throw std::invalid_argument("sweep: need steps >= 1");
    if (!(k >= 1.0)) throw std::invalid_argument("sweep: need k >= 1");

    // Default grids: [base, 3 base] for monogamy, [0, base] for polygamy.
    if (std::isnan(eta_min)) eta_min = mono ? base_power : 0.0;
    if (std::isnan(eta_max)) eta_max = mono ? 3.0 * base_power : base_power;
    if (mono && eta_min < base_power)
        throw std::invalid_argument("monogamy sweep requires eta_min >= base power");
    if (!mono && eta_max > base_power)
        throw std::invalid_argument("polygamy sweep requires eta_max <= base power");

    const MeasureKind kind = mono ? MeasureKind::Concurrence : MeasureKind::ConcurrenceOfAssistance;
    const MeasureVector mv = measure_vector(psi, kind);
    const double gamma = std::pow(k, 1.0 / base_power);

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!out_path.empty() && out_path != "-") {
        file.open(out_path);
        if (!file) throw std::runtime_error("cannot write sweep output: " + out_path);
        out = &file;
    }

    *out << (mono ? "eta,lhs,bound_new,bound_chain_mid,bound_chain_tail,conditions_ok\n"
                  : "eta,lhs,bound_new,bound_chain_mid,bound_chain_tail,bound_poly_tail,conditions_ok\n");
    for (int i = 0; i < steps; ++i) {
        const double eta =
            steps == 1 ? eta_min : eta_min + (eta_max - eta_min) * i / (steps - 1);
        const ExponentConfig cfg = mono ? ExponentConfig::monogamy(base_power, eta)
                                        : ExponentConfig::polygamy(base_power, eta);
        BoundReport r;
        if (mv.pairwise.size() == 2) {
            r = mono ? theorem2_bound(mv.pairwise[0], mv.pairwise[1], cfg, gamma)
                     : theorem5_bound(mv.pairwise[0], mv.pairwise[1], cfg, gamma);
            attach_lhs(r, mv.one_to_rest);
        } else {
            r = mono ? theorem1_bound(mv, cfg) : theorem4_bound(mv, cfg);
        }
        *out << fmt(eta) << ',' << fmt(r.lhs) << ',' << fmt(r.bound_new) << ','
             << fmt(r.bound_chain_mid) << ',' << fmt(r.bound_chain_tail);
        if (!mono) *out << ',' << fmt(r.bound_poly_tail.value_or(r.bound_chain_tail));
        *out << ',' << (r.conditions.satisfied ? 1 : 0) << '\n';
    }
    return kExitOk;
}

int cmd_fuzz(int n_qubits, int trials, std::uint64_t seed, const std::string& kind_name,
             double base_power, const std::vector<double>& etas, const std::string& fail_dir,
             bool serial) {
    FuzzConfig cfg;
    cfg.n_qubits = n_qubits;
    cfg.trials = trials;
    cfg.seed = seed;
    cfg.kind = parse_kind(kind_name);
    cfg.base_power = base_power;
    cfg.etas = etas;

    const FuzzSummary summary = serial ? run_fuzz_serial(cfg) : run_fuzz(cfg);

    std::cout << "trials          " << trials << "\n"
              << "evaluations     " << summary.evaluations << "\n"
              << "satisfied       " << summary.satisfied << "\n"
              << "violations      " << summary.violations.size() << "\n"
              << "worst_gap       " << fmt(summary.worst_gap) << "\n";

    if (!summary.violations.empty()) {
        std::filesystem::create_directories(fail_dir);
        for (std::size_t i = 0; i < summary.violations.size(); ++i) {
            const FuzzViolation& v = summary.violations[i];
            const std::string path = fail_dir + "/violation_trial" + std::to_string(v.trial) +
                                     "_thm" + std::to_string(v.theorem) + "_" + std::to_string(i) +
                                     ".json";
            save_state_file(v.state, path);
            std::cout << "violation       trial=" << v.trial << " theorem=" << v.theorem
                      << " eta=" << fmt(v.eta) << " gap=" << fmt(v.gap) << " state=" << path
                      << "\n";
        }
        return kExitUnsatisfied;
    }
    return kExitOk;
}

struct ExampleCheck {
    std::string name;
    double expected;
    double computed;
};

int cmd_examples() {
    const double rt2 = std::sqrt(2.0);
    std::vector<ExampleCheck> checks;

    const StateVector w4 = w_state(4);
    const MeasureVector w4_c = measure_vector(w4, MeasureKind::Concurrence);
    const MeasureVector w4_a = measure_vector(w4, MeasureKind::ConcurrenceOfAssistance);
    checks.push_back({"w4.C(A|BCD)", std::sqrt(3.0) / 2.0, w4_c.one_to_rest});
    checks.push_back({"w4.Ca(A|BCD)", std::sqrt(3.0) / 2.0, w4_a.one_to_rest});
    for (int i = 0; i < 3; ++i) {
        checks.push_back({"w4.C(A|B" + std::to_string(i + 1) + ")", 0.5, w4_c.pairwise[i]});
        checks.push_back({"w4.Ca(A|B" + std::to_string(i + 1) + ")", 0.5, w4_a.pairwise[i]});
    }

    GeneralizedSchmidt p;
    p.lambdas = {0.5, rt2 / 12.0, rt2 / 2.0, rt2 / 3.0, rt2 / 12.0};
    const StateVector ex2 = generalized_schmidt_state(p);
    const MeasureVector ex2_c = measure_vector(ex2, MeasureKind::Concurrence);
    const MeasureVector ex2_a = measure_vector(ex2, MeasureKind::ConcurrenceOfAssistance);
    checks.push_back({"example2.C(A|B)", rt2 / 3.0, ex2_c.pairwise[0]});
    checks.push_back({"example2.C(A|C)", rt2 / 2.0, ex2_c.pairwise[1]});
    checks.push_back({"example2.C(A|BC)", std::sqrt(106.0) / 12.0, ex2_c.one_to_rest});
    checks.push_back({"example2.Ca(A|BC)", std::sqrt(106.0) / 12.0, ex2_a.one_to_rest});
    checks.push_back({"example2.Ca(A|B)", std::sqrt(34.0) / 12.0, ex2_a.pairwise[0]});
    checks.push_back({"example2.Ca(A|C)", std::sqrt(74.0) / 12.0, ex2_a.pairwise[1]});

    bool all_ok = true;
    std::printf("%-20s %18s %18s %10s  %s\n", "quantity", "expected", "computed", "|diff|", "status");
    for (const ExampleCheck& c : checks) {
        const double diff = std::abs(c.expected - c.computed);
        const bool ok = diff <= 1e-9;
        all_ok = all_ok && ok;
        std::printf("%-20s %18.12f %18.12f %10.2e  %s\n", c.name.c_str(), c.expected, c.computed,
                    diff, ok ? "pass" : "FAIL");
    }

    // Saturation of the sorted weighted-sum bounds by the W state.
    for (double eta : {2.0, 3.0, 4.0}) {
        const BoundReport r = theorem1_bound(w4_c, ExponentConfig::monogamy(2.0, eta));
        const bool ok = std::abs(r.gap) <= 1e-10;
        all_ok = all_ok && ok;
        std::printf("w4 weighted-sum gap at eta=%g: %.3e  %s\n", eta, r.gap, ok ? "pass" : "FAIL");
    }
    for (double eta : {0.5, 1.0, 2.0}) {
        const BoundReport r = theorem4_bound(w4_a, ExponentConfig::polygamy(2.0, eta));
        const bool ok = std::abs(r.gap) <= 1e-10;
        all_ok = all_ok && ok;
        std::printf("w4 assisted-sum gap at eta=%g: %.3e  %s\n", eta, r.gap, ok ? "pass" : "FAIL");
    }

    std::printf("%s\n", all_ok ? "all example checks passed" : "example checks FAILED");
    return all_ok ? kExitOk : kExitError;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"entanglement measures and tightened monogamy/polygamy bounds for small qubit systems"};
    app.require_subcommand(1);

    std::string catalog, state_path, kind = "concurrence", format = "text";

    auto* measure = app.add_subcommand("measure", "compute one-to-rest and pairwise measures");
    measure->add_option("--catalog", catalog, "catalog state (w2..w5, ghz2..ghz5, example1, example2)");
    measure->add_option("--state", state_path, "state file (JSON)");
    measure->add_option("--kind", kind, "concurrence|assistance")->default_str("concurrence");
    measure->add_option("--format", format, "text|csv|structured")->default_str("text");

    int theorem = 1, m = 0;
    double eta = std::nan(""), base_power = 2.0, gamma = 1.0, gamma_prime = 1.0;
    std::string bounds_kind;
    auto* bounds = app.add_subcommand("bounds", "evaluate a bound report for one theorem");
    bounds->add_option("--catalog", catalog, "catalog state");
    bounds->add_option("--state", state_path, "state file (JSON)");
    bounds->add_option("--theorem", theorem, "theorem number 1..6")->required();
    bounds->add_option("--eta", eta, "exponent eta (default: base power)");
    bounds->add_option("--base-power", base_power, "alpha_c or beta_c")->default_str("2");
    bounds->add_option("--gamma", gamma, "threshold ratio gamma >= 1")->default_str("1");
    bounds->add_option("--gamma-prime", gamma_prime, "tail threshold gamma' >= 1")->default_str("1");
    bounds->add_option("--m", m, "partition index (0 = auto)")->default_str("0");
    bounds->add_option("--kind", bounds_kind, "measure kind (default by theorem)");
    bounds->add_option("--format", format, "text|csv|structured")->default_str("text");

    std::string sweep_mode = "monogamy", out_path;
    double eta_min = std::nan(""), eta_max = std::nan("");
    int steps = 81;
    double sweep_k = 1.0;
    auto* sweep = app.add_subcommand("sweep", "write a CSV sweep of bound curves over eta");
    sweep->add_option("--catalog", catalog, "catalog state");
    sweep->add_option("--state", state_path, "state file (JSON)");
    sweep->add_option("--mode", sweep_mode, "monogamy|polygamy")->default_str("monogamy");
    sweep->add_option("--eta-min", eta_min, "grid start (default: mode specific)");
    sweep->add_option("--eta-max", eta_max, "grid end (default: mode specific)");
    sweep->add_option("--steps", steps, "grid points")->default_str("81");
    sweep->add_option("--base-power", base_power, "alpha_c or beta_c")->default_str("2");
    sweep->add_option("--k", sweep_k, "ratio parameter k = gamma^base_power")->default_str("1");
    sweep->add_option("--out", out_path, "output path (default stdout)");

    int fuzz_n = 3, fuzz_trials = 100;
    std::uint64_t fuzz_seed = 0;
    std::vector<double> fuzz_etas;
    std::string fail_dir = "fuzz_failures";
    bool fuzz_serial = false;
    auto* fuzz = app.add_subcommand("fuzz", "check the bounds on Haar-random states");
    fuzz->add_option("--n", fuzz_n, "qubit count 3..5")->default_str("3");
    fuzz->add_option("--trials", fuzz_trials, "number of random states")->default_str("100");
    fuzz->add_option("--seed", fuzz_seed, "master seed")->default_str("0");
    fuzz->add_option("--kind", kind, "concurrence|assistance")->default_str("concurrence");
    fuzz->add_option("--base-power", base_power, "alpha_c or beta_c")->default_str("2");
    fuzz->add_option("--eta", fuzz_etas, "eta grid (comma separated)")->delimiter(',');
    fuzz->add_option("--fail-dir", fail_dir, "directory for failing states")->default_str("fuzz_failures");
    fuzz->add_flag("--serial", fuzz_serial, "use the serial reference driver");

    auto* examples = app.add_subcommand("examples", "recompute the built-in worked examples");

    try {
        app.parse(argc, argv);

        if (measure->parsed()) return cmd_measure(catalog, state_path, kind, format);
        if (bounds->parsed()) {
            if (std::isnan(eta)) eta = base_power;
            return cmd_bounds(catalog, state_path, theorem, eta, base_power, gamma, gamma_prime, m,
                              bounds_kind, format);
        }
        if (sweep->parsed())
            return cmd_sweep(catalog, state_path, sweep_mode, eta_min, eta_max, steps, base_power,
                             sweep_k, out_path);
        if (fuzz->parsed())
            return cmd_fuzz(fuzz_n, fuzz_trials, fuzz_seed, kind, base_power, fuzz_etas, fail_dir,
                            fuzz_serial);
        if (examples->parsed()) return cmd_examples();
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
