#include "pom/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <ctime>
#include <fstream>
#include <ostream>
#include <sstream>

#include "pom/bell.hpp"
#include "pom/classical.hpp"
#include "pom/game.hpp"
#include "pom/seesaw.hpp"
#include "pom/serialize.hpp"

namespace pom::cli {

namespace {

std::vector<int> parse_n_values(const std::string& text) {
    const auto parse_int = [](const std::string& text) {
        std::size_t used = 0;
        const int value = std::stoi(text, &used);
        if (used != text.size()) throw std::invalid_argument("--n: expected an integer, got '" + text + "'");
        return value;
    };
    const std::size_t dots = text.find("..");
    if (dots == std::string::npos) return {parse_int(text)};
    const int lo = parse_int(text.substr(0, dots));
    const int hi = parse_int(text.substr(dots + 2));
    if (lo > hi) throw std::invalid_argument("--n: empty range '" + text + "'");
    std::vector<int> out;
    for (int n = lo; n <= hi; ++n) out.push_back(n);
    return out;
}

int single_n(const std::vector<int>& ns, const char* verb) {
    if (ns.size() != 1)
        throw std::invalid_argument(std::string(verb) + ": expects a single --n, not a range");
    return ns.front();
}

std::string timestamp_utc() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string join_args(const std::vector<std::string>& args) {
    std::string out = "pom";
    for (const std::string& a : args) {
        out += ' ';
        out += a;
    }
    return out;
}

// One data line per record; columns are the scalar keys of the first record.
// Nested arrays/objects stay JSON-only.
std::string to_csv(const Json& results) {
    Json rows = results.is_array() ? results : Json::array({results});
    if (rows.empty()) return "";
    std::vector<std::string> columns;
    for (const auto& [key, value] : rows.front().items())
        if (!value.is_array() && !value.is_object()) columns.push_back(key);
    std::ostringstream out;
    for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
    out << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < columns.size(); ++i) {
            if (i) out << ',';
            if (!row.contains(columns[i])) continue;
            const Json& v = row[columns[i]];
            if (v.is_string())
                out << v.get<std::string>();
            else
                out << v.dump();
        }
        out << '\n';
    }
    return out.str();
}

MeasurementSetup load_setup(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open setup file '" + path + "'");
    nlohmann::json j;
    in >> j;
    return setup_from_json(j);
}

Json bounds_row(int n) {
    const BoundsRecord b = bounds(n);
    Json row;
    row["n"] = n;
    row["classical"] = b.classical;
    row["pnc"] = b.pnc;
    row["quantum_opt"] = b.quantum_opt;
    row["algebraic_success"] = b.algebraic_success;
    row["algebraic_max"] = algebraic_max(n);
    return row;
}

// Fixed, documented tolerances for the canonical-construction checks.
struct VerifyOutcome {
    Json row;
    bool pass = true;
};

VerifyOutcome verify_row(int n) {
    const MeasurementSetup setup = canonical_setup(n);
    const double target = std::ldexp(1.0, n - 1) * std::sqrt(static_cast<double>(n));

    const EncodingEnsemble ensemble = encode_ensemble(setup);
    const ParityCheck parity = verify_parity_obliviousness(ensemble);
    const SOSCertificate cert = sos_certificate(setup);
    const double bell = bell_value(setup);
    const double spectral = spectral_max(bell_operator(setup));
    const double success = exact_success_via_bell(setup);
    const double expected_success = bounds(n).quantum_opt;
    const double gap = success_route_gap(setup);

    VerifyOutcome out;
    out.row["n"] = n;
    out.row["parity_max_deviation"] = parity.max_deviation;
    out.row["sos_residual"] = cert.residual;
    out.row["gamma_min_eig"] = cert.gamma_min_eig;
    out.row["bell_value"] = bell;
    out.row["spectral_max"] = spectral;
    out.row["bound"] = target;
    out.row["success"] = success;
    out.row["route_gap"] = gap;
    out.pass = parity.max_deviation <= 1e-12 && cert.residual <= 1e-10 &&
               cert.gamma_min_eig >= -1e-9 && std::abs(spectral - target) <= 1e-8 * target &&
               std::abs(bell - spectral) <= 1e-8 * spectral &&
               std::abs(success - expected_success) <= 1e-10 && gap <= 1e-12;
    out.row["pass"] = out.pass;
    return out;
}

Json exact_row(const MeasurementSetup& setup) {
    const GameReport report = game_report(setup);
    Json row;
    row["n"] = report.n;
    row["p_direct"] = report.p_direct;
    row["p_via_bell"] = report.p_via_bell;
    row["bell_value"] = report.bell_value;
    row["pnc_bound"] = report.pnc_bound;
    row["quantum_opt"] = report.quantum_opt;
    return row;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"numerical laboratory for the n-bit parity-oblivious multiplexing game"};
    app.require_subcommand(1);

    std::string n_arg;
    std::string format = "json";
    std::string out_path;
    std::string setup_path;
    std::uint64_t rounds = 0;
    std::uint64_t seed = 0;
    int alphabet = 2;
    std::size_t dim = 0;
    int restarts = 10;
    double tol = 1e-9;

    const auto add_common = [&](CLI::App* sub, bool needs_n) {
        auto* opt = sub->add_option("--n", n_arg, "number of bits, single value or range a..b");
        if (needs_n) opt->required();
        sub->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--out", out_path, "write the report to this path instead of stdout");
    };

    CLI::App* cmd_bounds = app.add_subcommand("bounds", "closed-form success bounds");
    add_common(cmd_bounds, true);

    CLI::App* cmd_construct = app.add_subcommand("construct", "emit the canonical measurement setup");
    add_common(cmd_construct, true);

    CLI::App* cmd_verify = app.add_subcommand("verify", "check the canonical construction against its certificates");
    add_common(cmd_verify, true);

    CLI::App* cmd_exact = app.add_subcommand("exact", "exact success probability by both routes");
    add_common(cmd_exact, false);
    cmd_exact->add_option("--setup", setup_path, "JSON setup file to score instead of the canonical one");

    CLI::App* cmd_simulate = app.add_subcommand("simulate", "Monte Carlo rounds of the game");
    add_common(cmd_simulate, false);
    cmd_simulate->add_option("--rounds", rounds, "number of rounds")->required();
    cmd_simulate->add_option("--seed", seed, "PRNG seed");
    cmd_simulate->add_option("--setup", setup_path, "JSON setup file to play instead of the canonical one");

    CLI::App* cmd_classical = app.add_subcommand("classical-lp", "LP optimum over parity-oblivious classical mixtures");
    add_common(cmd_classical, true);
    cmd_classical->add_option("--alphabet", alphabet, "message alphabet size");

    CLI::App* cmd_lhv = app.add_subcommand("lhv-max", "deterministic-assignment maximum of the Bell expression");
    add_common(cmd_lhv, true);

    CLI::App* cmd_seesaw = app.add_subcommand("seesaw", "alternating optimization of the Bell value");
    add_common(cmd_seesaw, true);
    cmd_seesaw->add_option("--dim", dim, "local dimension (power of two; default 2^ceil(n/2))");
    cmd_seesaw->add_option("--restarts", restarts, "random restarts");
    cmd_seesaw->add_option("--seed", seed, "PRNG seed");
    cmd_seesaw->add_option("--tol", tol, "convergence tolerance on the objective gain");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("pom");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    }

    int exit_code = 0;
    Json results;
    try {
        if (app.got_subcommand(cmd_bounds)) {
            const std::vector<int> ns = parse_n_values(n_arg);
            results = Json::array();
            for (int n : ns) results.push_back(bounds_row(n));
            if (ns.size() == 1) results = results.front();
        } else if (app.got_subcommand(cmd_construct)) {
            results = setup_to_json(canonical_setup(single_n(parse_n_values(n_arg), "construct")));
        } else if (app.got_subcommand(cmd_verify)) {
            const std::vector<int> ns = parse_n_values(n_arg);
            results = Json::array();
            for (int n : ns) {
                VerifyOutcome row = verify_row(n);
                if (!row.pass) exit_code = 1;
                results.push_back(std::move(row.row));
            }
            if (ns.size() == 1) results = results.front();
        } else if (app.got_subcommand(cmd_exact)) {
            if (!setup_path.empty()) {
                results = exact_row(load_setup(setup_path));
            } else {
                if (n_arg.empty()) throw std::invalid_argument("exact: provide --n or --setup");
                const std::vector<int> ns = parse_n_values(n_arg);
                results = Json::array();
                for (int n : ns) results.push_back(exact_row(canonical_setup(n)));
                if (ns.size() == 1) results = results.front();
            }
        } else if (app.got_subcommand(cmd_simulate)) {
            MeasurementSetup setup;
            if (!setup_path.empty()) {
                setup = load_setup(setup_path);
            } else {
                if (n_arg.empty()) throw std::invalid_argument("simulate: provide --n or --setup");
                setup = canonical_setup(single_n(parse_n_values(n_arg), "simulate"));
            }
            const SimulationResult sim = simulate(setup, rounds, seed);
            results["n"] = setup.n;
            results["rounds"] = sim.rounds;
            results["successes"] = sim.successes;
            results["estimate"] = sim.estimate;
            results["standard_error"] = sim.standard_error;
            results["seed"] = sim.seed;
            results["generator"] = Xoshiro256pp::algorithm;
        } else if (app.got_subcommand(cmd_classical)) {
            const ClassicalLPReport report =
                lp_optimal_classical(single_n(parse_n_values(n_arg), "classical-lp"), alphabet);
            results["n"] = report.n;
            results["alphabet"] = report.alphabet;
            results["optimal_value"] = report.optimal_value;
            results["support_size"] = report.support_size;
            results["max_parity_deviation"] = report.max_parity_deviation;
            Json support = Json::array();
            for (const SupportEntry& entry : report.support) {
                Json e;
                e["encoder_index"] = entry.encoder_index;
                e["decoder_index"] = entry.decoder_index;
                e["weight"] = entry.weight;
                e["success"] = entry.success;
                support.push_back(std::move(e));
            }
            results["support"] = std::move(support);
        } else if (app.got_subcommand(cmd_lhv)) {
            const std::vector<int> ns = parse_n_values(n_arg);
            results = Json::array();
            for (int n : ns) {
                const double value = lhv_max(n);
                Json row;
                row["n"] = n;
                row["lhv_max"] = value;
                row["success_from_lhv"] = 0.5 + value / (std::ldexp(1.0, n) * n);
                results.push_back(std::move(row));
            }
            if (ns.size() == 1) results = results.front();
        } else if (app.got_subcommand(cmd_seesaw)) {
            SeesawConfig config;
            config.n = single_n(parse_n_values(n_arg), "seesaw");
            config.dim = dim;
            config.restarts = restarts;
            config.seed = seed;
            config.tolerance = tol;
            const SeesawTrace trace = seesaw_run(config);
            const double target =
                std::ldexp(1.0, config.n - 1) * std::sqrt(static_cast<double>(config.n));
            results["n"] = config.n;
            results["dim"] = trace.setup.state.dim_a;
            results["restarts"] = trace.restarts;
            results["seed"] = config.seed;
            results["best_objective"] = trace.objectives.empty() ? 0.0 : trace.objectives.back();
            results["target"] = target;
            results["converged"] = trace.converged;
            results["iterations"] = trace.objectives.size();
            results["objective_trace"] = trace.objectives;
            results["setup"] = setup_to_json(trace.setup);
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }

    Json report;
    report["command"] = join_args(args);
    report["version"] = version;
    report["generated_at"] = timestamp_utc();
    report["results"] = std::move(results);

    std::string payload;
    if (format == "csv")
        payload = to_csv(report["results"]);
    else
        payload = report.dump(2) + "\n";

    if (!out_path.empty()) {
        std::ofstream file(out_path);
        if (!file) {
            err << "error: cannot write to '" << out_path << "'\n";
            return 2;
        }
        file << payload;
    } else {
        out << payload;
    }
    return exit_code;
}

}  // namespace pom::cli
