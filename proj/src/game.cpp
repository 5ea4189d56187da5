#include "pom/game.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "pom/task.hpp"

namespace pom {

namespace {

// Born weights for the ensemble.  plus[x][y-1] = tr[rho_x (I + B_y)/2] and
// trace[x] = tr[rho_x].  The ensemble's factor-2 steering convention keeps
// the route identity exact but can leave tr[rho_x] != 1 (deviation recorded
// by the ensemble), so the minus-outcome weight is trace - plus, not 1 - plus.
struct BornTable {
    std::vector<std::vector<double>> plus;
    std::vector<double> trace;
};

BornTable born_table(const EncodingEnsemble& ensemble, const std::vector<Observable>& bob) {
    const std::size_t inputs = ensemble.states.size();
    const std::size_t settings = bob.size();
    BornTable table;
    table.plus.assign(inputs, std::vector<double>(settings));
    table.trace.assign(inputs, 0.0);
    for (std::size_t x = 0; x < inputs; ++x) {
        const ComplexMatrix& rho = ensemble.states[x];
        table.trace[x] = rho.trace().real();
        for (std::size_t y = 0; y < settings; ++y) {
            const ComplexMatrix& b = bob[y].matrix;
            Complex val = 0.5 * rho.trace();
            for (std::size_t r = 0; r < rho.rows(); ++r)
                for (std::size_t c = 0; c < rho.cols(); ++c) val += 0.5 * rho(r, c) * b(c, r);
            table.plus[x][y] = val.real();
        }
    }
    return table;
}

}  // namespace

double exact_success_direct(const EncodingEnsemble& ensemble, const std::vector<Observable>& bob) {
    const int n = ensemble.n;
    const std::size_t inputs = ensemble.states.size();
    const BornTable table = born_table(ensemble, bob);
    double total = 0.0;
    for (std::size_t x = 0; x < inputs; ++x) {
        const BitString xs{n, static_cast<std::uint32_t>(x)};
        for (int y = 1; y <= n; ++y) {
            const double p_plus = table.plus[x][static_cast<std::size_t>(y - 1)];
            // outcome +1 decodes to 0, so the round is won with weight
            // tr[rho (I+B)/2] when the target bit is 0 and tr[rho (I-B)/2]
            // when it is 1.
            total += xs.bit(y) == 0 ? p_plus : table.trace[x] - p_plus;
        }
    }
    return total / (static_cast<double>(inputs) * n);
}

double exact_success_via_bell(const MeasurementSetup& setup) {
    const double denom = std::ldexp(1.0, setup.n) * setup.n;
    return 0.5 + bell_value(setup) / denom;
}

double success_route_gap(const MeasurementSetup& setup) {
    const EncodingEnsemble ensemble = encode_ensemble(setup);
    const double direct = exact_success_direct(ensemble, setup.bob);
    return std::abs(direct - exact_success_via_bell(setup));
}

GameReport game_report(const MeasurementSetup& setup) {
    GameReport report;
    report.n = setup.n;
    report.bell_value = bell_value(setup);
    report.p_via_bell = 0.5 + report.bell_value / (std::ldexp(1.0, setup.n) * setup.n);
    report.p_direct = exact_success_direct(encode_ensemble(setup), setup.bob);
    const BoundsRecord b = bounds(setup.n);
    report.pnc_bound = b.pnc;
    report.quantum_opt = b.quantum_opt;
    return report;
}

SimulationResult simulate(const MeasurementSetup& setup, std::uint64_t rounds, std::uint64_t seed) {
    if (rounds == 0) throw std::invalid_argument("simulate: round count must be positive");
    const int n = setup.n;
    const EncodingEnsemble ensemble = encode_ensemble(setup);
    BornTable full = born_table(ensemble, setup.bob);
    // Sampled rounds need genuine outcome distributions, which requires the
    // steering probabilities to be exactly one half (unit-trace ensemble).
    for (double t : full.trace)
        if (std::abs(t - 1.0) > 1e-9)
            throw std::runtime_error(
                "simulate: ensemble state trace deviates from 1; steering probabilities are not "
                "1/2, so round outcomes have no well-defined distribution");
    std::vector<std::vector<double>>& table = full.plus;
    for (auto& row : table)
        for (double& p : row) {
            if (p < -1e-9 || p > 1.0 + 1e-9)
                throw std::runtime_error("simulate: Born probability outside [0, 1]");
            p = std::min(1.0, std::max(0.0, p));
        }

    const std::uint64_t input_mask = (std::uint64_t{1} << n) - 1;
    Xoshiro256pp rng(seed);
    std::uint64_t successes = 0;
    for (std::uint64_t round = 0; round < rounds; ++round) {
        const std::uint64_t x = rng.next() & input_mask;  // power of two: masking is unbiased
        const int y = static_cast<int>(rng.below(static_cast<std::uint64_t>(n))) + 1;
        const double p_plus = table[x][static_cast<std::size_t>(y - 1)];
        const int outcome_bit = rng.uniform01() < p_plus ? 0 : 1;
        const BitString xs{n, static_cast<std::uint32_t>(x)};
        if (outcome_bit == xs.bit(y)) ++successes;
    }

    SimulationResult result;
    result.rounds = rounds;
    result.successes = successes;
    result.seed = seed;
    result.estimate = static_cast<double>(successes) / static_cast<double>(rounds);
    result.standard_error =
        std::sqrt(result.estimate * (1.0 - result.estimate) / static_cast<double>(rounds));
    return result;
}

}  // namespace pom
