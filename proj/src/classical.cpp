#include "pom/classical.hpp"

#include <cmath>
#include <stdexcept>

#include "pom/linprog.hpp"

namespace pom {

namespace {

void check_strategy(const ClassicalStrategy& st) {
    if (st.n < 1) throw std::invalid_argument("strategy: n must be positive");
    if (st.alphabet < 1) throw std::invalid_argument("strategy: alphabet must be positive");
    if (st.encoder.size() != (std::size_t{1} << st.n))
        throw std::invalid_argument("strategy: encoder table must cover all inputs");
    if (st.decoder.size() != static_cast<std::size_t>(st.alphabet * st.n))
        throw std::invalid_argument("strategy: decoder table must cover alphabet x questions");
}

}  // namespace

ClassicalStrategy first_bit_strategy(int n) {
    if (n < 2) throw std::invalid_argument("first_bit_strategy: n must be at least 2");
    ClassicalStrategy st;
    st.n = n;
    st.alphabet = 2;
    const std::size_t inputs = std::size_t{1} << n;
    st.encoder.resize(inputs);
    for (std::size_t v = 0; v < inputs; ++v)
        st.encoder[v] = BitString{n, static_cast<std::uint32_t>(v)}.bit(1);
    st.decoder.assign(static_cast<std::size_t>(2 * n), 0);
    for (int mu = 0; mu < 2; ++mu) st.decoder[static_cast<std::size_t>(mu * n)] = mu;  // y = 1 echoes the message
    return st;
}

std::pair<long long, long long> strategy_success_count(const ClassicalStrategy& st) {
    check_strategy(st);
    const std::size_t inputs = std::size_t{1} << st.n;
    long long wins = 0;
    for (std::size_t v = 0; v < inputs; ++v) {
        const BitString x{st.n, static_cast<std::uint32_t>(v)};
        const int mu = st.encoder[v];
        for (int y = 1; y <= st.n; ++y)
            if (st.decoder[static_cast<std::size_t>(mu * st.n + y - 1)] == x.bit(y)) ++wins;
    }
    return {wins, static_cast<long long>(inputs) * st.n};
}

double strategy_success(const ClassicalStrategy& st) {
    const auto [wins, total] = strategy_success_count(st);
    return static_cast<double>(wins) / static_cast<double>(total);
}

ParityProfile strategy_parity_profile(const ClassicalStrategy& st) {
    check_strategy(st);
    ParityProfile profile;
    profile.parities = parity_set(st.n);
    profile.counts.assign(profile.parities.size(),
                          std::vector<long long>(static_cast<std::size_t>(st.alphabet), 0));
    const std::size_t inputs = std::size_t{1} << st.n;
    for (std::size_t v = 0; v < inputs; ++v) {
        const BitString x{st.n, static_cast<std::uint32_t>(v)};
        const int mu = st.encoder[v];
        for (std::size_t si = 0; si < profile.parities.size(); ++si)
            profile.counts[si][static_cast<std::size_t>(mu)] +=
                parity_bit(profile.parities[si], x) == 0 ? 1 : -1;
    }
    return profile;
}

ClassicalLPReport lp_optimal_classical(int n, int alphabet) {
    if (n != 2 && n != 3) throw std::invalid_argument("lp_optimal_classical: n must be 2 or 3");
    if (alphabet < 2 || alphabet > 4)
        throw std::invalid_argument("lp_optimal_classical: alphabet must be in 2..4");

    const std::size_t inputs = std::size_t{1} << n;
    double encoder_count_d = std::pow(static_cast<double>(alphabet), static_cast<double>(inputs));
    double decoder_count_d = std::ldexp(1.0, alphabet * n);
    if (encoder_count_d * decoder_count_d > 1.5e6)
        throw std::invalid_argument("lp_optimal_classical: strategy count cap exceeded");
    const std::size_t encoder_count = static_cast<std::size_t>(encoder_count_d);
    const std::size_t decoder_count = static_cast<std::size_t>(decoder_count_d);
    const std::size_t cells = static_cast<std::size_t>(alphabet * n);

    const std::vector<BitString> parities = parity_set(n);
    const std::size_t constraint_rows = parities.size() * static_cast<std::size_t>(alphabet);

    // Obliviousness couples only encoders, so the constraint matrix over
    // encoder mixtures is shared by every decoder block; build it once.
    // hits[e][(mu*n + y-1)*2 + b] = #{x : enc(x) = mu, x_y = b} gives each
    // block's objective by a table lookup instead of replaying the game.
    LPProblem lp;
    lp.objective.assign(encoder_count, 0.0);
    lp.constraints.assign(constraint_rows + 1, std::vector<double>(encoder_count, 0.0));
    lp.rhs.assign(constraint_rows + 1, 0.0);
    lp.rhs[constraint_rows] = 1.0;  // mixture weights sum to one

    std::vector<std::vector<long long>> hits(encoder_count, std::vector<long long>(cells * 2, 0));
    {
        ClassicalStrategy st;
        st.n = n;
        st.alphabet = alphabet;
        st.encoder.resize(inputs);
        st.decoder.assign(cells, 0);  // placeholder; profiles ignore the decoder
        for (std::size_t e = 0; e < encoder_count; ++e) {
            // Mixed-radix encoder code, last input fastest.
            std::size_t code = e;
            for (std::size_t v = inputs; v-- > 0;) {
                st.encoder[v] = static_cast<int>(code % alphabet);
                code /= alphabet;
            }
            const ParityProfile profile = strategy_parity_profile(st);
            for (std::size_t si = 0; si < parities.size(); ++si)
                for (int mu = 0; mu < alphabet; ++mu)
                    lp.constraints[si * static_cast<std::size_t>(alphabet) +
                                   static_cast<std::size_t>(mu)][e] =
                        static_cast<double>(profile.counts[si][static_cast<std::size_t>(mu)]);
            lp.constraints[constraint_rows][e] = 1.0;
            for (std::size_t v = 0; v < inputs; ++v) {
                const BitString x{n, static_cast<std::uint32_t>(v)};
                const std::size_t mu = static_cast<std::size_t>(st.encoder[v]);
                for (int y = 1; y <= n; ++y)
                    ++hits[e][(mu * static_cast<std::size_t>(n) + static_cast<std::size_t>(y - 1)) *
                                  2 +
                              static_cast<std::size_t>(x.bit(y))];
            }
        }
    }

    // One LP per deterministic decoder (binary code over table cells, last
    // cell fastest); the best block is the optimum of the full program.
    const double total_pairs = static_cast<double>(inputs) * n;
    std::vector<int> decoder(cells);
    double best_value = -1.0;
    std::size_t best_decoder = 0;
    LPSolution best_solution;
    std::vector<double> best_objective;
    for (std::size_t d = 0; d < decoder_count; ++d) {
        std::size_t dcode = d;
        for (std::size_t cell = cells; cell-- > 0;) {
            decoder[cell] = static_cast<int>(dcode & 1);
            dcode >>= 1;
        }
        for (std::size_t e = 0; e < encoder_count; ++e) {
            long long wins = 0;
            for (std::size_t cell = 0; cell < cells; ++cell)
                wins += hits[e][cell * 2 + static_cast<std::size_t>(decoder[cell])];
            lp.objective[e] = static_cast<double>(wins) / total_pairs;
        }
        const LPSolution sol = simplex_maximize(lp);
        if (sol.status != LPStatus::Optimal)
            throw std::runtime_error("lp_optimal_classical: solver did not reach an optimum");
        if (sol.value > best_value) {
            best_value = sol.value;
            best_decoder = d;
            best_solution = sol;
            best_objective = lp.objective;
        }
    }

    ClassicalLPReport report;
    report.n = n;
    report.alphabet = alphabet;
    report.optimal_value = best_value;
    for (std::size_t e = 0; e < encoder_count; ++e) {
        if (best_solution.x[e] > 1e-9) {
            ++report.support_size;
            report.support.push_back(
                SupportEntry{e, best_decoder, best_solution.x[e], best_objective[e]});
        }
    }
    for (std::size_t row = 0; row < constraint_rows; ++row) {
        double dev = 0.0;
        for (std::size_t e = 0; e < encoder_count; ++e)
            if (best_solution.x[e] != 0.0) dev += lp.constraints[row][e] * best_solution.x[e];
        report.max_parity_deviation = std::max(report.max_parity_deviation, std::abs(dev));
    }
    return report;
}

}  // namespace pom
