#include "sagrover/grover.hpp"

#include <cmath>
#include <numbers>

#include "sagrover/errors.hpp"
#include "sagrover/synth.hpp"

namespace sagrover {

SemanticOracle::SemanticOracle(int q, std::vector<std::uint8_t> marked)
    : q_(q), marked_(std::move(marked)) {
    if (q < 1 || q > kSemanticMaxQubits)
        throw CapacityError("semantic oracle supports 1 <= q <= " +
                            std::to_string(kSemanticMaxQubits) + ", got q=" +
                            std::to_string(q));
    if (marked_.size() != (std::uint64_t{1} << q))
        throw DimensionError("marked table must have 2^q entries");
}

void SemanticOracle::apply(StateVector& state) const {
    auto& amp = state.amplitudes();
    const std::uint64_t input_mask = (std::uint64_t{1} << q_) - 1;
    for (std::uint64_t i = 0; i < amp.size(); ++i)
        if (marked_[i & input_mask]) amp[i] = -amp[i];
}

std::uint64_t SemanticOracle::marked_count() const {
    std::uint64_t count = 0;
    for (auto m : marked_) count += m;
    return count;
}

CircuitOracle::CircuitOracle(int q, Circuit circuit)
    : q_(q), circuit_(std::move(circuit)) {
    if (circuit_.num_qubits < q)
        throw DimensionError("oracle circuit narrower than its input register");
}

void CircuitOracle::apply(StateVector& state) const {
    apply_circuit(circuit_, state);
}

std::unique_ptr<SubspaceOracle> make_threshold_oracle(
    const ReducedQubo& reduced, double threshold, GroverBackend backend) {
    const int q = reduced.model.n;
    if (backend == GroverBackend::Circuit) {
        if (threshold != std::floor(threshold))
            throw SynthesisError("circuit oracle needs an integer threshold");
        Circuit oracle = synthesize_threshold_oracle(
            reduced, static_cast<long long>(threshold));
        return std::make_unique<CircuitOracle>(q, std::move(oracle));
    }
    if (q < 1 || q > kSemanticMaxQubits)
        throw CapacityError("semantic backend supports 1 <= q <= " +
                            std::to_string(kSemanticMaxQubits) + ", got q=" +
                            std::to_string(q));
    const std::uint64_t n_states = std::uint64_t{1} << q;
    std::vector<std::uint8_t> marked(n_states);
    for (std::uint64_t x = 0; x < n_states; ++x)
        marked[x] = evaluate(reduced.model, assignment_from_index(x, q)) <
                            threshold
                        ? 1
                        : 0;
    return std::make_unique<SemanticOracle>(q, std::move(marked));
}

std::uint64_t optimal_iterations(std::uint64_t n_states,
                                 std::uint64_t marked_count) {
    if (marked_count == 0)
        throw MarkedSetError("optimal_iterations needs a nonempty marked set");
    if (marked_count > n_states)
        throw DimensionError("marked count exceeds the search space");
    const double ratio = static_cast<double>(n_states) /
                         static_cast<double>(marked_count);
    const auto iters = static_cast<std::uint64_t>(
        std::floor(std::numbers::pi / 4.0 * std::sqrt(ratio)));
    return iters < 1 ? 1 : iters;
}

void apply_diffusion(StateVector& state, int q) {
    if (q < 1 || q > state.qubit_count())
        throw DimensionError("diffusion register out of range");
    auto& amp = state.amplitudes();
    const std::uint64_t block = std::uint64_t{1} << q;
    const double inv_block = 1.0 / static_cast<double>(block);
    for (std::uint64_t base = 0; base < amp.size(); base += block) {
        Amplitude sum{0.0, 0.0};
        for (std::uint64_t x = 0; x < block; ++x) sum += amp[base + x];
        const Amplitude twice_mean = 2.0 * sum * inv_block;
        for (std::uint64_t x = 0; x < block; ++x)
            amp[base + x] = twice_mean - amp[base + x];
    }
}

namespace {

StateVector prepare_uniform(const SubspaceOracle& oracle) {
    StateVector state(oracle.total_qubits());
    for (int i = 0; i < oracle.input_qubits(); ++i) state.apply(Gate::h(i));
    return state;
}

}  // namespace

GroverOutcome grover_search(const ReducedQubo& reduced,
                            const SubspaceOracle& oracle,
                            std::uint64_t iterations, Rng& rng) {
    const int q = oracle.input_qubits();
    StateVector state = prepare_uniform(oracle);
    for (std::uint64_t r = 0; r < iterations; ++r) {
        oracle.apply(state);
        apply_diffusion(state, q);
    }
    const std::uint64_t input_mask = (std::uint64_t{1} << q) - 1;
    GroverOutcome out;
    out.measured_index = state.measure_all(rng) & input_mask;
    const Assignment bits = assignment_from_index(out.measured_index, q);
    out.measured = assignment_to_string(bits);
    out.cost = evaluate(reduced.model, bits);
    out.iterations_used = iterations;
    out.oracle_calls = iterations;
    return out;
}

std::vector<double> grover_input_probabilities(const SubspaceOracle& oracle,
                                               std::uint64_t iterations) {
    const int q = oracle.input_qubits();
    StateVector state = prepare_uniform(oracle);
    for (std::uint64_t r = 0; r < iterations; ++r) {
        oracle.apply(state);
        apply_diffusion(state, q);
    }
    const std::uint64_t inputs = std::uint64_t{1} << q;
    std::vector<double> probs(inputs, 0.0);
    const auto& amp = state.amplitudes();
    for (std::uint64_t i = 0; i < amp.size(); ++i)
        probs[i & (inputs - 1)] += std::norm(amp[i]);
    return probs;
}

MinFindResult durr_hoyer_min(const ReducedQubo& reduced, GroverBackend backend,
                             Rng& rng, std::uint64_t call_budget,
                             int no_improve_limit) {
    const int q = reduced.model.n;
    if (q < 1) throw DimensionError("minimum finding needs q >= 1");
    const std::uint64_t n_states = std::uint64_t{1} << q;

    MinFindResult result;
    result.best_index = rng.uniform_u64(n_states);
    {
        const Assignment bits = assignment_from_index(result.best_index, q);
        result.best_cost = evaluate(reduced.model, bits);
        result.best = assignment_to_string(bits);
        ++result.classical_evaluations;
    }

    const double schedule_cap =
        std::ceil(std::numbers::pi / 4.0 * std::pow(2.0, q / 2.0));
    // One round is a full unknown-M amplification attempt against the
    // current threshold: iteration counts drawn from [0, m) with m growing
    // by 6/5 per miss, spending at most ~3 * 2^(q/2) oracle calls.
    const auto round_call_cap = static_cast<std::uint64_t>(
        std::ceil(3.0 * std::pow(2.0, q / 2.0)));
    int no_improve = 0;

    while (no_improve < no_improve_limit &&
           result.total_oracle_calls < call_budget) {
        ++result.rounds;
        auto oracle = make_threshold_oracle(reduced, result.best_cost, backend);

        double schedule_m = 1.0;
        std::uint64_t round_calls = 0;
        int attempts = 0;
        bool improved = false;
        while (!improved && round_calls < round_call_cap &&
               result.total_oracle_calls < call_budget && attempts < 128) {
            ++attempts;
            std::uint64_t iterations = rng.uniform_u64(
                static_cast<std::uint64_t>(std::floor(schedule_m)));
            iterations = std::min(iterations,
                                  call_budget - result.total_oracle_calls);

            GroverOutcome outcome =
                grover_search(reduced, *oracle, iterations, rng);
            round_calls += outcome.oracle_calls;
            result.total_oracle_calls += outcome.oracle_calls;
            ++result.classical_evaluations;

            if (outcome.cost < result.best_cost) {
                result.best = outcome.measured;
                result.best_index = outcome.measured_index;
                result.best_cost = outcome.cost;
                improved = true;
            } else {
                schedule_m = std::min(schedule_m * 1.2, schedule_cap);
            }
        }
        no_improve = improved ? 0 : no_improve + 1;
    }
    return result;
}

}  // namespace sagrover
