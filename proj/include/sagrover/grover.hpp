#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "sagrover/circuit.hpp"
#include "sagrover/qubo.hpp"
#include "sagrover/statevector.hpp"

namespace sagrover {

enum class GroverBackend { Semantic, Circuit };

/// Semantic mode flips phases straight from a classical cost table and
/// reaches q <= kSemanticMaxQubits; circuit mode runs the synthesized
/// threshold oracle on the statevector and is bounded by the register cap.
constexpr int kSemanticMaxQubits = 20;

/// Phase oracle over a q-qubit input register; circuit-backed oracles carry
/// extra work qubits that start and end in |0>.
class SubspaceOracle {
public:
    virtual ~SubspaceOracle() = default;
    virtual int input_qubits() const = 0;
    virtual int total_qubits() const = 0;
    virtual void apply(StateVector& state) const = 0;
};

class SemanticOracle final : public SubspaceOracle {
public:
    SemanticOracle(int q, std::vector<std::uint8_t> marked);
    int input_qubits() const override { return q_; }
    int total_qubits() const override { return q_; }
    void apply(StateVector& state) const override;
    std::uint64_t marked_count() const;

private:
    int q_;
    std::vector<std::uint8_t> marked_;
};

class CircuitOracle final : public SubspaceOracle {
public:
    CircuitOracle(int q, Circuit circuit);
    int input_qubits() const override { return q_; }
    int total_qubits() const override { return circuit_.num_qubits; }
    void apply(StateVector& state) const override;
    const Circuit& circuit() const { return circuit_; }

private:
    int q_;
    Circuit circuit_;
};

/// Oracle marking the basis states of the reduced model with
/// cost < threshold.
std::unique_ptr<SubspaceOracle> make_threshold_oracle(
    const ReducedQubo& reduced, double threshold, GroverBackend backend);

/// floor((pi/4) * sqrt(N/M)), at least 1. M = 0 is a marked-set error.
std::uint64_t optimal_iterations(std::uint64_t n_states,
                                 std::uint64_t marked_count);

/// Reflection about the uniform superposition of the low q qubits,
/// 2|u><u| - I, applied exactly (blockwise over any ancilla qubits).
void apply_diffusion(StateVector& state, int q);

struct GroverOutcome {
    std::string measured;  // q bits, index 0 leftmost
    std::uint64_t measured_index = 0;
    double cost = 0.0;
    std::uint64_t iterations_used = 0;
    std::uint64_t oracle_calls = 0;
};

GroverOutcome grover_search(const ReducedQubo& reduced,
                            const SubspaceOracle& oracle,
                            std::uint64_t iterations, Rng& rng);

/// Pre-measurement probabilities over the input register after the given
/// number of (oracle, diffusion) rounds.
std::vector<double> grover_input_probabilities(const SubspaceOracle& oracle,
                                               std::uint64_t iterations);

struct MinFindResult {
    std::string best;
    std::uint64_t best_index = 0;
    double best_cost = 0.0;
    std::uint64_t rounds = 0;
    std::uint64_t total_oracle_calls = 0;
    std::uint64_t classical_evaluations = 0;
};

/// Threshold-descent minimum finding: sample an initial threshold, then
/// repeatedly amplify {cost < threshold} with the randomized exponential
/// iteration schedule for unknown marked counts, lowering the threshold on
/// every improvement. Stops after `no_improve_limit` consecutive
/// non-improving rounds or when the oracle-call budget runs out.
MinFindResult durr_hoyer_min(const ReducedQubo& reduced, GroverBackend backend,
                             Rng& rng, std::uint64_t call_budget,
                             int no_improve_limit = 3);

}  // namespace sagrover
