#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sagrover/grover.hpp"
#include "sagrover/qubo.hpp"

namespace sagrover {

enum class SolveBackend { ClassicalExhaustive, GroverSemantic, GroverCircuit };

const char* backend_name(SolveBackend backend);
SolveBackend backend_from_name(const std::string& name);

struct SaConfig {
    double initial_temperature = 10.0;
    double cooling_factor = 0.99;
    std::uint64_t outer_iterations = 1000;
    int q = 0;  // subspace size; 0 means pure classical annealing
    std::uint64_t seed = 0;
    SolveBackend backend = SolveBackend::ClassicalExhaustive;

    // Grover-backend knobs: per-step oracle-call budget is
    // grover_budget_factor * 2^(q/2).
    int grover_budget_factor = 50;
    int no_improve_rounds = 3;

    void validate(int model_n) const;
    std::uint64_t grover_call_budget() const;
};

struct SaResult {
    Assignment best_assignment;
    double best_cost = 0.0;
    std::vector<double> cost_trace;  // best-so-far per outer iteration
    std::uint64_t classical_evaluations = 0;
    std::uint64_t oracle_calls = 0;
    std::uint64_t grover_iterations = 0;
    // Subspace configurations covered per outer iteration times iterations;
    // the classical evaluation count the hybrid displaces.
    std::uint64_t configurations_explored = 0;
};

struct StepAccounting {
    std::uint64_t classical_evaluations = 0;
    std::uint64_t oracle_calls = 0;
    std::uint64_t grover_iterations = 0;
};

struct HybridStep {
    Assignment state;
    double cost = 0.0;
    StepAccounting accounting;
};

/// Single-bit-flip Metropolis annealing with a geometric cooling schedule.
SaResult classical_sa(const QuboModel& model, const SaConfig& cfg);

/// q distinct free indices drawn uniformly without replacement, ascending.
std::vector<int> select_free_bits(int n, int q, Rng& rng);

/// One outer iteration of the hybrid loop: fix the non-free bits at their
/// current values, minimize over the 2^q completions with the chosen
/// backend, and run the Metropolis acceptance rule on the candidate.
HybridStep hybrid_step(const QuboModel& model, const Assignment& current,
                       const std::vector<int>& free, SolveBackend backend,
                       double temperature, Rng& rng, const SaConfig& cfg);

/// Outer annealing loop with a fresh free-bit selection every iteration.
SaResult hybrid_sa(const QuboModel& model, const SaConfig& cfg);

}  // namespace sagrover
