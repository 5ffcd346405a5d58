#include "sagrover/sa.hpp"

#include <cmath>

#include "sagrover/errors.hpp"

namespace sagrover {

const char* backend_name(SolveBackend backend) {
    switch (backend) {
        case SolveBackend::ClassicalExhaustive: return "classical-exhaustive";
        case SolveBackend::GroverSemantic: return "grover-semantic";
        case SolveBackend::GroverCircuit: return "grover-circuit";
    }
    return "?";
}

SolveBackend backend_from_name(const std::string& name) {
    if (name == "classical-exhaustive") return SolveBackend::ClassicalExhaustive;
    if (name == "grover-semantic") return SolveBackend::GroverSemantic;
    if (name == "grover-circuit") return SolveBackend::GroverCircuit;
    throw DimensionError("unknown backend '" + name + "'");
}

void SaConfig::validate(int model_n) const {
    if (!(initial_temperature > 0.0))
        throw DimensionError("initial temperature must be positive");
    if (!(cooling_factor > 0.0 && cooling_factor < 1.0))
        throw DimensionError("cooling factor must lie in (0, 1)");
    if (outer_iterations < 1)
        throw DimensionError("outer iteration count must be positive");
    if (q < 0 || q > model_n)
        throw DimensionError("subspace size q must lie in [0, n]");
    if (backend == SolveBackend::GroverSemantic && q > kSemanticMaxQubits)
        throw CapacityError("semantic backend capped at q <= " +
                            std::to_string(kSemanticMaxQubits));
    if (backend == SolveBackend::ClassicalExhaustive && q > 24)
        throw CapacityError("exhaustive backend capped at q <= 24");
    if (grover_budget_factor < 1)
        throw DimensionError("grover budget factor must be >= 1");
    if (no_improve_rounds < 1)
        throw DimensionError("no-improvement round limit must be >= 1");
}

std::uint64_t SaConfig::grover_call_budget() const {
    return static_cast<std::uint64_t>(
        std::ceil(grover_budget_factor * std::pow(2.0, q / 2.0)));
}

namespace {

Assignment random_assignment(int n, Rng& rng) {
    Assignment a(static_cast<std::size_t>(n));
    for (auto& bit : a)
        bit = static_cast<std::uint8_t>(rng.uniform_u64(2));
    return a;
}

bool metropolis_accept(double delta, double temperature, Rng& rng) {
    if (delta <= 0.0) return true;
    if (temperature <= 0.0) return false;
    return rng.bernoulli(std::exp(-delta / temperature));
}

}  // namespace

SaResult classical_sa(const QuboModel& model, const SaConfig& cfg) {
    cfg.validate(model.n);
    Rng rng(cfg.seed);

    Assignment current = random_assignment(model.n, rng);
    double current_cost = evaluate(model, current);

    SaResult result;
    result.best_assignment = current;
    result.best_cost = current_cost;
    result.cost_trace.reserve(cfg.outer_iterations);

    double temperature = cfg.initial_temperature;
    Assignment candidate = current;
    for (std::uint64_t it = 0; it < cfg.outer_iterations; ++it) {
        const auto flip = static_cast<std::size_t>(
            rng.uniform_u64(static_cast<std::uint64_t>(model.n)));
        candidate = current;
        candidate[flip] ^= 1u;
        const double candidate_cost = evaluate(model, candidate);
        ++result.classical_evaluations;

        if (metropolis_accept(candidate_cost - current_cost, temperature, rng)) {
            current = candidate;
            current_cost = candidate_cost;
        }
        if (current_cost < result.best_cost) {
            result.best_cost = current_cost;
            result.best_assignment = current;
        }
        result.cost_trace.push_back(result.best_cost);
        temperature *= cfg.cooling_factor;
    }
    result.configurations_explored = result.classical_evaluations;
    return result;
}

std::vector<int> select_free_bits(int n, int q, Rng& rng) {
    if (q > n)
        throw DimensionError("cannot select " + std::to_string(q) +
                             " free bits out of " + std::to_string(n));
    return rng.sample_indices(n, q);
}

HybridStep hybrid_step(const QuboModel& model, const Assignment& current,
                       const std::vector<int>& free, SolveBackend backend,
                       double temperature, Rng& rng, const SaConfig& cfg) {
    HybridStep step;
    if (free.empty()) {
        step.state = current;
        step.cost = evaluate(model, current);
        step.accounting.classical_evaluations = 1;
        return step;
    }

    const PartialAssignment partial = partial_from_state(current, free);
    const ReducedQubo reduced = fix_variables(model, partial);
    const int q = reduced.model.n;

    Assignment current_free(static_cast<std::size_t>(q));
    for (int r = 0; r < q; ++r)
        current_free[static_cast<std::size_t>(r)] =
            current[static_cast<std::size_t>(free[static_cast<std::size_t>(r)])];
    const double current_cost = evaluate(reduced.model, current_free);
    ++step.accounting.classical_evaluations;

    Assignment candidate_free;
    double candidate_cost = 0.0;
    switch (backend) {
        case SolveBackend::ClassicalExhaustive: {
            const BruteForceResult bf = brute_force_min(reduced.model);
            candidate_free = bf.best;
            candidate_cost = bf.cost;
            step.accounting.classical_evaluations += std::uint64_t{1} << q;
            break;
        }
        case SolveBackend::GroverSemantic:
        case SolveBackend::GroverCircuit: {
            const GroverBackend grover_backend =
                backend == SolveBackend::GroverSemantic
                    ? GroverBackend::Semantic
                    : GroverBackend::Circuit;
            const MinFindResult found =
                durr_hoyer_min(reduced, grover_backend, rng,
                               cfg.grover_call_budget(), cfg.no_improve_rounds);
            candidate_free = assignment_from_index(found.best_index, q);
            candidate_cost = found.best_cost;
            step.accounting.oracle_calls += found.total_oracle_calls;
            step.accounting.grover_iterations += found.total_oracle_calls;
            step.accounting.classical_evaluations += found.classical_evaluations;
            break;
        }
    }

    if (metropolis_accept(candidate_cost - current_cost, temperature, rng)) {
        step.state = merge_assignment(partial, candidate_free);
        step.cost = candidate_cost;
    } else {
        step.state = current;
        step.cost = current_cost;
    }
    return step;
}

SaResult hybrid_sa(const QuboModel& model, const SaConfig& cfg) {
    cfg.validate(model.n);
    if (cfg.q < 1)
        throw DimensionError("hybrid annealing requires q >= 1");
    Rng rng(cfg.seed);

    Assignment current = random_assignment(model.n, rng);

    SaResult result;
    result.best_assignment = current;
    result.best_cost = evaluate(model, current);
    result.cost_trace.reserve(cfg.outer_iterations);

    double temperature = cfg.initial_temperature;
    for (std::uint64_t it = 0; it < cfg.outer_iterations; ++it) {
        const std::vector<int> free = select_free_bits(model.n, cfg.q, rng);
        const HybridStep step = hybrid_step(model, current, free, cfg.backend,
                                            temperature, rng, cfg);
        current = step.state;
        result.classical_evaluations += step.accounting.classical_evaluations;
        result.oracle_calls += step.accounting.oracle_calls;
        result.grover_iterations += step.accounting.grover_iterations;

        if (step.cost < result.best_cost) {
            result.best_cost = step.cost;
            result.best_assignment = current;
        }
        result.cost_trace.push_back(result.best_cost);
        temperature *= cfg.cooling_factor;
    }
    result.configurations_explored =
        cfg.outer_iterations * (std::uint64_t{1} << cfg.q);
    return result;
}

}  // namespace sagrover
