#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "sagrover/errors.hpp"
#include "sagrover/sa.hpp"
#include "sagrover/selftest.hpp"

using namespace sagrover;

namespace {

double median(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    return n % 2 ? values[n / 2]
                 : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

bool non_increasing(const std::vector<double>& trace) {
    for (std::size_t i = 1; i < trace.size(); ++i)
        if (trace[i] > trace[i - 1]) return false;
    return true;
}

}  // namespace

TEST_CASE("one-variable descent") {
    QuboModel m;
    m.n = 1;
    m.linear[0] = 1;
    SaConfig cfg;
    cfg.outer_iterations = 100;
    cfg.seed = 3;
    const SaResult r = classical_sa(m, cfg);
    CHECK(r.best_cost == 0.0);
    CHECK(r.best_assignment == Assignment{0});
}

TEST_CASE("classical annealing solves the reduced demo model") {
    const ReducedQubo reduced = demo_reduced();
    SaConfig cfg;
    cfg.outer_iterations = 500;
    cfg.seed = 1;
    const SaResult r = classical_sa(reduced.model, cfg);
    CHECK(r.best_cost == 0.0);
}

TEST_CASE("annealing is deterministic per seed") {
    const QuboModel m = random_instance(20, 0.5, 5, 4);
    SaConfig cfg;
    cfg.outer_iterations = 300;
    cfg.seed = 42;
    const SaResult a = classical_sa(m, cfg);
    const SaResult b = classical_sa(m, cfg);
    CHECK(a.cost_trace == b.cost_trace);
    CHECK(a.best_assignment == b.best_assignment);
}

TEST_CASE("evaluation counter equals the iteration count") {
    const QuboModel m = random_instance(12, 0.5, 5, 9);
    SaConfig cfg;
    cfg.outer_iterations = 777;
    cfg.seed = 5;
    const SaResult r = classical_sa(m, cfg);
    CHECK(r.classical_evaluations == 777);
    CHECK(r.cost_trace.size() == 777);
    CHECK(non_increasing(r.cost_trace));
    CHECK(r.best_cost == evaluate(m, r.best_assignment));
}

TEST_CASE("config validation") {
    const QuboModel m = demo_model();
    SaConfig cfg;
    cfg.cooling_factor = 1.0;
    CHECK_THROWS_AS(classical_sa(m, cfg), DimensionError);
    cfg.cooling_factor = 0.95;
    cfg.q = 6;  // exceeds n=5
    CHECK_THROWS_AS(hybrid_sa(m, cfg), DimensionError);
    cfg.q = 21;
    cfg.backend = SolveBackend::GroverSemantic;
    CHECK_THROWS_AS(hybrid_sa(m, cfg), DimensionError);
}

TEST_CASE("free-bit selection spans the edge cases") {
    Rng rng(6);
    CHECK(select_free_bits(5, 5, rng) == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(select_free_bits(5, 0, rng).empty());
    CHECK_THROWS_AS(select_free_bits(5, 6, rng), DimensionError);

    Rng a(123), b(123);
    const auto first = select_free_bits(625, 10, a);
    CHECK(first == select_free_bits(625, 10, b));
    CHECK(first.size() == 10);
    CHECK(std::is_sorted(first.begin(), first.end()));
}

TEST_CASE("hybrid step takes the subspace minimum over fixed bits") {
    const QuboModel m = demo_model();
    const Assignment current = assignment_from_string("11111");
    const std::vector<int> free = {1, 2, 4};

    // Oracle: enumerate the 8 completions with x0 = x3 = 1 directly.
    double subspace_min = 1e300;
    for (std::uint64_t c = 0; c < 8; ++c) {
        Assignment a = current;
        a[1] = static_cast<std::uint8_t>(c & 1);
        a[2] = static_cast<std::uint8_t>(c >> 1 & 1);
        a[4] = static_cast<std::uint8_t>(c >> 2 & 1);
        subspace_min = std::min(subspace_min, evaluate(m, a));
    }

    SaConfig cfg;
    Rng rng(2);
    const HybridStep step =
        hybrid_step(m, current, free, SolveBackend::ClassicalExhaustive, 1.0,
                    rng, cfg);
    CHECK(step.cost == subspace_min);
    CHECK(step.cost == evaluate(m, step.state));
    CHECK(step.state[0] == 1);
    CHECK(step.state[3] == 1);
    CHECK(step.accounting.classical_evaluations == 1 + 8);
}

TEST_CASE("hybrid step with no free bits is a no-op") {
    const QuboModel m = demo_model();
    const Assignment current = assignment_from_string("01011");
    SaConfig cfg;
    Rng rng(8);
    const HybridStep step = hybrid_step(
        m, current, {}, SolveBackend::ClassicalExhaustive, 1.0, rng, cfg);
    CHECK(step.state == current);
    CHECK(step.cost == evaluate(m, current));
    CHECK(step.accounting.classical_evaluations == 1);
}

TEST_CASE("exhaustive hybrid steps never worsen the cost") {
    const QuboModel m = random_instance(16, 0.5, 6, 77);
    SaConfig cfg;
    Rng rng(3);
    Assignment current = assignment_from_index(rng.uniform_u64(1u << 16), 16);
    double cost = evaluate(m, current);
    for (int it = 0; it < 25; ++it) {
        const auto free = select_free_bits(16, 4, rng);
        const HybridStep step = hybrid_step(
            m, current, free, SolveBackend::ClassicalExhaustive, 1.0, rng, cfg);
        CHECK(step.cost <= cost);
        current = step.state;
        cost = step.cost;
    }
}

TEST_CASE("hybrid annealing reaches the demo optimum") {
    const QuboModel m = demo_model();
    SaConfig cfg;
    cfg.q = 3;
    cfg.outer_iterations = 20;
    cfg.seed = 44;
    cfg.backend = SolveBackend::ClassicalExhaustive;
    const SaResult r = hybrid_sa(m, cfg);
    CHECK(r.best_cost == -5.0);
    CHECK(non_increasing(r.cost_trace));
    CHECK(r.best_cost == evaluate(m, r.best_assignment));
}

TEST_CASE("hybrid annealing with the semantic backend is deterministic") {
    const QuboModel m = random_instance(12, 0.5, 5, 21);
    SaConfig cfg;
    cfg.q = 4;
    cfg.outer_iterations = 15;
    cfg.seed = 99;
    cfg.backend = SolveBackend::GroverSemantic;
    const SaResult a = hybrid_sa(m, cfg);
    const SaResult b = hybrid_sa(m, cfg);
    CHECK(a.best_assignment == b.best_assignment);
    CHECK(a.cost_trace == b.cost_trace);
    CHECK(a.oracle_calls == b.oracle_calls);
    CHECK(a.grover_iterations == b.grover_iterations);
}

TEST_CASE("four hybrid iterations at q=10 cover a 4096-evaluation budget") {
    const QuboModel m = random_instance(64, 0.2, 5, 500);

    SaConfig classical_cfg;
    classical_cfg.outer_iterations = 4096;
    classical_cfg.seed = 1;
    const SaResult classical = classical_sa(m, classical_cfg);
    CHECK(classical.classical_evaluations == 4096);
    CHECK(classical.configurations_explored == 4096);

    SaConfig hybrid_cfg;
    hybrid_cfg.q = 10;
    hybrid_cfg.outer_iterations = 4;
    hybrid_cfg.seed = 1;
    const SaResult hybrid = hybrid_sa(m, hybrid_cfg);
    CHECK(hybrid.configurations_explored == 4096);
    CHECK(hybrid.configurations_explored == classical.configurations_explored);
}

TEST_CASE("grover iteration totals stay under the schedule budget") {
    const QuboModel m = random_instance(30, 0.4, 6, 303);
    SaConfig cfg;
    cfg.q = 6;
    cfg.outer_iterations = 25;
    cfg.seed = 7;
    cfg.backend = SolveBackend::GroverSemantic;
    const SaResult r = hybrid_sa(m, cfg);
    const double cap = cfg.grover_budget_factor * std::pow(2.0, cfg.q / 2.0) *
                       static_cast<double>(cfg.outer_iterations);
    CHECK(static_cast<double>(r.grover_iterations) <= cap);
    CHECK(r.oracle_calls == r.grover_iterations);
}

TEST_CASE("hybrid median matches or beats classical at equal budget") {
    const QuboModel m = random_instance(100, 0.1, 5, 20250810);
    const std::uint64_t outer = 200;
    const std::uint64_t budget = outer << 8;  // q = 8

    std::vector<double> hybrid_final, classical_final;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        SaConfig hybrid_cfg;
        hybrid_cfg.q = 8;
        hybrid_cfg.outer_iterations = outer;
        hybrid_cfg.seed = seed;
        hybrid_final.push_back(hybrid_sa(m, hybrid_cfg).best_cost);

        SaConfig classical_cfg;
        classical_cfg.outer_iterations = budget;
        classical_cfg.seed = seed;
        classical_final.push_back(classical_sa(m, classical_cfg).best_cost);
    }
    CHECK(median(hybrid_final) <= median(classical_final));
}
