#include <doctest.h>

#include <cmath>
#include <set>

#include "sagrover/errors.hpp"
#include "sagrover/selftest.hpp"
#include "sagrover/synth.hpp"

using namespace sagrover;

namespace {

ReducedQubo as_reduced(QuboModel model) {
    ReducedQubo r;
    r.index_map.resize(static_cast<std::size_t>(model.n));
    for (int i = 0; i < model.n; ++i)
        r.index_map[static_cast<std::size_t>(i)] = i;
    r.model = std::move(model);
    return r;
}

long long read_cost(const CostCircuit& cost, std::uint64_t input) {
    const BasisState out = propagate_basis(cost.circuit, input);
    const int q = cost.layout.input_count;
    const int w = cost.layout.width;
    REQUIRE((out.bits & ((std::uint64_t{1} << q) - 1)) == input);
    REQUIRE((out.bits >> (q + w)) == 0);  // ancillas restored
    std::uint64_t raw = (out.bits >> q) & ((std::uint64_t{1} << w) - 1);
    long long value = static_cast<long long>(raw);
    if (cost.min_bound < 0 && (raw >> (w - 1) & 1)) value -= 1LL << w;
    return value;
}

ReducedQubo random_reduced(int q, double density, int range, Rng& rng) {
    return as_reduced(random_instance(q, density, range, rng.next_u64()));
}

}  // namespace

TEST_CASE("ripple-carry adder is exact for all operand pairs up to width 4") {
    for (int w = 1; w <= 4; ++w) {
        Circuit circuit;
        circuit.num_qubits = 2 * w + 1;
        std::vector<int> addend, target;
        for (int k = 0; k < w; ++k) {
            addend.push_back(k);
            target.push_back(w + k);
        }
        const int carry = 2 * w;
        emit_ripple_carry_add(circuit, addend, target, carry);

        const std::uint64_t modulus = std::uint64_t{1} << w;
        for (std::uint64_t a = 0; a < modulus; ++a) {
            for (std::uint64_t b = 0; b < modulus; ++b) {
                const std::uint64_t input = a | (b << w);
                const BasisState out = propagate_basis(circuit, input);
                const std::uint64_t sum = (out.bits >> w) & (modulus - 1);
                CHECK(sum == ((a + b) & (modulus - 1)));
                CHECK((out.bits & (modulus - 1)) == a);       // addend kept
                CHECK((out.bits >> (2 * w) & 1) == 0);        // carry clean
                CHECK(out.phase == Amplitude{1.0, 0.0});
            }
        }
    }
}

TEST_CASE("adding zero is the identity") {
    Circuit circuit;
    circuit.num_qubits = 5;
    emit_ripple_carry_add(circuit, {0, 1}, {2, 3}, 4);
    for (std::uint64_t b = 0; b < 4; ++b) {
        const BasisState out = propagate_basis(circuit, b << 2);
        CHECK(out.bits == b << 2);
    }
}

TEST_CASE("zero polynomial synthesizes to an empty circuit") {
    QuboModel m;
    m.n = 3;
    const CostCircuit cost = synthesize_cost_circuit(as_reduced(m));
    CHECK(cost.circuit.gates.empty());
    CHECK(cost.layout.width == 2);
    for (std::uint64_t x = 0; x < 8; ++x) CHECK(read_cost(cost, x) == 0);

    const ResourceReport report = resource_report(cost);
    CHECK(report.qubits == 0);
    CHECK(report.gate_counts.empty());
    CHECK(report.monomial_terms == 0);
}

TEST_CASE("single linear term copies the input bit") {
    QuboModel m;
    m.n = 1;
    m.linear[0] = 1;
    const CostCircuit cost = synthesize_cost_circuit(as_reduced(m));
    CHECK(read_cost(cost, 0) == 0);
    CHECK(read_cost(cost, 1) == 1);
}

TEST_CASE("demo reduced model evaluates through the circuit") {
    const ReducedQubo reduced = demo_reduced();
    const CostCircuit cost = synthesize_cost_circuit(reduced);
    CHECK(cost.monomial_terms == 3);
    CHECK(cost.layout.width == 3);  // values span [0, 6]

    // (x,y,z) = (1,1,0) -> 1 and (1,1,1) -> 6
    CHECK(read_cost(cost, 0b011) == 1);
    CHECK(read_cost(cost, 0b111) == 6);
    for (std::uint64_t x = 0; x < 8; ++x)
        CHECK(static_cast<double>(read_cost(cost, x)) ==
              evaluate(reduced.model, assignment_from_index(x, 3)));
}

TEST_CASE("demo circuit against a full statevector run") {
    const ReducedQubo reduced = demo_reduced();
    const CostCircuit cost = synthesize_cost_circuit(reduced);
    StateVector state(cost.circuit.num_qubits);
    for (int i = 0; i < 3; ++i) state.apply(Gate::h(i));
    apply_circuit(cost.circuit, state);

    const double uniform = 1.0 / std::sqrt(8.0);
    for (std::uint64_t idx = 0; idx < state.size(); ++idx) {
        const std::uint64_t x = idx & 7;
        const auto f = static_cast<std::uint64_t>(
            evaluate(reduced.model, assignment_from_index(x, 3)));
        const bool expected_slot = idx == (x | (f << 3));
        const double target = expected_slot ? uniform : 0.0;
        CHECK(std::abs(std::abs(state.amplitudes()[idx]) - target) < 1e-9);
    }
}

TEST_CASE("cost circuits match classical evaluation on random models") {
    Rng rng(515);
    int checked = 0;
    for (int trial = 0; trial < 40; ++trial) {
        const int q = 1 + static_cast<int>(rng.uniform_u64(6));
        const ReducedQubo reduced = random_reduced(q, 0.6, 8, rng);
        CostCircuit cost;
        try {
            cost = synthesize_cost_circuit(reduced);
        } catch (const CapacityError&) {
            continue;  // width pushed past the register cap; skip
        }
        ++checked;
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << q); ++x)
            CHECK(static_cast<double>(read_cost(cost, x)) ==
                  evaluate(reduced.model, assignment_from_index(x, q)));
    }
    CHECK(checked >= 35);
}

TEST_CASE("negative costs come out in two's complement") {
    QuboModel m;
    m.n = 2;
    m.linear[0] = -3;
    m.linear[1] = 2;
    m.quadratic[{0, 1}] = -4;
    m.offset = 1;
    const ReducedQubo reduced = as_reduced(m);
    const CostCircuit cost = synthesize_cost_circuit(reduced);
    for (std::uint64_t x = 0; x < 4; ++x)
        CHECK(static_cast<double>(read_cost(cost, x)) ==
              evaluate(reduced.model, assignment_from_index(x, 2)));
}

TEST_CASE("synthesis rejects fractional coefficients") {
    QuboModel m;
    m.n = 2;
    m.linear[0] = 0.5;
    CHECK_THROWS_AS(synthesize_cost_circuit(as_reduced(m)), SynthesisError);
}

TEST_CASE("synthesis rejects circuits beyond the register cap") {
    QuboModel m;
    m.n = 7;
    for (int i = 0; i < 7; ++i) m.linear[i] = 1000000;  // forces a wide register
    CHECK_THROWS_AS(synthesize_cost_circuit(as_reduced(m)), CapacityError);
}

TEST_CASE("threshold oracle marks exactly the states below threshold") {
    Rng rng(99);
    for (int trial = 0; trial < 25; ++trial) {
        const int q = 1 + static_cast<int>(rng.uniform_u64(5));
        const ReducedQubo reduced = random_reduced(q, 0.5, 4, rng);
        const auto [lo, hi] = cost_bounds(reduced.model);
        for (long long t = lo - 1; t <= hi + 1; ++t) {
            const Circuit oracle = synthesize_threshold_oracle(reduced, t);
            for (std::uint64_t x = 0; x < (std::uint64_t{1} << q); ++x) {
                const BasisState out = propagate_basis(oracle, x);
                CHECK(out.bits == x);  // every work qubit back to zero
                const bool marked =
                    evaluate(reduced.model, assignment_from_index(x, q)) <
                    static_cast<double>(t);
                CHECK(out.phase == (marked ? Amplitude{-1.0, 0.0}
                                           : Amplitude{1.0, 0.0}));
            }
        }
    }
}

TEST_CASE("threshold oracle edge thresholds on the demo model") {
    const ReducedQubo reduced = demo_reduced();

    // At the global minimum nothing is marked.
    const Circuit none = synthesize_threshold_oracle(reduced, 0);
    // Above the maximum everything is marked.
    const Circuit all = synthesize_threshold_oracle(reduced, 7);
    // Threshold 1 marks the four cost-zero states.
    const Circuit some = synthesize_threshold_oracle(reduced, 1);

    int flipped_none = 0, flipped_all = 0, flipped_some = 0;
    for (std::uint64_t x = 0; x < 8; ++x) {
        flipped_none += propagate_basis(none, x).phase.real() < 0 ? 1 : 0;
        flipped_all += propagate_basis(all, x).phase.real() < 0 ? 1 : 0;
        flipped_some += propagate_basis(some, x).phase.real() < 0 ? 1 : 0;
    }
    CHECK(flipped_none == 0);
    CHECK(flipped_all == 8);
    CHECK(flipped_some == 4);
}

TEST_CASE("oracle ancilla hygiene on the statevector") {
    const ReducedQubo reduced = demo_reduced();
    const Circuit oracle = synthesize_threshold_oracle(reduced, 2);
    StateVector state(oracle.num_qubits);
    for (int i = 0; i < 3; ++i) state.apply(Gate::h(i));
    apply_circuit(oracle, state);

    // All weight must sit on ancilla = 0 slots, with flipped signs on the
    // marked inputs.
    const double uniform = 1.0 / std::sqrt(8.0);
    for (std::uint64_t idx = 0; idx < state.size(); ++idx) {
        const std::uint64_t x = idx & 7;
        if (idx != x) {
            CHECK(std::abs(state.amplitudes()[idx]) < 1e-9);
            continue;
        }
        const bool marked =
            evaluate(reduced.model, assignment_from_index(x, 3)) < 2.0;
        const double expected = marked ? -uniform : uniform;
        CHECK(std::abs(state.amplitudes()[idx].real() - expected) < 1e-9);
        CHECK(std::abs(state.amplitudes()[idx].imag()) < 1e-12);
    }
}

TEST_CASE("resource report counts the demo circuit") {
    const CostCircuit cost = synthesize_cost_circuit(demo_reduced());
    const ResourceReport report = resource_report(cost);
    CHECK(report.monomial_terms == 3);
    CHECK(report.gate_counts.at("ccnot") >= 3);
    CHECK(report.qubits == cost.layout.total_qubits());

    std::uint64_t total = 0;
    for (const auto& [kind, count] : report.gate_counts) total += count;
    CHECK(total == cost.circuit.gate_count());
}

TEST_CASE("fixing variables never adds monomials") {
    const QuboModel full = demo_model();
    CHECK(full.monomial_count() == 10);
    CHECK(demo_reduced().model.monomial_count() == 3);

    Rng rng(2718);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + static_cast<int>(rng.uniform_u64(9));
        const QuboModel m = random_instance(n, 0.7, 5, rng.next_u64());
        const int q = static_cast<int>(rng.uniform_u64(
            static_cast<std::uint64_t>(n) + 1));
        PartialAssignment p;
        p.free = rng.sample_indices(n, q);
        std::set<int> free_set(p.free.begin(), p.free.end());
        for (int i = 0; i < n; ++i)
            if (!free_set.count(i))
                p.fixed[i] = static_cast<std::uint8_t>(rng.uniform_u64(2));
        CHECK(fix_variables(m, p).model.monomial_count() <=
              m.monomial_count());
    }
}

TEST_CASE("circuit dump is one gate per line") {
    Circuit c;
    c.num_qubits = 4;
    c.add(Gate::x(2));
    c.add(Gate::ccnot(0, 1, 3));
    c.add(Gate::mcz({0, 2}));
    CHECK(dump_circuit(c) == "x 2\nccnot 0 1 3\nmcz 0 2\n");
}
