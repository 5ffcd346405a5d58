#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sagrover/circuit.hpp"
#include "sagrover/qubo.hpp"

namespace sagrover {

/// Register placement inside a synthesized circuit. Absent registers are
/// marked with begin index -1.
struct RegisterLayout {
    int input_count = 0;     // qubits [0, input_count)
    int cost_begin = -1;     // cost register, `width` qubits
    int width = 0;
    int scratch_begin = -1;  // addend register for ripple-carry adds
    int carry = -1;          // adder carry-in qubit
    int product_ancilla = -1;

    int total_qubits() const;
    int sign_qubit() const { return cost_begin + width - 1; }
};

/// Reversible evaluator: for every basis input x the circuit maps
/// |x>|0...0> to |x>|f(x) mod 2^width>|0...0> with the cost register in
/// two's complement.
struct CostCircuit {
    Circuit circuit;
    RegisterLayout layout;
    long long min_bound = 0;  // coefficient-sum bounds on the cost
    long long max_bound = 0;
    std::size_t monomial_terms = 0;
};

struct ResourceReport {
    int qubits = 0;  // distinct qubits touched by at least one gate
    std::map<std::string, std::uint64_t> gate_counts;
    std::size_t monomial_terms = 0;
};

/// Smallest usable cost-register width for values in [lo, hi]; two's
/// complement when lo < 0, plain binary otherwise. Never below 2.
int cost_register_width(long long lo, long long hi);

/// [min, max] of the polynomial over all assignments, from coefficient sums.
std::pair<long long, long long> cost_bounds(const QuboModel& model);

/// Emit a Cuccaro ripple-carry addition of `addend` into `target`
/// (mod 2^width); both registers are LSB-first, `carry` must start at 0 and
/// is returned to 0.
void emit_ripple_carry_add(Circuit& circuit, const std::vector<int>& addend,
                           const std::vector<int>& target, int carry);

/// Compile a reduced model with integer coefficients into a reversible
/// cost evaluator. Quadratic monomials are computed into a shared product
/// ancilla with CCNOT and accumulated by controlled ripple-carry constant
/// addition; linear terms control the addition directly.
CostCircuit synthesize_cost_circuit(const ReducedQubo& reduced);

/// Same, with an explicit register width (must cover the cost bounds).
CostCircuit synthesize_cost_circuit(const ReducedQubo& reduced, int width);

/// Phase oracle flipping exactly the basis states with cost < threshold:
/// compute cost, subtract the threshold, Z on the sign bit, uncompute.
Circuit synthesize_threshold_oracle(const ReducedQubo& reduced,
                                    long long threshold);

ResourceReport resource_report(const CostCircuit& cost_circuit);

}  // namespace sagrover
