#include "sagrover/synth.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "sagrover/errors.hpp"

namespace sagrover {

int RegisterLayout::total_qubits() const {
    int total = input_count + width;
    if (scratch_begin >= 0) total += width + 1;  // scratch + carry
    if (product_ancilla >= 0) total += 1;
    return total;
}

int cost_register_width(long long lo, long long hi) {
    int w = 2;
    if (lo < 0) {
        while (-(1LL << (w - 1)) > lo || hi > (1LL << (w - 1)) - 1) ++w;
    } else {
        while (hi > (1LL << w) - 1) ++w;
    }
    return w;
}

std::pair<long long, long long> cost_bounds(const QuboModel& model) {
    double lo = model.offset, hi = model.offset;
    for (const auto& [i, c] : model.linear) (c < 0 ? lo : hi) += c;
    for (const auto& [ij, c] : model.quadratic) (c < 0 ? lo : hi) += c;
    return {static_cast<long long>(lo), static_cast<long long>(hi)};
}

void emit_ripple_carry_add(Circuit& circuit, const std::vector<int>& addend,
                           const std::vector<int>& target, int carry) {
    if (addend.size() != target.size())
        throw SynthesisError("adder operands must have equal width");
    const int w = static_cast<int>(addend.size());
    // MAJ ladder: after step k, addend[k] holds the carry into bit k+1.
    auto maj = [&](int x, int y, int z) {
        circuit.add(Gate::cnot(z, y));
        circuit.add(Gate::cnot(z, x));
        circuit.add(Gate::ccnot(x, y, z));
    };
    auto uma = [&](int x, int y, int z) {
        circuit.add(Gate::ccnot(x, y, z));
        circuit.add(Gate::cnot(z, x));
        circuit.add(Gate::cnot(x, y));
    };
    for (int k = 0; k < w; ++k)
        maj(k == 0 ? carry : addend[static_cast<std::size_t>(k - 1)],
            target[static_cast<std::size_t>(k)],
            addend[static_cast<std::size_t>(k)]);
    // No carry-out: the sum is taken mod 2^w, which is exactly two's
    // complement arithmetic.
    for (int k = w - 1; k >= 0; --k)
        uma(k == 0 ? carry : addend[static_cast<std::size_t>(k - 1)],
            target[static_cast<std::size_t>(k)],
            addend[static_cast<std::size_t>(k)]);
}

namespace {

struct Synthesizer {
    Circuit circuit;
    RegisterLayout layout;
    std::vector<int> cost_reg;
    std::vector<int> scratch_reg;

    // Loads the w-bit pattern of value (mod 2^w) into scratch, controlled on
    // `control` (-1 for unconditional), ripple-adds it into the cost
    // register, then unloads.
    void add_constant(int control, long long value) {
        const auto pattern = static_cast<std::uint64_t>(value) &
                             ((std::uint64_t{1} << layout.width) - 1);
        if (pattern == 0) return;
        auto load = [&]() {
            for (int k = 0; k < layout.width; ++k) {
                if (!(pattern >> k & 1)) continue;
                const int s = scratch_reg[static_cast<std::size_t>(k)];
                if (control < 0)
                    circuit.add(Gate::x(s));
                else
                    circuit.add(Gate::cnot(control, s));
            }
        };
        load();
        emit_ripple_carry_add(circuit, scratch_reg, cost_reg, layout.carry);
        load();
    }
};

long long coeff_as_int(double c) { return static_cast<long long>(c); }

}  // namespace

CostCircuit synthesize_cost_circuit(const ReducedQubo& reduced) {
    auto [lo, hi] = cost_bounds(reduced.model);
    return synthesize_cost_circuit(reduced, cost_register_width(lo, hi));
}

CostCircuit synthesize_cost_circuit(const ReducedQubo& reduced, int width) {
    const QuboModel& model = reduced.model;
    model.validate();
    if (!model.integer_coefficients())
        throw SynthesisError("circuit synthesis requires integer coefficients");
    if (model.n < 1)
        throw SynthesisError("circuit synthesis requires at least one variable");

    auto [lo, hi] = cost_bounds(model);
    if (width < cost_register_width(lo, hi))
        throw SynthesisError("cost register width " + std::to_string(width) +
                             " cannot hold the cost range");

    const bool has_terms =
        model.offset != 0.0 || !model.linear.empty() || !model.quadratic.empty();
    const bool has_products = !model.quadratic.empty();

    CostCircuit out;
    out.min_bound = lo;
    out.max_bound = hi;
    out.monomial_terms = model.monomial_count();
    out.layout.input_count = model.n;
    out.layout.cost_begin = model.n;
    out.layout.width = width;
    if (has_terms) {
        out.layout.scratch_begin = model.n + width;
        out.layout.carry = model.n + 2 * width;
    }
    if (has_products) out.layout.product_ancilla = model.n + 2 * width + 1;

    const int total = out.layout.total_qubits();
    if (total > StateVector::kMaxQubits)
        throw CapacityError("cost circuit needs " + std::to_string(total) +
                            " qubits, cap is " +
                            std::to_string(StateVector::kMaxQubits));

    Synthesizer synth;
    synth.layout = out.layout;
    synth.circuit.num_qubits = total;
    for (int k = 0; k < width; ++k) {
        synth.cost_reg.push_back(out.layout.cost_begin + k);
        if (has_terms) synth.scratch_reg.push_back(out.layout.scratch_begin + k);
    }

    if (model.offset != 0.0) synth.add_constant(-1, coeff_as_int(model.offset));
    for (const auto& [i, c] : model.linear) {
        if (c == 0.0) continue;
        synth.add_constant(i, coeff_as_int(c));
    }
    for (const auto& [ij, c] : model.quadratic) {
        if (c == 0.0) continue;
        const int panc = out.layout.product_ancilla;
        synth.circuit.add(Gate::ccnot(ij.first, ij.second, panc));
        synth.add_constant(panc, coeff_as_int(c));
        synth.circuit.add(Gate::ccnot(ij.first, ij.second, panc));
    }

    out.circuit = std::move(synth.circuit);
    return out;
}

Circuit synthesize_threshold_oracle(const ReducedQubo& reduced,
                                    long long threshold) {
    auto [lo, hi] = cost_bounds(reduced.model);
    // The sign bit of (cost - threshold) decides the phase flip, so the
    // register must hold every such difference in two's complement.
    const int width =
        std::max(cost_register_width(lo, hi),
                 cost_register_width(std::min(lo - threshold, -1LL),
                                     std::max(hi - threshold, 0LL)));
    CostCircuit cost = synthesize_cost_circuit(reduced, width);

    Circuit oracle;
    oracle.num_qubits = cost.circuit.num_qubits;
    oracle.extend(cost.circuit);

    Synthesizer synth;
    synth.layout = cost.layout;
    synth.circuit.num_qubits = oracle.num_qubits;
    for (int k = 0; k < width; ++k) {
        synth.cost_reg.push_back(cost.layout.cost_begin + k);
        synth.scratch_reg.push_back(cost.layout.scratch_begin + k);
    }
    if (cost.layout.scratch_begin < 0) {
        // Constant polynomial: cost register is identically zero, the
        // comparison cost < threshold is decided at synthesis time.
        Circuit flat;
        flat.num_qubits = cost.layout.input_count + cost.layout.width;
        if (0 < threshold) {
            // Phase-flip every basis state: X, Z, X on a cost qubit that is
            // known to be |0>.
            const int anc = cost.layout.cost_begin;
            flat.add(Gate::x(anc));
            flat.add(Gate::z(anc));
            flat.add(Gate::x(anc));
        }
        return flat;
    }

    synth.add_constant(-1, -threshold);
    synth.circuit.add(Gate::z(cost.layout.sign_qubit()));
    synth.add_constant(-1, threshold);

    oracle.extend(synth.circuit);
    oracle.extend(cost.circuit.inverted());
    return oracle;
}

ResourceReport resource_report(const CostCircuit& cost_circuit) {
    ResourceReport report;
    report.monomial_terms = cost_circuit.monomial_terms;
    std::set<int> touched;
    for (const auto& gate : cost_circuit.circuit.gates) {
        ++report.gate_counts[gate_name(gate.kind)];
        touched.insert(gate.qubits.begin(), gate.qubits.end());
    }
    report.qubits = static_cast<int>(touched.size());
    return report;
}

}  // namespace sagrover
