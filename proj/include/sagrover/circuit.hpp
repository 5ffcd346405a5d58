#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "sagrover/statevector.hpp"

namespace sagrover {

/// Ordered gate list over a fixed-width register.
struct Circuit {
    int num_qubits = 0;
    std::vector<Gate> gates;

    void add(Gate gate) { gates.push_back(std::move(gate)); }
    void extend(const Circuit& other);

    /// Reversed gate order with per-gate inverses.
    Circuit inverted() const;

    std::size_t gate_count() const { return gates.size(); }
};

void apply_circuit(const Circuit& circuit, StateVector& state);

/// One gate per line, e.g. "ccnot 0 1 4"; cphase carries its angle first.
std::string dump_circuit(const Circuit& circuit);

/// Exact propagation of a single computational-basis state. Every gate in
/// the synthesis gate set maps basis states to basis states times a phase,
/// so circuits can be checked input-by-input without a full statevector.
struct BasisState {
    std::uint64_t bits = 0;
    std::complex<double> phase{1.0, 0.0};
};

BasisState propagate_basis(const Circuit& circuit, std::uint64_t input_bits);

}  // namespace sagrover
