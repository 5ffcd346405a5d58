#include "sagrover/circuit.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "sagrover/errors.hpp"

namespace sagrover {

void Circuit::extend(const Circuit& other) {
    gates.insert(gates.end(), other.gates.begin(), other.gates.end());
}

Circuit Circuit::inverted() const {
    Circuit inv;
    inv.num_qubits = num_qubits;
    inv.gates.reserve(gates.size());
    for (auto it = gates.rbegin(); it != gates.rend(); ++it)
        inv.gates.push_back(it->inverse());
    return inv;
}

void apply_circuit(const Circuit& circuit, StateVector& state) {
    if (state.qubit_count() < circuit.num_qubits)
        throw GateError("statevector narrower than circuit");
    for (const auto& gate : circuit.gates) state.apply(gate);
}

std::string dump_circuit(const Circuit& circuit) {
    std::ostringstream out;
    for (const auto& gate : circuit.gates) {
        out << gate_name(gate.kind);
        if (gate.kind == GateKind::CPhase) {
            char buf[40];
            std::snprintf(buf, sizeof(buf), "%.17g", gate.angle);
            out << " " << buf;
        }
        for (int q : gate.qubits) out << " " << q;
        out << "\n";
    }
    return out.str();
}

BasisState propagate_basis(const Circuit& circuit, std::uint64_t input_bits) {
    BasisState s;
    s.bits = input_bits;
    for (const auto& gate : circuit.gates) {
        switch (gate.kind) {
            case GateKind::X:
                s.bits ^= std::uint64_t{1} << gate.qubits[0];
                break;
            case GateKind::H:
                throw GateError("basis propagation cannot cross a Hadamard");
            case GateKind::Z:
                if (s.bits >> gate.qubits[0] & 1) s.phase = -s.phase;
                break;
            case GateKind::CNOT:
                if (s.bits >> gate.qubits[0] & 1)
                    s.bits ^= std::uint64_t{1} << gate.qubits[1];
                break;
            case GateKind::CCNOT:
                if ((s.bits >> gate.qubits[0] & 1) &&
                    (s.bits >> gate.qubits[1] & 1))
                    s.bits ^= std::uint64_t{1} << gate.qubits[2];
                break;
            case GateKind::CPhase:
                if ((s.bits >> gate.qubits[0] & 1) &&
                    (s.bits >> gate.qubits[1] & 1))
                    s.phase *= std::polar(1.0, gate.angle);
                break;
            case GateKind::MCZ: {
                bool all = true;
                for (int q : gate.qubits) all = all && (s.bits >> q & 1);
                if (all) s.phase = -s.phase;
                break;
            }
        }
    }
    return s;
}

}  // namespace sagrover
