#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "sagrover/rng.hpp"

namespace sagrover {

using Amplitude = std::complex<double>;

enum class GateKind { X, H, Z, CNOT, CCNOT, CPhase, MCZ };

/// Gate on explicit qubit indices. Conventions for `qubits`:
///   X/H/Z        {target}
///   CNOT         {control, target}
///   CCNOT        {control, control, target}
///   CPhase       {control, target} with `angle`
///   MCZ          {q0, ..., qk} (symmetric; phase flip when all are 1)
struct Gate {
    GateKind kind;
    std::vector<int> qubits;
    double angle = 0.0;

    static Gate x(int t) { return {GateKind::X, {t}}; }
    static Gate h(int t) { return {GateKind::H, {t}}; }
    static Gate z(int t) { return {GateKind::Z, {t}}; }
    static Gate cnot(int c, int t) { return {GateKind::CNOT, {c, t}}; }
    static Gate ccnot(int c0, int c1, int t) {
        return {GateKind::CCNOT, {c0, c1, t}};
    }
    static Gate cphase(int c, int t, double angle) {
        return {GateKind::CPhase, {c, t}, angle};
    }
    static Gate mcz(std::vector<int> qs) {
        return {GateKind::MCZ, std::move(qs)};
    }

    Gate inverse() const {
        Gate g = *this;
        if (kind == GateKind::CPhase) g.angle = -g.angle;
        return g;
    }

    bool operator==(const Gate& other) const = default;
};

const char* gate_name(GateKind kind);

/// Worker threads used to apply gates to large statevectors. Outputs are
/// bit-identical for any setting: workers own disjoint amplitude pairs and
/// there are no cross-thread reductions.
void set_simulation_threads(int threads);
int simulation_threads();

/// Dense 2^m-amplitude register. Qubit i maps to bit i of the basis index.
class StateVector {
public:
    static constexpr int kMaxQubits = 26;

    explicit StateVector(int m);

    int qubit_count() const { return m_; }
    std::uint64_t size() const { return std::uint64_t{1} << m_; }

    const std::vector<Amplitude>& amplitudes() const { return amp_; }
    std::vector<Amplitude>& amplitudes() { return amp_; }

    void apply(const Gate& gate);

    double norm_squared() const;

    /// Probability of the basis state written as a display string
    /// (qubit 0 leftmost).
    double probability_of(const std::string& bits) const;
    double probability_of_index(std::uint64_t index) const;

    /// Sample a basis index from |amplitude|^2. Non-collapsing.
    std::uint64_t measure_all(Rng& rng) const;

private:
    void check_gate(const Gate& gate) const;

    int m_;
    std::vector<Amplitude> amp_;
};

}  // namespace sagrover
