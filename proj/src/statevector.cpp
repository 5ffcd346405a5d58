#include "sagrover/statevector.hpp"

#include <atomic>
#include <cmath>
#include <thread>

#include "sagrover/errors.hpp"

namespace sagrover {

namespace {

std::atomic<int> g_threads{1};

constexpr std::uint64_t kParallelThreshold = std::uint64_t{1} << 18;

// Runs fn(begin, end) over [0, total) split into contiguous chunks, one per
// worker. Each chunk's work touches a disjoint set of amplitudes, so the
// result does not depend on the worker count.
template <typename Fn>
void parallel_for(std::uint64_t total, Fn&& fn) {
    const int threads = g_threads.load(std::memory_order_relaxed);
    if (threads <= 1 || total < kParallelThreshold) {
        fn(std::uint64_t{0}, total);
        return;
    }
    const auto workers = static_cast<std::uint64_t>(threads);
    const std::uint64_t chunk = (total + workers - 1) / workers;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::uint64_t w = 0; w < workers; ++w) {
        const std::uint64_t begin = w * chunk;
        if (begin >= total) break;
        const std::uint64_t end = std::min(begin + chunk, total);
        pool.emplace_back([&fn, begin, end] { fn(begin, end); });
    }
    for (auto& t : pool) t.join();
}

std::uint64_t mask_of(const std::vector<int>& qubits) {
    std::uint64_t mask = 0;
    for (int q : qubits) mask |= std::uint64_t{1} << q;
    return mask;
}

}  // namespace

const char* gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::X: return "x";
        case GateKind::H: return "h";
        case GateKind::Z: return "z";
        case GateKind::CNOT: return "cnot";
        case GateKind::CCNOT: return "ccnot";
        case GateKind::CPhase: return "cphase";
        case GateKind::MCZ: return "mcz";
    }
    return "?";
}

void set_simulation_threads(int threads) {
    g_threads.store(threads < 1 ? 1 : threads, std::memory_order_relaxed);
}

int simulation_threads() { return g_threads.load(std::memory_order_relaxed); }

StateVector::StateVector(int m) : m_(m) {
    if (m < 1)
        throw CapacityError("statevector needs at least one qubit");
    if (m > kMaxQubits)
        throw CapacityError("statevector capped at " +
                            std::to_string(kMaxQubits) + " qubits, got " +
                            std::to_string(m));
    amp_.assign(std::uint64_t{1} << m, Amplitude{0.0, 0.0});
    amp_[0] = Amplitude{1.0, 0.0};
}

void StateVector::check_gate(const Gate& gate) const {
    std::size_t expected = 0;
    switch (gate.kind) {
        case GateKind::X:
        case GateKind::H:
        case GateKind::Z: expected = 1; break;
        case GateKind::CNOT:
        case GateKind::CPhase: expected = 2; break;
        case GateKind::CCNOT: expected = 3; break;
        case GateKind::MCZ: expected = gate.qubits.size(); break;
    }
    if (gate.kind == GateKind::MCZ && gate.qubits.empty())
        throw GateError("mcz needs at least one qubit");
    if (gate.qubits.size() != expected)
        throw GateError(std::string(gate_name(gate.kind)) +
                        " has wrong qubit count");
    std::uint64_t seen = 0;
    for (int q : gate.qubits) {
        if (q < 0 || q >= m_)
            throw GateError(std::string(gate_name(gate.kind)) +
                            " qubit index " + std::to_string(q) +
                            " out of range");
        const std::uint64_t bit = std::uint64_t{1} << q;
        if (seen & bit)
            throw GateError(std::string(gate_name(gate.kind)) +
                            " repeats qubit " + std::to_string(q));
        seen |= bit;
    }
}

void StateVector::apply(const Gate& gate) {
    check_gate(gate);
    const std::uint64_t size = this->size();
    Amplitude* amp = amp_.data();

    switch (gate.kind) {
        case GateKind::X: {
            const std::uint64_t t = std::uint64_t{1} << gate.qubits[0];
            parallel_for(size, [&](std::uint64_t b, std::uint64_t e) {
                for (std::uint64_t i = b; i < e; ++i)
                    if (!(i & t)) std::swap(amp[i], amp[i | t]);
            });
            break;
        }
        case GateKind::H: {
            const std::uint64_t t = std::uint64_t{1} << gate.qubits[0];
            const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
            parallel_for(size, [&](std::uint64_t b, std::uint64_t e) {
                for (std::uint64_t i = b; i < e; ++i) {
                    if (i & t) continue;
                    const Amplitude a0 = amp[i];
                    const Amplitude a1 = amp[i | t];
                    amp[i] = (a0 + a1) * inv_sqrt2;
                    amp[i | t] = (a0 - a1) * inv_sqrt2;
                }
            });
            break;
        }
        case GateKind::Z: {
            const std::uint64_t t = std::uint64_t{1} << gate.qubits[0];
            parallel_for(size, [&](std::uint64_t b, std::uint64_t e) {
                for (std::uint64_t i = b; i < e; ++i)
                    if (i & t) amp[i] = -amp[i];
            });
            break;
        }
        case GateKind::CNOT: {
            const std::uint64_t c = std::uint64_t{1} << gate.qubits[0];
            const std::uint64_t t = std::uint64_t{1} << gate.qubits[1];
            parallel_for(size, [&](std::uint64_t b, std::uint64_t e) {
                for (std::uint64_t i = b; i < e; ++i)
                    if ((i & c) && !(i & t)) std::swap(amp[i], amp[i | t]);
            });
            break;
        }
        case GateKind::CCNOT: {
            const std::uint64_t c =
                (std::uint64_t{1} << gate.qubits[0]) |
                (std::uint64_t{1} << gate.qubits[1]);
            const std::uint64_t t = std::uint64_t{1} << gate.qubits[2];
            parallel_for(size, [&](std::uint64_t b, std::uint64_t e) {
                for (std::uint64_t i = b; i < e; ++i)
                    if (((i & c) == c) && !(i & t)) std::swap(amp[i], amp[i | t]);
            });
            break;
        }
        case GateKind::CPhase: {
            const std::uint64_t mask = mask_of(gate.qubits);
            const Amplitude phase = std::polar(1.0, gate.angle);
            parallel_for(size, [&](std::uint64_t b, std::uint64_t e) {
                for (std::uint64_t i = b; i < e; ++i)
                    if ((i & mask) == mask) amp[i] *= phase;
            });
            break;
        }
        case GateKind::MCZ: {
            const std::uint64_t mask = mask_of(gate.qubits);
            parallel_for(size, [&](std::uint64_t b, std::uint64_t e) {
                for (std::uint64_t i = b; i < e; ++i)
                    if ((i & mask) == mask) amp[i] = -amp[i];
            });
            break;
        }
    }
}

double StateVector::norm_squared() const {
    double total = 0.0;
    for (const auto& a : amp_) total += std::norm(a);
    return total;
}

double StateVector::probability_of(const std::string& bits) const {
    if (static_cast<int>(bits.size()) != m_)
        throw DimensionError("bitstring length " + std::to_string(bits.size()) +
                             " does not match qubit count " +
                             std::to_string(m_));
    std::uint64_t index = 0;
    for (int i = 0; i < m_; ++i) {
        const char c = bits[static_cast<std::size_t>(i)];
        if (c != '0' && c != '1')
            throw DimensionError("bitstring must contain only 0/1");
        if (c == '1') index |= std::uint64_t{1} << i;
    }
    return probability_of_index(index);
}

double StateVector::probability_of_index(std::uint64_t index) const {
    return std::norm(amp_[index]);
}

std::uint64_t StateVector::measure_all(Rng& rng) const {
    const double u = rng.real01();
    double cumulative = 0.0;
    const std::uint64_t size = this->size();
    for (std::uint64_t i = 0; i < size; ++i) {
        cumulative += std::norm(amp_[i]);
        if (u < cumulative) return i;
    }
    return size - 1;  // guard against rounding at the top of the scan
}

}  // namespace sagrover
