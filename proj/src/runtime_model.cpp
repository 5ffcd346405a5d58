#include "sagrover/runtime_model.hpp"

#include <algorithm>
#include <cmath>

#include "sagrover/errors.hpp"

namespace sagrover {

void RuntimeParams::validate() const {
    if (!(t_q > 0.0)) throw DimensionError("t_q must be positive");
    if (!(t_det >= 0.0)) throw DimensionError("t_det must be non-negative");
    if (!(q_oh >= 1.0)) throw DimensionError("quantum overhead must be >= 1");
    if (!(sa_total > 0.0)) throw DimensionError("sa_total must be positive");
    if (!(normalization > 0.0))
        throw DimensionError("normalization must be positive");
}

double calibrate_tq(int n, double c) {
    if (n < 1) throw DimensionError("calibrate_tq requires n >= 1");
    return c * static_cast<double>(n) * static_cast<double>(n);
}

HybridRuntime hybrid_runtime(const RuntimeParams& params, int q) {
    params.validate();
    if (q < 0) throw DimensionError("q must be non-negative");
    HybridRuntime r;
    r.t_qubo = params.sa_total * params.t_q / params.normalization;
    r.t_det = params.sa_total * params.t_det / params.normalization;
    r.t_grover = r.t_qubo / std::pow(2.0, q / 2.0) * params.q_oh;
    r.t_sa = r.t_qubo + r.t_det;
    r.t_hybrid = r.t_grover + r.t_det;
    return r;
}

HybridRuntime hybrid_runtime_from_calls(const RuntimeParams& params, int q,
                                        double oracle_calls_per_outer) {
    params.validate();
    if (q < 0) throw DimensionError("q must be non-negative");
    if (!(oracle_calls_per_outer > 0.0))
        throw DimensionError("oracle calls per outer iteration must be positive");
    HybridRuntime r;
    r.t_qubo = params.sa_total * params.t_q / params.normalization;
    r.t_det = params.sa_total * params.t_det / params.normalization;
    // Each outer iteration displaces 2^q classical evaluations with the
    // measured number of oracle calls, each costing t_q * Q_oh.
    r.t_grover = r.t_qubo * oracle_calls_per_outer /
                 std::pow(2.0, static_cast<double>(q)) * params.q_oh;
    r.t_sa = r.t_qubo + r.t_det;
    r.t_hybrid = r.t_grover + r.t_det;
    return r;
}

std::vector<SpeedupRow> speedup_table(const RuntimeParams& params,
                                      const std::vector<int>& q_values) {
    std::vector<SpeedupRow> rows;
    rows.reserve(q_values.size());
    for (int q : q_values) {
        const HybridRuntime r = hybrid_runtime(params, q);
        SpeedupRow row;
        row.q = q;
        row.t_qubo = r.t_qubo;
        row.t_grover = r.t_grover;
        row.x_qubo = std::pow(2.0, q / 2.0) / params.q_oh;
        row.t_sa = r.t_sa;
        row.t_hybrid = r.t_hybrid;
        row.x_sa = r.t_sa / r.t_hybrid;
        rows.push_back(row);
    }
    return rows;
}

int advantage_threshold(double q_oh) {
    if (!(q_oh >= 1.0)) throw DimensionError("quantum overhead must be >= 1");
    for (int q = 2; q <= 2048; q += 2)
        if (std::pow(2.0, q / 2.0) > q_oh) return q;
    throw DimensionError("overhead too large for the scanned q range");
}

SaturationResult saturation_q(const RuntimeParams& params, double epsilon,
                              int q_min, int q_max) {
    params.validate();
    if (!(epsilon > 0.0)) throw DimensionError("epsilon must be positive");
    if (q_min % 2 != 0 || q_max % 2 != 0 || q_min >= q_max)
        throw DimensionError("saturation scan needs an even q range");

    auto x_sa = [&](int q) {
        const HybridRuntime r = hybrid_runtime(params, q);
        return r.t_sa / r.t_hybrid;
    };

    // The step gain (X(q+2) - X(q)) / X(q+2) is decreasing in q, so the
    // first q whose outgoing step falls below epsilon starts the saturated
    // region; every later step gains less.
    double previous = x_sa(q_min);
    for (int q = q_min; q + 2 <= q_max; q += 2) {
        const double next = x_sa(q + 2);
        const double gain = (next - previous) / next;
        if (gain < epsilon) return {std::max(q_min, q - 2), q, true};
        previous = next;
    }
    return {q_max, q_max, false};
}

}  // namespace sagrover
