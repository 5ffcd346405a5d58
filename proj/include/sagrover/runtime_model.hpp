#pragma once

#include <vector>

namespace sagrover {

/// Calibration constant of the quadratic per-evaluation cost model,
/// t_Q(n) = c * n^2, anchored at the n = 625 measurement.
constexpr double kDefaultCalibrationC = 5.82e-7;

/// Inputs of the analytic runtime model. Times are seconds per iteration;
/// totals are normalized over `normalization` iterations when reported.
struct RuntimeParams {
    double t_q = 0.228;      // cost-evaluation seconds per iteration (n=625)
    double t_det = 1.3e-4;   // residual seconds per iteration
    double q_oh = 100.0;     // quantum overhead factor
    double sa_total = 1e10;  // total annealing iterations
    double normalization = 1e5;

    void validate() const;
};

struct HybridRuntime {
    double t_qubo = 0.0;    // T_Q
    double t_grover = 0.0;  // T_G = T_Q / 2^(q/2) * Q_oh
    double t_det = 0.0;
    double t_sa = 0.0;      // T_SA = T_Q + T_det
    double t_hybrid = 0.0;  // T_hy = T_G + T_det
};

struct SpeedupRow {
    int q = 0;
    double t_qubo = 0.0;
    double t_grover = 0.0;
    double x_qubo = 0.0;  // T_Q / T_G = 2^(q/2) / Q_oh
    double t_sa = 0.0;
    double t_hybrid = 0.0;
    double x_sa = 0.0;  // T_SA / T_hy
};

struct SaturationResult {
    int q_lo = 0;  // beyond this q, every +2 step gains less than epsilon
    int q_hi = 0;  // first q whose outgoing +2 step gains less than epsilon
    bool saturated = false;
};

double calibrate_tq(int n, double c = kDefaultCalibrationC);

HybridRuntime hybrid_runtime(const RuntimeParams& params, int q);

/// Variant fed with measured oracle calls per outer iteration instead of the
/// idealized 2^(q/2): the Grover term scales by calls / 2^(q/2).
HybridRuntime hybrid_runtime_from_calls(const RuntimeParams& params, int q,
                                        double oracle_calls_per_outer);

std::vector<SpeedupRow> speedup_table(const RuntimeParams& params,
                                      const std::vector<int>& q_values);

/// Smallest even q with 2^(q/2) strictly above the overhead factor.
int advantage_threshold(double q_oh);

/// Scans even q in [q_min, q_max] for the point where the relative speedup
/// gain per +2 qubits, (X_SA(q+2) - X_SA(q)) / X_SA(q+2), drops below
/// epsilon; the returned bracket [q_lo, q_hi] straddles that point.
/// Unsaturated ranges return the range end with saturated=false.
SaturationResult saturation_q(const RuntimeParams& params, double epsilon,
                              int q_min = 2, int q_max = 60);

}  // namespace sagrover
