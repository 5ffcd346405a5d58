#pragma once

#include <string>
#include <vector>

#include "sagrover/qubo.hpp"

namespace sagrover {

/// Built-in 5-variable demo instance used by the self-test and the docs:
///   f = x1 x2 + 2 x2 x4 + 3 x1 x4 + x0 x1 + 5 x0 + 2 x2 x3 - 2 x2
///       + 4 x3 x4 - 4 x4 + x3 - 1
QuboModel demo_model();

/// The demo instance reduced by fixing x0 = 0, x3 = 1; equals
/// x y + 2 y z + 3 z x over (x1, x2, x4).
ReducedQubo demo_reduced();

struct SelfTestRow {
    std::string full;      // merged 5-bit assignment, x0 leftmost
    std::string reduced;   // the free bits
    double classical = 0.0;
    double circuit = 0.0;
    bool match = false;
};

struct SelfTestReport {
    std::vector<SelfTestRow> rows;
    std::vector<std::string> minimizers;  // reduced assignments with min cost
    double min_cost = 0.0;
    bool passed = false;
};

/// Evaluates every completion of the reduced demo instance with both the
/// classical evaluator and the synthesized cost circuit and compares them.
/// `inject_fault` corrupts one synthesized coefficient to prove the check
/// can fail.
SelfTestReport run_selftest(bool inject_fault = false);

}  // namespace sagrover
