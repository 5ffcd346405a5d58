#include "sagrover/selftest.hpp"

#include <algorithm>

#include "sagrover/synth.hpp"

namespace sagrover {

QuboModel demo_model() {
    QuboModel m;
    m.n = 5;
    m.quadratic[{1, 2}] = 1;
    m.quadratic[{2, 4}] = 2;
    m.quadratic[{1, 4}] = 3;
    m.quadratic[{0, 1}] = 1;
    m.linear[0] = 5;
    m.quadratic[{2, 3}] = 2;
    m.linear[2] = -2;
    m.quadratic[{3, 4}] = 4;
    m.linear[4] = -4;
    m.linear[3] = 1;
    m.offset = -1;
    return m;
}

ReducedQubo demo_reduced() {
    PartialAssignment p;
    p.fixed[0] = 0;
    p.fixed[3] = 1;
    p.free = {1, 2, 4};
    return fix_variables(demo_model(), p);
}

/// Reads the cost register of a basis-propagated output, undoing the
/// two's-complement wrap when the model can go negative.
static double decode_cost_register(std::uint64_t bits, int cost_begin,
                                   int width, long long min_bound) {
    const std::uint64_t raw =
        (bits >> cost_begin) & ((std::uint64_t{1} << width) - 1);
    long long value = static_cast<long long>(raw);
    if (min_bound < 0 && (raw >> (width - 1) & 1))
        value -= 1LL << width;
    return static_cast<double>(value);
}

SelfTestReport run_selftest(bool inject_fault) {
    const QuboModel model = demo_model();
    PartialAssignment partial;
    partial.fixed[0] = 0;
    partial.fixed[3] = 1;
    partial.free = {1, 2, 4};
    const ReducedQubo reduced = fix_variables(model, partial);

    ReducedQubo synth_input = reduced;
    if (inject_fault) synth_input.model.quadratic[{0, 1}] += 1;
    const CostCircuit cost = synthesize_cost_circuit(synth_input);

    SelfTestReport report;
    report.passed = true;
    const int q = reduced.model.n;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << q); ++x) {
        const Assignment free_bits = assignment_from_index(x, q);
        SelfTestRow row;
        row.reduced = assignment_to_string(free_bits);
        row.full = assignment_to_string(merge_assignment(partial, free_bits));
        row.classical = evaluate(reduced.model, free_bits);

        const BasisState out = propagate_basis(cost.circuit, x);
        row.circuit = decode_cost_register(out.bits, cost.layout.cost_begin,
                                           cost.layout.width, cost.min_bound);
        // Inputs and ancillas must come back unchanged.
        const std::uint64_t input_mask = (std::uint64_t{1} << q) - 1;
        const bool clean = (out.bits & input_mask) == x &&
                           (out.bits >> (q + cost.layout.width)) == 0;
        row.match = clean && row.classical == row.circuit;
        report.passed = report.passed && row.match;
        report.rows.push_back(row);
    }

    report.min_cost = report.rows.front().classical;
    for (const auto& row : report.rows)
        report.min_cost = std::min(report.min_cost, row.classical);
    for (const auto& row : report.rows)
        if (row.classical == report.min_cost)
            report.minimizers.push_back(row.reduced);
    return report;
}

}  // namespace sagrover
