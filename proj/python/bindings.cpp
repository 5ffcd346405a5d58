#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sagrover/errors.hpp"
#include "sagrover/grover.hpp"
#include "sagrover/qubo.hpp"
#include "sagrover/runtime_model.hpp"
#include "sagrover/sa.hpp"
#include "sagrover/selftest.hpp"
#include "sagrover/synth.hpp"
#include "sagrover/version.hpp"

namespace py = pybind11;
using namespace sagrover;
using namespace pybind11::literals;

namespace {

std::vector<double> circuit_cost_table(const ReducedQubo& reduced) {
    const CostCircuit cost = synthesize_cost_circuit(reduced);
    const int q = reduced.model.n;
    std::vector<double> table;
    table.reserve(std::size_t{1} << q);
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << q); ++x) {
        const BasisState out = propagate_basis(cost.circuit, x);
        const std::uint64_t raw =
            (out.bits >> q) & ((std::uint64_t{1} << cost.layout.width) - 1);
        long long value = static_cast<long long>(raw);
        if (cost.min_bound < 0 && (raw >> (cost.layout.width - 1) & 1))
            value -= 1LL << cost.layout.width;
        table.push_back(static_cast<double>(value));
    }
    return table;
}

std::vector<bool> oracle_marks(const ReducedQubo& reduced,
                               long long threshold) {
    const Circuit oracle = synthesize_threshold_oracle(reduced, threshold);
    const int q = reduced.model.n;
    std::vector<bool> marks;
    marks.reserve(std::size_t{1} << q);
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << q); ++x)
        marks.push_back(propagate_basis(oracle, x).phase.real() < 0);
    return marks;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Hybrid annealing + Grover QUBO solver toolkit";
    m.attr("__version__") = kVersion;

    py::register_exception<Error>(m, "SagroverError", PyExc_RuntimeError);

    py::class_<QuboModel>(m, "QuboModel")
        .def(py::init<>())
        .def(py::init([](int n) {
                 QuboModel model;
                 model.n = n;
                 return model;
             }),
             "n"_a)
        .def_readwrite("n", &QuboModel::n)
        .def_readwrite("linear", &QuboModel::linear)
        .def_readwrite("quadratic", &QuboModel::quadratic)
        .def_readwrite("offset", &QuboModel::offset)
        .def("evaluate",
             [](const QuboModel& model, const Assignment& bits) {
                 return evaluate(model, bits);
             },
             "bits"_a)
        .def("term_count", &QuboModel::term_count)
        .def("monomial_count", &QuboModel::monomial_count)
        .def("__eq__", [](const QuboModel& a, const QuboModel& b) { return a == b; })
        .def("__repr__", [](const QuboModel& model) {
            return "QuboModel(n=" + std::to_string(model.n) + ", monomials=" +
                   std::to_string(model.monomial_count()) + ")";
        });

    py::class_<ReducedQubo>(m, "ReducedQubo")
        .def(py::init<>())
        .def_readwrite("model", &ReducedQubo::model)
        .def_readwrite("index_map", &ReducedQubo::index_map)
        .def_readwrite("folded_offset", &ReducedQubo::folded_offset);

    py::class_<BruteForceResult>(m, "BruteForceResult")
        .def_readonly("best", &BruteForceResult::best)
        .def_readonly("cost", &BruteForceResult::cost)
        .def_readonly("optimal_count", &BruteForceResult::optimal_count);

    m.def("evaluate", &evaluate, "model"_a, "bits"_a);
    m.def("brute_force_min", &brute_force_min, "model"_a);
    m.def("fix_variables",
          [](const QuboModel& model, const std::map<int, std::uint8_t>& fixed,
             const std::vector<int>& free) {
              PartialAssignment p;
              p.fixed = fixed;
              p.free = free;
              return fix_variables(model, p);
          },
          "model"_a, "fixed"_a, "free"_a);
    m.def("random_instance", &random_instance, "n"_a, "density"_a,
          "coeff_range"_a, "seed"_a);
    m.def("parse_model", &parse_model, "text"_a);
    m.def("serialize_model", &serialize_model, "model"_a);
    m.def("assignment_to_string", &assignment_to_string, "bits"_a);
    m.def("assignment_from_string", &assignment_from_string, "text"_a);

    py::enum_<SolveBackend>(m, "Backend")
        .value("CLASSICAL_EXHAUSTIVE", SolveBackend::ClassicalExhaustive)
        .value("GROVER_SEMANTIC", SolveBackend::GroverSemantic)
        .value("GROVER_CIRCUIT", SolveBackend::GroverCircuit);

    py::class_<SaConfig>(m, "SaConfig")
        .def(py::init<>())
        .def_readwrite("initial_temperature", &SaConfig::initial_temperature)
        .def_readwrite("cooling_factor", &SaConfig::cooling_factor)
        .def_readwrite("outer_iterations", &SaConfig::outer_iterations)
        .def_readwrite("q", &SaConfig::q)
        .def_readwrite("seed", &SaConfig::seed)
        .def_readwrite("backend", &SaConfig::backend)
        .def_readwrite("grover_budget_factor", &SaConfig::grover_budget_factor)
        .def_readwrite("no_improve_rounds", &SaConfig::no_improve_rounds);

    py::class_<SaResult>(m, "SaResult")
        .def_readonly("best_assignment", &SaResult::best_assignment)
        .def_readonly("best_cost", &SaResult::best_cost)
        .def_readonly("cost_trace", &SaResult::cost_trace)
        .def_readonly("classical_evaluations", &SaResult::classical_evaluations)
        .def_readonly("oracle_calls", &SaResult::oracle_calls)
        .def_readonly("grover_iterations", &SaResult::grover_iterations)
        .def_readonly("configurations_explored",
                      &SaResult::configurations_explored);

    m.def("classical_sa", &classical_sa, "model"_a, "config"_a);
    m.def("hybrid_sa", &hybrid_sa, "model"_a, "config"_a);

    py::enum_<GroverBackend>(m, "GroverBackend")
        .value("SEMANTIC", GroverBackend::Semantic)
        .value("CIRCUIT", GroverBackend::Circuit);

    py::class_<MinFindResult>(m, "MinFindResult")
        .def_readonly("best", &MinFindResult::best)
        .def_readonly("best_index", &MinFindResult::best_index)
        .def_readonly("best_cost", &MinFindResult::best_cost)
        .def_readonly("rounds", &MinFindResult::rounds)
        .def_readonly("total_oracle_calls", &MinFindResult::total_oracle_calls);

    m.def("optimal_iterations", &optimal_iterations, "n_states"_a,
          "marked_count"_a);
    m.def("durr_hoyer_min",
          [](const ReducedQubo& reduced, GroverBackend backend,
             std::uint64_t seed, std::uint64_t call_budget,
             int no_improve_limit) {
              Rng rng(seed);
              return durr_hoyer_min(reduced, backend, rng, call_budget,
                                    no_improve_limit);
          },
          "reduced"_a, "backend"_a, "seed"_a, "call_budget"_a,
          "no_improve_limit"_a = 3);
    m.def("grover_probabilities",
          [](const ReducedQubo& reduced, double threshold,
             std::uint64_t iterations, GroverBackend backend) {
              const auto oracle =
                  make_threshold_oracle(reduced, threshold, backend);
              return grover_input_probabilities(*oracle, iterations);
          },
          "reduced"_a, "threshold"_a, "iterations"_a,
          "backend"_a = GroverBackend::Semantic);

    py::class_<ResourceReport>(m, "ResourceReport")
        .def_readonly("qubits", &ResourceReport::qubits)
        .def_readonly("gate_counts", &ResourceReport::gate_counts)
        .def_readonly("monomial_terms", &ResourceReport::monomial_terms);

    py::class_<CostCircuit>(m, "CostCircuit")
        .def_property_readonly("total_qubits",
                               [](const CostCircuit& c) {
                                   return c.layout.total_qubits();
                               })
        .def_property_readonly("width",
                               [](const CostCircuit& c) { return c.layout.width; })
        .def_property_readonly("gate_count",
                               [](const CostCircuit& c) {
                                   return c.circuit.gate_count();
                               })
        .def_readonly("min_bound", &CostCircuit::min_bound)
        .def_readonly("max_bound", &CostCircuit::max_bound)
        .def_readonly("monomial_terms", &CostCircuit::monomial_terms)
        .def("text", [](const CostCircuit& c) { return dump_circuit(c.circuit); })
        .def("report", &resource_report);

    m.def("synthesize_cost_circuit",
          py::overload_cast<const ReducedQubo&>(&synthesize_cost_circuit),
          "reduced"_a);
    m.def("circuit_cost_table", &circuit_cost_table, "reduced"_a,
          "Cost-register readout of the synthesized circuit for every basis "
          "input.");
    m.def("oracle_marks", &oracle_marks, "reduced"_a, "threshold"_a,
          "Phase flips of the threshold oracle for every basis input.");

    py::class_<RuntimeParams>(m, "RuntimeParams")
        .def(py::init<>())
        .def_readwrite("t_q", &RuntimeParams::t_q)
        .def_readwrite("t_det", &RuntimeParams::t_det)
        .def_readwrite("q_oh", &RuntimeParams::q_oh)
        .def_readwrite("sa_total", &RuntimeParams::sa_total)
        .def_readwrite("normalization", &RuntimeParams::normalization);

    py::class_<HybridRuntime>(m, "HybridRuntime")
        .def_readonly("t_qubo", &HybridRuntime::t_qubo)
        .def_readonly("t_grover", &HybridRuntime::t_grover)
        .def_readonly("t_det", &HybridRuntime::t_det)
        .def_readonly("t_sa", &HybridRuntime::t_sa)
        .def_readonly("t_hybrid", &HybridRuntime::t_hybrid);

    py::class_<SpeedupRow>(m, "SpeedupRow")
        .def_readonly("q", &SpeedupRow::q)
        .def_readonly("t_qubo", &SpeedupRow::t_qubo)
        .def_readonly("t_grover", &SpeedupRow::t_grover)
        .def_readonly("x_qubo", &SpeedupRow::x_qubo)
        .def_readonly("t_sa", &SpeedupRow::t_sa)
        .def_readonly("t_hybrid", &SpeedupRow::t_hybrid)
        .def_readonly("x_sa", &SpeedupRow::x_sa);

    py::class_<SaturationResult>(m, "SaturationResult")
        .def_readonly("q_lo", &SaturationResult::q_lo)
        .def_readonly("q_hi", &SaturationResult::q_hi)
        .def_readonly("saturated", &SaturationResult::saturated);

    m.def("calibrate_tq", &calibrate_tq, "n"_a, "c"_a = kDefaultCalibrationC);
    m.def("hybrid_runtime", &hybrid_runtime, "params"_a, "q"_a);
    m.def("hybrid_runtime_from_calls", &hybrid_runtime_from_calls, "params"_a,
          "q"_a, "oracle_calls_per_outer"_a);
    m.def("speedup_table", &speedup_table, "params"_a, "q_values"_a);
    m.def("advantage_threshold", &advantage_threshold, "q_oh"_a);
    m.def("saturation_q", &saturation_q, "params"_a, "epsilon"_a = 0.25,
          "q_min"_a = 2, "q_max"_a = 60);

    py::class_<SelfTestRow>(m, "SelfTestRow")
        .def_readonly("full", &SelfTestRow::full)
        .def_readonly("reduced", &SelfTestRow::reduced)
        .def_readonly("classical", &SelfTestRow::classical)
        .def_readonly("circuit", &SelfTestRow::circuit)
        .def_readonly("match", &SelfTestRow::match);

    py::class_<SelfTestReport>(m, "SelfTestReport")
        .def_readonly("rows", &SelfTestReport::rows)
        .def_readonly("minimizers", &SelfTestReport::minimizers)
        .def_readonly("min_cost", &SelfTestReport::min_cost)
        .def_readonly("passed", &SelfTestReport::passed);

    m.def("demo_model", &demo_model);
    m.def("demo_reduced", &demo_reduced);
    m.def("run_selftest", &run_selftest, "inject_fault"_a = false);
}
