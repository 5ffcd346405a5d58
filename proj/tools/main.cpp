#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sagrover/errors.hpp"
#include "sagrover/grover.hpp"
#include "sagrover/qubo.hpp"
#include "sagrover/runtime_model.hpp"
#include "sagrover/sa.hpp"
#include "sagrover/selftest.hpp"
#include "sagrover/statevector.hpp"
#include "sagrover/synth.hpp"
#include "sagrover/version.hpp"

using nlohmann::json;
using namespace sagrover;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "fnv1a64:%016llx",
                  static_cast<unsigned long long>(h));
    return buf;
}

std::string timestamp_utc() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path + "'");
    out << text;
}

json make_manifest(const std::string& command, const json& params,
                   const std::string& input_digest) {
    json m;
    m["command"] = command;
    m["parameters"] = params;
    m["artifact_version"] = kVersion;
    m["input_digest"] = input_digest;
    m["timestamp"] = timestamp_utc();
    return m;
}

void emit(const std::string& output_path, const std::string& text) {
    if (output_path.empty())
        std::cout << text;
    else
        write_file(output_path, text);
}

std::string dump_payload(const json& payload) { return payload.dump(2) + "\n"; }

std::string csv_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

json runtime_row_json(const SpeedupRow& row) {
    json r;
    r["q"] = row.q;
    r["T_Q"] = row.t_qubo;
    r["T_G"] = row.t_grover;
    r["X_QUBO"] = row.x_qubo;
    r["T_SA"] = row.t_sa;
    r["T_hy"] = row.t_hybrid;
    r["X_SA"] = row.x_sa;
    return r;
}

struct SolveOptions {
    std::string model_path;
    std::string mode = "classical";
    int q = 0;
    std::string backend = "classical-exhaustive";
    std::uint64_t iterations = 1000;
    double initial_temperature = 10.0;
    double cooling = 0.99;
    int budget_factor = 50;
    bool trace = false;
};

struct ReduceOptions {
    std::string model_path;
    std::vector<std::string> fixes;
};

struct SynthOptions {
    std::string model_path;
    bool verify = false;
    std::string circuit_path;
};

struct ModelOptions {
    double t_q = 0.228;
    double t_det = 1.3e-4;
    double q_oh = 100.0;
    double sa_total = 1e10;
    double normalization = 1e5;
    int q_min = 2;
    int q_max = 20;
    int q_step = 2;
    std::string plot_path;
};

struct GenOptions {
    int n = 0;
    double density = 0.5;
    int coeff_range = 5;
};

struct VerifyOptions {
    bool inject_fault = false;
};

int cmd_solve(const SolveOptions& opt, std::uint64_t seed,
              const std::string& output) {
    const std::string text = read_file(opt.model_path);
    const QuboModel model = parse_model(text);

    SaConfig cfg;
    cfg.initial_temperature = opt.initial_temperature;
    cfg.cooling_factor = opt.cooling;
    cfg.outer_iterations = opt.iterations;
    cfg.seed = seed;
    cfg.grover_budget_factor = opt.budget_factor;

    SaResult result;
    if (opt.mode == "classical") {
        cfg.q = 0;
        result = classical_sa(model, cfg);
    } else if (opt.mode == "hybrid") {
        cfg.q = opt.q;
        cfg.backend = backend_from_name(opt.backend);
        result = hybrid_sa(model, cfg);
    } else {
        throw DimensionError("mode must be 'classical' or 'hybrid'");
    }

    json params;
    params["model"] = opt.model_path;
    params["mode"] = opt.mode;
    params["q"] = cfg.q;
    params["backend"] = opt.mode == "hybrid" ? opt.backend : "";
    params["iterations"] = opt.iterations;
    params["initial_temperature"] = opt.initial_temperature;
    params["cooling_factor"] = opt.cooling;
    params["grover_budget_factor"] = opt.budget_factor;
    params["seed"] = seed;

    RuntimeParams runtime;
    const auto rows = speedup_table(runtime, {cfg.q});

    json res;
    res["best_assignment"] = assignment_to_string(result.best_assignment);
    res["best_cost"] = result.best_cost;
    res["classical_evaluations"] = result.classical_evaluations;
    res["oracle_calls"] = result.oracle_calls;
    res["grover_iterations"] = result.grover_iterations;
    res["configurations_explored"] = result.configurations_explored;
    res["modeled_runtime"] = runtime_row_json(rows[0]);
    if (opt.trace) res["cost_trace"] = result.cost_trace;

    json payload;
    payload["manifest"] = make_manifest("solve", params, fnv1a_hex(text));
    payload["result"] = res;
    emit(output, dump_payload(payload));
    return kExitOk;
}

int cmd_reduce(const ReduceOptions& opt, std::uint64_t seed,
               const std::string& output) {
    const std::string text = read_file(opt.model_path);
    const QuboModel model = parse_model(text);

    PartialAssignment partial;
    std::vector<bool> is_fixed(static_cast<std::size_t>(model.n), false);
    for (const std::string& fix : opt.fixes) {
        const auto eq = fix.find('=');
        int index = -1;
        int bit = -1;
        if (eq != std::string::npos) {
            try {
                index = std::stoi(fix.substr(0, eq));
                bit = std::stoi(fix.substr(eq + 1));
            } catch (const std::exception&) {
                index = -1;
            }
        }
        if (index < 0 || index >= model.n || (bit != 0 && bit != 1))
            throw PartitionError("bad --fix '" + fix +
                                 "', expected <index>=<0|1> with index < n");
        if (is_fixed[static_cast<std::size_t>(index)])
            throw PartitionError("index " + std::to_string(index) +
                                 " fixed twice");
        is_fixed[static_cast<std::size_t>(index)] = true;
        partial.fixed[index] = static_cast<std::uint8_t>(bit);
    }
    for (int i = 0; i < model.n; ++i)
        if (!is_fixed[static_cast<std::size_t>(i)]) partial.free.push_back(i);

    const ReducedQubo reduced = fix_variables(model, partial);
    const std::string reduced_text = serialize_model(reduced.model);

    json params;
    params["model"] = opt.model_path;
    params["fix"] = opt.fixes;
    params["seed"] = seed;

    json res;
    res["q"] = reduced.model.n;
    res["terms_before"] = model.monomial_count();
    res["terms_after"] = reduced.model.monomial_count();
    res["offset"] = reduced.model.offset;
    res["folded_offset"] = reduced.folded_offset;
    res["index_map"] = reduced.index_map;
    if (output.empty()) res["model_text"] = reduced_text;

    json payload;
    payload["manifest"] = make_manifest("reduce", params, fnv1a_hex(text));
    payload["result"] = res;
    if (!output.empty()) {
        write_file(output, reduced_text);
        res["output"] = output;
        payload["result"] = res;
        std::cout << dump_payload(payload);
    } else {
        std::cout << dump_payload(payload);
    }
    return kExitOk;
}

int cmd_synth(const SynthOptions& opt, std::uint64_t seed,
              const std::string& output) {
    const std::string text = read_file(opt.model_path);
    ReducedQubo reduced;
    reduced.model = parse_model(text);
    for (int i = 0; i < reduced.model.n; ++i) reduced.index_map.push_back(i);

    const CostCircuit cost = synthesize_cost_circuit(reduced);
    const ResourceReport report = resource_report(cost);
    const std::string circuit_text = dump_circuit(cost.circuit);

    json params;
    params["model"] = opt.model_path;
    params["verify"] = opt.verify;
    params["seed"] = seed;

    json rep;
    rep["qubits"] = report.qubits;
    rep["gate_counts"] = report.gate_counts;
    rep["monomial_terms"] = report.monomial_terms;

    json layout;
    layout["inputs"] = cost.layout.input_count;
    layout["cost_begin"] = cost.layout.cost_begin;
    layout["width"] = cost.layout.width;
    layout["scratch_begin"] = cost.layout.scratch_begin;
    layout["carry"] = cost.layout.carry;
    layout["product_ancilla"] = cost.layout.product_ancilla;
    layout["total_qubits"] = cost.layout.total_qubits();

    json res;
    res["resource_report"] = rep;
    res["layout"] = layout;
    res["min_bound"] = cost.min_bound;
    res["max_bound"] = cost.max_bound;

    bool all_pass = true;
    if (opt.verify) {
        json checks = json::array();
        const int q = reduced.model.n;
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << q); ++x) {
            const Assignment bits = assignment_from_index(x, q);
            const double classical = evaluate(reduced.model, bits);
            const BasisState out = propagate_basis(cost.circuit, x);
            const std::uint64_t raw =
                (out.bits >> q) & ((std::uint64_t{1} << cost.layout.width) - 1);
            long long circuit_value = static_cast<long long>(raw);
            if (cost.min_bound < 0 &&
                (raw >> (cost.layout.width - 1) & 1))
                circuit_value -= 1LL << cost.layout.width;
            const bool clean =
                (out.bits & ((std::uint64_t{1} << q) - 1)) == x &&
                (out.bits >> (q + cost.layout.width)) == 0;
            const bool pass =
                clean && classical == static_cast<double>(circuit_value);
            all_pass = all_pass && pass;
            json row;
            row["input"] = assignment_to_string(bits);
            row["classical"] = classical;
            row["circuit"] = circuit_value;
            row["pass"] = pass;
            checks.push_back(row);
        }
        res["verification"] = checks;
        res["verification_passed"] = all_pass;
    }

    if (!opt.circuit_path.empty()) {
        write_file(opt.circuit_path, circuit_text);
        res["circuit"] = opt.circuit_path;
    } else {
        res["circuit_text"] = circuit_text;
    }

    json payload;
    payload["manifest"] = make_manifest("synth", params, fnv1a_hex(text));
    payload["result"] = res;
    emit(output, dump_payload(payload));
    return all_pass ? kExitOk : kExitVerification;
}

int cmd_model(const ModelOptions& opt, std::uint64_t seed,
              const std::string& output, const std::string& format) {
    if (opt.q_min < 0 || opt.q_max < opt.q_min || opt.q_step < 1)
        throw DimensionError("bad q range");

    RuntimeParams params;
    params.t_q = opt.t_q;
    params.t_det = opt.t_det;
    params.q_oh = opt.q_oh;
    params.sa_total = opt.sa_total;
    params.normalization = opt.normalization;
    params.validate();

    std::vector<int> qs;
    for (int q = opt.q_min; q <= opt.q_max; q += opt.q_step) qs.push_back(q);
    const auto rows = speedup_table(params, qs);

    json jparams;
    jparams["t_q"] = opt.t_q;
    jparams["t_det"] = opt.t_det;
    jparams["q_oh"] = opt.q_oh;
    jparams["sa_total"] = opt.sa_total;
    jparams["normalization"] = opt.normalization;
    jparams["q_min"] = opt.q_min;
    jparams["q_max"] = opt.q_max;
    jparams["q_step"] = opt.q_step;
    jparams["seed"] = seed;
    const json manifest = make_manifest("model", jparams, "-");

    if (!opt.plot_path.empty()) {
        std::ostringstream plot;
        plot << "# manifest: " << manifest.dump() << "\n";
        plot << "q,log10_T_Q,log10_T_G,log10_T_SA,log10_T_hy,log10_X_QUBO,"
                "log10_X_SA\n";
        for (const auto& row : rows) {
            plot << row.q << "," << csv_number(std::log10(row.t_qubo)) << ","
                 << csv_number(std::log10(row.t_grover)) << ","
                 << csv_number(std::log10(row.t_sa)) << ","
                 << csv_number(std::log10(row.t_hybrid)) << ","
                 << csv_number(std::log10(row.x_qubo)) << ","
                 << csv_number(std::log10(row.x_sa)) << "\n";
        }
        write_file(opt.plot_path, plot.str());
    }

    if (format == "json") {
        json res;
        res["rows"] = json::array();
        for (const auto& row : rows) res["rows"].push_back(runtime_row_json(row));
        res["advantage_threshold"] = advantage_threshold(params.q_oh);
        const SaturationResult sat = saturation_q(params, 0.25);
        res["saturation"] = {{"q_lo", sat.q_lo},
                             {"q_hi", sat.q_hi},
                             {"saturated", sat.saturated}};
        json payload;
        payload["manifest"] = manifest;
        payload["result"] = res;
        emit(output, dump_payload(payload));
        return kExitOk;
    }

    std::ostringstream csv;
    csv << "# manifest: " << manifest.dump() << "\n";
    csv << "q,T_Q,T_G,X_QUBO,T_SA,T_hy,X_SA\n";
    for (const auto& row : rows) {
        csv << row.q << "," << csv_number(row.t_qubo) << ","
            << csv_number(row.t_grover) << "," << csv_number(row.x_qubo) << ","
            << csv_number(row.t_sa) << "," << csv_number(row.t_hybrid) << ","
            << csv_number(row.x_sa) << "\n";
    }
    emit(output, csv.str());
    return kExitOk;
}

int cmd_gen(const GenOptions& opt, std::uint64_t seed,
            const std::string& output) {
    const QuboModel model =
        random_instance(opt.n, opt.density, opt.coeff_range, seed);
    const std::string text = serialize_model(model);

    json params;
    params["n"] = opt.n;
    params["density"] = opt.density;
    params["coeff_range"] = opt.coeff_range;
    params["seed"] = seed;

    json res;
    res["n"] = model.n;
    res["linear_terms"] = model.linear.size();
    res["quadratic_terms"] = model.quadratic.size();
    if (output.empty()) {
        res["model_text"] = text;
    } else {
        write_file(output, text);
        res["output"] = output;
    }

    json payload;
    payload["manifest"] = make_manifest("gen", params, "-");
    payload["result"] = res;
    std::cout << dump_payload(payload);
    return kExitOk;
}

int cmd_verify(const VerifyOptions& opt, std::uint64_t seed,
               const std::string& output) {
    const SelfTestReport report = run_selftest(opt.inject_fault);

    json params;
    params["inject_fault"] = opt.inject_fault;
    params["seed"] = seed;

    json rows = json::array();
    for (const auto& row : report.rows) {
        json r;
        r["full"] = row.full;
        r["free_bits"] = row.reduced;
        r["classical"] = row.classical;
        r["circuit"] = row.circuit;
        r["match"] = row.match;
        rows.push_back(r);
    }

    json res;
    res["rows"] = rows;
    res["checked"] = report.rows.size();
    res["min_cost"] = report.min_cost;
    res["minimizers"] = report.minimizers;
    res["passed"] = report.passed;

    json payload;
    payload["manifest"] = make_manifest("verify", params, "-");
    payload["result"] = res;
    emit(output, dump_payload(payload));
    return report.passed ? kExitOk : kExitVerification;
}

int error_line(const char* category, const std::string& message, int code) {
    json err;
    err["error"] = category;
    err["message"] = message;
    std::cerr << err.dump() << "\n";
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hybrid annealing + Grover QUBO solver toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    std::uint64_t seed = 0;
    std::string output;
    std::string format;  // commands pick their default; model prefers csv
    int threads = 1;
    app.add_option("--seed", seed, "RNG seed");
    app.add_option("--output", output, "write the result payload here");
    app.add_option("--format", format, "json|csv (default: csv for model, json otherwise)")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--threads", threads, "statevector worker threads");

    SolveOptions solve_opt;
    auto* solve = app.add_subcommand("solve", "anneal a QUBO instance");
    solve->add_option("--model", solve_opt.model_path, "model file")
        ->required();
    solve->add_option("--mode", solve_opt.mode, "classical|hybrid")
        ->check(CLI::IsMember({"classical", "hybrid"}));
    solve->add_option("--q", solve_opt.q, "free bits per hybrid step");
    solve->add_option("--backend", solve_opt.backend,
                      "classical-exhaustive|grover-semantic|grover-circuit");
    solve->add_option("--iterations", solve_opt.iterations, "outer iterations");
    solve->add_option("--t0", solve_opt.initial_temperature,
                      "initial temperature");
    solve->add_option("--cooling", solve_opt.cooling, "geometric cooling factor");
    solve->add_option("--budget-factor", solve_opt.budget_factor,
                      "oracle-call budget per step, times 2^(q/2)");
    solve->add_flag("--trace", solve_opt.trace, "include the cost trace");

    ReduceOptions reduce_opt;
    auto* reduce = app.add_subcommand("reduce", "fix variables in a model");
    reduce->add_option("--model", reduce_opt.model_path, "model file")
        ->required();
    reduce->add_option("--fix", reduce_opt.fixes,
                       "<index>=<0|1>, repeatable");

    SynthOptions synth_opt;
    auto* synth = app.add_subcommand(
        "synth", "compile a reduced model to a reversible circuit");
    synth->add_option("--model", synth_opt.model_path, "model file")
        ->required();
    synth->add_flag("--verify", synth_opt.verify,
                    "check the circuit on every basis input");
    synth->add_option("--circuit", synth_opt.circuit_path,
                      "write the gate list here");

    ModelOptions model_opt;
    auto* model = app.add_subcommand("model", "evaluate the runtime model");
    model->add_option("--tq", model_opt.t_q, "seconds per cost evaluation");
    model->add_option("--tdet", model_opt.t_det, "residual seconds per iteration");
    model->add_option("--qoh", model_opt.q_oh, "quantum overhead factor");
    model->add_option("--sa-total", model_opt.sa_total, "total iterations");
    model->add_option("--normalization", model_opt.normalization,
                      "iterations per reported row");
    model->add_option("--q-min", model_opt.q_min, "first q");
    model->add_option("--q-max", model_opt.q_max, "last q");
    model->add_option("--q-step", model_opt.q_step, "q stride");
    model->add_option("--plot-output", model_opt.plot_path,
                      "write log-scale plot data here");

    GenOptions gen_opt;
    auto* gen = app.add_subcommand("gen", "generate a random instance");
    gen->add_option("--n", gen_opt.n, "variable count")->required();
    gen->add_option("--density", gen_opt.density, "term density in (0,1]");
    gen->add_option("--range", gen_opt.coeff_range, "coefficient bound");

    VerifyOptions verify_opt;
    auto* verify = app.add_subcommand("verify", "run the built-in self-test");
    verify->add_flag("--inject-fault", verify_opt.inject_fault,
                     "corrupt one coefficient to exercise the failure path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    set_simulation_threads(threads);
    try {
        if (solve->parsed()) return cmd_solve(solve_opt, seed, output);
        if (reduce->parsed()) return cmd_reduce(reduce_opt, seed, output);
        if (synth->parsed()) return cmd_synth(synth_opt, seed, output);
        if (model->parsed())
            return cmd_model(model_opt, seed, output,
                             format.empty() ? "csv" : format);
        if (gen->parsed()) return cmd_gen(gen_opt, seed, output);
        if (verify->parsed()) return cmd_verify(verify_opt, seed, output);
    } catch (const CapacityError& e) {
        return error_line("capacity", e.what(), kExitUsage);
    } catch (const ParseError& e) {
        return error_line("parse", e.what(), kExitIo);
    } catch (const DimensionError& e) {
        return error_line("usage", e.what(), kExitUsage);
    } catch (const PartitionError& e) {
        return error_line("usage", e.what(), kExitUsage);
    } catch (const SynthesisError& e) {
        return error_line("synthesis", e.what(), kExitUsage);
    } catch (const GateError& e) {
        return error_line("gate", e.what(), kExitUsage);
    } catch (const Error& e) {
        return error_line("io", e.what(), kExitIo);
    } catch (const std::exception& e) {
        return error_line("internal", e.what(), kExitUsage);
    }
    return kExitUsage;
}
