// pathdiv: connected EF1 divisions of a path of indivisible items.
//
// Subcommands: gen (seeded instances), solve (search + round + self-verify),
// verify (certify a division), oracle (exhaustive ground truth), bench.
// Exit codes: 0 ok, 1 verification failed, 2 bad input, 3 theorem violation
// or internal error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "pathdiv/errors.hpp"
#include "pathdiv/generator.hpp"
#include "pathdiv/json_io.hpp"
#include "pathdiv/solver.hpp"
#include "pathdiv/verify.hpp"

namespace {

using namespace pathdiv;
using Clock = std::chrono::steady_clock;

std::string read_all(const std::string& path) {
    if (path == "-") {
        std::ostringstream oss;
        oss << std::cin.rdbuf();
        return oss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream oss;
    oss << in.rdbuf();
    return oss.str();
}

void write_all(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot open '" + path + "' for writing");
    out << text;
}

Json parse_json(const std::string& text, const std::string& what) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw InputError("malformed JSON in " + what);
    return j;
}

Instance load_instance(const std::string& path) {
    Instance inst = instance_from_json(parse_json(read_all(path), path));
    const auto report = inst.validate();
    if (!report.ok()) {
        std::cerr << validation_report_to_json(report).dump(2) << "\n";
        throw InputError("instance failed validation");
    }
    return inst;
}

Mode parse_mode(const std::string& name) {
    if (name == "plain") return Mode::plain;
    if (name == "secretive") return Mode::secretive;
    if (name == "extra") return Mode::extra;
    throw InputError("unknown mode '" + name + "'");
}

struct CommonArgs {
    std::string instance_path;
    std::string mode = "plain";
    int secretive_agent = 0;
    std::string output = "-";
};

int run_gen(std::uint64_t seed, int agents, int items, std::int64_t max_value,
            const std::string& output) {
    const Instance inst = generate_additive(seed, agents, items, max_value);
    write_all(output, instance_to_json(inst).dump(2) + "\n");
    return 0;
}

int run_solve(const CommonArgs& common, const std::string& engine_name, int threads,
              const std::string& force_simplex, const std::string& trace_simplices,
              const std::string& trace_colors) {
    const Instance inst = load_instance(common.instance_path);
    SolveOptions options;
    options.mode = parse_mode(common.mode);
    options.secretive_agent = common.secretive_agent;
    options.threads = threads;
    if (engine_name == "exhaustive") {
        options.engine = Engine::exhaustive;
    } else if (engine_name == "pathfollow") {
        options.engine = Engine::pathfollow;
    } else {
        throw InputError("unknown engine '" + engine_name + "'");
    }
    if (!force_simplex.empty()) {
        const Json j = parse_json(force_simplex, "--force-simplex");
        if (j.is_array()) {
            std::vector<std::vector<int>> coords;
            for (const Json& v : j) coords.push_back(v.get<std::vector<int>>());
            options.forced_simplex = simplex_from_vertices(inst.items(), coords);
        } else {
            options.forced_simplex = simplex_from_json(j, inst.items());
        }
    }
    std::ofstream simplex_log;
    std::ofstream color_log;
    if (!trace_simplices.empty() || !trace_colors.empty()) {
        if (threads != 1 || options.engine != Engine::exhaustive) {
            throw InputError("tracing requires --threads 1 and the exhaustive engine");
        }
    }
    if (!trace_simplices.empty()) {
        simplex_log.open(trace_simplices);
        if (!simplex_log) throw InputError("cannot open trace file");
        options.hooks.on_simplex = [&](const ElementarySimplex& s, std::uint64_t index) {
            Json line;
            line["index"] = index;
            line["vertices"] = simplex_to_json(s)["vertices"];
            simplex_log << line.dump() << "\n";
        };
    }
    if (!trace_colors.empty()) {
        color_log.open(trace_colors);
        if (!color_log) throw InputError("cannot open trace file");
        options.hooks.on_color = [&](const KnifeVector& x, int owner,
                                     const std::vector<int>& colors, int chosen) {
            Json line;
            line["vertex"] = x.coords();
            line["owner"] = owner;
            line["colors"] = colors;
            line["chosen"] = chosen;
            color_log << line.dump() << "\n";
        };
    }
    const auto start = Clock::now();
    SolveResult result;
    try {
        result = solve(inst, options);
    } catch (const TheoremViolation&) {
        std::cerr << "instance dump:\n" << instance_to_json(inst).dump(2) << "\n";
        throw;
    }
    const double elapsed_ms =
        std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    write_all(common.output, solve_result_to_json(result, elapsed_ms).dump(2) + "\n");
    return 0;
}

int run_verify(const CommonArgs& common, const std::string& division_path) {
    const Instance inst = load_instance(common.instance_path);
    const Mode mode = parse_mode(common.mode);
    const int bundles = mode == Mode::extra ? inst.agents() - 1 : inst.agents();
    if (bundles < 1) throw InputError("extra mode needs at least two agents");
    const Division division =
        division_from_json(parse_json(read_all(division_path), division_path), inst.items());
    if (division.size() != bundles) {
        throw InputError("division has " + std::to_string(division.size()) +
                         " bundles, expected " + std::to_string(bundles));
    }
    Json out;
    out["mode"] = common.mode;
    bool valid = false;
    if (mode == Mode::plain) {
        auto pi = find_ef1_outer_assignment(inst, division);
        valid = pi.has_value();
        out["witnesses"] = valid ? witness_to_json(PlainWitness{*pi}) : Json(nullptr);
    } else if (mode == Mode::secretive) {
        const int i_star =
            common.secretive_agent == 0 ? inst.agents() : common.secretive_agent;
        auto per_choice = find_secretive_assignments(inst, division, i_star);
        valid = per_choice.has_value();
        out["witnesses"] =
            valid ? witness_to_json(SecretiveWitness{i_star, *per_choice}) : Json(nullptr);
    } else {
        auto per_leaver = find_extra_assignments(inst, division);
        valid = per_leaver.has_value();
        out["witnesses"] = valid ? witness_to_json(ExtraWitness{*per_leaver}) : Json(nullptr);
    }
    out["valid"] = valid;
    write_all(common.output, out.dump(2) + "\n");
    return valid ? 0 : 1;
}

int run_oracle(const CommonArgs& common) {
    const Instance inst = load_instance(common.instance_path);
    const Mode mode = parse_mode(common.mode);
    const OracleMode omode = mode == Mode::plain      ? OracleMode::plain
                             : mode == Mode::secretive ? OracleMode::secretive
                                                       : OracleMode::extra;
    const OracleSummary summary = oracle(inst, omode, common.secretive_agent);
    write_all(common.output, oracle_summary_to_json(omode, summary).dump(2) + "\n");
    return 0;
}

int run_bench(std::uint64_t seed, int agents_from, int agents_to, int items_to,
              const std::string& modes_csv, std::int64_t max_value, int threads,
              const std::string& output) {
    std::vector<std::string> modes;
    std::stringstream ss(modes_csv);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (!token.empty()) modes.push_back(token);
    }
    if (modes.empty()) throw InputError("bench needs at least one mode");
    std::ostringstream csv;
    csv << "n,m,mode,simplices,accepted_index,millis\n";
    for (int n = agents_from; n <= agents_to; ++n) {
        for (int m = 1; m <= items_to; ++m) {
            for (const std::string& mode_name : modes) {
                const Mode mode = parse_mode(mode_name);
                if (mode == Mode::extra && n < 2) continue;
                const Instance inst = generate_additive(seed, n, m, max_value);
                SolveOptions options;
                options.mode = mode;
                options.threads = threads;
                const auto start = Clock::now();
                const SolveResult result = solve(inst, options);
                const double elapsed_ms =
                    std::chrono::duration<double, std::milli>(Clock::now() - start).count();
                const int bundles = mode == Mode::extra ? n - 1 : n;
                csv << n << "," << m << "," << mode_name << ","
                    << count_simplices(m, bundles) << ",";
                if (result.stats.accepted_index) csv << *result.stats.accepted_index;
                csv << "," << elapsed_ms << "\n";
            }
        }
    }
    write_all(output, csv.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Connected EF1 divisions of a path of indivisible items"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a seeded additive instance");
    std::uint64_t gen_seed = 0;
    int gen_agents = 2;
    int gen_items = 4;
    std::int64_t gen_max = 10;
    std::string gen_output = "-";
    gen->add_option("--seed", gen_seed, "PRNG seed");
    gen->add_option("-n,--agents", gen_agents, "number of agents")->required();
    gen->add_option("-m,--items", gen_items, "number of items")->required();
    gen->add_option("--max-value", gen_max, "item values are uniform in [0, max]");
    gen->add_option("-o,--output", gen_output, "output path ('-' = stdout)");

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "Compute a certified division");
    CommonArgs solve_args;
    std::string engine = "exhaustive";
    int threads = 1;
    std::string force_simplex;
    std::string trace_simplices;
    std::string trace_colors;
    solve_cmd->add_option("-i,--instance", solve_args.instance_path, "instance JSON")
        ->required();
    solve_cmd->add_option("--mode", solve_args.mode, "plain|secretive|extra");
    solve_cmd->add_option("--secretive-agent", solve_args.secretive_agent,
                          "secretive agent index (default: last agent)");
    solve_cmd->add_option("--engine", engine, "exhaustive|pathfollow (plain mode)");
    solve_cmd->add_option("--threads", threads, "worker threads for the scan")
        ->check(CLI::Range(1, 256));
    solve_cmd->add_option("--force-simplex", force_simplex,
                          "JSON vertex list; round this simplex instead of searching");
    solve_cmd->add_option("--trace-simplices", trace_simplices,
                          "write scanned simplices as JSON lines to this file");
    solve_cmd->add_option("--trace-colors", trace_colors,
                          "write vertex colorings as JSON lines to this file");
    solve_cmd->add_option("-o,--output", solve_args.output, "output path ('-' = stdout)");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Certify a division");
    CommonArgs verify_args;
    std::string division_path;
    verify_cmd->add_option("-i,--instance", verify_args.instance_path, "instance JSON")
        ->required();
    verify_cmd->add_option("--division", division_path, "division JSON")->required();
    verify_cmd->add_option("--mode", verify_args.mode, "plain|secretive|extra");
    verify_cmd->add_option("--secretive-agent", verify_args.secretive_agent,
                           "secretive agent index (default: last agent)");
    verify_cmd->add_option("-o,--output", verify_args.output, "output path");

    // oracle
    auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive feasibility count");
    CommonArgs oracle_args;
    oracle_cmd->add_option("-i,--instance", oracle_args.instance_path, "instance JSON")
        ->required();
    oracle_cmd->add_option("--mode", oracle_args.mode, "plain|secretive|extra");
    oracle_cmd->add_option("--secretive-agent", oracle_args.secretive_agent,
                           "secretive agent index (default: last agent)");
    oracle_cmd->add_option("-o,--output", oracle_args.output, "output path");

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "Sweep an (n, m) grid; CSV output");
    std::uint64_t bench_seed = 0;
    int agents_from = 2;
    int agents_to = 4;
    int items_to = 8;
    std::string bench_modes = "plain";
    std::int64_t bench_max = 10;
    int bench_threads = 1;
    std::string bench_output = "-";
    bench_cmd->add_option("--seed", bench_seed, "PRNG seed");
    bench_cmd->add_option("--agents-from", agents_from, "smallest n");
    bench_cmd->add_option("--agents-to", agents_to, "largest n");
    bench_cmd->add_option("--items-to", items_to, "largest m");
    bench_cmd->add_option("--modes", bench_modes, "comma-separated mode list");
    bench_cmd->add_option("--max-value", bench_max, "item values are uniform in [0, max]");
    bench_cmd->add_option("--threads", bench_threads, "worker threads")
        ->check(CLI::Range(1, 256));
    bench_cmd->add_option("-o,--output", bench_output, "output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) {
            return run_gen(gen_seed, gen_agents, gen_items, gen_max, gen_output);
        }
        if (solve_cmd->parsed()) {
            return run_solve(solve_args, engine, threads, force_simplex, trace_simplices,
                             trace_colors);
        }
        if (verify_cmd->parsed()) {
            return run_verify(verify_args, division_path);
        }
        if (oracle_cmd->parsed()) {
            return run_oracle(oracle_args);
        }
        if (bench_cmd->parsed()) {
            return run_bench(bench_seed, agents_from, agents_to, items_to, bench_modes,
                             bench_max, bench_threads, bench_output);
        }
    } catch (const SelfCheckFailure& e) {
        std::cerr << "self-verification failed: " << e.what() << "\n";
        return 1;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::overflow_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const TheoremViolation& e) {
        std::cerr << "theorem violation: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
