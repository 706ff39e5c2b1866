#include <CLI11.hpp>

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include <ied/bounds.hpp>
#include <ied/entropy.hpp>
#include <ied/gndi.hpp>
#include <ied/graph.hpp>
#include <ied/io.hpp>
#include <ied/oracle.hpp>

using json = nlohmann::json;
using namespace ied;

namespace {

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(std::stoi(item));
    return out;
}

struct ModeArg {
    std::string value = "sets";
    bool is_sequences() const { return value == "sequences"; }
    Mode mode() const { return value == "multisets" ? Mode::multisets : Mode::sets; }
};

void add_mode_flag(CLI::App* cmd, ModeArg& mode) {
    cmd->add_option("--mode", mode.value, "sets | multisets | sequences")
        ->check(CLI::IsMember({"sets", "multisets", "sequences"}))
        ->capture_default_str();
}

PermutationFamily load_pi(const std::string& path, int k) {
    if (path.empty()) return PermutationFamily::identity_only(k);
    return parse_permutations_file(path);
}

// List sizes: an explicit --lists R wins, then lists carried by the input
// file (R = the shortest list), then the bound computed for the instance.
struct ListSetup {
    ListAssignment lists;
    int r = 0;
};

ListSetup resolve_lists(const Hypergraph& h, const std::optional<ListAssignment>& file_lists,
                        int lists_flag, const ModeArg& mode, int pi_size) {
    ListSetup setup;
    int r = lists_flag;
    if (r == 0) {
        if (file_lists) {
            r = std::numeric_limits<int>::max();
            for (Vertex v = 1; v <= h.vertex_count(); ++v)
                r = std::min(r, static_cast<int>(file_lists->list(v).size()));
        } else {
            const int k = uniformity(h);
            const auto spectrum = difference_spectrum(h);
            const int delta = std::max(2, h.max_degree());
            if (mode.is_sequences())
                r = bound_sequences(k, delta, spectrum, pi_size);
            else
                r = mode.mode() == Mode::sets ? bound_ieds(k, delta, spectrum)
                                              : bound_iedm(k, delta, spectrum);
        }
    }
    setup.r = r;
    setup.lists = file_lists ? *file_lists : ListAssignment::uniform_range(h.vertex_count(), r);
    return setup;
}

RunOptions run_options(std::uint64_t max_iters) {
    RunOptions options;
    if (max_iters > 0) options.max_iterations = max_iters;
    return options;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw InvalidInputError("cannot write " + path);
    out << content;
}

int cmd_bounds(int k, int delta, const std::string& spectrum_text, const std::string& mode,
               int pi_size, bool as_json) {
    const std::vector<int> spectrum = parse_int_list(spectrum_text);
    const auto value_for = [&](const std::string& m) {
        if (m == "sets") return bound_ieds(k, delta, spectrum);
        if (m == "multisets") return bound_iedm(k, delta, spectrum);
        return bound_sequences(k, delta, spectrum, pi_size);
    };
    if (as_json) {
        json out{{"k", k}, {"delta", delta}, {"I", spectrum}};
        if (!mode.empty()) {
            out["mode"] = mode;
            if (mode == "sequences") out["pi"] = pi_size;
            out["R"] = value_for(mode);
        } else {
            out["R"] = {{"sets", value_for("sets")},
                        {"multisets", value_for("multisets")},
                        {"sequences", value_for("sequences")}};
            out["pi"] = pi_size;
        }
        std::cout << out.dump() << "\n";
        return 0;
    }
    std::cout << "k " << k << "\n" << "delta " << delta << "\n";
    std::cout << "I";
    for (int i : spectrum) std::cout << " " << i;
    std::cout << "\n";
    if (!mode.empty()) {
        std::cout << "mode " << mode << "\n";
        if (mode == "sequences") std::cout << "pi " << pi_size << "\n";
        std::cout << "R " << value_for(mode) << "\n";
    } else {
        std::cout << "R sets " << value_for("sets") << "\n";
        std::cout << "R multisets " << value_for("multisets") << "\n";
        std::cout << "R sequences " << value_for("sequences") << " pi " << pi_size << "\n";
    }
    return 0;
}

int cmd_color(const std::string& in, const ModeArg& mode, const std::string& pi_path,
              int lists_flag, std::uint64_t seed, std::uint64_t max_iters,
              const std::string& out_path, const std::string& trace_path, bool as_json) {
    const auto input = parse_hypergraph_file(in);
    const auto& h = input.hypergraph;
    const auto setup = resolve_lists(h, input.lists, lists_flag, mode,
                                     pi_path.empty() ? 1 : parse_permutations_file(pi_path).size());
    RunResult result;
    if (mode.is_sequences()) {
        const auto pi = load_pi(pi_path, uniformity(h));
        result = run_sequences(h, pi, setup.lists, DrawSequence::seeded(seed, setup.r),
                               run_options(max_iters));
    } else {
        result = run(h, setup.lists, mode.mode(), DrawSequence::seeded(seed, setup.r),
                     run_options(max_iters));
    }
    const std::string text = format_coloring(result.coloring, result.iterations, seed);
    if (!out_path.empty()) write_file(out_path, text);
    if (!trace_path.empty()) write_file(trace_path, format_log(result.log));
    if (as_json) {
        json coloring = json::object();
        for (Vertex v = 1; v <= h.vertex_count(); ++v)
            if (result.coloring.is_colored(v))
                coloring[std::to_string(v)] = result.coloring.color(v);
        std::cout << json{{"complete", result.completed()},
                          {"iterations", result.iterations},
                          {"seed", seed},
                          {"R", setup.r},
                          {"coloring", coloring}}
                         .dump()
                  << "\n";
    } else {
        std::cout << text;
        if (!result.completed()) std::cout << "# incomplete\n";
    }
    return result.completed() ? 0 : 1;
}

int cmd_verify(const std::string& in, const std::string& coloring_path, const ModeArg& mode,
               const std::string& pi_path, bool as_json) {
    const auto input = parse_hypergraph_file(in);
    const auto& h = input.hypergraph;
    const auto colors = parse_coloring_file(coloring_path, h.vertex_count());
    std::optional<Violation> violation;
    std::optional<SequenceViolation> seq_violation;
    if (mode.is_sequences())
        seq_violation = verify_sequences(h, load_pi(pi_path, uniformity(h)), colors);
    else
        violation = verify(h, colors, mode.mode());
    const bool ok = !violation && !seq_violation;
    if (as_json) {
        json out{{"ok", ok}};
        if (violation) out["violation"] = {{"p", violation->p}, {"q", violation->q}};
        if (seq_violation)
            out["violation"] = {{"p", seq_violation->p},
                                {"q", seq_violation->q},
                                {"sigma", seq_violation->sigma}};
        std::cout << out.dump() << "\n";
    } else if (ok) {
        std::cout << "ok\n";
    } else if (violation) {
        std::cout << "violation " << violation->p << " " << violation->q << "\n";
    } else {
        std::cout << "violation " << seq_violation->p << " " << seq_violation->q << " sigma "
                  << seq_violation->sigma << "\n";
    }
    return ok ? 0 : 1;
}

int cmd_decode_check(const std::string& in, const ModeArg& mode, const std::string& pi_path,
                     int lists_flag, std::uint64_t seed, std::uint64_t max_iters,
                     const std::string& trace_path, bool as_json) {
    const auto input = parse_hypergraph_file(in);
    const auto& h = input.hypergraph;
    const auto setup = resolve_lists(h, input.lists, lists_flag, mode,
                                     pi_path.empty() ? 1 : parse_permutations_file(pi_path).size());
    RunResult result;
    std::vector<int> decoded;
    if (mode.is_sequences()) {
        const auto pi = load_pi(pi_path, uniformity(h));
        result = run_sequences(h, pi, setup.lists, DrawSequence::seeded(seed, setup.r),
                               run_options(max_iters));
        decoded = decode_sequences(h, pi, setup.lists, setup.r, result.log, result.coloring);
    } else {
        result = run(h, setup.lists, mode.mode(), DrawSequence::seeded(seed, setup.r),
                     run_options(max_iters));
        decoded = decode(h, setup.lists, mode.mode(), setup.r, result.log, result.coloring);
    }
    if (!trace_path.empty()) write_file(trace_path, format_log(result.log));
    const bool ok = decoded == result.draws;
    if (as_json) {
        std::cout << json{{"ok", ok},
                          {"iterations", result.iterations},
                          {"complete", result.completed()}}
                         .dump()
                  << "\n";
    } else if (ok) {
        std::cout << "round-trip OK, " << result.iterations << " iterations\n";
    } else {
        std::cout << "round-trip FAILED after " << result.iterations << " iterations\n";
    }
    return ok ? 0 : 1;
}

int cmd_dual(const std::string& in, bool total) {
    const Graph g = parse_graph_file(in);
    std::cout << format_hypergraph(total ? total_hypergraph(g) : dual_hypergraph(g));
    return 0;
}

int cmd_gndi(const std::string& in, const std::string& forced_text, bool as_json) {
    const Graph g = parse_graph_file(in);
    std::vector<EdgeId> forced;
    for (int e : parse_int_list(forced_text)) forced.push_back(e);
    const auto result = gndi_of(g, forced);
    if (as_json) {
        json out{{"gndi", result.value}};
        if (result.labeling) out["labeling"] = *result.labeling;
        std::cout << out.dump() << "\n";
        return 0;
    }
    std::cout << "gndi " << result.value << "\n";
    if (result.labeling)
        for (EdgeId e = 1; e <= g.edge_count(); ++e)
            std::cout << e << " " << (*result.labeling)[e - 1] << "\n";
    return 0;
}

int cmd_property_b(const std::string& in, bool as_json) {
    const auto input = parse_hypergraph_file(in);
    const auto coloring = property_b(input.hypergraph);
    if (as_json) {
        json out{{"two_colorable", coloring.has_value()}};
        if (coloring) out["coloring"] = *coloring;
        std::cout << out.dump() << "\n";
        return coloring ? 0 : 1;
    }
    if (!coloring) {
        std::cout << "none\n";
        return 1;
    }
    for (std::size_t v = 0; v < coloring->size(); ++v)
        std::cout << v + 1 << " " << (*coloring)[v] << "\n";
    return 0;
}

int cmd_gadget(const std::string& in, int girth_target) {
    const NaeFormula formula = parse_formula_file(in);
    const Gadget gadget = hardness_gadget(formula, girth_target);
    std::cout << format_graph(gadget.graph);
    return 0;
}

int bench_threads() {
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("IED_COLOR_THREADS")) {
        const int cap = std::atoi(env);
        if (cap >= 1) threads = std::min(threads, static_cast<unsigned>(cap));
    }
    return static_cast<int>(threads);
}

int cmd_bench(const std::string& in, const ModeArg& mode, const std::string& pi_path,
              int lists_flag, std::uint64_t seed, std::uint64_t max_iters, int trials,
              bool as_json) {
    const auto input = parse_hypergraph_file(in);
    const auto& h = input.hypergraph;
    const auto setup = resolve_lists(h, input.lists, lists_flag, mode,
                                     pi_path.empty() ? 1 : parse_permutations_file(pi_path).size());
    const auto pi = mode.is_sequences()
                        ? std::optional<PermutationFamily>(load_pi(pi_path, uniformity(h)))
                        : std::nullopt;

    std::vector<std::uint64_t> counts(trials, 0);
    std::vector<char> complete(trials, 0);
    std::atomic<int> next_trial{0};
    const auto worker = [&] {
        while (true) {
            const int t = next_trial.fetch_add(1);
            if (t >= trials) break;
            const auto draws = DrawSequence::seeded(seed + static_cast<std::uint64_t>(t), setup.r);
            const RunResult result =
                pi ? run_sequences(h, *pi, setup.lists, draws, run_options(max_iters))
                   : run(h, setup.lists, mode.mode(), draws, run_options(max_iters));
            counts[t] = result.iterations;
            complete[t] = result.completed() ? 1 : 0;
        }
    };
    std::vector<std::thread> pool;
    const int threads = std::min(bench_threads(), trials);
    for (int i = 0; i < threads - 1; ++i) pool.emplace_back(worker);
    worker();
    for (auto& thread : pool) thread.join();

    double mean = 0;
    std::uint64_t max_count = 0;
    int incomplete = 0;
    for (int t = 0; t < trials; ++t) {
        mean += static_cast<double>(counts[t]);
        max_count = std::max(max_count, counts[t]);
        if (!complete[t]) ++incomplete;
    }
    mean /= std::max(1, trials);
    const double reference = static_cast<double>(h.vertex_count()) * setup.r *
                             std::log(static_cast<double>(setup.r));
    if (as_json) {
        std::cout << json{{"trials", trials},
                          {"iterations", counts},
                          {"mean", mean},
                          {"max", max_count},
                          {"incomplete", incomplete},
                          {"R", setup.r},
                          {"reference_nRlnR", reference}}
                         .dump()
                  << "\n";
        return incomplete == 0 ? 0 : 1;
    }
    for (int t = 0; t < trials; ++t)
        std::cout << "trial " << t << " iterations " << counts[t]
                  << (complete[t] ? "" : " incomplete") << "\n";
    std::cout << "trials " << trials << "\n";
    std::cout << "mean " << mean << "\n";
    std::cout << "max " << max_count << "\n";
    std::cout << "reference_nRlnR " << reference << "\n";
    return incomplete == 0 ? 0 : 1;
}

int cmd_oracle(const std::string& in, const ModeArg& mode, const std::string& pi_path,
               int lists_flag, bool as_json) {
    const auto input = parse_hypergraph_file(in);
    const auto& h = input.hypergraph;
    const auto setup = resolve_lists(h, input.lists, lists_flag, mode,
                                     pi_path.empty() ? 1 : parse_permutations_file(pi_path).size());
    const auto truncated = setup.lists.truncated(setup.r);
    std::optional<std::vector<Color>> witness;
    if (mode.is_sequences())
        witness = brute_force_coloring_sequences(h, load_pi(pi_path, uniformity(h)), truncated);
    else
        witness = brute_force_coloring(h, truncated, mode.mode());
    if (as_json) {
        json out{{"found", witness.has_value()}};
        if (witness) out["coloring"] = *witness;
        std::cout << out.dump() << "\n";
        return witness ? 0 : 1;
    }
    if (!witness) {
        std::cout << "none\n";
        return 1;
    }
    for (std::size_t v = 0; v < witness->size(); ++v)
        std::cout << v + 1 << " " << (*witness)[v] << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"List colorings distinguishing intersecting hypergraph edges"};
    app.require_subcommand(1);

    int k = 0, delta = 2, pi_size = 1, lists_flag = 0, trials = 20, girth_target = 4;
    std::string spectrum_text, in_path, coloring_path, pi_path, out_path, trace_path,
        forced_text;
    ModeArg mode;
    std::string bounds_mode;
    std::uint64_t seed = 1, max_iters = 1000000;
    bool as_json = false;

    auto* bounds = app.add_subcommand("bounds", "List-size bounds for an instance shape");
    bounds->add_option("--k", k, "uniformity")->required();
    bounds->add_option("--delta", delta, "maximum degree")->capture_default_str();
    bounds->add_option("--i", spectrum_text, "difference spectrum, comma separated")->required();
    bounds->add_option("--mode", bounds_mode, "sets | multisets | sequences")
        ->check(CLI::IsMember({"sets", "multisets", "sequences"}));
    bounds->add_option("--pi-size", pi_size, "permutation family size")->capture_default_str();
    bounds->add_flag("--json", as_json, "JSON output");

    auto* color = app.add_subcommand("color", "Run the iterative recoloring algorithm");
    color->add_option("--in", in_path, "hypergraph file")->required();
    add_mode_flag(color, mode);
    color->add_option("--pi", pi_path, "permutation file (sequences mode)");
    color->add_option("--lists", lists_flag, "list size R (default: computed bound)");
    color->add_option("--seed", seed, "PRNG seed")->capture_default_str();
    color->add_option("--max-iters", max_iters, "iteration cap, 0 = unlimited")
        ->capture_default_str();
    color->add_option("--out", out_path, "also write the coloring to this file");
    color->add_option("--trace", trace_path, "write the conflict log to this file");
    color->add_flag("--json", as_json, "JSON output");

    auto* verify_cmd = app.add_subcommand("verify", "Check a coloring against an instance");
    verify_cmd->add_option("--in", in_path, "hypergraph file")->required();
    verify_cmd->add_option("--coloring", coloring_path, "coloring file")->required();
    add_mode_flag(verify_cmd, mode);
    verify_cmd->add_option("--pi", pi_path, "permutation file (sequences mode)");
    verify_cmd->add_flag("--json", as_json, "JSON output");

    auto* decode_check =
        app.add_subcommand("decode-check", "Run, decode the log, and compare the draws");
    decode_check->add_option("--in", in_path, "hypergraph file")->required();
    add_mode_flag(decode_check, mode);
    decode_check->add_option("--pi", pi_path, "permutation file (sequences mode)");
    decode_check->add_option("--lists", lists_flag, "list size R (default: computed bound)");
    decode_check->add_option("--seed", seed, "PRNG seed")->capture_default_str();
    decode_check->add_option("--max-iters", max_iters, "iteration cap, 0 = unlimited")
        ->capture_default_str();
    decode_check->add_option("--trace", trace_path, "write the conflict log to this file");
    decode_check->add_flag("--json", as_json, "JSON output");

    auto* dual = app.add_subcommand("dual", "Dual hypergraph of a graph");
    dual->add_option("--in", in_path, "graph file")->required();

    auto* total = app.add_subcommand("total", "Total hypergraph of a graph");
    total->add_option("--in", in_path, "graph file")->required();

    auto* gndi = app.add_subcommand("gndi", "Neighbor-distinguishing index of a bipartite graph");
    gndi->add_option("--in", in_path, "graph file")->required();
    gndi->add_option("--forced", forced_text, "edge ids forced to label 1, comma separated");
    gndi->add_flag("--json", as_json, "JSON output");

    auto* property_b_cmd = app.add_subcommand("property-b", "2-colorability of a hypergraph");
    property_b_cmd->add_option("--in", in_path, "hypergraph file")->required();
    property_b_cmd->add_flag("--json", as_json, "JSON output");

    auto* gadget = app.add_subcommand("gadget", "Girth-preserving NAE-SAT reduction graph");
    gadget->add_option("--in", in_path, "formula file")->required();
    gadget->add_option("--girth", girth_target, "girth target")->capture_default_str();

    auto* bench = app.add_subcommand("bench", "Iteration statistics over seeded trials");
    bench->add_option("--in", in_path, "hypergraph file")->required();
    add_mode_flag(bench, mode);
    bench->add_option("--pi", pi_path, "permutation file (sequences mode)");
    bench->add_option("--lists", lists_flag, "list size R (default: computed bound)");
    bench->add_option("--seed", seed, "base seed; trial t uses seed + t")->capture_default_str();
    bench->add_option("--max-iters", max_iters, "iteration cap, 0 = unlimited")
        ->capture_default_str();
    bench->add_option("--trials", trials, "number of runs")->capture_default_str();
    bench->add_flag("--json", as_json, "JSON output");

    auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive search for a valid coloring");
    oracle_cmd->add_option("--in", in_path, "hypergraph file")->required();
    add_mode_flag(oracle_cmd, mode);
    oracle_cmd->add_option("--pi", pi_path, "permutation file (sequences mode)");
    oracle_cmd->add_option("--lists", lists_flag, "list size R (default: computed bound)");
    oracle_cmd->add_flag("--json", as_json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (bounds->parsed())
            return cmd_bounds(k, delta, spectrum_text, bounds_mode, pi_size, as_json);
        if (color->parsed())
            return cmd_color(in_path, mode, pi_path, lists_flag, seed, max_iters, out_path,
                             trace_path, as_json);
        if (verify_cmd->parsed())
            return cmd_verify(in_path, coloring_path, mode, pi_path, as_json);
        if (decode_check->parsed())
            return cmd_decode_check(in_path, mode, pi_path, lists_flag, seed, max_iters,
                                    trace_path, as_json);
        if (dual->parsed()) return cmd_dual(in_path, false);
        if (total->parsed()) return cmd_dual(in_path, true);
        if (gndi->parsed()) return cmd_gndi(in_path, forced_text, as_json);
        if (property_b_cmd->parsed()) return cmd_property_b(in_path, as_json);
        if (gadget->parsed()) return cmd_gadget(in_path, girth_target);
        if (bench->parsed())
            return cmd_bench(in_path, mode, pi_path, lists_flag, seed, max_iters, trials,
                             as_json);
        if (oracle_cmd->parsed()) return cmd_oracle(in_path, mode, pi_path, lists_flag, as_json);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
