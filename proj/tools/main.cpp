// chroma: exact chromatic completion toolkit, command-line surface.
//
// Exit codes: 0 success, 1 input error, 2 exact-mode cap refusal,
// 3 structural check failure detected by a census run.

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "chroma/analyze.hpp"
#include "chroma/census.hpp"
#include "chroma/graph_io.hpp"
#include "chroma/graph_ops.hpp"
#include "chroma/serialize.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitCap = 2;
constexpr int kExitCheckFailure = 3;

std::string read_source(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// One graph source per invocation: literal graph6, a file, or a generator
// family.
struct GraphInput {
    std::string g6;
    std::string dimacs_path;
    std::string edges_path;
    std::string family;
    int n = 0;
    int m = 0;
    double p = 0.5;
    std::vector<int> parts;
    std::optional<std::uint64_t> seed;

    void attach(CLI::App* cmd) {
        cmd->add_option("--g6", g6, "graph6 string");
        cmd->add_option("--dimacs", dimacs_path, "DIMACS .col file ('-' for stdin)");
        cmd->add_option("--edges", edges_path, "edge list file, 'u v' per line ('-' for stdin)");
        cmd->add_option("--family", family,
                        "generator family: path|cycle|complete|star|wheel|multipartite|random");
        cmd->add_option("--n", n, "order parameter for --family");
        cmd->add_option("--m", m, "leaf count for --family star");
        cmd->add_option("--p", p, "edge probability for --family random");
        cmd->add_option("--parts", parts, "part sizes for --family multipartite");
        cmd->add_option("--seed", seed, "seed for --family random (required there)");
    }

    chroma::Graph resolve() const {
        int sources = !g6.empty() + !dimacs_path.empty() + !edges_path.empty() + !family.empty();
        if (sources != 1)
            throw std::invalid_argument(
                "provide exactly one of --g6, --dimacs, --edges, --family");
        if (!g6.empty()) return chroma::parse_graph6(g6);
        if (!dimacs_path.empty()) return chroma::parse_dimacs(read_source(dimacs_path));
        if (!edges_path.empty()) return chroma::parse_edge_list(read_source(edges_path));
        if (family == "path") return chroma::make_path(n);
        if (family == "cycle") return chroma::make_cycle(n);
        if (family == "complete") return chroma::make_complete(n);
        if (family == "star") return chroma::make_star(m > 0 ? m : n);
        if (family == "wheel") return chroma::make_wheel(n);
        if (family == "multipartite") return chroma::make_complete_multipartite(parts);
        if (family == "random") {
            if (!seed) throw std::invalid_argument("--family random requires --seed");
            return chroma::make_random(n, p, *seed);
        }
        throw std::invalid_argument("unknown family '" + family + "'");
    }
};

std::string yesno(bool b) { return b ? "yes" : "no"; }

void print_bounds_text(std::ostream& out, const chroma::BoundReport& b) {
    out << "bounds: complement=" << b.complement_bound << " lucky=" << b.lucky_bound
        << " near_lucky=" << b.near_lucky_bound;
    if (b.zeta_exact) out << " zeta_exact=" << *b.zeta_exact;
    out << '\n';
}

void print_stability_text(std::ostream& out, const chroma::StabilityVerdict& v) {
    out << "stability: " << (v.is_scc ? "SCC" : "not SCC") << (v.inherent ? " (inherent)" : "")
        << ", optimal_partitions=" << v.lucky_partition_count << ", r_lucky=" << v.r_lucky << '\n';
    if (v.methods)
        out << "  methods: definitional=" << yesno(v.methods->definitional)
            << " rainbow_condition=" << yesno(v.methods->rainbow_condition)
            << " rainbow_count=" << yesno(v.methods->rainbow_count)
            << " e_chi_unique=" << yesno(v.methods->witness_unique) << '\n';
}

void print_jcoloring_text(std::ostream& out, const chroma::JColoringResult& r) {
    if (!r.exists) {
        out << "jcoloring: none exists\n";
        return;
    }
    out << "jcoloring: J=" << *r.j_number << " zeta_j=" << *r.zeta_j << " witness=[";
    for (std::size_t i = 0; i < r.witness->assignment.size(); ++i)
        out << (i ? "," : "") << r.witness->assignment[i];
    out << "]\n";
}

void print_analysis_text(std::ostream& out, const chroma::AnalysisReport& r) {
    out << "graph6: " << r.graph6 << '\n'
        << "order: " << r.order << "  size: " << r.size << '\n'
        << "chi: " << r.chi << '\n';
    if (r.zeta) out << "zeta: " << *r.zeta << '\n';
    print_bounds_text(out, r.bounds);
    if (r.stability) print_stability_text(out, *r.stability);
    if (r.jcoloring) print_jcoloring_text(out, *r.jcoloring);
    if (r.timing_ms) {
        out << "timing_ms:";
        for (const auto& [stage, ms] : *r.timing_ms) out << ' ' << stage << '=' << ms;
        out << '\n';
    }
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

struct CommonFlags {
    bool as_json = false;
    int order_cap = chroma::kDefaultExactOrderCap;

    void attach(CLI::App* cmd) {
        cmd->add_flag("--json", as_json, "emit JSON instead of text");
        cmd->add_option("--max-exact-order", order_cap,
                        "order cap for exact (exponential) stages")
            ->envname("CHROMA_MAX_ORDER");
    }
};

void require_nonempty(const chroma::Graph& g) {
    if (g.order() == 0) throw std::invalid_argument("the empty graph is not accepted here");
}

int run_analyze(const GraphInput& input, const CommonFlags& common, bool bounds_only,
                bool with_timing) {
    chroma::Graph g = input.resolve();
    require_nonempty(g);
    chroma::AnalysisOptions options;
    options.bounds_only = bounds_only;
    options.with_timing = with_timing;
    options.order_cap = common.order_cap;
    chroma::AnalysisReport report = chroma::analyze(g, options);
    if (common.as_json)
        emit(std::cout, report);
    else
        print_analysis_text(std::cout, report);
    return kExitOk;
}

int run_zeta(const GraphInput& input, const CommonFlags& common) {
    chroma::Graph g = input.resolve();
    require_nonempty(g);
    chroma::CompletionResult result = chroma::zeta(g, common.order_cap);
    if (common.as_json) {
        emit(std::cout, json(result));
        return kExitOk;
    }
    std::cout << "zeta: " << result.zeta << "  (chi=" << result.chi
              << ", epsilon=" << result.epsilon << ")\n"
              << "optimal partitions: " << result.lucky_partitions.size() << '\n';
    for (std::size_t i = 0; i < result.lucky_partitions.size(); ++i) {
        std::cout << "  ";
        for (const auto& cls : result.lucky_partitions[i].classes) {
            std::cout << '{';
            for (std::size_t k = 0; k < cls.size(); ++k) std::cout << (k ? " " : "") << cls[k];
            std::cout << '}';
        }
        std::cout << "  adds";
        for (auto [u, v] : result.witness_edge_sets[i]) std::cout << " (" << u << ',' << v << ')';
        std::cout << '\n';
    }
    return kExitOk;
}

int run_bounds(const GraphInput& input, const CommonFlags& common) {
    chroma::Graph g = input.resolve();
    require_nonempty(g);
    chroma::BoundReport report = chroma::zeta_upper_bounds(g);
    if (common.as_json)
        emit(std::cout, json(report));
    else
        print_bounds_text(std::cout, report);
    return kExitOk;
}

int run_scc(const GraphInput& input, const CommonFlags& common) {
    chroma::Graph g = input.resolve();
    require_nonempty(g);
    chroma::StabilityVerdict verdict = chroma::is_scc(g, common.order_cap);
    if (common.as_json)
        emit(std::cout, json(verdict));
    else
        print_stability_text(std::cout, verdict);
    return kExitOk;
}

int run_jcolor(const GraphInput& input, const CommonFlags& common) {
    chroma::Graph g = input.resolve();
    require_nonempty(g);
    chroma::JColoringResult result = chroma::zeta_j(g, common.order_cap);
    if (common.as_json)
        emit(std::cout, json(result));
    else
        print_jcoloring_text(std::cout, result);
    return kExitOk;
}

int run_generate(const GraphInput& input, const std::string& format) {
    chroma::Graph g = input.resolve();
    if (format == "g6")
        std::cout << chroma::to_graph6(g) << '\n';
    else if (format == "edges")
        std::cout << chroma::to_edge_list(g);
    else if (format == "dimacs")
        std::cout << chroma::to_dimacs(g);
    else
        throw std::invalid_argument("unknown format '" + format + "'");
    return kExitOk;
}

struct CensusArgs {
    int order = 0;
    bool connected = false;
    double sample = 1.0;
    std::uint64_t seed = 0;
    int threads = 1;
    bool jsonl = false;
    std::string out_path;
};

int run_census(const CensusArgs& args, bool as_json) {
    chroma::CensusOptions options;
    options.order = args.order;
    options.connected_only = args.connected;
    options.sample_fraction = args.sample;
    options.seed = args.seed;
    options.threads = args.threads;

    std::ofstream file;
    std::ostream* records = &std::cout;
    if (!args.out_path.empty()) {
        file.open(args.out_path);
        if (!file) throw std::invalid_argument("cannot open '" + args.out_path + "'");
        records = &file;
    }
    std::ostream& summary_out = args.out_path.empty() ? std::cerr : std::cout;

    if (!args.jsonl) *records << chroma::census_csv_header();
    chroma::CensusSummary summary =
        chroma::run_census(options, [&](const chroma::CensusRecord& rec) {
            if (args.jsonl)
                *records << json(rec).dump() << '\n';
            else
                *records << chroma::census_csv_row(rec);
        });

    if (as_json) {
        emit(summary_out, json(summary));
    } else {
        summary_out << "graphs: " << summary.graphs << "\nscc: " << summary.scc_count
                    << "\nj_colorable: " << summary.j_colorable_count
                    << "\ncheck failures: " << summary.total_failures
                    << "\nrainbow some/every reading divergences: "
                    << summary.rainbow_reading_divergences << '\n';
        for (const auto& tally : summary.flag_tallies) {
            if (!tally.failures) continue;
            summary_out << "  " << tally.name << ": " << tally.failures << " (e.g.";
            for (const auto& w : tally.witnesses) summary_out << ' ' << w;
            summary_out << ")\n";
        }
    }
    return summary.total_failures == 0 ? kExitOk : kExitCheckFailure;
}

struct ConjectureArgs {
    std::string pairs = "exhaustive";
    int n_max = 4;
    int count = 20;
    int nu_max = 4;
    std::optional<std::uint64_t> seed;
    std::string out_path;
};

std::vector<std::pair<chroma::Graph, chroma::Graph>> build_pairs(const ConjectureArgs& args) {
    std::vector<std::pair<chroma::Graph, chroma::Graph>> pairs;
    if (args.pairs == "exhaustive") {
        std::vector<chroma::Graph> all;
        for (int n = 1; n <= args.n_max; ++n)
            chroma::for_each_graph(n, false, [&](const chroma::Graph& g) {
                all.push_back(g);
                return true;
            });
        for (std::size_t i = 0; i < all.size(); ++i)
            for (std::size_t j = i; j < all.size(); ++j) pairs.emplace_back(all[i], all[j]);
        return pairs;
    }
    if (args.pairs == "random") {
        if (!args.seed) throw std::invalid_argument("--pairs random requires --seed");
        std::mt19937_64 rng(*args.seed);
        for (int i = 0; i < args.count; ++i) {
            int ng = static_cast<int>(rng() % args.nu_max) + 1;
            int nh = static_cast<int>(rng() % args.nu_max) + 1;
            double pg = static_cast<double>(rng() % 9 + 1) / 10.0;
            double ph = static_cast<double>(rng() % 9 + 1) / 10.0;
            pairs.emplace_back(chroma::make_random(ng, pg, rng()),
                               chroma::make_random(nh, ph, rng()));
        }
        return pairs;
    }
    throw std::invalid_argument("--pairs must be 'exhaustive' or 'random'");
}

int run_conjecture(const ConjectureArgs& args, const CommonFlags& common) {
    auto report = chroma::union_additivity_experiment(build_pairs(args), common.order_cap);

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!args.out_path.empty()) {
        file.open(args.out_path);
        if (!file) throw std::invalid_argument("cannot open '" + args.out_path + "'");
        out = &file;
    }
    if (common.as_json)
        emit(*out, json(report));
    else
        *out << chroma::union_experiment_csv(report);

    std::ostream& summary_out = args.out_path.empty() ? std::cerr : std::cout;
    summary_out << "pairs: " << report.pairs_total
                << "  precondition_failed: " << report.pairs_skipped
                << "  equality: " << report.equality_rows
                << "  strict gaps (potential counterexamples): " << report.gap_rows << '\n';
    for (const auto& row : report.rows)
        if (row.precondition_met && row.gap > 0)
            summary_out << "  gap " << row.gap << ": " << row.graph6_g << " + " << row.graph6_h
                        << " (zeta_union=" << row.zeta_union << ", rhs=" << row.rhs << ")\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"chroma: exact chromatic completion numbers, stability, and rainbow colourings"};
    app.require_subcommand(1);

    GraphInput input;
    CommonFlags common;

    auto* analyze_cmd = app.add_subcommand("analyze", "full report for one graph");
    bool bounds_only = false, with_timing = false;
    input.attach(analyze_cmd);
    common.attach(analyze_cmd);
    analyze_cmd->add_flag("--bounds-only", bounds_only, "skip exact stages");
    analyze_cmd->add_flag("--timing", with_timing,
                          "include per-stage timings (makes output run-dependent)");

    auto* zeta_cmd = app.add_subcommand("zeta", "exact completion number with all witnesses");
    input.attach(zeta_cmd);
    common.attach(zeta_cmd);

    auto* bounds_cmd = app.add_subcommand("bounds", "polynomial/greedy upper bounds only");
    input.attach(bounds_cmd);
    common.attach(bounds_cmd);

    auto* scc_cmd = app.add_subcommand("scc", "stability verdict");
    input.attach(scc_cmd);
    common.attach(scc_cmd);

    auto* jcolor_cmd = app.add_subcommand("jcolor", "rainbow colouring number and completion");
    input.attach(jcolor_cmd);
    common.attach(jcolor_cmd);

    auto* generate_cmd = app.add_subcommand("generate", "emit a generated graph");
    std::string format = "g6";
    input.attach(generate_cmd);
    generate_cmd->add_option("--format", format, "g6|edges|dimacs");

    auto* census_cmd = app.add_subcommand("census", "exhaustive sweep with structural checks");
    CensusArgs census_args;
    common.attach(census_cmd);
    census_cmd->add_option("--n", census_args.order, "graph order (<= 7)")->required();
    census_cmd->add_flag("--connected", census_args.connected, "connected graphs only");
    census_cmd->add_option("--sample", census_args.sample, "keep fraction of graphs (seeded)");
    census_cmd->add_option("--seed", census_args.seed, "sampling seed");
    census_cmd->add_option("--threads", census_args.threads, "worker threads");
    census_cmd->add_flag("--jsonl", census_args.jsonl, "JSON lines instead of CSV");
    census_cmd->add_option("--out", census_args.out_path, "write records to a file");

    auto* conjecture_cmd =
        app.add_subcommand("conjecture", "disjoint-union additivity experiment");
    ConjectureArgs conjecture_args;
    common.attach(conjecture_cmd);
    conjecture_cmd->add_option("--pairs", conjecture_args.pairs, "exhaustive|random");
    conjecture_cmd->add_option("--n-max", conjecture_args.n_max, "max order for exhaustive pairs");
    conjecture_cmd->add_option("--count", conjecture_args.count, "number of random pairs");
    conjecture_cmd->add_option("--nu-max", conjecture_args.nu_max, "max order for random pairs");
    conjecture_cmd->add_option("--seed", conjecture_args.seed, "pair-generation seed");
    conjecture_cmd->add_option("--out", conjecture_args.out_path, "write rows to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (*analyze_cmd) return run_analyze(input, common, bounds_only, with_timing);
        if (*zeta_cmd) return run_zeta(input, common);
        if (*bounds_cmd) return run_bounds(input, common);
        if (*scc_cmd) return run_scc(input, common);
        if (*jcolor_cmd) return run_jcolor(input, common);
        if (*generate_cmd) return run_generate(input, format);
        if (*census_cmd) return run_census(census_args, common.as_json);
        if (*conjecture_cmd) return run_conjecture(conjecture_args, common);
    } catch (const chroma::CapExceeded& e) {
        std::cerr << "refused: " << e.what() << '\n';
        return kExitCap;
    } catch (const chroma::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitInput;
}
