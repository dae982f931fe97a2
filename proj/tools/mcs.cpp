#include <mcs/bench.hpp>
#include <mcs/generate.hpp>
#include <mcs/io.hpp>
#include <mcs/oracle.hpp>
#include <mcs/similarity.hpp>
#include <mcs/solver.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace mcs;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitTimeout = 2;
constexpr int kExitParse = 3;

struct CommonOptions
{
    std::string mode = "mvcs";
    bool any = false;
    bool unlabeled = false;
    bool keep_hydrogens = false;
    std::string output;
};

struct SolveOptions
{
    std::vector<std::string> inputs;
    std::string ordering = "minmax";
    std::uint64_t seed = 1;
    bool no_prune = false;
    std::size_t path_cap = 6;
    bool no_bound = false;
    double time_limit = 0;
    std::size_t threads = 0;
    std::string format = "json";
    bool stats = false;
};

auto env_number(const char * name) -> std::optional<double>
{
    const char * value = std::getenv(name);
    if (! value || ! *value)
        return std::nullopt;
    try {
        return std::stod(value);
    }
    catch (const std::exception &) {
        throw std::invalid_argument(std::string("bad value for ") + name + ": " + value);
    }
}

void add_common(CLI::App * app, CommonOptions & o)
{
    app->add_option("--mode", o.mode, "mvcs or mecs")->check(CLI::IsMember({"mvcs", "mecs"}, CLI::ignore_case));
    app->add_flag("--any", o.any, "allow disconnected common subgraphs");
    app->add_flag("--unlabeled", o.unlabeled, "ignore vertex and edge labels");
    app->add_flag("--keep-hydrogens", o.keep_hydrogens, "keep H atoms when reading MOL/SDF");
    app->add_option("-o,--output", o.output, "output file (default stdout)");
}

void add_solver(CLI::App * app, SolveOptions & s)
{
    app->add_option("--ordering", s.ordering, "vh, wl, nspd, minmax, input or random")
        ->check(CLI::IsMember({"vh", "wl", "nspd", "minmax", "input", "random"}, CLI::ignore_case));
    app->add_option("--seed", s.seed, "seed for random ordering");
    app->add_flag("--no-prune", s.no_prune, "keep all TYPE0 edges");
    app->add_option("--path-cap", s.path_cap, "longest path compared when pruning TYPE0 edges");
    app->add_flag("--no-bound", s.no_bound, "disable size-bound pruning");
    app->add_option("--time-limit", s.time_limit, "seconds, 0 = none (env MCS_TIME_LIMIT_SECS)");
    app->add_option("--threads", s.threads, "worker threads (env MCS_THREADS)");
}

auto solve_config(const CommonOptions & o, const SolveOptions & s) -> SolveConfig
{
    SolveConfig config;
    config.mode = parse_mode(o.mode);
    config.connected = ! o.any;
    config.labeled = ! o.unlabeled;
    config.ordering = parse_ordering(s.ordering);
    config.seed = s.seed;
    config.prune_type0 = ! s.no_prune;
    config.path_cap = s.path_cap;
    config.bound_pruning = ! s.no_bound;

    auto limit = s.time_limit;
    if (limit <= 0)
        limit = env_number("MCS_TIME_LIMIT_SECS").value_or(0);
    if (limit > 0)
        config.time_limit = limit;
    auto threads = s.threads;
    if (threads == 0)
        threads = static_cast<std::size_t>(env_number("MCS_THREADS").value_or(1));
    config.parallelism = std::max<std::size_t>(1, threads);
    return config;
}

auto load(const std::vector<std::string> & paths, bool keep_hydrogens) -> std::vector<LabeledGraph>
{
    std::vector<LabeledGraph> graphs;
    for (const auto & path : paths) {
        try {
            auto more = read_graphs(path, ! keep_hydrogens);
            for (auto & g : more)
                graphs.push_back(std::move(g));
        }
        catch (const ParseError & e) {
            throw ParseError(0, path + ": " + e.what());
        }
    }
    return graphs;
}

void write_output(const std::string & path, const std::string & text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (! out)
        throw std::runtime_error("cannot write " + path);
    out << text;
}

auto input_names(std::span<const LabeledGraph> graphs) -> std::vector<std::string>
{
    std::vector<std::string> names;
    for (std::size_t i = 0; i < graphs.size(); ++i)
        names.push_back(graphs[i].name().empty() ? "g" + std::to_string(i) : graphs[i].name());
    return names;
}

auto run_solve(const CommonOptions & o, const SolveOptions & s) -> int
{
    auto graphs = load(s.inputs, o.keep_hydrogens);
    if (graphs.size() < 2)
        throw std::invalid_argument("solve needs at least two graphs");
    auto config = solve_config(o, s);
    SolveStats stats;
    ResultDocument doc;
    doc.mode = config.mode;
    doc.connected = config.connected;
    doc.labeled = config.labeled;
    doc.inputs = input_names(graphs);
    try {
        doc.classes = solve(graphs, config, &stats);
    }
    catch (const Timeout & t) {
        std::cerr << "timeout after " << config.time_limit << " s, best bound " << t.best_bound() << '\n';
        return kExitTimeout;
    }
    doc.size = doc.classes.empty() ? 0 : doc.classes.front().size;
    write_output(o.output, emit_results(doc, s.format == "text" ? ResultFormat::Text : ResultFormat::Json));
    if (s.stats) {
        std::cerr << "order";
        for (auto i : stats.order)
            std::cerr << ' ' << i;
        std::cerr << "\nstages";
        for (const auto & st : stats.stages)
            std::cerr << ' ' << st.candidates_in << '/' << st.cliques << '/' << st.candidates_out;
        std::cerr << "\nbound " << stats.bound << " repaired " << stats.repaired_cliques << "\ntime ordering "
                  << stats.ordering_seconds << " product " << stats.product_seconds << " clique "
                  << stats.clique_seconds << " dedup " << stats.dedup_seconds << " total " << stats.total_seconds
                  << '\n';
    }
    return kExitOk;
}

auto run_order(const CommonOptions & o, const std::vector<std::string> & inputs, const std::string & measure_name)
    -> int
{
    auto graphs = load(inputs, o.keep_hydrogens);
    if (graphs.size() < 2)
        throw std::invalid_argument("order needs at least two graphs");
    auto measure = parse_measure(measure_name);
    auto matrix = similarity_matrix(graphs, measure, parse_mode(o.mode), ! o.unlabeled);
    auto ordering = greedy_order(matrix);
    auto names = input_names(graphs);

    std::ostringstream out;
    out << "measure " << to_string(measure) << "\norder";
    for (auto i : ordering.sequence)
        out << ' ' << i;
    out << "\nnames";
    for (auto i : ordering.sequence)
        out << ' ' << names[i];
    out << "\ntrace" << std::fixed << std::setprecision(6);
    for (auto t : ordering.trace)
        out << ' ' << t;
    out << "\nmatrix\n";
    for (std::size_t i = 0; i < matrix.size(); ++i) {
        for (std::size_t j = 0; j < matrix.size(); ++j)
            out << (j ? " " : "") << matrix.at(i, j);
        out << '\n';
    }
    write_output(o.output, out.str());
    return kExitOk;
}

auto run_oracle(const CommonOptions & o, const std::vector<std::string> & inputs, const std::string & format) -> int
{
    auto graphs = load(inputs, o.keep_hydrogens);
    if (graphs.size() < 2)
        throw std::invalid_argument("oracle needs at least two graphs");
    auto mode = parse_mode(o.mode);
    auto result = mode == Mode::MVCS ? oracle_mvcs(graphs, ! o.any, ! o.unlabeled)
                                     : oracle_mecs(graphs, ! o.any, ! o.unlabeled);
    ResultDocument doc;
    doc.mode = mode;
    doc.connected = ! o.any;
    doc.labeled = ! o.unlabeled;
    doc.size = result.max_size;
    doc.inputs = input_names(graphs);
    for (auto & cls : result.classes)
        doc.classes.push_back(EmbeddingResult{cls.graph, cls.form, result.max_size, cls.witnesses});
    write_output(o.output, emit_results(doc, format == "text" ? ResultFormat::Text : ResultFormat::Json));
    return kExitOk;
}

struct GenOptions
{
    std::size_t count = 1;
    std::size_t graphs = 5;
    std::size_t min_vertices = 35;
    std::size_t max_vertices = 35;
    std::vector<std::string> alphabet = {"C", "N", "O"};
    std::size_t max_rings = 2;
    std::uint64_t seed = 1;
};

void add_gen(CLI::App * app, GenOptions & g)
{
    app->add_option("--seed", g.seed, "generator seed");
    app->add_option("--min-vertices", g.min_vertices, "smallest graph");
    app->add_option("--max-vertices", g.max_vertices, "largest graph");
    app->add_option("--alphabet", g.alphabet, "vertex labels, first is most common")->delimiter(',');
    app->add_option("--max-rings", g.max_rings, "ring closures per graph");
}

auto generator_params(const GenOptions & g) -> GeneratorParams
{
    GeneratorParams p;
    p.min_vertices = g.min_vertices;
    p.max_vertices = std::max(g.min_vertices, g.max_vertices);
    p.alphabet = g.alphabet;
    p.max_rings = g.max_rings;
    return p;
}

} // namespace

auto main(int argc, char ** argv) -> int
{
    CLI::App app{"Maximum common subgraphs of several graphs via modular products"};
    app.require_subcommand(1);

    CommonOptions common;
    SolveOptions solve_opts;

    auto * solve_cmd = app.add_subcommand("solve", "all maximum common subgraphs of the input graphs");
    solve_cmd->add_option("inputs", solve_opts.inputs, "graph files (native, .mol, .sdf)")->required();
    add_common(solve_cmd, common);
    add_solver(solve_cmd, solve_opts);
    solve_cmd->add_option("--format", solve_opts.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    solve_cmd->add_flag("--stats", solve_opts.stats, "print stage statistics to stderr");

    std::vector<std::string> order_inputs;
    std::string measure = "minmax";
    auto * order_cmd = app.add_subcommand("order", "similarity matrix and greedy processing order");
    order_cmd->add_option("inputs", order_inputs, "graph files")->required();
    order_cmd->add_option("--measure", measure, "vh, wl, nspd or minmax")
        ->check(CLI::IsMember({"vh", "wl", "nspd", "minmax"}, CLI::ignore_case));
    add_common(order_cmd, common);

    std::vector<std::string> oracle_inputs;
    std::string oracle_format = "json";
    auto * oracle_cmd = app.add_subcommand("oracle", "exhaustive reference answer for small graphs");
    oracle_cmd->add_option("inputs", oracle_inputs, "graph files")->required();
    oracle_cmd->add_option("--format", oracle_format, "json or text")->check(CLI::IsMember({"json", "text"}));
    add_common(oracle_cmd, common);

    GenOptions gen;
    auto * gen_cmd = app.add_subcommand("gen", "molecule-like random graphs in native format");
    gen_cmd->add_option("--count", gen.count, "instances");
    gen_cmd->add_option("--graphs", gen.graphs, "graphs per instance");
    add_gen(gen_cmd, gen);
    std::string gen_output;
    gen_cmd->add_option("-o,--output", gen_output, "output file, or directory with one file per instance");

    auto * bench_cmd = app.add_subcommand("bench", "experiments as CSV");
    bench_cmd->require_subcommand(1);

    std::vector<std::string> bucket_inputs;
    GenOptions bucket_gen;
    bucket_gen.min_vertices = 10;
    bucket_gen.max_vertices = 14;
    std::size_t bucket_pairs = 300;
    std::vector<std::string> measures = {"vh", "wl", "nspd", "minmax"};
    double pair_limit = 30;
    auto * buckets_cmd = bench_cmd->add_subcommand("buckets", "similarity vs clique count, bucketed");
    buckets_cmd->add_option("inputs", bucket_inputs, "corpus files; all pairs are used (default: generated pairs)");
    buckets_cmd->add_option("--pairs", bucket_pairs, "generated pairs when no corpus is given");
    buckets_cmd->add_option("--measures", measures, "subset of vh,wl,nspd,minmax")->delimiter(',');
    buckets_cmd->add_option("--pair-time-limit", pair_limit, "seconds per pair before it is skipped");
    add_gen(buckets_cmd, bucket_gen);
    add_common(buckets_cmd, common);

    GenOptions ordering_gen;
    ordering_gen.count = 50;
    ordering_gen.min_vertices = 18;
    ordering_gen.max_vertices = 22;
    SolveOptions ordering_solve;
    ordering_solve.time_limit = 60;
    std::size_t jobs = 1;
    std::vector<std::string> ordering_inputs;
    auto * orderings_cmd = bench_cmd->add_subcommand("orderings", "runtime per ordering and TYPE0 removal");
    orderings_cmd->add_option("inputs", ordering_inputs, "one file per instance (default: generated)");
    orderings_cmd->add_option("--instances", ordering_gen.count, "generated instances");
    orderings_cmd->add_option("--graphs", ordering_gen.graphs, "graphs per generated instance");
    orderings_cmd->add_option("--jobs", jobs, "runs in parallel");
    add_gen(orderings_cmd, ordering_gen);
    add_common(orderings_cmd, common);
    orderings_cmd->add_option("--time-limit", ordering_solve.time_limit, "seconds per run");
    orderings_cmd->add_flag("--no-bound", ordering_solve.no_bound, "disable size-bound pruning");
    orderings_cmd->add_option("--path-cap", ordering_solve.path_cap, "longest path compared when pruning");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        return app.exit(e) == 0 ? kExitOk : kExitError;
    }

    try {
        if (*solve_cmd)
            return run_solve(common, solve_opts);
        if (*order_cmd)
            return run_order(common, order_inputs, measure);
        if (*oracle_cmd)
            return run_oracle(common, oracle_inputs, oracle_format);
        if (*gen_cmd) {
            auto corpus = generate_instances(gen.count, gen.graphs, generator_params(gen), gen.seed);
            if (! gen_output.empty() && std::filesystem::is_directory(gen_output)) {
                for (std::size_t i = 0; i < corpus.size(); ++i)
                    write_output((std::filesystem::path(gen_output) / ("instance" + std::to_string(i) + ".txt")).string(),
                        serialize_native(corpus[i]));
                return kExitOk;
            }
            std::string text;
            for (std::size_t i = 0; i < corpus.size(); ++i)
                text += (i ? "\n" : "") + serialize_native(corpus[i]);
            write_output(gen_output, text);
            return kExitOk;
        }
        if (*buckets_cmd) {
            BucketOptions options;
            options.measures.clear();
            for (const auto & m : measures)
                options.measures.push_back(parse_measure(m));
            options.mode = parse_mode(common.mode);
            options.labeled = ! common.unlabeled;
            options.pair_time_limit = pair_limit;
            BucketReport report;
            if (! bucket_inputs.empty())
                report = bench_buckets(load(bucket_inputs, common.keep_hydrogens), options);
            else {
                auto corpus = generate_instances(bucket_pairs, 2, generator_params(bucket_gen), bucket_gen.seed);
                std::vector<LabeledGraph> graphs;
                std::vector<std::pair<std::size_t, std::size_t>> pairs;
                for (auto & inst : corpus) {
                    pairs.emplace_back(graphs.size(), graphs.size() + 1);
                    graphs.push_back(std::move(inst[0]));
                    graphs.push_back(std::move(inst[1]));
                }
                report = bench_pairs(graphs, pairs, options);
            }
            for (auto [i, j] : report.skipped)
                std::cerr << "pair " << i << ',' << j << " timed out, skipped\n";
            write_output(common.output, buckets_csv(report, options));
            return kExitOk;
        }
        if (*orderings_cmd) {
            std::vector<std::vector<LabeledGraph>> instances;
            if (! ordering_inputs.empty())
                for (const auto & path : ordering_inputs)
                    instances.push_back(load({path}, common.keep_hydrogens));
            else
                instances = generate_instances(ordering_gen.count, ordering_gen.graphs, generator_params(ordering_gen),
                    ordering_gen.seed);
            ordering_solve.seed = ordering_gen.seed;
            auto base = solve_config(common, ordering_solve);
            auto configs = standard_ordering_configs();
            auto records = bench_orderings(instances, configs, base, jobs);
            write_output(common.output, orderings_csv(records, base));
            return kExitOk;
        }
    }
    catch (const ParseError & e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitParse;
    }
    catch (const Timeout & t) {
        std::cerr << "timeout, best bound " << t.best_bound() << '\n';
        return kExitTimeout;
    }
    catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
