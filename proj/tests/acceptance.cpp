// Acceptance harness: one PASS/FAIL line per criterion.
// Exact criteria decide the exit status; timing and statistical criteria are
// reported only, since they depend on the machine.

#include "support.hpp"

#include <mcs/bench.hpp>
#include <mcs/clique.hpp>
#include <mcs/generate.hpp>
#include <mcs/product.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>

using namespace mcs;
using namespace mcs::test;

namespace {

struct Verdict
{
    bool pass = false;
    std::string detail;
};

int exact_failures = 0;

void run(const std::string & name, bool exact, const std::function<Verdict()> & check)
{
    auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
        v = check();
    }
    catch (const std::exception & e) {
        v = {false, std::string("exception: ") + e.what()};
    }
    auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %s: %s (%.1f s)%s\n", v.pass ? "PASS" : "FAIL", name.c_str(), v.detail.c_str(), secs,
        exact ? "" : " [reported]");
    std::fflush(stdout);
    if (! v.pass && exact)
        ++exact_failures;
}

auto config_for(Mode mode, bool connected, bool labeled) -> SolveConfig
{
    SolveConfig c;
    c.mode = mode;
    c.connected = connected;
    c.labeled = labeled;
    return c;
}

struct Combo
{
    Mode mode;
    bool connected;
};

constexpr Combo kCombos[] = {{Mode::MVCS, true}, {Mode::MVCS, false}, {Mode::MECS, true}, {Mode::MECS, false}};

struct Instance
{
    std::vector<LabeledGraph> graphs;
    bool labeled;
};

// 200 instances of 2-5 graphs, at most 8 vertices and 9 edges each, half labeled.
auto oracle_suite() -> const std::vector<Instance> &
{
    static const std::vector<Instance> suite = [] {
        TestRng rng(20240601);
        std::vector<Instance> out;
        for (int i = 0; i < 200; ++i) {
            bool labeled = i % 2 == 0;
            out.push_back({random_instance(rng, 2 + pick(rng, 4), 8, 9, labeled), labeled});
        }
        return out;
    }();
    return suite;
}

auto same(const std::vector<EmbeddingResult> & a, const std::vector<EmbeddingResult> & b) -> bool
{
    return sizes_of(a) == sizes_of(b) && forms_of(a) == forms_of(b);
}

auto oracle_exactness() -> Verdict
{
    std::size_t runs = 0, matched = 0;
    for (const auto & inst : oracle_suite())
        for (auto [mode, connected] : kCombos) {
            auto config = config_for(mode, connected, inst.labeled);
            auto r = solve(inst.graphs, config);
            auto o = mode == Mode::MVCS ? oracle_mvcs(inst.graphs, connected, inst.labeled)
                                        : oracle_mecs(inst.graphs, connected, inst.labeled);
            ++runs;
            if (sizes_of(r) == o.max_size && forms_of(r) == forms_of(o) && witnesses_valid(r, inst.graphs, config))
                ++matched;
        }
    return {matched == runs, std::to_string(matched) + "/" + std::to_string(runs) + " solver runs equal the oracle"};
}

auto order_invariance() -> Verdict
{
    TestRng rng(20240602);
    std::size_t checks = 0, equal = 0;
    for (int i = 0; i < 20; ++i) {
        bool labeled = i % 2 == 0;
        auto g = random_instance(rng, 4, 6, 9, labeled);
        for (auto [mode, connected] : kCombos) {
            auto config = config_for(mode, connected, labeled);
            config.ordering = OrderingKind::INPUT;
            auto reference = solve(g, config);
            std::vector<std::size_t> perm{0, 1, 2, 3};
            do {
                std::vector<LabeledGraph> h;
                for (auto k : perm)
                    h.push_back(g[k]);
                ++checks;
                if (same(solve(h, config), reference))
                    ++equal;
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
    }
    return {equal == checks, std::to_string(equal) + "/" + std::to_string(checks) + " permutations give identical sets"};
}

auto pruning_neutrality() -> Verdict
{
    std::size_t checks = 0, equal = 0;
    for (const auto & inst : oracle_suite())
        for (auto [mode, connected] : kCombos) {
            auto config = config_for(mode, connected, inst.labeled);
            auto reference = solve(inst.graphs, config);
            for (int variant = 0; variant < 3; ++variant) {
                auto c = config;
                c.prune_type0 = variant != 0;
                c.bound_pruning = variant != 1;
                if (variant == 2) {
                    c.prune_type0 = false;
                    c.bound_pruning = false;
                }
                ++checks;
                if (same(solve(inst.graphs, c), reference))
                    ++equal;
            }
        }
    return {equal == checks,
        std::to_string(equal) + "/" + std::to_string(checks) + " runs with removal or bound switched off match"};
}

auto delta_y() -> Verdict
{
    std::vector<LabeledGraph> g{make_complete(3), make_star(3)};
    auto r = solve(g, config_for(Mode::MECS, true, true));
    auto o = oracle_mecs(g, true, true);
    auto path = canonical(make_path(3));
    bool ok = r.size() == 1 && r.front().size == 2 && r.front().form == path && o.max_size == 2 &&
        forms_of(o) == std::vector<CanonicalForm>{path};
    std::ostringstream s;
    s << r.size() << " class(es), size " << sizes_of(r) << ", oracle size " << o.max_size << " with "
      << o.classes.size() << " class(es)";
    return {ok, s.str()};
}

auto config_gm(const std::vector<OrderingRecord> & records) -> std::map<std::string, double>
{
    std::map<std::string, std::vector<double>> times;
    for (const auto & r : records)
        times[r.config].push_back(r.runtime);
    std::map<std::string, double> out;
    for (const auto & [name, t] : times)
        out[name] = geometric_mean(t);
    return out;
}

auto ordering_speedup() -> Verdict
{
    GeneratorParams params;
    params.min_vertices = 18;
    params.max_vertices = 22;
    auto instances = generate_instances(50, 5, params, 20240605);
    auto base = config_for(Mode::MECS, true, true);
    base.time_limit = 60;
    auto configs = standard_ordering_configs();
    auto gm = config_gm(bench_orderings(instances, configs, base));

    std::ostringstream s;
    s.precision(3);
    bool ok = true;
    auto ratio_input = gm["MINMAX_R"] / gm["INPUT_R"];
    auto ratio_random = gm["MINMAX_R"] / gm["RANDOM_R"];
    ok = ok && ratio_input <= 0.5 && ratio_random <= 0.5;
    s << "gm MINMAX_R/INPUT_R " << ratio_input << ", MINMAX_R/RANDOM_R " << ratio_random << " (<= 0.5);";
    for (auto name : {"VH", "WL", "NSPD", "MINMAX"}) {
        auto r = gm[std::string(name) + "_R"] / gm[name];
        ok = ok && r <= 1.0;
        s << ' ' << name << "_R/" << name << ' ' << r;
    }
    s << " (<= 1)";
    return {ok, s.str()};
}

auto similarity_correlation() -> Verdict
{
    GeneratorParams params;
    params.min_vertices = 10;
    params.max_vertices = 14;
    auto corpus = generate_instances(300, 2, params, 20240606);
    std::vector<LabeledGraph> graphs;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (auto & inst : corpus) {
        pairs.emplace_back(graphs.size(), graphs.size() + 1);
        graphs.push_back(inst[0]);
        graphs.push_back(inst[1]);
    }
    BucketOptions options;
    options.mode = Mode::MECS;
    auto report = bench_pairs(graphs, pairs, options);

    bool ok = report.skipped.empty();
    std::ostringstream s;
    s.precision(3);
    s << report.samples.front().size() << " pairs, " << report.skipped.size() << " skipped; spearman";
    for (std::size_t m = 0; m < report.measures.size(); ++m) {
        std::vector<double> x, y;
        for (const auto & p : report.samples[m]) {
            x.push_back(p.kappa);
            y.push_back(static_cast<double>(p.cliques));
        }
        auto rho = spearman(x, y);
        ok = ok && x.size() >= 300 && rho > 0.3;
        s << ' ' << to_string(report.measures[m]) << ' ' << rho;
    }
    s << " (> 0.3)";
    return {ok, s.str()};
}

// kappa = k / 10000; bucket l holds it iff |k - 10 l| <= 50.
auto bucket_math() -> Verdict
{
    std::size_t checks = 0, wrong = 0;
    std::vector<PairSample> samples;
    std::map<std::size_t, std::size_t> expected_counts;
    for (long k = -100; k <= 10200; ++k) {
        auto kappa = static_cast<double>(k) / 10000.0;
        std::vector<std::size_t> members;
        for (std::size_t l = 1; l <= kBucketCount; ++l)
            if (std::labs(k - 10 * static_cast<long>(l)) <= 50)
                members.push_back(l);
        auto got = bucket_range(kappa);
        ++checks;
        bool ok = members.empty() ? ! got.has_value()
                                  : got && got->first == members.front() && got->second == members.back();
        wrong += ok ? 0 : 1;
        if (k % 7 == 0) {
            samples.push_back({0, 1, kappa, static_cast<std::size_t>(k % 5)});
            for (auto l : members)
                ++expected_counts[l];
        }
    }
    std::size_t bucketed = 0;
    for (const auto & row : bucket_rows(Measure::VH, samples)) {
        ++checks;
        auto it = expected_counts.find(row.index);
        if (it == expected_counts.end() || it->second != row.count ||
            std::abs(row.x - static_cast<double>(row.index) * kBucketStep) > 1e-12)
            ++wrong;
        ++bucketed;
    }
    ++checks;
    if (bucketed != expected_counts.size())
        ++wrong;
    return {wrong == 0, std::to_string(checks - wrong) + "/" + std::to_string(checks) + " boundary checks agree"};
}

// Tree with the path 1-2-4-3-5 and pendant edges 3-6 and 5-7 (ids shifted by one).
auto non_maximal_projection() -> Verdict
{
    auto g = make_graph(std::vector<Label>(7, "C"), {{0, 1}, {1, 3}, {3, 2}, {2, 4}, {2, 5}, {4, 6}});
    auto p = modular_product(g, g, false);
    std::vector<ProductVertex> members{{0, 4}, {1, 2}, {3, 3}, {4, 0}, {2, 1}};
    std::vector<std::size_t> k;
    for (auto m : members)
        k.push_back(*p.index_of(m));
    bool maximal = is_clique(p, k) && is_type1_connected(p, k);
    for (std::size_t v = 0; v < p.vertex_count() && maximal; ++v) {
        if (std::find(k.begin(), k.end(), v) != k.end())
            continue;
        auto grown = k;
        grown.push_back(v);
        maximal = ! is_clique(p, grown);
    }
    auto projection = strip_labels(project(p, members, Side::Right));

    bool ok = maximal && projection.vertex_count() == 5;
    std::vector<LabeledGraph> pair{g, g};
    for (bool connected : {true, false}) {
        auto config = config_for(Mode::MVCS, connected, false);
        auto stage = step(initial_candidates(pair, 0, config), pair, 1, config);
        ok = ok && std::any_of(stage.representatives.begin(), stage.representatives.end(),
                       [&](const Candidate & c) { return c.form == canonical(projection); });
        auto r = solve(pair, config);
        auto o = oracle_mvcs(pair, connected, false);
        ok = ok && sizes_of(r) == 7 && sizes_of(r) == o.max_size && forms_of(r) == forms_of(o);
    }
    return {ok, std::string("maximal clique ") + (maximal ? "found" : "missing") +
            ", 5-vertex projection kept in the stage set, final answer equals the oracle"};
}

} // namespace

int main()
{
    run("oracle_exactness", true, oracle_exactness);
    run("order_invariance", true, order_invariance);
    run("pruning_neutrality", true, pruning_neutrality);
    run("delta_y", true, delta_y);
    run("ordering_speedup", false, ordering_speedup);
    run("similarity_correlation", false, similarity_correlation);
    run("bucket_math", true, bucket_math);
    run("non_maximal_projection", true, non_maximal_projection);
    return exact_failures == 0 ? 0 : 1;
}
