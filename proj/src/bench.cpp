#include <mcs/bench.hpp>
#include <mcs/clique.hpp>
#include <mcs/product.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

namespace mcs {

auto bucket_range(double kappa) -> std::optional<std::pair<std::size_t, std::size_t>>
{
    // slack so that decimal inputs like 0.495 land on their nominal buckets
    constexpr double slack = 1e-9;
    const double scaled = kappa / kBucketStep;
    const double reach = kBucketHalfWidth / kBucketStep;
    auto lo = static_cast<long long>(std::ceil(scaled - reach - slack));
    auto hi = static_cast<long long>(std::floor(scaled + reach + slack));
    lo = std::max<long long>(lo, 1);
    hi = std::min<long long>(hi, static_cast<long long>(kBucketCount));
    if (lo > hi)
        return std::nullopt;
    return std::pair{static_cast<std::size_t>(lo), static_cast<std::size_t>(hi)};
}

auto bucket_rows(Measure measure, std::span<const PairSample> samples) -> std::vector<BucketRow>
{
    std::vector<double> sum(kBucketCount + 1, 0.0);
    std::vector<std::size_t> count(kBucketCount + 1, 0);
    for (const auto & s : samples) {
        auto range = bucket_range(s.kappa);
        if (! range)
            continue;
        for (auto l = range->first; l <= range->second; ++l) {
            sum[l] += static_cast<double>(s.cliques);
            ++count[l];
        }
    }
    std::vector<BucketRow> rows;
    for (std::size_t l = 1; l <= kBucketCount; ++l)
        if (count[l] > 0)
            rows.push_back(BucketRow{measure, l, static_cast<double>(l) * kBucketStep,
                sum[l] / static_cast<double>(count[l]), count[l]});
    return rows;
}

auto count_connected_cliques(const LabeledGraph & a, const LabeledGraph & b, Mode mode, bool labeled,
    const Deadline & deadline) -> std::size_t
{
    auto left = mode == Mode::MECS ? line_graph(a).line_graph : a;
    auto right = mode == Mode::MECS ? line_graph(b).line_graph : b;
    auto product = modular_product(left, right, labeled);
    std::size_t total = 0;
    for (const auto & component : type_a_components(product))
        for_each_maximal_connected_clique(
            component, 0, Maximality::AmongConnected, [&](std::span<const std::size_t>) { ++total; }, deadline);
    return total;
}

auto bench_pairs(std::span<const LabeledGraph> graphs, std::span<const std::pair<std::size_t, std::size_t>> pairs,
    const BucketOptions & options) -> BucketReport
{
    BucketReport report;
    report.measures = options.measures;
    report.samples.resize(options.measures.size());

    std::vector<SimilarityMatrix> matrices;
    for (auto m : options.measures)
        matrices.push_back(similarity_matrix(graphs, m, options.mode, options.labeled, options.kernel));

    for (auto [i, j] : pairs) {
        std::size_t cliques = 0;
        try {
            Deadline deadline(std::chrono::duration<double>(options.pair_time_limit));
            cliques = count_connected_cliques(graphs[i], graphs[j], options.mode, options.labeled, deadline);
        }
        catch (const Timeout &) {
            report.skipped.emplace_back(i, j);
            continue;
        }
        for (std::size_t k = 0; k < options.measures.size(); ++k)
            report.samples[k].push_back(PairSample{i, j, matrices[k].at(i, j), cliques});
    }
    for (std::size_t k = 0; k < options.measures.size(); ++k) {
        auto rows = bucket_rows(options.measures[k], report.samples[k]);
        report.rows.insert(report.rows.end(), rows.begin(), rows.end());
    }
    return report;
}

auto bench_buckets(std::span<const LabeledGraph> corpus, const BucketOptions & options) -> BucketReport
{
    if (corpus.size() < 2)
        throw std::invalid_argument("bench_buckets needs at least two graphs");
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < corpus.size(); ++i)
        for (std::size_t j = i + 1; j < corpus.size(); ++j)
            pairs.emplace_back(i, j);
    return bench_pairs(corpus, pairs, options);
}

auto buckets_csv(const BucketReport & report, const BucketOptions & options) -> std::string
{
    std::ostringstream out;
    out << "# mode=" << to_string(options.mode) << " labeled=" << (options.labeled ? "true" : "false") << '\n';
    out << "# kernels normalized by k(a,b)/sqrt(k(a,a)k(b,b)); MINMAX by |V(a)||V(b)|\n";
    out << "# wl_iterations=" << options.kernel.wl_iterations << " nspd_radius=" << options.kernel.nspd_radius
        << " nspd_distance=" << options.kernel.nspd_distance << '\n';
    out << "# buckets=" << kBucketCount << " step=" << kBucketStep << " half_width=" << kBucketHalfWidth
        << " pairs=" << (report.samples.empty() ? 0 : report.samples.front().size())
        << " skipped=" << report.skipped.size() << '\n';
    out << "measure,ell,x,y,count\n";
    out << std::fixed;
    for (const auto & row : report.rows)
        out << to_string(row.measure) << ',' << row.index << ',' << std::setprecision(3) << row.x << ','
            << std::setprecision(6) << row.y << ',' << row.count << '\n';
    return out.str();
}

auto standard_ordering_configs() -> std::vector<OrderingConfig>
{
    std::vector<OrderingConfig> configs;
    for (auto k : {OrderingKind::VH, OrderingKind::WL, OrderingKind::NSPD, OrderingKind::MINMAX}) {
        configs.push_back({to_string(k) + "_R", k, true});
        configs.push_back({to_string(k), k, false});
    }
    configs.push_back({"INPUT_R", OrderingKind::INPUT, true});
    configs.push_back({"RANDOM_R", OrderingKind::RANDOM, true});
    return configs;
}

auto bench_orderings(std::span<const std::vector<LabeledGraph>> instances, std::span<const OrderingConfig> configs,
    const SolveConfig & base, std::size_t jobs) -> std::vector<OrderingRecord>
{
    const auto total = instances.size() * configs.size();
    std::vector<OrderingRecord> records(total);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (auto k = next.fetch_add(1); k < total; k = next.fetch_add(1)) {
            const auto i = k / configs.size();
            const auto & cfg = configs[k % configs.size()];
            auto config = base;
            config.ordering = cfg.ordering;
            config.prune_type0 = cfg.prune_type0;
            config.seed = base.seed + i;
            OrderingRecord & r = records[k];
            r.instance = i;
            r.config = cfg.name;
            r.ordering = cfg.ordering;
            r.prune_type0 = cfg.prune_type0;
            auto start = std::chrono::steady_clock::now();
            try {
                auto results = solve(instances[i], config, &r.stats);
                r.runtime = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
                r.result_size = results.empty() ? 0 : results.front().size;
                r.class_count = results.size();
            }
            catch (const Timeout & t) {
                r.runtime = base.time_limit;
                r.timed_out = true;
                r.result_size = t.best_bound();
            }
            for (const auto & s : r.stats.stages)
                r.stage_candidates.push_back(s.candidates_out);
        }
    };
    jobs = std::max<std::size_t>(1, jobs);
    if (jobs == 1)
        worker();
    else {
        std::vector<std::thread> threads;
        for (std::size_t t = 0; t < jobs; ++t)
            threads.emplace_back(worker);
        for (auto & t : threads)
            t.join();
    }
    return records;
}

auto orderings_csv(std::span<const OrderingRecord> records, const SolveConfig & base) -> std::string
{
    std::ostringstream out;
    out << "# mode=" << to_string(base.mode) << " connected=" << (base.connected ? "true" : "false")
        << " labeled=" << (base.labeled ? "true" : "false") << " bound_pruning=" << (base.bound_pruning ? "true" : "false")
        << " path_cap=" << base.path_cap << " time_limit=" << base.time_limit << '\n';
    out << "# timed-out runs report runtime = time_limit and result_size = best bound\n";
    out << "instance,config,ordering,prune,runtime_s,timed_out,result_size,class_count,stage_candidates,"
           "ordering_s,product_s,clique_s,dedup_s\n";
    out << std::fixed << std::setprecision(6);
    for (const auto & r : records) {
        out << r.instance << ',' << r.config << ',' << to_string(r.ordering) << ',' << (r.prune_type0 ? 1 : 0) << ','
            << r.runtime << ',' << (r.timed_out ? 1 : 0) << ',' << r.result_size << ',' << r.class_count << ',';
        for (std::size_t s = 0; s < r.stage_candidates.size(); ++s)
            out << (s ? ";" : "") << r.stage_candidates[s];
        out << ',' << r.stats.ordering_seconds << ',' << r.stats.product_seconds << ',' << r.stats.clique_seconds << ','
            << r.stats.dedup_seconds << '\n';
    }
    return out.str();
}

namespace {
    auto ranks(std::span<const double> v) -> std::vector<double>
    {
        std::vector<std::size_t> order(v.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
        std::vector<double> r(v.size());
        for (std::size_t i = 0; i < order.size();) {
            auto j = i;
            while (j + 1 < order.size() && v[order[j + 1]] == v[order[i]])
                ++j;
            double average = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
            for (auto k = i; k <= j; ++k)
                r[order[k]] = average;
            i = j + 1;
        }
        return r;
    }
}

auto spearman(std::span<const double> x, std::span<const double> y) -> double
{
    if (x.size() != y.size() || x.size() < 2)
        return 0.0;
    auto rx = ranks(x), ry = ranks(y);
    const double n = static_cast<double>(x.size());
    double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / n;
    double my = std::accumulate(ry.begin(), ry.end(), 0.0) / n;
    double sxy = 0, sxx = 0, syy = 0;
    for (std::size_t i = 0; i < rx.size(); ++i) {
        sxy += (rx[i] - mx) * (ry[i] - my);
        sxx += (rx[i] - mx) * (rx[i] - mx);
        syy += (ry[i] - my) * (ry[i] - my);
    }
    if (sxx == 0 || syy == 0)
        return 0.0;
    return sxy / std::sqrt(sxx * syy);
}

auto geometric_mean(std::span<const double> values) -> double
{
    if (values.empty())
        return 0.0;
    double log_sum = 0;
    for (auto v : values)
        log_sum += std::log(std::max(v, 1e-9));
    return std::exp(log_sum / static_cast<double>(values.size()));
}

} // namespace mcs
