#pragma once

#include <mcs/common.hpp>
#include <mcs/graph.hpp>
#include <mcs/similarity.hpp>
#include <mcs/solver.hpp>

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace mcs {

// Buckets l = 1..kBucketCount sit at x_l = l * 0.001 and collect every pair
// whose similarity lies in the closed window [x_l - 0.005, x_l + 0.005].
constexpr std::size_t kBucketCount = 1000;
constexpr double kBucketStep = 0.001;
constexpr double kBucketHalfWidth = 0.005;

/// First and last bucket index whose window contains kappa; nullopt when none.
auto bucket_range(double kappa) -> std::optional<std::pair<std::size_t, std::size_t>>;

struct PairSample
{
    std::size_t left = 0, right = 0;
    double kappa = 0;
    std::size_t cliques = 0;
};

struct BucketRow
{
    Measure measure;
    std::size_t index;
    double x;
    double y;
    std::size_t count;
};

/// Rows for the non-empty buckets, in increasing index.
auto bucket_rows(Measure measure, std::span<const PairSample> samples) -> std::vector<BucketRow>;

/// Maximal TYPE1-connected cliques of a x b (line graphs for MECS), counted
/// with the solver's maximality. Throws Timeout.
auto count_connected_cliques(const LabeledGraph & a, const LabeledGraph & b, Mode mode, bool labeled,
    const Deadline & deadline = {}) -> std::size_t;

struct BucketReport
{
    std::vector<Measure> measures;
    std::vector<std::vector<PairSample>> samples; ///< per measure
    std::vector<BucketRow> rows;
    std::vector<std::pair<std::size_t, std::size_t>> skipped; ///< pairs that timed out
};

struct BucketOptions
{
    std::vector<Measure> measures = {Measure::VH, Measure::WL, Measure::NSPD, Measure::MINMAX};
    Mode mode = Mode::MVCS;
    bool labeled = true;
    double pair_time_limit = 30.0;
    KernelParams kernel;
};

/// Every listed pair of graphs scored by each measure and by clique count.
auto bench_pairs(std::span<const LabeledGraph> graphs, std::span<const std::pair<std::size_t, std::size_t>> pairs,
    const BucketOptions & options) -> BucketReport;

/// bench_pairs over all pairs of the corpus.
auto bench_buckets(std::span<const LabeledGraph> corpus, const BucketOptions & options) -> BucketReport;

auto buckets_csv(const BucketReport & report, const BucketOptions & options) -> std::string;

struct OrderingConfig
{
    std::string name;
    OrderingKind ordering;
    bool prune_type0;
};

/// {VH, WL, NSPD, MINMAX} with and without TYPE0 removal, then INPUT and RANDOM.
auto standard_ordering_configs() -> std::vector<OrderingConfig>;

struct OrderingRecord
{
    std::size_t instance = 0;
    std::string config;
    OrderingKind ordering = OrderingKind::INPUT;
    bool prune_type0 = false;
    double runtime = 0;
    bool timed_out = false;
    std::size_t result_size = 0;
    std::size_t class_count = 0;
    std::vector<std::size_t> stage_candidates;
    SolveStats stats;
};

/// Runs every (instance, config) pair; a timeout yields a censored record
/// whose runtime is the limit. base supplies mode, flags and time limit.
auto bench_orderings(std::span<const std::vector<LabeledGraph>> instances, std::span<const OrderingConfig> configs,
    const SolveConfig & base, std::size_t jobs = 1) -> std::vector<OrderingRecord>;

auto orderings_csv(std::span<const OrderingRecord> records, const SolveConfig & base) -> std::string;

/// Spearman rank correlation with average ranks for ties; 0 when undefined.
auto spearman(std::span<const double> x, std::span<const double> y) -> double;

auto geometric_mean(std::span<const double> values) -> double;

} // namespace mcs
