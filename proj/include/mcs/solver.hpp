#pragma once

#include <mcs/canonical.hpp>
#include <mcs/clique.hpp>
#include <mcs/common.hpp>
#include <mcs/graph.hpp>
#include <mcs/similarity.hpp>

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mcs {

enum class OrderingKind { VH, WL, NSPD, MINMAX, INPUT, RANDOM };

auto to_string(OrderingKind k) -> std::string;
auto parse_ordering(std::string_view text) -> OrderingKind;

struct SolveConfig
{
    Mode mode = Mode::MVCS;
    bool connected = true;
    bool labeled = true;
    OrderingKind ordering = OrderingKind::MINMAX;
    std::uint64_t seed = 1; ///< used by OrderingKind::RANDOM
    bool prune_type0 = true;
    std::size_t path_cap = 6;
    bool bound_pruning = true;
    double time_limit = std::numeric_limits<double>::infinity(); ///< seconds
    std::size_t parallelism = 1;
    KernelParams kernel;
};

/// Occurrence of a result subgraph in one input graph.
struct Witness
{
    std::vector<VertexId> vertex_map; ///< subgraph vertex -> input vertex
    std::vector<EdgeId> edge_map;     ///< subgraph edge -> input edge (MECS only)
};

struct EmbeddingResult
{
    LabeledGraph subgraph;
    CanonicalForm form;
    std::size_t size = 0;
    /// One witness per input graph, in input order.
    std::vector<Witness> per_input;
};

/// Intermediate common subgraph covering a prefix of the processing order.
struct Candidate
{
    LabeledGraph graph;
    CanonicalForm form;
    /// Indexed by input position; only covered inputs are filled.
    std::vector<std::optional<Witness>> witnesses;

    [[nodiscard]] auto size(Mode mode) const -> std::size_t
    {
        return mode == Mode::MVCS ? graph.vertex_count() : graph.edge_count();
    }
};

struct CandidateSet
{
    std::vector<Candidate> representatives; ///< sorted by canonical form
    std::size_t stage = 0;                  ///< number of inputs covered
};

struct StageStats
{
    std::size_t candidates_in = 0;
    std::size_t cliques = 0;
    std::size_t candidates_out = 0;
};

struct SolveStats
{
    std::vector<std::size_t> order;
    std::vector<StageStats> stages;
    std::size_t bound = 0;
    std::size_t repaired_cliques = 0;
    double ordering_seconds = 0;
    double product_seconds = 0;
    double clique_seconds = 0;
    double dedup_seconds = 0;
    double total_seconds = 0;
};

/// All maximum common subgraphs up to isomorphism, sorted by canonical form.
/// Throws Timeout when the time limit passes.
auto solve(std::span<const LabeledGraph> graphs, const SolveConfig & config, SolveStats * stats = nullptr)
    -> std::vector<EmbeddingResult>;

/// solve() with bound pruning forced on.
auto solve_with_bound(std::span<const LabeledGraph> graphs, const SolveConfig & config, SolveStats * stats = nullptr)
    -> std::vector<EmbeddingResult>;

/// Processing order chosen by config.ordering.
auto choose_order(std::span<const LabeledGraph> graphs, const SolveConfig & config) -> std::vector<std::size_t>;

/// Stage set covering only graphs[input].
auto initial_candidates(std::span<const LabeledGraph> graphs, std::size_t input, const SolveConfig & config)
    -> CandidateSet;

/// Extends every candidate by graphs[next]: projections onto graphs[next] of
/// all maximal cliques (connected when configured) of candidate x next,
/// deduplicated by isomorphism. Candidates of size below lower_bound and
/// cliques that cannot reach it are dropped.
auto step(const CandidateSet & candidates, std::span<const LabeledGraph> graphs, std::size_t next,
    const SolveConfig & config, std::size_t lower_bound = 0) -> CandidateSet;

/// For a 3-member clique of a line-graph product: the three 2-member
/// sub-cliques when the edge triples behind it form a triangle on one side
/// and a claw on the other, otherwise the clique itself. Members are
/// (left edge, right edge) pairs.
auto repair_bad_triangles(const Clique & triangle, const LabeledGraph & left_source,
    const LabeledGraph & right_source) -> std::vector<Clique>;

/// Generalization used by the solver: splits a line-graph clique whose edge
/// correspondence is not induced by a vertex map into its maximal sub-cliques
/// whose correspondence is induced (and TYPE1-connected when required).
auto repair_edge_correspondence(const ProductGraph & p, const Clique & clique, const LabeledGraph & left_source,
    const LabeledGraph & right_source, bool connected) -> std::vector<Clique>;

} // namespace mcs
