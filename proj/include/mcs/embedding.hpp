#pragma once

#include <mcs/graph.hpp>

#include <optional>
#include <span>
#include <vector>

namespace mcs {

enum class EmbeddingKind
{
    Induced,      ///< adjacency and non-adjacency preserved
    Monomorphism  ///< edges preserved, extra target edges allowed
};

/// Backtracking search for a label-preserving injective map pattern -> target.
auto find_embedding(const LabeledGraph & pattern, const LabeledGraph & target, EmbeddingKind kind)
    -> std::optional<std::vector<VertexId>>;

auto is_induced_embedding(const LabeledGraph & pattern, const LabeledGraph & target,
    std::span<const VertexId> vertex_map) -> bool;

/// vertex_map is injective and label-preserving, and every pattern edge e maps
/// to target edge edge_map[e] with equal label and matching endpoints.
auto is_edge_embedding(const LabeledGraph & pattern, const LabeledGraph & target,
    std::span<const VertexId> vertex_map, std::span<const EdgeId> edge_map) -> bool;

/// Label-preserving injective vertex map under which pattern edge e becomes
/// target edge edge_map[e], if any. Every pattern vertex must touch an edge.
auto vertex_map_from_edge_map(const LabeledGraph & pattern, const LabeledGraph & target,
    std::span<const EdgeId> edge_map) -> std::optional<std::vector<VertexId>>;

/// True when pairing a_edges[i] with b_edges[i] is induced by a label-preserving
/// vertex bijection between the two edge sets' endpoints.
auto edge_correspondence_is_induced(const LabeledGraph & a, std::span<const EdgeId> a_edges,
    const LabeledGraph & b, std::span<const EdgeId> b_edges) -> bool;

} // namespace mcs
