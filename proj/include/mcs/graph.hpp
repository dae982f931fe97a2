#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mcs {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
using Label = std::string;

/// Label carried by every vertex and edge of an unlabeled graph.
inline const Label kUnlabeled = "*";

class GraphError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

struct Edge
{
    VertexId u;
    VertexId v;
    Label label;

    [[nodiscard]] auto touches(VertexId x) const noexcept -> bool { return u == x || v == x; }
    [[nodiscard]] auto other(VertexId x) const noexcept -> VertexId { return u == x ? v : u; }

    friend auto operator==(const Edge &, const Edge &) -> bool = default;
};

struct Neighbor
{
    VertexId vertex;
    EdgeId edge;

    friend auto operator==(const Neighbor &, const Neighbor &) -> bool = default;
};

/// Simple undirected graph with one opaque label per vertex and per edge.
/// Vertex ids are dense, 0..n-1, in insertion order.
class LabeledGraph
{
public:
    LabeledGraph() = default;
    explicit LabeledGraph(std::string name) : name_(std::move(name)) {}

    auto add_vertex(Label label = kUnlabeled) -> VertexId;

    /// Rejects self-loops, parallel edges and unknown endpoints with GraphError.
    auto add_edge(VertexId u, VertexId v, Label label = kUnlabeled) -> EdgeId;

    [[nodiscard]] auto vertex_count() const noexcept -> std::size_t { return vertex_labels_.size(); }
    [[nodiscard]] auto edge_count() const noexcept -> std::size_t { return edges_.size(); }

    [[nodiscard]] auto vertex_label(VertexId v) const -> const Label & { return vertex_labels_.at(v); }
    [[nodiscard]] auto vertex_labels() const noexcept -> const std::vector<Label> & { return vertex_labels_; }
    [[nodiscard]] auto edge(EdgeId e) const -> const Edge & { return edges_.at(e); }
    [[nodiscard]] auto edges() const noexcept -> const std::vector<Edge> & { return edges_; }
    [[nodiscard]] auto neighbors(VertexId v) const -> std::span<const Neighbor> { return adjacency_.at(v); }
    [[nodiscard]] auto degree(VertexId v) const -> std::size_t { return adjacency_.at(v).size(); }

    [[nodiscard]] auto find_edge(VertexId u, VertexId v) const -> std::optional<EdgeId>;
    [[nodiscard]] auto adjacent(VertexId u, VertexId v) const -> bool { return find_edge(u, v).has_value(); }

    [[nodiscard]] auto name() const noexcept -> const std::string & { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    friend auto operator==(const LabeledGraph &, const LabeledGraph &) -> bool = default;

private:
    std::string name_;
    std::vector<Label> vertex_labels_;
    std::vector<Edge> edges_;
    std::vector<std::vector<Neighbor>> adjacency_;
};

/// Copy of g with every vertex and edge label replaced by kUnlabeled.
auto strip_labels(const LabeledGraph & g) -> LabeledGraph;

struct LineGraphResult
{
    LabeledGraph line_graph;
    /// line-graph vertex -> source edge
    std::vector<EdgeId> delta;
};

/// Line graph whose vertex labels fold in the source edge label together with
/// the unordered pair of endpoint labels, and whose edge labels are the label
/// of the shared endpoint. Isolated source vertices vanish.
auto line_graph(const LabeledGraph & g) -> LineGraphResult;

/// Label given to the line-graph vertex of a source edge.
auto line_vertex_label(const Label & edge_label, const Label & a, const Label & b) -> Label;

using EdgeFilter = std::function<bool(const Edge &)>;

/// Vertex sets of the components of g restricted to edges passing filter
/// (all edges when filter is empty). Sets are sorted; ordered by smallest member.
auto connected_components(const LabeledGraph & g, const EdgeFilter & filter = {})
    -> std::vector<std::vector<VertexId>>;

/// The empty graph counts as connected.
auto is_connected(const LabeledGraph & g) -> bool;

/// G[vs]. Result vertex i corresponds to vs[i].
auto induced_subgraph(const LabeledGraph & g, std::span<const VertexId> vs) -> LabeledGraph;

/// Graph formed by the given edges and their endpoints. Result vertices are the
/// endpoints in increasing source id order; result edge i corresponds to es[i].
/// When vertex_origin is given it receives result vertex -> source vertex.
auto edge_subgraph(const LabeledGraph & g, std::span<const EdgeId> es,
    std::vector<VertexId> * vertex_origin = nullptr) -> LabeledGraph;

/// Dense row-major table of edge ids (or -1) for O(1) adjacency queries.
class AdjacencyMatrix
{
public:
    explicit AdjacencyMatrix(const LabeledGraph & g);

    [[nodiscard]] auto edge(VertexId u, VertexId v) const noexcept -> std::int32_t { return cells_[u * n_ + v]; }
    [[nodiscard]] auto adjacent(VertexId u, VertexId v) const noexcept -> bool { return edge(u, v) >= 0; }

private:
    std::size_t n_;
    std::vector<std::int32_t> cells_;
};

} // namespace mcs
