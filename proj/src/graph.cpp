#include <mcs/graph.hpp>

#include <algorithm>
#include <numeric>
#include <string>

namespace mcs {

auto LabeledGraph::add_vertex(Label label) -> VertexId
{
    vertex_labels_.push_back(std::move(label));
    adjacency_.emplace_back();
    return static_cast<VertexId>(vertex_labels_.size() - 1);
}

auto LabeledGraph::add_edge(VertexId u, VertexId v, Label label) -> EdgeId
{
    if (u >= vertex_count() || v >= vertex_count())
        throw GraphError("edge {" + std::to_string(u) + "," + std::to_string(v) + "} references an unknown vertex");
    if (u == v)
        throw GraphError("self-loop on vertex " + std::to_string(u));
    if (find_edge(u, v))
        throw GraphError("duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");

    auto id = static_cast<EdgeId>(edges_.size());
    edges_.push_back(Edge{std::min(u, v), std::max(u, v), std::move(label)});
    adjacency_[u].push_back(Neighbor{v, id});
    adjacency_[v].push_back(Neighbor{u, id});
    return id;
}

auto LabeledGraph::find_edge(VertexId u, VertexId v) const -> std::optional<EdgeId>
{
    if (u >= vertex_count() || v >= vertex_count())
        return std::nullopt;
    const auto & shorter = adjacency_[u].size() <= adjacency_[v].size() ? adjacency_[u] : adjacency_[v];
    auto target = adjacency_[u].size() <= adjacency_[v].size() ? v : u;
    for (const auto & n : shorter)
        if (n.vertex == target)
            return n.edge;
    return std::nullopt;
}

auto strip_labels(const LabeledGraph & g) -> LabeledGraph
{
    LabeledGraph result(g.name());
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        result.add_vertex(kUnlabeled);
    for (const auto & e : g.edges())
        result.add_edge(e.u, e.v, kUnlabeled);
    return result;
}

namespace {
    void append_part(std::string & out, const Label & part)
    {
        out += std::to_string(part.size());
        out += ':';
        out += part;
    }
}

auto line_vertex_label(const Label & edge_label, const Label & a, const Label & b) -> Label
{
    // length-prefixed so that distinct triples never collide
    std::string out;
    append_part(out, edge_label);
    append_part(out, std::min(a, b));
    append_part(out, std::max(a, b));
    return out;
}

auto line_graph(const LabeledGraph & g) -> LineGraphResult
{
    LineGraphResult result;
    result.line_graph.set_name(g.name());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const auto & edge = g.edge(e);
        result.line_graph.add_vertex(line_vertex_label(edge.label, g.vertex_label(edge.u), g.vertex_label(edge.v)));
        result.delta.push_back(e);
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        auto incident = g.neighbors(v);
        for (std::size_t i = 0; i < incident.size(); ++i)
            for (std::size_t j = i + 1; j < incident.size(); ++j)
                result.line_graph.add_edge(incident[i].edge, incident[j].edge, g.vertex_label(v));
    }
    return result;
}

auto connected_components(const LabeledGraph & g, const EdgeFilter & filter) -> std::vector<std::vector<VertexId>>
{
    const auto n = g.vertex_count();
    std::vector<VertexId> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](VertexId x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto & e : g.edges()) {
        if (filter && ! filter(e))
            continue;
        auto a = find(e.u), b = find(e.v);
        if (a != b)
            parent[std::max(a, b)] = std::min(a, b);
    }

    std::vector<std::vector<VertexId>> components;
    std::vector<std::int64_t> slot(n, -1);
    for (VertexId v = 0; v < n; ++v) {
        auto root = find(v);
        if (slot[root] < 0) {
            slot[root] = static_cast<std::int64_t>(components.size());
            components.emplace_back();
        }
        components[slot[root]].push_back(v);
    }
    return components;
}

auto is_connected(const LabeledGraph & g) -> bool
{
    return connected_components(g).size() <= 1;
}

auto induced_subgraph(const LabeledGraph & g, std::span<const VertexId> vs) -> LabeledGraph
{
    std::vector<std::int64_t> position(g.vertex_count(), -1);
    LabeledGraph result(g.name());
    for (auto v : vs) {
        if (v >= g.vertex_count())
            throw GraphError("induced_subgraph: unknown vertex " + std::to_string(v));
        if (position[v] >= 0)
            throw GraphError("induced_subgraph: vertex " + std::to_string(v) + " listed twice");
        position[v] = result.add_vertex(g.vertex_label(v));
    }
    for (const auto & e : g.edges())
        if (position[e.u] >= 0 && position[e.v] >= 0)
            result.add_edge(static_cast<VertexId>(position[e.u]), static_cast<VertexId>(position[e.v]), e.label);
    return result;
}

auto edge_subgraph(const LabeledGraph & g, std::span<const EdgeId> es, std::vector<VertexId> * vertex_origin)
    -> LabeledGraph
{
    std::vector<VertexId> endpoints;
    for (auto e : es) {
        const auto & edge = g.edge(e);
        endpoints.push_back(edge.u);
        endpoints.push_back(edge.v);
    }
    std::sort(endpoints.begin(), endpoints.end());
    endpoints.erase(std::unique(endpoints.begin(), endpoints.end()), endpoints.end());

    std::vector<std::int64_t> position(g.vertex_count(), -1);
    LabeledGraph result(g.name());
    for (auto v : endpoints)
        position[v] = result.add_vertex(g.vertex_label(v));
    for (auto e : es) {
        const auto & edge = g.edge(e);
        result.add_edge(static_cast<VertexId>(position[edge.u]), static_cast<VertexId>(position[edge.v]), edge.label);
    }
    if (vertex_origin)
        *vertex_origin = std::move(endpoints);
    return result;
}

AdjacencyMatrix::AdjacencyMatrix(const LabeledGraph & g) : n_(g.vertex_count()), cells_(n_ * n_, -1)
{
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const auto & edge = g.edge(e);
        cells_[edge.u * n_ + edge.v] = static_cast<std::int32_t>(e);
        cells_[edge.v * n_ + edge.u] = static_cast<std::int32_t>(e);
    }
}

} // namespace mcs
