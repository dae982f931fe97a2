#include <mcs/embedding.hpp>

#include <algorithm>
#include <functional>

namespace mcs {

namespace {
    constexpr VertexId kUnmapped = static_cast<VertexId>(-1);

    // Pattern vertices in BFS order so that each vertex after the first of its
    // component has an already-placed neighbour.
    auto search_order(const LabeledGraph & g) -> std::vector<VertexId>
    {
        std::vector<VertexId> order;
        std::vector<bool> seen(g.vertex_count(), false);
        std::vector<VertexId> roots(g.vertex_count());
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            roots[v] = v;
        std::stable_sort(roots.begin(), roots.end(), [&](VertexId a, VertexId b) { return g.degree(a) > g.degree(b); });
        for (auto root : roots) {
            if (seen[root])
                continue;
            seen[root] = true;
            std::size_t head = order.size();
            order.push_back(root);
            while (head < order.size()) {
                auto v = order[head++];
                for (const auto & n : g.neighbors(v))
                    if (! seen[n.vertex]) {
                        seen[n.vertex] = true;
                        order.push_back(n.vertex);
                    }
            }
        }
        return order;
    }
}

auto find_embedding(const LabeledGraph & pattern, const LabeledGraph & target, EmbeddingKind kind)
    -> std::optional<std::vector<VertexId>>
{
    if (pattern.vertex_count() > target.vertex_count())
        return std::nullopt;
    const AdjacencyMatrix target_adjacency(target);
    const AdjacencyMatrix pattern_adjacency(pattern);
    const auto order = search_order(pattern);
    std::vector<VertexId> map(pattern.vertex_count(), kUnmapped);
    std::vector<bool> used(target.vertex_count(), false);

    auto consistent = [&](VertexId p, VertexId t) {
        if (used[t] || pattern.vertex_label(p) != target.vertex_label(t) || pattern.degree(p) > target.degree(t))
            return false;
        for (VertexId q = 0; q < pattern.vertex_count(); ++q) {
            if (map[q] == kUnmapped)
                continue;
            auto pe = pattern_adjacency.edge(p, q);
            auto te = target_adjacency.edge(t, map[q]);
            if (pe >= 0) {
                if (te < 0 || pattern.edge(pe).label != target.edge(te).label)
                    return false;
            }
            else if (kind == EmbeddingKind::Induced && te >= 0)
                return false;
        }
        return true;
    };

    std::function<bool(std::size_t)> extend = [&](std::size_t depth) {
        if (depth == order.size())
            return true;
        auto p = order[depth];
        for (VertexId t = 0; t < target.vertex_count(); ++t) {
            if (! consistent(p, t))
                continue;
            map[p] = t;
            used[t] = true;
            if (extend(depth + 1))
                return true;
            used[t] = false;
            map[p] = kUnmapped;
        }
        return false;
    };

    if (! extend(0))
        return std::nullopt;
    return map;
}

auto is_induced_embedding(const LabeledGraph & pattern, const LabeledGraph & target, std::span<const VertexId> vertex_map)
    -> bool
{
    if (vertex_map.size() != pattern.vertex_count())
        return false;
    std::vector<bool> used(target.vertex_count(), false);
    for (VertexId v = 0; v < pattern.vertex_count(); ++v) {
        auto t = vertex_map[v];
        if (t >= target.vertex_count() || used[t] || pattern.vertex_label(v) != target.vertex_label(t))
            return false;
        used[t] = true;
    }
    for (VertexId a = 0; a < pattern.vertex_count(); ++a)
        for (VertexId b = a + 1; b < pattern.vertex_count(); ++b) {
            auto pe = pattern.find_edge(a, b);
            auto te = target.find_edge(vertex_map[a], vertex_map[b]);
            if (pe.has_value() != te.has_value())
                return false;
            if (pe && pattern.edge(*pe).label != target.edge(*te).label)
                return false;
        }
    return true;
}

auto is_edge_embedding(const LabeledGraph & pattern, const LabeledGraph & target, std::span<const VertexId> vertex_map,
    std::span<const EdgeId> edge_map) -> bool
{
    if (vertex_map.size() != pattern.vertex_count() || edge_map.size() != pattern.edge_count())
        return false;
    std::vector<bool> used(target.vertex_count(), false);
    for (VertexId v = 0; v < pattern.vertex_count(); ++v) {
        auto t = vertex_map[v];
        if (t >= target.vertex_count() || used[t] || pattern.vertex_label(v) != target.vertex_label(t))
            return false;
        used[t] = true;
    }
    std::vector<bool> edge_used(target.edge_count(), false);
    for (EdgeId e = 0; e < pattern.edge_count(); ++e) {
        auto f = edge_map[e];
        if (f >= target.edge_count() || edge_used[f])
            return false;
        edge_used[f] = true;
        const auto & pe = pattern.edge(e);
        const auto & te = target.edge(f);
        if (pe.label != te.label)
            return false;
        auto a = vertex_map[pe.u], b = vertex_map[pe.v];
        if (! ((te.u == a && te.v == b) || (te.u == b && te.v == a)))
            return false;
    }
    return true;
}

auto vertex_map_from_edge_map(const LabeledGraph & pattern, const LabeledGraph & target, std::span<const EdgeId> edge_map)
    -> std::optional<std::vector<VertexId>>
{
    if (edge_map.size() != pattern.edge_count())
        return std::nullopt;
    for (EdgeId e = 0; e < pattern.edge_count(); ++e)
        if (edge_map[e] >= target.edge_count() || pattern.edge(e).label != target.edge(edge_map[e]).label)
            return std::nullopt;

    const auto order = search_order(pattern);
    std::vector<VertexId> map(pattern.vertex_count(), kUnmapped);
    std::vector<bool> used(target.vertex_count(), false);

    std::function<bool(std::size_t)> extend = [&](std::size_t depth) {
        if (depth == order.size())
            return true;
        auto p = order[depth];
        auto incident = pattern.neighbors(p);
        if (incident.empty())
            return false;
        const auto & first = target.edge(edge_map[incident.front().edge]);
        for (auto t : {first.u, first.v}) {
            if (used[t] || pattern.vertex_label(p) != target.vertex_label(t))
                continue;
            bool ok = true;
            for (const auto & n : incident) {
                const auto & image = target.edge(edge_map[n.edge]);
                if (! image.touches(t)) {
                    ok = false;
                    break;
                }
                if (map[n.vertex] != kUnmapped && image.other(t) != map[n.vertex]) {
                    ok = false;
                    break;
                }
            }
            if (! ok)
                continue;
            map[p] = t;
            used[t] = true;
            if (extend(depth + 1))
                return true;
            used[t] = false;
            map[p] = kUnmapped;
        }
        return false;
    };

    if (! extend(0))
        return std::nullopt;
    return map;
}

auto edge_correspondence_is_induced(const LabeledGraph & a, std::span<const EdgeId> a_edges, const LabeledGraph & b,
    std::span<const EdgeId> b_edges) -> bool
{
    if (a_edges.size() != b_edges.size())
        return false;
    auto pattern = edge_subgraph(a, a_edges);
    return vertex_map_from_edge_map(pattern, b, b_edges).has_value();
}

} // namespace mcs
