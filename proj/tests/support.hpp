#pragma once

#include <mcs/canonical.hpp>
#include <mcs/embedding.hpp>
#include <mcs/graph.hpp>
#include <mcs/oracle.hpp>
#include <mcs/solver.hpp>

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace mcs::test {

using TestRng = std::mt19937_64;

inline auto pick(TestRng & rng, std::size_t n) -> std::size_t
{
    return static_cast<std::size_t>(rng() % n);
}

inline auto coin(TestRng & rng, double p) -> bool
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

/// Erdos-Renyi style graph with labels drawn uniformly from the given lists.
inline auto random_graph(TestRng & rng, std::size_t n, double p, const std::vector<Label> & vlabels = {"C"},
    const std::vector<Label> & elabels = {"1"}) -> LabeledGraph
{
    LabeledGraph g;
    for (std::size_t v = 0; v < n; ++v)
        g.add_vertex(vlabels[pick(rng, vlabels.size())]);
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            if (coin(rng, p))
                g.add_edge(u, v, elabels[pick(rng, elabels.size())]);
    return g;
}

/// Random graph with at most max_edges edges.
inline auto random_sparse_graph(TestRng & rng, std::size_t n, std::size_t max_edges,
    const std::vector<Label> & vlabels = {"C"}, const std::vector<Label> & elabels = {"1"}) -> LabeledGraph
{
    LabeledGraph g;
    for (std::size_t v = 0; v < n; ++v)
        g.add_vertex(vlabels[pick(rng, vlabels.size())]);
    std::vector<std::pair<VertexId, VertexId>> all;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            all.emplace_back(u, v);
    std::shuffle(all.begin(), all.end(), rng);
    auto m = all.empty() ? 0 : pick(rng, std::min(max_edges, all.size()) + 1);
    std::sort(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(m));
    for (std::size_t i = 0; i < m; ++i)
        g.add_edge(all[i].first, all[i].second, elabels[pick(rng, elabels.size())]);
    return g;
}

inline auto make_path(std::size_t n, const Label & vl = "C", const Label & el = "1") -> LabeledGraph
{
    LabeledGraph g;
    for (std::size_t i = 0; i < n; ++i)
        g.add_vertex(vl);
    for (VertexId i = 0; i + 1 < n; ++i)
        g.add_edge(i, i + 1, el);
    return g;
}

inline auto make_cycle(std::size_t n, const Label & vl = "C", const Label & el = "1") -> LabeledGraph
{
    auto g = make_path(n, vl, el);
    if (n >= 3)
        g.add_edge(0, n - 1, el);
    return g;
}

inline auto make_complete(std::size_t n, const Label & vl = "C", const Label & el = "1") -> LabeledGraph
{
    LabeledGraph g;
    for (std::size_t i = 0; i < n; ++i)
        g.add_vertex(vl);
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            g.add_edge(u, v, el);
    return g;
}

/// K_{1,leaves} with the centre as vertex 0.
inline auto make_star(std::size_t leaves, const Label & vl = "C", const Label & el = "1") -> LabeledGraph
{
    LabeledGraph g;
    g.add_vertex(vl);
    for (std::size_t i = 0; i < leaves; ++i)
        g.add_edge(0, g.add_vertex(vl), el);
    return g;
}

/// Graph from vertex labels and an edge list, all edges labelled el.
inline auto make_graph(const std::vector<Label> & labels, const std::vector<std::pair<VertexId, VertexId>> & edges,
    const Label & el = "1") -> LabeledGraph
{
    LabeledGraph g;
    for (const auto & l : labels)
        g.add_vertex(l);
    for (auto [u, v] : edges)
        g.add_edge(u, v, el);
    return g;
}

/// Copy of g where vertex v becomes perm[v]; edges are inserted in shuffled order.
inline auto permuted(const LabeledGraph & g, const std::vector<VertexId> & perm, TestRng & rng) -> LabeledGraph
{
    std::vector<Label> labels(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        labels[perm[v]] = g.vertex_label(v);
    LabeledGraph out;
    for (const auto & l : labels)
        out.add_vertex(l);
    auto edges = g.edges();
    std::shuffle(edges.begin(), edges.end(), rng);
    for (const auto & e : edges) {
        if (coin(rng, 0.5))
            out.add_edge(perm[e.v], perm[e.u], e.label);
        else
            out.add_edge(perm[e.u], perm[e.v], e.label);
    }
    return out;
}

inline auto random_permutation(std::size_t n, TestRng & rng) -> std::vector<VertexId>
{
    std::vector<VertexId> perm(n);
    std::iota(perm.begin(), perm.end(), VertexId{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

/// Isomorphism by trying every bijection. Small graphs only.
inline auto brute_isomorphic(const LabeledGraph & a, const LabeledGraph & b) -> bool
{
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
        return false;
    std::vector<VertexId> perm(a.vertex_count());
    std::iota(perm.begin(), perm.end(), VertexId{0});
    do {
        bool ok = true;
        for (VertexId v = 0; ok && v < a.vertex_count(); ++v)
            ok = a.vertex_label(v) == b.vertex_label(perm[v]);
        for (const auto & e : a.edges()) {
            if (! ok)
                break;
            auto f = b.find_edge(perm[e.u], perm[e.v]);
            ok = f && b.edge(*f).label == e.label;
        }
        if (ok)
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

inline auto forms_of(const std::vector<EmbeddingResult> & results) -> std::vector<CanonicalForm>
{
    std::vector<CanonicalForm> out;
    for (const auto & r : results)
        out.push_back(r.form);
    return out;
}

inline auto forms_of(const OracleResult & result) -> std::vector<CanonicalForm>
{
    std::vector<CanonicalForm> out;
    for (const auto & c : result.classes)
        out.push_back(c.form);
    return out;
}

inline auto sizes_of(const std::vector<EmbeddingResult> & results) -> std::size_t
{
    return results.empty() ? 0 : results.front().size;
}

/// A 2-5 graph instance of small graphs, sparse enough for the edge oracle.
inline auto random_instance(TestRng & rng, std::size_t graphs, std::size_t max_vertices, std::size_t max_edges,
    bool labeled) -> std::vector<LabeledGraph>
{
    std::vector<Label> vl = labeled ? std::vector<Label>{"C", "C", "N", "O"} : std::vector<Label>{"C"};
    std::vector<Label> el = labeled ? std::vector<Label>{"1", "1", "2"} : std::vector<Label>{"1"};
    std::vector<LabeledGraph> out;
    for (std::size_t k = 0; k < graphs; ++k) {
        auto n = 1 + pick(rng, max_vertices);
        out.push_back(random_sparse_graph(rng, n, max_edges, vl, el));
    }
    return out;
}

/// Every witness of every class is a valid occurrence in its input graph.
inline auto witnesses_valid(const std::vector<EmbeddingResult> & results, std::span<const LabeledGraph> inputs,
    const SolveConfig & config) -> bool
{
    for (const auto & r : results) {
        if (r.per_input.size() != inputs.size())
            return false;
        if (config.connected && ! is_connected(r.subgraph))
            return false;
        for (std::size_t i = 0; i < inputs.size(); ++i) {
            auto target = config.labeled ? inputs[i] : strip_labels(inputs[i]);
            const auto & w = r.per_input[i];
            bool ok = config.mode == Mode::MVCS ? is_induced_embedding(r.subgraph, target, w.vertex_map)
                                                : is_edge_embedding(r.subgraph, target, w.vertex_map, w.edge_map);
            if (! ok)
                return false;
        }
    }
    return true;
}

} // namespace mcs::test
