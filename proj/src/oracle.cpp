#include <mcs/embedding.hpp>
#include <mcs/oracle.hpp>

#include <algorithm>
#include <bit>
#include <map>

namespace mcs {

namespace {
    auto prepare(std::span<const LabeledGraph> graphs, bool labeled) -> std::vector<LabeledGraph>
    {
        if (graphs.size() < 2)
            throw std::invalid_argument("oracle needs at least two graphs");
        std::vector<LabeledGraph> out;
        for (const auto & g : graphs)
            out.push_back(labeled ? g : strip_labels(g));
        return out;
    }

    auto masks_by_size(std::size_t bits) -> std::vector<std::vector<std::uint32_t>>
    {
        std::vector<std::vector<std::uint32_t>> by_size(bits + 1);
        for (std::uint32_t mask = 0; mask < (1U << bits); ++mask)
            by_size[std::popcount(mask)].push_back(mask);
        return by_size;
    }

    auto finish(std::size_t size, std::map<CanonicalForm, OracleClass> & found) -> OracleResult
    {
        OracleResult result;
        result.max_size = size;
        for (auto & [form, cls] : found)
            result.classes.push_back(std::move(cls));
        return result;
    }
}

auto oracle_mvcs(std::span<const LabeledGraph> inputs, bool connected, bool labeled) -> OracleResult
{
    auto graphs = prepare(inputs, labeled);
    for (const auto & g : graphs)
        if (g.vertex_count() > kOracleMaxVertices)
            throw SizeLimit("oracle_mvcs: graph exceeds " + std::to_string(kOracleMaxVertices) + " vertices");
    std::size_t base = 0;
    for (std::size_t i = 1; i < graphs.size(); ++i)
        if (graphs[i].vertex_count() < graphs[base].vertex_count())
            base = i;

    const auto & b = graphs[base];
    auto by_size = masks_by_size(b.vertex_count());
    for (auto size = b.vertex_count() + 1; size-- > 0;) {
        std::map<CanonicalForm, OracleClass> found;
        for (auto mask : by_size[size]) {
            std::vector<VertexId> vs;
            for (VertexId v = 0; v < b.vertex_count(); ++v)
                if (mask & (1U << v))
                    vs.push_back(v);
            auto sub = induced_subgraph(b, vs);
            sub.set_name("");
            if (connected && ! is_connected(sub))
                continue;
            auto form = canonical(sub);
            if (found.contains(form))
                continue;
            std::vector<Witness> witnesses(graphs.size());
            bool common = true;
            for (std::size_t i = 0; i < graphs.size() && common; ++i) {
                if (i == base) {
                    witnesses[i].vertex_map = vs;
                    continue;
                }
                auto map = find_embedding(sub, graphs[i], EmbeddingKind::Induced);
                if (! map)
                    common = false;
                else
                    witnesses[i].vertex_map = *map;
            }
            if (common)
                found.emplace(form, OracleClass{sub, form, std::move(witnesses)});
        }
        if (! found.empty())
            return finish(size, found);
    }
    throw std::logic_error("oracle_mvcs: the empty graph is always common");
}

auto oracle_mecs(std::span<const LabeledGraph> inputs, bool connected, bool labeled) -> OracleResult
{
    auto graphs = prepare(inputs, labeled);
    for (const auto & g : graphs)
        if (g.edge_count() > kOracleMaxEdges)
            throw SizeLimit("oracle_mecs: graph exceeds " + std::to_string(kOracleMaxEdges) + " edges");
    std::size_t base = 0;
    for (std::size_t i = 1; i < graphs.size(); ++i)
        if (graphs[i].edge_count() < graphs[base].edge_count())
            base = i;

    const auto & b = graphs[base];
    auto by_size = masks_by_size(b.edge_count());
    for (auto size = b.edge_count() + 1; size-- > 0;) {
        std::map<CanonicalForm, OracleClass> found;
        for (auto mask : by_size[size]) {
            std::vector<EdgeId> es;
            for (EdgeId e = 0; e < b.edge_count(); ++e)
                if (mask & (1U << e))
                    es.push_back(e);
            std::vector<VertexId> origin;
            auto sub = edge_subgraph(b, es, &origin);
            sub.set_name("");
            if (connected && ! is_connected(sub))
                continue;
            auto form = canonical(sub);
            if (found.contains(form))
                continue;
            std::vector<Witness> witnesses(graphs.size());
            bool common = true;
            for (std::size_t i = 0; i < graphs.size() && common; ++i) {
                if (i == base) {
                    witnesses[i] = Witness{origin, es};
                    continue;
                }
                auto map = find_embedding(sub, graphs[i], EmbeddingKind::Monomorphism);
                if (! map) {
                    common = false;
                    continue;
                }
                Witness w{*map, {}};
                for (const auto & e : sub.edges())
                    w.edge_map.push_back(*graphs[i].find_edge((*map)[e.u], (*map)[e.v]));
                witnesses[i] = std::move(w);
            }
            if (common)
                found.emplace(form, OracleClass{sub, form, std::move(witnesses)});
        }
        if (! found.empty())
            return finish(size, found);
    }
    throw std::logic_error("oracle_mecs: the empty graph is always common");
}

auto oracle_maximal_cliques(const ProductGraph & p, bool connected, Maximality maximality)
    -> std::vector<std::vector<std::size_t>>
{
    const auto n = p.vertex_count();
    if (n > kOracleMaxProductVertices)
        throw SizeLimit("oracle_maximal_cliques: product exceeds " + std::to_string(kOracleMaxProductVertices) +
            " vertices");
    std::vector<std::uint32_t> adjacent(n, 0), type1(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (p.adjacent(i, j))
                adjacent[i] |= 1U << j;
            if (p.edge_type(i, j) == EdgeType::Type1)
                type1[i] |= 1U << j;
        }

    auto members = [&](std::uint32_t mask) {
        std::vector<std::size_t> out;
        for (std::size_t v = 0; v < n; ++v)
            if (mask & (1U << v))
                out.push_back(v);
        return out;
    };
    auto is_connected_mask = [&](std::uint32_t mask) {
        if (mask == 0)
            return true;
        std::uint32_t reached = mask & (~mask + 1);
        while (true) {
            std::uint32_t grown = reached;
            for (std::size_t v = 0; v < n; ++v)
                if (reached & (1U << v))
                    grown |= type1[v] & mask;
            if (grown == reached)
                break;
            reached = grown;
        }
        return reached == mask;
    };

    // all non-empty cliques, grown by increasing vertex index
    std::vector<std::uint32_t> cliques;
    std::vector<std::uint32_t> frontier;
    for (std::size_t v = 0; v < n; ++v)
        frontier.push_back(1U << v);
    while (! frontier.empty()) {
        std::vector<std::uint32_t> next;
        for (auto c : frontier) {
            cliques.push_back(c);
            auto top = 31 - std::countl_zero(c);
            for (std::size_t w = top + 1; w < n; ++w) {
                bool ok = true;
                for (std::size_t v = 0; v <= static_cast<std::size_t>(top) && ok; ++v)
                    if ((c & (1U << v)) && ! (adjacent[v] & (1U << w)))
                        ok = false;
                if (ok)
                    next.push_back(c | (1U << w));
            }
        }
        frontier = std::move(next);
    }

    std::vector<std::vector<std::size_t>> out;
    for (auto c : cliques) {
        if (connected && ! is_connected_mask(c))
            continue;
        bool maximal = true;
        for (std::size_t w = 0; w < n && maximal; ++w) {
            if (c & (1U << w))
                continue;
            if ((adjacent[w] & c) != c)
                continue;
            if (connected && maximality == Maximality::AmongConnected && ! is_connected_mask(c | (1U << w)))
                continue;
            maximal = false;
        }
        if (maximal)
            out.push_back(members(c));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace mcs
