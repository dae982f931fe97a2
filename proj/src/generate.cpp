#include <mcs/generate.hpp>

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>
#include <string>

namespace mcs {

auto uniform_index(Rng & rng, std::size_t n) -> std::size_t
{
    if (n == 0)
        throw std::invalid_argument("uniform_index over an empty range");
    return static_cast<std::size_t>(rng() % n);
}

auto uniform_real(Rng & rng) -> double
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

namespace {
    auto pick_weighted(Rng & rng, const std::vector<double> & weights) -> std::size_t
    {
        double total = 0;
        for (auto w : weights)
            total += w;
        auto x = uniform_real(rng) * total;
        for (std::size_t i = 0; i < weights.size(); ++i) {
            if (x < weights[i])
                return i;
            x -= weights[i];
        }
        return weights.size() - 1;
    }

    auto distances_from(const LabeledGraph & g, VertexId s) -> std::vector<std::size_t>
    {
        std::vector<std::size_t> dist(g.vertex_count(), g.vertex_count());
        std::deque<VertexId> queue{s};
        dist[s] = 0;
        while (! queue.empty()) {
            auto v = queue.front();
            queue.pop_front();
            for (const auto & n : g.neighbors(v))
                if (dist[n.vertex] == g.vertex_count()) {
                    dist[n.vertex] = dist[v] + 1;
                    queue.push_back(n.vertex);
                }
        }
        return dist;
    }
}

auto generate_molecule(Rng & rng, const GeneratorParams & params) -> LabeledGraph
{
    if (params.min_vertices < 1 || params.max_vertices < params.min_vertices)
        throw std::invalid_argument("generator needs 1 <= min_vertices <= max_vertices");
    if (params.alphabet.empty() || params.bond_labels.empty() || params.max_degree < 2)
        throw std::invalid_argument("generator needs labels and max_degree >= 2");
    const auto n = params.min_vertices + uniform_index(rng, params.max_vertices - params.min_vertices + 1);

    // element mix: the first symbol dominates, the others vary per graph
    std::vector<double> weights;
    for (std::size_t i = 0; i < params.alphabet.size(); ++i) {
        auto draw = -std::log(1.0 - uniform_real(rng));
        weights.push_back(i == 0 ? 4.0 + draw : draw);
    }
    const double double_bond_rate = 0.02 + 0.13 * uniform_real(rng);

    LabeledGraph g;
    auto bond = [&] {
        if (params.bond_labels.size() > 1 && uniform_real(rng) < double_bond_rate)
            return params.bond_labels[1 + uniform_index(rng, params.bond_labels.size() - 1)];
        return params.bond_labels[0];
    };
    g.add_vertex(params.alphabet[pick_weighted(rng, weights)]);
    for (std::size_t v = 1; v < n; ++v) {
        // chains are common: prefer attaching to the newest vertices
        std::vector<VertexId> open;
        for (VertexId u = 0; u < g.vertex_count(); ++u)
            if (g.degree(u) < params.max_degree)
                open.push_back(u);
        VertexId parent = open.back();
        if (open.size() > 1 && uniform_real(rng) < 0.6)
            parent = open[uniform_index(rng, open.size())];
        auto id = g.add_vertex(params.alphabet[pick_weighted(rng, weights)]);
        g.add_edge(parent, id, bond());
    }

    const auto rings = uniform_index(rng, params.max_rings + 1);
    for (std::size_t r = 0; r < rings; ++r) {
        std::vector<std::pair<VertexId, VertexId>> options;
        for (VertexId u = 0; u < g.vertex_count(); ++u) {
            if (g.degree(u) >= params.max_degree)
                continue;
            auto dist = distances_from(g, u);
            for (VertexId v = u + 1; v < g.vertex_count(); ++v)
                if (g.degree(v) < params.max_degree && (dist[v] == 4 || dist[v] == 5))
                    options.emplace_back(u, v);
        }
        if (options.empty())
            break;
        auto [u, v] = options[uniform_index(rng, options.size())];
        g.add_edge(u, v, params.bond_labels[0]);
    }
    return g;
}

auto generate_instances(std::size_t count, std::size_t graphs_per_instance, const GeneratorParams & params,
    std::uint64_t seed) -> std::vector<std::vector<LabeledGraph>>
{
    Rng rng(seed);
    std::vector<std::vector<LabeledGraph>> out(count);
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t k = 0; k < graphs_per_instance; ++k) {
            auto g = generate_molecule(rng, params);
            g.set_name("i" + std::to_string(i) + "g" + std::to_string(k));
            out[i].push_back(std::move(g));
        }
    return out;
}

} // namespace mcs
