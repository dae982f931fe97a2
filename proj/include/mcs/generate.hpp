#pragma once

#include <mcs/graph.hpp>

#include <cstdint>
#include <random>
#include <vector>

namespace mcs {

struct GeneratorParams
{
    std::size_t min_vertices = 35;
    std::size_t max_vertices = 35;
    std::vector<Label> alphabet = {"C", "N", "O"};
    std::vector<Label> bond_labels = {"1", "2"};
    std::size_t max_degree = 4;
    std::size_t max_rings = 2;
};

using Rng = std::mt19937_64;

// Portable draws; the standard distributions differ between libraries.
auto uniform_index(Rng & rng, std::size_t n) -> std::size_t;
auto uniform_real(Rng & rng) -> double;

/// Connected molecule-like graph: a random tree with bounded degree plus a
/// few ring closures of size 5 or 6. Each graph draws its own element mix.
auto generate_molecule(Rng & rng, const GeneratorParams & params) -> LabeledGraph;

/// count instances of graphs_per_instance graphs each, reproducible from seed.
auto generate_instances(std::size_t count, std::size_t graphs_per_instance, const GeneratorParams & params,
    std::uint64_t seed) -> std::vector<std::vector<LabeledGraph>>;

} // namespace mcs
