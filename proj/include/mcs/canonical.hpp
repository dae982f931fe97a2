#pragma once

#include <mcs/graph.hpp>

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace mcs {

/// Byte string identifying a labeled graph up to isomorphism. Totally ordered,
/// so sets of graphs can be deduplicated and sorted deterministically.
struct CanonicalForm
{
    std::string bytes;

    friend auto operator<=>(const CanonicalForm &, const CanonicalForm &) = default;
};

struct CanonicalLabeling
{
    CanonicalForm form;
    /// position[v] is the canonical index of vertex v.
    std::vector<VertexId> position;
};

/// Exact canonical labeling: colour refinement by labels and neighbourhoods,
/// then individualization over the remaining cells, keeping the smallest
/// certificate. Branches are pruned with the automorphisms discovered on the way.
auto canonical_labeling(const LabeledGraph & g) -> CanonicalLabeling;

auto canonical(const LabeledGraph & g) -> CanonicalForm;

/// Label-preserving isomorphism a -> b, if one exists.
auto find_isomorphism(const LabeledGraph & a, const LabeledGraph & b) -> std::optional<std::vector<VertexId>>;

auto isomorphic(const LabeledGraph & a, const LabeledGraph & b) -> bool;

} // namespace mcs
