#pragma once

#include <mcs/graph.hpp>

#include <boost/dynamic_bitset.hpp>

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace mcs {

enum class EdgeType : std::uint8_t
{
    None,
    Type0, ///< non-edge in both factors
    Type1  ///< edge in both factors (with equal labels in labeled mode)
};

enum class Side { Left, Right };

struct ProductVertex
{
    VertexId left;
    VertexId right;

    friend auto operator<=>(const ProductVertex &, const ProductVertex &) = default;
};

using Bitset = boost::dynamic_bitset<std::uint64_t>;

/// Modular product of two labeled graphs. Product vertices are coordinate
/// pairs; edges are stored as two adjacency bitsets, one per edge type.
class ProductGraph
{
public:
    ProductGraph(std::shared_ptr<const LabeledGraph> left, std::shared_ptr<const LabeledGraph> right, bool labeled,
        std::vector<ProductVertex> vertices);

    [[nodiscard]] auto vertex_count() const noexcept -> std::size_t { return vertices_.size(); }
    [[nodiscard]] auto vertices() const noexcept -> const std::vector<ProductVertex> & { return vertices_; }
    [[nodiscard]] auto vertex(std::size_t i) const -> const ProductVertex & { return vertices_.at(i); }
    [[nodiscard]] auto index_of(ProductVertex v) const -> std::optional<std::size_t>;

    [[nodiscard]] auto edge_type(std::size_t i, std::size_t j) const -> EdgeType;
    [[nodiscard]] auto adjacent(std::size_t i, std::size_t j) const -> bool { return edge_type(i, j) != EdgeType::None; }
    [[nodiscard]] auto type1_row(std::size_t i) const -> const Bitset & { return type1_[i]; }
    [[nodiscard]] auto type0_row(std::size_t i) const -> const Bitset & { return type0_[i]; }
    [[nodiscard]] auto type1_edge_count() const -> std::size_t;
    [[nodiscard]] auto type0_edge_count() const -> std::size_t;

    void set_edge(std::size_t i, std::size_t j, EdgeType type)
    {
        type1_[i].reset(j);
        type1_[j].reset(i);
        type0_[i].reset(j);
        type0_[j].reset(i);
        if (type == EdgeType::Type1) {
            type1_[i].set(j);
            type1_[j].set(i);
        }
        else if (type == EdgeType::Type0) {
            type0_[i].set(j);
            type0_[j].set(i);
        }
    }

    [[nodiscard]] auto left() const noexcept -> const LabeledGraph & { return *left_; }
    [[nodiscard]] auto right() const noexcept -> const LabeledGraph & { return *right_; }
    [[nodiscard]] auto left_ptr() const noexcept -> const std::shared_ptr<const LabeledGraph> & { return left_; }
    [[nodiscard]] auto right_ptr() const noexcept -> const std::shared_ptr<const LabeledGraph> & { return right_; }
    [[nodiscard]] auto labeled() const noexcept -> bool { return labeled_; }

    /// Subproduct on the given vertex indices (in that order), keeping all edges among them.
    [[nodiscard]] auto induced(std::span<const std::size_t> indices) const -> ProductGraph;

private:
    std::shared_ptr<const LabeledGraph> left_, right_;
    bool labeled_;
    std::vector<ProductVertex> vertices_;
    std::vector<Bitset> type1_, type0_;
};

/// G ⋆ H. In labeled mode only label-equal vertex pairs become product
/// vertices, and factor edges with different labels produce no product edge.
auto modular_product(std::shared_ptr<const LabeledGraph> left, std::shared_ptr<const LabeledGraph> right, bool labeled)
    -> ProductGraph;
auto modular_product(const LabeledGraph & left, const LabeledGraph & right, bool labeled) -> ProductGraph;

/// Subproducts induced by the TYPE1-connected vertex sets, ordered by smallest
/// member; TYPE0 edges inside each set are kept.
auto type_a_components(const ProductGraph & p) -> std::vector<ProductGraph>;

/// Label strings of simple paths between every ordered vertex pair of one
/// factor, up to a length cap, plus whether a longer simple path exists.
class PathTable
{
public:
    /// Paths up to path_cap edges are enumerated; enumeration from one source
    /// stops after step_budget extensions and the source is marked incomplete.
    /// Longer paths are judged from the block-cut tree and may be overestimated.
    PathTable(const LabeledGraph & g, std::size_t path_cap, bool labeled, std::size_t step_budget = 200000);

    /// Sorted, distinct label-sequence hashes.
    [[nodiscard]] auto paths(VertexId from, VertexId to) const -> std::span<const std::uint64_t>
    {
        auto k = from * n_ + to;
        return {hashes_.data() + offsets_[k], offsets_[k + 1] - offsets_[k]};
    }
    /// True when a simple path longer than the cap may exist.
    [[nodiscard]] auto has_longer_path(VertexId from, VertexId to) const -> bool { return longer_[from * n_ + to]; }
    /// False when even the capped enumeration from this source ran out of budget.
    [[nodiscard]] auto complete(VertexId from) const -> bool { return exact_[from]; }
    [[nodiscard]] auto path_cap() const noexcept -> std::size_t { return cap_; }
    /// No simple path in the graph is longer than this.
    [[nodiscard]] auto longest_path_bound() const noexcept -> std::size_t { return longest_; }

private:
    std::size_t n_, cap_, longest_ = 0;
    std::vector<std::size_t> offsets_;
    std::vector<std::uint64_t> hashes_;
    std::vector<bool> longer_;
    std::vector<bool> exact_;
};

/// Drops a TYPE0 edge {(u,v),(u',v')} when no simple path u..u' in the left
/// factor carries the same label sequence as a simple path v..v' in the right
/// factor. Only done when the comparison is conclusive: all paths up to the
/// cap are compared and at least one side has no longer path. The set of
/// maximal type-1-connected cliques is unchanged.
auto prune_type0_edges(const ProductGraph & p, std::size_t path_cap) -> ProductGraph;
auto prune_type0_edges(const ProductGraph & p, const PathTable & left, const PathTable & right) -> ProductGraph;

/// Subgraph of the chosen factor induced by the projected coordinates, in the
/// order given. Throws GraphError when two members share a coordinate.
auto project(const ProductGraph & p, std::span<const ProductVertex> members, Side side) -> LabeledGraph;

} // namespace mcs
