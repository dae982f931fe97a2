#pragma once

#include <mcs/common.hpp>
#include <mcs/product.hpp>

#include <functional>
#include <span>
#include <vector>

namespace mcs {

struct Clique
{
    /// Product vertex indices, increasing.
    std::vector<std::size_t> indices;
    std::vector<ProductVertex> members;
    bool type1_connected = false;
};

/// When is a type-1-connected clique reported as maximal?
enum class Maximality
{
    AmongConnected, ///< no vertex extends it to a larger type-1-connected clique
    AmongAll        ///< no vertex at all extends it (c-clique that is also a maximal clique)
};

using CliqueVisitor = std::function<void(std::span<const std::size_t>)>;

/// Koch-style enumeration with candidate pools split by TYPE1 reachability.
/// Cliques smaller than lower_bound may be skipped. Throws Timeout when the
/// deadline passes.
void for_each_maximal_connected_clique(const ProductGraph & p, std::size_t lower_bound, Maximality maximality,
    const CliqueVisitor & visit, const Deadline & deadline = {});

/// Bron-Kerbosch with Tomita pivoting; both edge types count as adjacency.
void for_each_maximal_clique(const ProductGraph & p, std::size_t lower_bound, const CliqueVisitor & visit,
    const Deadline & deadline = {});

auto enumerate_maximal_connected_cliques(const ProductGraph & p, std::size_t lower_bound,
    Maximality maximality = Maximality::AmongAll, const Deadline & deadline = {}) -> std::vector<Clique>;

auto enumerate_maximal_cliques(const ProductGraph & p, std::size_t lower_bound, const Deadline & deadline = {})
    -> std::vector<Clique>;

auto is_clique(const ProductGraph & p, std::span<const std::size_t> indices) -> bool;
auto is_type1_connected(const ProductGraph & p, std::span<const std::size_t> indices) -> bool;

} // namespace mcs
