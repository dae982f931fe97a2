#pragma once

#include <mcs/canonical.hpp>
#include <mcs/clique.hpp>
#include <mcs/graph.hpp>
#include <mcs/product.hpp>
#include <mcs/solver.hpp>

#include <span>
#include <stdexcept>
#include <vector>

namespace mcs {

/// Input too large for exhaustive search.
class SizeLimit : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

struct OracleClass
{
    LabeledGraph graph;
    CanonicalForm form;
    std::vector<Witness> witnesses; ///< one per input graph
};

struct OracleResult
{
    std::size_t max_size = 0;
    std::vector<OracleClass> classes; ///< sorted by canonical form
};

constexpr std::size_t kOracleMaxVertices = 9;
constexpr std::size_t kOracleMaxEdges = 9;
constexpr std::size_t kOracleMaxProductVertices = 20;

/// Exhaustive search over vertex subsets of the smallest input, largest first,
/// testing each induced subgraph against every input by backtracking.
auto oracle_mvcs(std::span<const LabeledGraph> graphs, bool connected, bool labeled) -> OracleResult;

/// Same over edge subsets, with non-induced embeddings. No line graphs involved.
auto oracle_mecs(std::span<const LabeledGraph> graphs, bool connected, bool labeled) -> OracleResult;

/// Maximal cliques of p by subset enumeration, sorted. With connected set, only
/// TYPE1-connected cliques, maximal in the sense given.
auto oracle_maximal_cliques(const ProductGraph & p, bool connected, Maximality maximality = Maximality::AmongAll)
    -> std::vector<std::vector<std::size_t>>;

} // namespace mcs
