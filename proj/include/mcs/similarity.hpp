#pragma once

#include <mcs/common.hpp>
#include <mcs/graph.hpp>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mcs {

enum class Measure { VH, WL, NSPD, MINMAX };

auto to_string(Measure m) -> std::string;
auto parse_measure(std::string_view text) -> Measure;

struct KernelParams
{
    std::size_t wl_iterations = 3;
    std::size_t nspd_radius = 2;
    std::size_t nspd_distance = 3;
};

// All kernels are cosine-normalized: k(a,b) / sqrt(k(a,a) k(b,b)). A graph
// with zero self-similarity scores 1 against another such graph and 0 otherwise.

auto vh_kernel(const LabeledGraph & a, const LabeledGraph & b) -> double;
auto wl_oa_kernel(const LabeledGraph & a, const LabeledGraph & b, std::size_t iterations) -> double;
auto nspd_kernel(const LabeledGraph & a, const LabeledGraph & b, std::size_t max_radius, std::size_t max_distance)
    -> double;

/// Largest TYPE1 component of the product (of line graphs in MECS mode),
/// divided by the product of the factor vertex counts.
auto minmax_similarity(const LabeledGraph & a, const LabeledGraph & b, Mode mode, bool labeled = true) -> double;

auto similarity(Measure m, const LabeledGraph & a, const LabeledGraph & b, Mode mode, bool labeled = true,
    const KernelParams & params = {}) -> double;

class SimilarityMatrix
{
public:
    SimilarityMatrix(std::size_t n, Measure measure);

    [[nodiscard]] auto size() const noexcept -> std::size_t { return n_; }
    [[nodiscard]] auto measure() const noexcept -> Measure { return measure_; }
    [[nodiscard]] auto at(std::size_t i, std::size_t j) const -> double { return values_.at(i * n_ + j); }
    void set(std::size_t i, std::size_t j, double value);

private:
    std::size_t n_;
    Measure measure_;
    std::vector<double> values_;
};

/// Fills every pair; features are computed once per graph.
auto similarity_matrix(std::span<const LabeledGraph> graphs, Measure m, Mode mode, bool labeled = true,
    const KernelParams & params = {}) -> SimilarityMatrix;

struct Ordering
{
    std::vector<std::size_t> sequence;
    Measure measure;
    /// For each position from the third on, the max similarity to the graphs
    /// already placed; the first entry is the similarity of the starting pair.
    std::vector<double> trace;
};

/// Start with the least similar pair, then repeatedly append the graph whose
/// largest similarity to the placed graphs is smallest. Ties go to the
/// smallest index (lexicographic for pairs).
auto greedy_order(const SimilarityMatrix & matrix) -> Ordering;

} // namespace mcs
