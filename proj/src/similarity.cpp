#include <mcs/canonical.hpp>
#include <mcs/product.hpp>
#include <mcs/similarity.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <deque>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

namespace mcs {

auto to_string(Measure m) -> std::string
{
    switch (m) {
    case Measure::VH: return "VH";
    case Measure::WL: return "WL";
    case Measure::NSPD: return "NSPD";
    case Measure::MINMAX: return "MINMAX";
    }
    return "?";
}

auto parse_measure(std::string_view text) -> Measure
{
    std::string upper(text);
    std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char c) { return std::toupper(c); });
    if (upper == "VH")
        return Measure::VH;
    if (upper == "WL")
        return Measure::WL;
    if (upper == "NSPD")
        return Measure::NSPD;
    if (upper == "MINMAX")
        return Measure::MINMAX;
    throw std::invalid_argument("unknown similarity measure: " + std::string(text));
}

namespace {
    // Sparse feature histogram, sorted by key.
    using Features = std::vector<std::pair<std::uint64_t, double>>;

    auto to_features(const std::map<std::uint64_t, double> & counts) -> Features
    {
        return Features(counts.begin(), counts.end());
    }

    template <typename Combine>
    auto merge_sum(const Features & a, const Features & b, Combine combine) -> double
    {
        double total = 0;
        auto i = a.begin(), j = b.begin();
        while (i != a.end() && j != b.end()) {
            if (i->first == j->first) {
                total += combine(i->second, j->second);
                ++i;
                ++j;
            }
            else if (i->first < j->first)
                ++i;
            else
                ++j;
        }
        return total;
    }

    auto dot(const Features & a, const Features & b) -> double
    {
        return merge_sum(a, b, [](double x, double y) { return x * y; });
    }

    auto intersection(const Features & a, const Features & b) -> double
    {
        return merge_sum(a, b, [](double x, double y) { return std::min(x, y); });
    }

    auto normalize(double ab, double aa, double bb) -> double
    {
        if (aa <= 0 || bb <= 0)
            return (aa <= 0 && bb <= 0) ? 1.0 : 0.0;
        return std::clamp(ab / std::sqrt(aa * bb), 0.0, 1.0);
    }

    auto vh_features(const LabeledGraph & g) -> Features
    {
        std::map<std::uint64_t, double> counts;
        for (const auto & label : g.vertex_labels())
            counts[fnv1a(label)] += 1;
        return to_features(counts);
    }

    auto wl_features(const LabeledGraph & g, std::size_t iterations) -> Features
    {
        std::map<std::uint64_t, double> counts;
        std::vector<std::uint64_t> colour;
        for (const auto & label : g.vertex_labels())
            colour.push_back(fnv1a(label));
        for (std::size_t t = 0;; ++t) {
            for (auto c : colour)
                counts[hash_combine(hash_combine(kFnvOffset, t), c)] += 1;
            if (t == iterations)
                break;
            std::vector<std::uint64_t> next(colour.size());
            for (VertexId v = 0; v < g.vertex_count(); ++v) {
                std::vector<std::uint64_t> around;
                for (const auto & n : g.neighbors(v))
                    around.push_back(hash_combine(fnv1a(g.edge(n.edge).label), colour[n.vertex]));
                std::sort(around.begin(), around.end());
                auto h = hash_combine(kFnvOffset, colour[v]);
                for (auto x : around)
                    h = hash_combine(h, x);
                next[v] = h;
            }
            colour = std::move(next);
        }
        return to_features(counts);
    }

    auto all_distances(const LabeledGraph & g) -> std::vector<std::vector<std::size_t>>
    {
        const auto n = g.vertex_count();
        constexpr auto kFar = std::numeric_limits<std::size_t>::max();
        std::vector<std::vector<std::size_t>> dist(n, std::vector<std::size_t>(n, kFar));
        for (VertexId s = 0; s < n; ++s) {
            std::deque<VertexId> queue{s};
            dist[s][s] = 0;
            while (! queue.empty()) {
                auto v = queue.front();
                queue.pop_front();
                for (const auto & nb : g.neighbors(v))
                    if (dist[s][nb.vertex] == kFar) {
                        dist[s][nb.vertex] = dist[s][v] + 1;
                        queue.push_back(nb.vertex);
                    }
            }
        }
        return dist;
    }

    auto rooted_neighborhood_hash(const LabeledGraph & g, const std::vector<std::size_t> & dist_from_root,
        VertexId root, std::size_t radius) -> std::uint64_t
    {
        std::vector<VertexId> members{root};
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            if (v != root && dist_from_root[v] <= radius)
                members.push_back(v);
        std::vector<std::int64_t> slot(g.vertex_count(), -1);
        LabeledGraph h;
        for (auto v : members) {
            slot[v] = static_cast<std::int64_t>(h.vertex_count());
            h.add_vertex(v == root ? "^" + g.vertex_label(v) : g.vertex_label(v));
        }
        for (const auto & e : g.edges())
            if (slot[e.u] >= 0 && slot[e.v] >= 0)
                h.add_edge(static_cast<VertexId>(slot[e.u]), static_cast<VertexId>(slot[e.v]), e.label);
        return fnv1a(canonical(h).bytes);
    }

    auto nspd_features(const LabeledGraph & g, std::size_t max_radius, std::size_t max_distance) -> Features
    {
        const auto n = g.vertex_count();
        auto dist = all_distances(g);
        std::map<std::uint64_t, double> counts;
        for (std::size_t r = 0; r <= max_radius; ++r) {
            std::vector<std::uint64_t> rooted(n);
            for (VertexId v = 0; v < n; ++v)
                rooted[v] = rooted_neighborhood_hash(g, dist[v], v, r);
            for (VertexId u = 0; u < n; ++u)
                for (VertexId v = u; v < n; ++v) {
                    auto d = dist[u][v];
                    if (d > max_distance)
                        continue;
                    auto lo = std::min(rooted[u], rooted[v]), hi = std::max(rooted[u], rooted[v]);
                    auto key = hash_combine(hash_combine(hash_combine(hash_combine(kFnvOffset, r), d), lo), hi);
                    counts[key] += 1;
                }
        }
        return to_features(counts);
    }

    // Largest TYPE1 component of left * right, found from pairs of factor
    // edges without building the product.
    auto largest_type1_component(const LabeledGraph & left, const LabeledGraph & right, bool labeled) -> std::size_t
    {
        const auto nl = left.vertex_count(), nr = right.vertex_count();
        auto valid = [&](VertexId u, VertexId v) {
            return ! labeled || left.vertex_label(u) == right.vertex_label(v);
        };
        std::vector<std::size_t> parent(nl * nr);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](std::size_t x) {
            while (parent[x] != x)
                x = parent[x] = parent[parent[x]];
            return x;
        };
        auto unite = [&](VertexId u, VertexId v, VertexId u2, VertexId v2) {
            if (! valid(u, v) || ! valid(u2, v2))
                return;
            auto a = find(u * nr + v), b = find(u2 * nr + v2);
            if (a != b)
                parent[std::max(a, b)] = std::min(a, b);
        };
        for (const auto & e : left.edges())
            for (const auto & f : right.edges()) {
                if (labeled && e.label != f.label)
                    continue;
                unite(e.u, f.u, e.v, f.v);
                unite(e.u, f.v, e.v, f.u);
            }
        std::vector<std::size_t> size(nl * nr, 0);
        std::size_t best = 0;
        for (VertexId u = 0; u < nl; ++u)
            for (VertexId v = 0; v < nr; ++v)
                if (valid(u, v))
                    best = std::max(best, ++size[find(u * nr + v)]);
        return best;
    }

    auto prepared(const LabeledGraph & g, bool labeled) -> LabeledGraph
    {
        return labeled ? g : strip_labels(g);
    }

    struct FeatureKernel
    {
        Features (*extract)(const LabeledGraph &, const KernelParams &);
        double (*combine)(const Features &, const Features &);
    };

    auto kernel_for(Measure m) -> FeatureKernel
    {
        switch (m) {
        case Measure::VH: return {[](const LabeledGraph & g, const KernelParams &) { return vh_features(g); }, dot};
        case Measure::WL:
            return {[](const LabeledGraph & g, const KernelParams & k) { return wl_features(g, k.wl_iterations); },
                intersection};
        case Measure::NSPD:
            return {[](const LabeledGraph & g, const KernelParams & k) {
                        return nspd_features(g, k.nspd_radius, k.nspd_distance);
                    },
                dot};
        case Measure::MINMAX: break;
        }
        throw std::logic_error("minmax is not a feature kernel");
    }
}

auto vh_kernel(const LabeledGraph & a, const LabeledGraph & b) -> double
{
    auto fa = vh_features(a), fb = vh_features(b);
    return normalize(dot(fa, fb), dot(fa, fa), dot(fb, fb));
}

auto wl_oa_kernel(const LabeledGraph & a, const LabeledGraph & b, std::size_t iterations) -> double
{
    auto fa = wl_features(a, iterations), fb = wl_features(b, iterations);
    return normalize(intersection(fa, fb), intersection(fa, fa), intersection(fb, fb));
}

auto nspd_kernel(const LabeledGraph & a, const LabeledGraph & b, std::size_t max_radius, std::size_t max_distance)
    -> double
{
    auto fa = nspd_features(a, max_radius, max_distance), fb = nspd_features(b, max_radius, max_distance);
    return normalize(dot(fa, fb), dot(fa, fa), dot(fb, fb));
}

auto minmax_similarity(const LabeledGraph & a, const LabeledGraph & b, Mode mode, bool labeled) -> double
{
    auto left = mode == Mode::MECS ? line_graph(a).line_graph : a;
    auto right = mode == Mode::MECS ? line_graph(b).line_graph : b;
    const auto bound = left.vertex_count() * right.vertex_count();
    if (bound == 0)
        return 0.0;
    return static_cast<double>(largest_type1_component(left, right, labeled)) / static_cast<double>(bound);
}

auto similarity(Measure m, const LabeledGraph & a, const LabeledGraph & b, Mode mode, bool labeled,
    const KernelParams & params) -> double
{
    if (m == Measure::MINMAX)
        return minmax_similarity(a, b, mode, labeled);
    auto kernel = kernel_for(m);
    auto fa = kernel.extract(prepared(a, labeled), params);
    auto fb = kernel.extract(prepared(b, labeled), params);
    return normalize(kernel.combine(fa, fb), kernel.combine(fa, fa), kernel.combine(fb, fb));
}

SimilarityMatrix::SimilarityMatrix(std::size_t n, Measure measure) : n_(n), measure_(measure), values_(n * n, 0.0)
{
    for (std::size_t i = 0; i < n; ++i)
        values_[i * n + i] = 1.0;
}

void SimilarityMatrix::set(std::size_t i, std::size_t j, double value)
{
    if (i >= n_ || j >= n_)
        throw std::out_of_range("similarity matrix index");
    values_[i * n_ + j] = values_[j * n_ + i] = value;
}

auto similarity_matrix(std::span<const LabeledGraph> graphs, Measure m, Mode mode, bool labeled,
    const KernelParams & params) -> SimilarityMatrix
{
    const auto n = graphs.size();
    SimilarityMatrix matrix(n, m);
    if (m == Measure::MINMAX) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                matrix.set(i, j, minmax_similarity(graphs[i], graphs[j], mode, labeled));
        return matrix;
    }
    auto kernel = kernel_for(m);
    std::vector<Features> features;
    std::vector<double> self;
    for (const auto & g : graphs) {
        features.push_back(kernel.extract(prepared(g, labeled), params));
        self.push_back(kernel.combine(features.back(), features.back()));
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            matrix.set(i, j, normalize(kernel.combine(features[i], features[j]), self[i], self[j]));
    return matrix;
}

auto greedy_order(const SimilarityMatrix & matrix) -> Ordering
{
    const auto n = matrix.size();
    if (n < 2)
        throw std::invalid_argument("greedy_order needs at least two graphs");
    Ordering order{{}, matrix.measure(), {}};
    std::size_t bi = 0, bj = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (matrix.at(i, j) < matrix.at(bi, bj))
                bi = i, bj = j;
    order.sequence = {bi, bj};
    order.trace.push_back(matrix.at(bi, bj));
    std::vector<bool> placed(n, false);
    placed[bi] = placed[bj] = true;
    while (order.sequence.size() < n) {
        std::size_t best = n;
        double best_value = 0;
        for (std::size_t p = 0; p < n; ++p) {
            if (placed[p])
                continue;
            double worst = 0;
            for (auto l : order.sequence)
                worst = std::max(worst, matrix.at(l, p));
            if (best == n || worst < best_value) {
                best = p;
                best_value = worst;
            }
        }
        placed[best] = true;
        order.sequence.push_back(best);
        order.trace.push_back(best_value);
    }
    return order;
}

} // namespace mcs
