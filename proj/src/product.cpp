#include <mcs/common.hpp>
#include <mcs/product.hpp>

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

namespace mcs {

ProductGraph::ProductGraph(std::shared_ptr<const LabeledGraph> left, std::shared_ptr<const LabeledGraph> right,
    bool labeled, std::vector<ProductVertex> vertices) :
    left_(std::move(left)),
    right_(std::move(right)),
    labeled_(labeled),
    vertices_(std::move(vertices)),
    type1_(vertices_.size(), Bitset(vertices_.size())),
    type0_(vertices_.size(), Bitset(vertices_.size()))
{
}

auto ProductGraph::index_of(ProductVertex v) const -> std::optional<std::size_t>
{
    auto it = std::find(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - vertices_.begin());
}

auto ProductGraph::edge_type(std::size_t i, std::size_t j) const -> EdgeType
{
    if (type1_.at(i).test(j))
        return EdgeType::Type1;
    if (type0_.at(i).test(j))
        return EdgeType::Type0;
    return EdgeType::None;
}

auto ProductGraph::type1_edge_count() const -> std::size_t
{
    std::size_t total = 0;
    for (const auto & row : type1_)
        total += row.count();
    return total / 2;
}

auto ProductGraph::type0_edge_count() const -> std::size_t
{
    std::size_t total = 0;
    for (const auto & row : type0_)
        total += row.count();
    return total / 2;
}

auto ProductGraph::induced(std::span<const std::size_t> indices) const -> ProductGraph
{
    std::vector<ProductVertex> members;
    members.reserve(indices.size());
    for (auto i : indices)
        members.push_back(vertices_.at(i));
    ProductGraph result(left_, right_, labeled_, std::move(members));
    for (std::size_t a = 0; a < indices.size(); ++a)
        for (std::size_t b = a + 1; b < indices.size(); ++b) {
            if (type1_[indices[a]].test(indices[b])) {
                result.type1_[a].set(b);
                result.type1_[b].set(a);
            }
            else if (type0_[indices[a]].test(indices[b])) {
                result.type0_[a].set(b);
                result.type0_[b].set(a);
            }
        }
    return result;
}

namespace {
    // Shared label dictionary for the two factors of one product.
    struct FactorLabels
    {
        std::vector<std::int32_t> vertex;
        std::vector<std::int32_t> edge; // n*n, -1 for non-edges
    };

    auto encode(const LabeledGraph & g, bool labeled, std::map<Label, std::int32_t> & vertex_ids,
        std::map<Label, std::int32_t> & edge_ids) -> FactorLabels
    {
        auto intern = [](std::map<Label, std::int32_t> & ids, const Label & label) {
            auto [it, inserted] = ids.try_emplace(label, static_cast<std::int32_t>(ids.size()));
            return it->second;
        };
        const auto n = g.vertex_count();
        FactorLabels out;
        out.vertex.reserve(n);
        for (const auto & label : g.vertex_labels())
            out.vertex.push_back(labeled ? intern(vertex_ids, label) : 0);
        out.edge.assign(n * n, -1);
        for (const auto & e : g.edges()) {
            auto id = labeled ? intern(edge_ids, e.label) : 0;
            out.edge[e.u * n + e.v] = out.edge[e.v * n + e.u] = id;
        }
        return out;
    }
}

auto modular_product(std::shared_ptr<const LabeledGraph> left, std::shared_ptr<const LabeledGraph> right, bool labeled)
    -> ProductGraph
{
    std::map<Label, std::int32_t> vertex_ids, edge_ids;
    auto a = encode(*left, labeled, vertex_ids, edge_ids);
    auto b = encode(*right, labeled, vertex_ids, edge_ids);
    const auto n_left = left->vertex_count(), n_right = right->vertex_count();

    std::vector<ProductVertex> vertices;
    for (VertexId u = 0; u < n_left; ++u)
        for (VertexId v = 0; v < n_right; ++v)
            if (a.vertex[u] == b.vertex[v])
                vertices.push_back(ProductVertex{u, v});

    ProductGraph result(std::move(left), std::move(right), labeled, vertices);
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
            auto [u, v] = vertices[i];
            auto [u2, v2] = vertices[j];
            if (u == u2 || v == v2)
                continue;
            auto x = a.edge[u * n_left + u2];
            auto y = b.edge[v * n_right + v2];
            if (x >= 0 && y >= 0) {
                if (x == y)
                    result.set_edge(i, j, EdgeType::Type1);
            }
            else if (x < 0 && y < 0)
                result.set_edge(i, j, EdgeType::Type0);
        }
    return result;
}

auto modular_product(const LabeledGraph & left, const LabeledGraph & right, bool labeled) -> ProductGraph
{
    return modular_product(std::make_shared<const LabeledGraph>(left), std::make_shared<const LabeledGraph>(right), labeled);
}

auto type_a_components(const ProductGraph & p) -> std::vector<ProductGraph>
{
    const auto n = p.vertex_count();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < n; ++i) {
        const auto & row = p.type1_row(i);
        for (auto j = row.find_next(i); j != Bitset::npos; j = row.find_next(j)) {
            auto a = find(i), b = find(j);
            if (a != b)
                parent[std::max(a, b)] = std::min(a, b);
        }
    }
    std::vector<std::vector<std::size_t>> groups;
    std::vector<std::int64_t> slot(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        auto root = find(i);
        if (slot[root] < 0) {
            slot[root] = static_cast<std::int64_t>(groups.size());
            groups.emplace_back();
        }
        groups[slot[root]].push_back(i);
    }
    std::vector<ProductGraph> components;
    components.reserve(groups.size());
    for (const auto & group : groups)
        components.push_back(p.induced(group));
    return components;
}

namespace {
    // Upper bound on the length of any simple path between two vertices: the
    // sum of (block size - 1) over the blocks on their block-cut tree path.
    // SIZE_MAX marks different components.
    auto longest_path_bounds(const LabeledGraph & g) -> std::vector<std::size_t>
    {
        auto n = g.vertex_count();
        std::vector<std::size_t> disc(n, 0), low(n, 0);
        std::vector<std::pair<VertexId, VertexId>> stack;
        std::vector<std::vector<VertexId>> blocks;
        std::size_t time = 0;
        auto visit = [&](auto & self, VertexId v, std::size_t parent_edge) -> void {
            disc[v] = low[v] = ++time;
            for (const auto & nb : g.neighbors(v)) {
                if (nb.edge == parent_edge)
                    continue;
                if (disc[nb.vertex] == 0) {
                    stack.emplace_back(v, nb.vertex);
                    self(self, nb.vertex, nb.edge);
                    low[v] = std::min(low[v], low[nb.vertex]);
                    if (low[nb.vertex] >= disc[v]) {
                        std::vector<VertexId> block;
                        while (true) {
                            auto [a, b] = stack.back();
                            stack.pop_back();
                            block.push_back(a);
                            block.push_back(b);
                            if (a == v && b == nb.vertex)
                                break;
                        }
                        std::sort(block.begin(), block.end());
                        block.erase(std::unique(block.begin(), block.end()), block.end());
                        blocks.push_back(std::move(block));
                    }
                }
                else if (disc[nb.vertex] < disc[v]) {
                    stack.emplace_back(v, nb.vertex);
                    low[v] = std::min(low[v], disc[nb.vertex]);
                }
            }
        };
        for (VertexId v = 0; v < n; ++v)
            if (disc[v] == 0)
                visit(visit, v, std::numeric_limits<std::size_t>::max());

        // block-cut tree: vertex nodes 0..n-1, block nodes n..
        std::vector<std::vector<std::size_t>> tree(n + blocks.size());
        for (std::size_t b = 0; b < blocks.size(); ++b)
            for (auto v : blocks[b]) {
                tree[v].push_back(n + b);
                tree[n + b].push_back(v);
            }
        constexpr auto unreached = std::numeric_limits<std::size_t>::max();
        std::vector<std::size_t> bounds(n * n, unreached), dist(tree.size());
        std::vector<std::size_t> queue;
        for (VertexId s = 0; s < n; ++s) {
            std::fill(dist.begin(), dist.end(), unreached);
            dist[s] = 0;
            queue.assign(1, s);
            for (std::size_t head = 0; head < queue.size(); ++head) {
                auto at = queue[head];
                for (auto next : tree[at]) {
                    if (dist[next] != unreached)
                        continue;
                    dist[next] = dist[at] + (next >= n ? blocks[next - n].size() - 1 : 0);
                    queue.push_back(next);
                }
            }
            std::copy(dist.begin(), dist.begin() + static_cast<std::ptrdiff_t>(n), bounds.begin() + static_cast<std::ptrdiff_t>(s * n));
        }
        return bounds;
    }
}

PathTable::PathTable(const LabeledGraph & g, std::size_t path_cap, bool labeled, std::size_t step_budget) :
    n_(g.vertex_count()),
    cap_(path_cap),
    offsets_(n_ * n_ + 1, 0),
    longer_(n_ * n_, false),
    exact_(n_, true)
{
    std::vector<std::uint64_t> vertex_hash, edge_hash;
    for (const auto & label : g.vertex_labels())
        vertex_hash.push_back(labeled ? fnv1a(label) : 0);
    for (const auto & e : g.edges())
        edge_hash.push_back(labeled ? fnv1a(e.label) : 0);

    auto bounds = longest_path_bounds(g);
    for (std::size_t i = 0; i < n_ * n_; ++i) {
        if (bounds[i] == std::numeric_limits<std::size_t>::max())
            continue;
        longer_[i] = bounds[i] > cap_;
        longest_ = std::max(longest_, bounds[i]);
    }

    std::vector<bool> on_path(n_, false);
    std::vector<std::pair<VertexId, std::uint64_t>> found;

    for (VertexId source = 0; source < n_; ++source) {
        found.clear();
        std::size_t steps = 0;
        bool finished = true;
        auto dfs = [&](auto & self, VertexId at, std::size_t depth, std::uint64_t h) -> void {
            for (const auto & n : g.neighbors(at)) {
                if (on_path[n.vertex])
                    continue;
                if (++steps > step_budget) {
                    finished = false;
                    return;
                }
                auto next = hash_combine(hash_combine(h, edge_hash[n.edge]), vertex_hash[n.vertex]);
                found.emplace_back(n.vertex, next);
                if (depth + 1 >= cap_)
                    continue;
                on_path[n.vertex] = true;
                self(self, n.vertex, depth + 1, next);
                on_path[n.vertex] = false;
                if (! finished)
                    return;
            }
        };
        on_path[source] = true;
        dfs(dfs, source, 0, hash_combine(kFnvOffset, vertex_hash[source]));
        on_path[source] = false;
        exact_[source] = finished;
        std::sort(found.begin(), found.end());
        found.erase(std::unique(found.begin(), found.end()), found.end());
        auto at = found.begin();
        for (VertexId target = 0; target < n_; ++target) {
            for (; at != found.end() && at->first == target; ++at)
                hashes_.push_back(at->second);
            offsets_[source * n_ + target + 1] = hashes_.size();
        }
    }
}

namespace {
    auto intersects(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) -> bool
    {
        auto i = a.begin(), j = b.begin();
        while (i != a.end() && j != b.end()) {
            if (*i == *j)
                return true;
            if (*i < *j)
                ++i;
            else
                ++j;
        }
        return false;
    }
}

auto prune_type0_edges(const ProductGraph & p, const PathTable & left, const PathTable & right) -> ProductGraph
{
    ProductGraph result = p;
    for (std::size_t i = 0; i < p.vertex_count(); ++i) {
        const auto & row = p.type0_row(i);
        for (auto j = row.find_next(i); j != Bitset::npos; j = row.find_next(j)) {
            auto [u, v] = p.vertex(i);
            auto [u2, v2] = p.vertex(j);
            if (! left.complete(u) || ! right.complete(v))
                continue;
            if (left.has_longer_path(u, u2) && right.has_longer_path(v, v2))
                continue;
            if (intersects(left.paths(u, u2), right.paths(v, v2)))
                continue;
            result.set_edge(i, j, EdgeType::None);
        }
    }
    return result;
}

auto prune_type0_edges(const ProductGraph & p, std::size_t path_cap) -> ProductGraph
{
    if (path_cap < 1)
        throw std::invalid_argument("path_cap must be at least 1");
    PathTable left(p.left(), path_cap, p.labeled());
    PathTable right(p.right(), path_cap, p.labeled());
    return prune_type0_edges(p, left, right);
}

auto project(const ProductGraph & p, std::span<const ProductVertex> members, Side side) -> LabeledGraph
{
    std::vector<VertexId> ids;
    ids.reserve(members.size());
    for (const auto & m : members)
        ids.push_back(side == Side::Left ? m.left : m.right);
    auto sorted = ids;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw GraphError("project: two members share a coordinate");
    return induced_subgraph(side == Side::Left ? p.left() : p.right(), ids);
}

} // namespace mcs
