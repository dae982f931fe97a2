#include <mcs/canonical.hpp>

#include <algorithm>
#include <numeric>
#include <string>

namespace mcs {

namespace {
    using Colouring = std::vector<std::uint32_t>;

    struct Prepared
    {
        std::size_t n = 0;
        std::vector<Label> vertex_dictionary, edge_dictionary;
        std::vector<std::uint32_t> vertex_rank;
        // n*n, 0 for a non-edge, 1 + edge label rank otherwise
        std::vector<std::uint32_t> cells;
        std::vector<std::vector<std::pair<VertexId, std::uint32_t>>> adjacency;
    };

    auto rank_of(const std::vector<Label> & dictionary, const Label & label) -> std::uint32_t
    {
        return static_cast<std::uint32_t>(
            std::lower_bound(dictionary.begin(), dictionary.end(), label) - dictionary.begin());
    }

    auto prepare(const LabeledGraph & g) -> Prepared
    {
        Prepared p;
        p.n = g.vertex_count();
        p.vertex_dictionary = g.vertex_labels();
        std::sort(p.vertex_dictionary.begin(), p.vertex_dictionary.end());
        p.vertex_dictionary.erase(
            std::unique(p.vertex_dictionary.begin(), p.vertex_dictionary.end()), p.vertex_dictionary.end());
        for (const auto & e : g.edges())
            p.edge_dictionary.push_back(e.label);
        std::sort(p.edge_dictionary.begin(), p.edge_dictionary.end());
        p.edge_dictionary.erase(std::unique(p.edge_dictionary.begin(), p.edge_dictionary.end()), p.edge_dictionary.end());

        for (const auto & label : g.vertex_labels())
            p.vertex_rank.push_back(rank_of(p.vertex_dictionary, label));
        p.cells.assign(p.n * p.n, 0);
        p.adjacency.resize(p.n);
        for (const auto & e : g.edges()) {
            auto r = rank_of(p.edge_dictionary, e.label);
            p.cells[e.u * p.n + e.v] = p.cells[e.v * p.n + e.u] = r + 1;
            p.adjacency[e.u].emplace_back(e.v, r);
            p.adjacency[e.v].emplace_back(e.u, r);
        }
        return p;
    }

    auto colour_count(const Colouring & c) -> std::size_t
    {
        return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
    }

    // Replace colour values by their dense rank, preserving order.
    void densify(Colouring & c)
    {
        auto values = c;
        std::sort(values.begin(), values.end());
        values.erase(std::unique(values.begin(), values.end()), values.end());
        for (auto & x : c)
            x = static_cast<std::uint32_t>(std::lower_bound(values.begin(), values.end(), x) - values.begin());
    }

    // Colour refinement to the coarsest equitable colouring below c.
    void refine(const Prepared & g, Colouring & c)
    {
        std::vector<std::vector<std::uint64_t>> signature(g.n);
        std::vector<VertexId> order(g.n);
        auto classes = colour_count(c);
        while (true) {
            for (VertexId v = 0; v < g.n; ++v) {
                auto & sig = signature[v];
                sig.clear();
                sig.push_back(c[v]);
                for (auto [u, r] : g.adjacency[v])
                    sig.push_back((std::uint64_t{c[u]} << 32) | r);
                std::sort(sig.begin() + 1, sig.end());
            }
            std::iota(order.begin(), order.end(), 0);
            std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) { return signature[a] < signature[b]; });
            Colouring next(g.n);
            std::uint32_t colour = 0;
            for (std::size_t i = 0; i < g.n; ++i) {
                if (i > 0 && signature[order[i]] != signature[order[i - 1]])
                    ++colour;
                next[order[i]] = colour;
            }
            auto next_classes = g.n == 0 ? 0 : std::size_t{colour} + 1;
            c = std::move(next);
            if (next_classes == classes)
                break;
            classes = next_classes;
        }
    }

    auto individualize(const Colouring & c, VertexId v) -> Colouring
    {
        Colouring result(c.size());
        for (std::size_t w = 0; w < c.size(); ++w)
            result[w] = 2 * c[w] + (w == v ? 0 : 1);
        densify(result);
        return result;
    }

    class Searcher
    {
    public:
        explicit Searcher(const Prepared & g) : g_(g) {}

        void run()
        {
            Colouring initial(g_.vertex_rank);
            explore(std::move(initial));
        }

        [[nodiscard]] auto best_position() const -> const std::vector<VertexId> & { return best_position_; }

    private:
        const Prepared & g_;
        std::vector<VertexId> path_;
        bool have_first_ = false;
        std::vector<std::uint32_t> first_cert_, best_cert_;
        std::vector<VertexId> first_position_, best_position_;
        std::vector<VertexId> first_path_, best_path_;
        std::vector<std::vector<VertexId>> automorphisms_;

        auto explore(Colouring c) -> std::size_t
        {
            refine(g_, c);
            const auto depth = path_.size();
            if (colour_count(c) == g_.n)
                return leaf(c);

            // first non-singleton cell
            std::vector<std::size_t> sizes(colour_count(c), 0);
            for (auto x : c)
                ++sizes[x];
            auto target = static_cast<std::uint32_t>(
                std::find_if(sizes.begin(), sizes.end(), [](std::size_t s) { return s > 1; }) - sizes.begin());

            std::vector<VertexId> explored;
            for (VertexId v = 0; v < g_.n; ++v) {
                if (c[v] != target || same_orbit_as_explored(v, explored))
                    continue;
                path_.push_back(v);
                auto resume = explore(individualize(c, v));
                path_.pop_back();
                explored.push_back(v);
                if (resume < depth)
                    return resume;
            }
            return depth;
        }

        auto certificate(const Colouring & c, std::vector<VertexId> & inverse) const -> std::vector<std::uint32_t>
        {
            inverse.assign(g_.n, 0);
            for (VertexId v = 0; v < g_.n; ++v)
                inverse[c[v]] = v;
            std::vector<std::uint32_t> cert;
            cert.reserve(g_.n + g_.n * (g_.n - 1) / 2);
            for (std::size_t i = 0; i < g_.n; ++i)
                cert.push_back(g_.vertex_rank[inverse[i]]);
            for (std::size_t i = 0; i < g_.n; ++i)
                for (std::size_t j = i + 1; j < g_.n; ++j)
                    cert.push_back(g_.cells[inverse[i] * g_.n + inverse[j]]);
            return cert;
        }

        static auto common_prefix(const std::vector<VertexId> & a, const std::vector<VertexId> & b) -> std::size_t
        {
            std::size_t i = 0;
            while (i < a.size() && i < b.size() && a[i] == b[i])
                ++i;
            return i;
        }

        void record_automorphism(const std::vector<VertexId> & earlier_position, const Colouring & current)
        {
            std::vector<VertexId> inverse(g_.n);
            for (VertexId v = 0; v < g_.n; ++v)
                inverse[current[v]] = v;
            std::vector<VertexId> gamma(g_.n);
            for (VertexId v = 0; v < g_.n; ++v)
                gamma[v] = inverse[earlier_position[v]];
            automorphisms_.push_back(std::move(gamma));
        }

        auto leaf(const Colouring & c) -> std::size_t
        {
            std::vector<VertexId> inverse;
            auto cert = certificate(c, inverse);
            std::vector<VertexId> position(c.begin(), c.end());
            if (! have_first_) {
                have_first_ = true;
                first_cert_ = best_cert_ = cert;
                first_position_ = best_position_ = position;
                first_path_ = best_path_ = path_;
                return path_.size();
            }
            if (cert == first_cert_) {
                record_automorphism(first_position_, c);
                return common_prefix(path_, first_path_);
            }
            if (cert == best_cert_) {
                record_automorphism(best_position_, c);
                return common_prefix(path_, best_path_);
            }
            if (cert < best_cert_) {
                best_cert_ = std::move(cert);
                best_position_ = std::move(position);
                best_path_ = path_;
            }
            return path_.size();
        }

        // Orbits of the group generated by the known automorphisms that fix the
        // current path pointwise.
        auto same_orbit_as_explored(VertexId v, const std::vector<VertexId> & explored) const -> bool
        {
            if (explored.empty() || automorphisms_.empty())
                return false;
            std::vector<VertexId> parent(g_.n);
            std::iota(parent.begin(), parent.end(), 0);
            auto find = [&](VertexId x) {
                while (parent[x] != x)
                    x = parent[x] = parent[parent[x]];
                return x;
            };
            bool any = false;
            for (const auto & gamma : automorphisms_) {
                if (! std::all_of(path_.begin(), path_.end(), [&](VertexId p) { return gamma[p] == p; }))
                    continue;
                any = true;
                for (VertexId x = 0; x < g_.n; ++x) {
                    auto a = find(x), b = find(gamma[x]);
                    if (a != b)
                        parent[std::max(a, b)] = std::min(a, b);
                }
            }
            if (! any)
                return false;
            auto root = find(v);
            return std::any_of(explored.begin(), explored.end(), [&](VertexId u) { return find(u) == root; });
        }
    };

    void append_label(std::string & out, const Label & label)
    {
        out += std::to_string(label.size());
        out += ':';
        out += label;
    }
}

auto canonical_labeling(const LabeledGraph & g) -> CanonicalLabeling
{
    auto prepared = prepare(g);
    CanonicalLabeling result;
    std::string & bytes = result.form.bytes;
    bytes = std::to_string(g.vertex_count()) + ";";
    if (g.vertex_count() == 0)
        return result;

    Searcher searcher(prepared);
    searcher.run();
    result.position = searcher.best_position();

    std::vector<VertexId> inverse(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        inverse[result.position[v]] = v;
    for (auto v : inverse)
        append_label(bytes, g.vertex_label(v));
    bytes += ';';
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
        for (std::size_t j = i + 1; j < g.vertex_count(); ++j) {
            auto cell = prepared.cells[inverse[i] * prepared.n + inverse[j]];
            if (cell == 0)
                continue;
            bytes += std::to_string(i) + ',' + std::to_string(j) + ',';
            append_label(bytes, prepared.edge_dictionary[cell - 1]);
        }
    return result;
}

auto canonical(const LabeledGraph & g) -> CanonicalForm
{
    return canonical_labeling(g).form;
}

auto find_isomorphism(const LabeledGraph & a, const LabeledGraph & b) -> std::optional<std::vector<VertexId>>
{
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
        return std::nullopt;
    auto ca = canonical_labeling(a);
    auto cb = canonical_labeling(b);
    if (ca.form != cb.form)
        return std::nullopt;
    std::vector<VertexId> inverse_b(b.vertex_count());
    for (VertexId v = 0; v < b.vertex_count(); ++v)
        inverse_b[cb.position[v]] = v;
    std::vector<VertexId> map(a.vertex_count());
    for (VertexId v = 0; v < a.vertex_count(); ++v)
        map[v] = inverse_b[ca.position[v]];
    return map;
}

auto isomorphic(const LabeledGraph & a, const LabeledGraph & b) -> bool
{
    return find_isomorphism(a, b).has_value();
}

} // namespace mcs
