#include "support.hpp"

#include <mcs/embedding.hpp>
#include <mcs/oracle.hpp>
#include <mcs/product.hpp>

#include <doctest.h>

#include <bit>

using namespace mcs;
using namespace mcs::test;

namespace {

auto subsets(std::size_t n, std::size_t k) -> std::vector<std::vector<EdgeId>>
{
    std::vector<std::vector<EdgeId>> out;
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask)
        if (static_cast<std::size_t>(std::popcount(mask)) == k) {
            std::vector<EdgeId> s;
            for (EdgeId e = 0; e < n; ++e)
                if (mask & (1U << e))
                    s.push_back(e);
            out.push_back(s);
        }
    return out;
}

// Line graphs of the two edge sets agree under the pairing a[i] <-> b[i].
auto line_match(const LabeledGraph & ga, const std::vector<EdgeId> & a, const LabeledGraph & gb,
    const std::vector<EdgeId> & b) -> bool
{
    for (std::size_t i = 0; i < a.size(); ++i) {
        const auto & ea = ga.edge(a[i]);
        const auto & eb = gb.edge(b[i]);
        if (line_vertex_label(ea.label, ga.vertex_label(ea.u), ga.vertex_label(ea.v)) !=
            line_vertex_label(eb.label, gb.vertex_label(eb.u), gb.vertex_label(eb.v)))
            return false;
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            const auto & fa = ga.edge(a[j]);
            const auto & fb = gb.edge(b[j]);
            bool ta = ea.touches(fa.u) || ea.touches(fa.v);
            bool tb = eb.touches(fb.u) || eb.touches(fb.v);
            if (ta != tb)
                return false;
            if (ta) {
                auto ca = ea.touches(fa.u) ? fa.u : fa.v;
                auto cb = eb.touches(fb.u) ? fb.u : fb.v;
                if (ga.vertex_label(ca) != gb.vertex_label(cb))
                    return false;
            }
        }
    }
    return true;
}

// Largest k such that some k edges of a and k edges of b have matching line
// graphs; with correct set, the pairing must also come from a vertex map.
auto line_graph_mecs(const LabeledGraph & a, const LabeledGraph & b, bool connected, bool correct) -> std::size_t
{
    for (auto k = std::min(a.edge_count(), b.edge_count()); k > 0; --k)
        for (const auto & sa : subsets(a.edge_count(), k)) {
            if (connected && ! is_connected(edge_subgraph(a, sa)))
                continue;
            for (const auto & sb : subsets(b.edge_count(), k)) {
                auto perm = sb;
                do {
                    if (line_match(a, sa, b, perm) && (! correct || edge_correspondence_is_induced(a, sa, b, perm)))
                        return k;
                } while (std::next_permutation(perm.begin(), perm.end()));
            }
        }
    return 0;
}

} // namespace

TEST_SUITE("oracle")
{
    TEST_CASE("vertex oracle examples")
    {
        std::vector<LabeledGraph> kk{make_complete(3), make_complete(3)};
        auto r = oracle_mvcs(kk, true, true);
        CHECK(r.max_size == 3);
        CHECK(r.classes.size() == 1);
        std::vector<LabeledGraph> pk{make_path(3), make_complete(3)};
        auto s = oracle_mvcs(pk, true, true);
        CHECK(s.max_size == 2);
        REQUIRE(s.classes.size() == 1);
        CHECK(s.classes.front().form == canonical(make_path(2)));
        std::vector<LabeledGraph> eg{LabeledGraph{}, make_path(3)};
        CHECK(oracle_mvcs(eg, true, true).max_size == 0);
        std::vector<LabeledGraph> big{make_path(10), make_path(3)};
        CHECK_THROWS_AS(oracle_mvcs(big, true, true), SizeLimit);
    }

    TEST_CASE("edge oracle examples")
    {
        std::vector<LabeledGraph> tc{make_complete(3), make_star(3)};
        auto r = oracle_mecs(tc, true, true);
        CHECK(r.max_size == 2);
        REQUIRE(r.classes.size() == 1);
        CHECK(r.classes.front().form == canonical(make_path(3)));
        std::vector<LabeledGraph> kk{make_complete(3), make_complete(3)};
        CHECK(oracle_mecs(kk, true, true).max_size == 3);
        std::vector<LabeledGraph> ee{make_path(2), make_path(2)};
        CHECK(oracle_mecs(ee, true, true).max_size == 1);
        std::vector<LabeledGraph> big{make_complete(5), make_path(3)};
        CHECK_THROWS_AS(oracle_mecs(big, true, true), SizeLimit);
    }

    TEST_CASE("maximal clique oracle examples")
    {
        auto p = modular_product(make_path(2), make_path(2), false);
        auto c = oracle_maximal_cliques(p, true);
        REQUIRE(c.size() == 2);
        for (const auto & k : c)
            CHECK(k.size() == 2);
        auto e = modular_product(make_path(1), make_path(3), false);
        CHECK(oracle_maximal_cliques(e, false).size() == 3);
        auto big = modular_product(make_path(5), make_path(5), false);
        CHECK_THROWS_AS(oracle_maximal_cliques(big, false), SizeLimit);
    }

    TEST_CASE("oracle witnesses are embeddings")
    {
        TestRng rng(71);
        for (int round = 0; round < 50; ++round) {
            auto g = random_instance(rng, 2 + pick(rng, 2), 6, 7, true);
            for (bool connected : {true, false}) {
                auto v = oracle_mvcs(g, connected, true);
                for (const auto & cls : v.classes) {
                    CHECK(cls.graph.vertex_count() == v.max_size);
                    for (std::size_t i = 0; i < g.size(); ++i)
                        CHECK(is_induced_embedding(cls.graph, g[i], cls.witnesses[i].vertex_map));
                }
                auto e = oracle_mecs(g, connected, true);
                for (const auto & cls : e.classes) {
                    CHECK(cls.graph.edge_count() == e.max_size);
                    for (std::size_t i = 0; i < g.size(); ++i)
                        CHECK(is_edge_embedding(cls.graph, g[i], cls.witnesses[i].vertex_map,
                            cls.witnesses[i].edge_map));
                }
                // dropping the connectivity requirement never shrinks the answer
                if (connected) {
                    CHECK(oracle_mvcs(g, false, true).max_size >= v.max_size);
                    CHECK(oracle_mecs(g, false, true).max_size >= e.max_size);
                }
            }
        }
    }

    TEST_CASE("edge oracle agrees with corrected line-graph search")
    {
        TestRng rng(72);
        int overcounted = 0;
        for (int round = 0; round < 100; ++round) {
            auto a = random_sparse_graph(rng, 2 + pick(rng, 4), 6, {"C", "N"});
            auto b = random_sparse_graph(rng, 2 + pick(rng, 4), 6, {"C", "N"});
            if (round % 10 == 0)
                b = make_star(3);
            if (round % 10 == 0)
                a = make_complete(3);
            std::vector<LabeledGraph> pair{a, b};
            for (bool connected : {true, false}) {
                auto expected = oracle_mecs(pair, connected, true).max_size;
                CHECK(line_graph_mecs(a, b, connected, true) == expected);
                auto raw = line_graph_mecs(a, b, connected, false);
                CHECK(raw >= expected);
                if (raw > expected)
                    ++overcounted;
            }
        }
        // the triangle/claw rounds must exercise the correction
        CHECK(overcounted > 0);
    }
}
