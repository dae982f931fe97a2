#include "support.hpp"

#include <mcs/canonical.hpp>
#include <mcs/embedding.hpp>
#include <mcs/graph.hpp>

#include <doctest.h>

#include <deque>
#include <set>

using namespace mcs;
using namespace mcs::test;

TEST_SUITE("graph_core")
{
    TEST_CASE("edges are validated")
    {
        LabeledGraph g;
        auto a = g.add_vertex("C");
        auto b = g.add_vertex("N");
        CHECK(g.add_edge(a, b, "1") == 0);
        CHECK_THROWS_AS(g.add_edge(a, b, "2"), GraphError);
        CHECK_THROWS_AS(g.add_edge(b, a, "1"), GraphError);
        CHECK_THROWS_AS(g.add_edge(a, a, "1"), GraphError);
        CHECK_THROWS_AS(g.add_edge(a, 7, "1"), GraphError);
        CHECK(g.adjacent(b, a));
        CHECK(g.edge(*g.find_edge(b, a)).label == "1");
        CHECK_FALSE(g.find_edge(a, 1 + b).has_value());
    }

    TEST_CASE("line graph of small graphs")
    {
        // L(K3) = K3, L(K_{1,3}) = K3, L(P3) = K2, L(empty) = empty
        for (const auto & [g, n, m] : std::vector<std::tuple<LabeledGraph, std::size_t, std::size_t>>{
                 {make_complete(3), 3, 3}, {make_star(3), 3, 3}, {make_path(3), 2, 1}, {LabeledGraph{}, 0, 0},
                 {make_path(1), 0, 0}, {make_cycle(4), 4, 4}, {make_star(4), 4, 6}}) {
            auto l = line_graph(g);
            CHECK(l.line_graph.vertex_count() == n);
            CHECK(l.line_graph.edge_count() == m);
            CHECK(l.delta.size() == g.edge_count());
        }
    }

    TEST_CASE("line graph adjacency is edge incidence")
    {
        TestRng rng(11);
        for (int round = 0; round < 200; ++round) {
            auto g = random_graph(rng, 1 + pick(rng, 7), 0.4, {"C", "N"}, {"1", "2"});
            auto [l, delta] = line_graph(g);
            REQUIRE(l.vertex_count() == g.edge_count());
            for (VertexId i = 0; i < l.vertex_count(); ++i) {
                const auto & ei = g.edge(delta[i]);
                CHECK(l.vertex_label(i) ==
                    line_vertex_label(ei.label, g.vertex_label(ei.u), g.vertex_label(ei.v)));
                for (VertexId j = i + 1; j < l.vertex_count(); ++j) {
                    const auto & ej = g.edge(delta[j]);
                    int shared = (ei.touches(ej.u) ? 1 : 0) + (ei.touches(ej.v) ? 1 : 0);
                    CHECK(l.adjacent(i, j) == (shared == 1));
                    if (shared == 1) {
                        auto common = ei.touches(ej.u) ? ej.u : ej.v;
                        CHECK(l.edge(*l.find_edge(i, j)).label == g.vertex_label(common));
                    }
                }
            }
        }
    }

    TEST_CASE("line vertex labels distinguish bond and endpoint labels")
    {
        CHECK(line_vertex_label("1", "C", "N") == line_vertex_label("1", "N", "C"));
        CHECK(line_vertex_label("1", "C", "N") != line_vertex_label("2", "C", "N"));
        CHECK(line_vertex_label("1", "C", "N") != line_vertex_label("1", "C", "O"));
        CHECK(line_vertex_label("1", "CN", "O") != line_vertex_label("1", "C", "NO"));
    }

    TEST_CASE("connected components match breadth-first search")
    {
        TestRng rng(12);
        for (int round = 0; round < 200; ++round) {
            auto g = random_graph(rng, pick(rng, 9), 0.2);
            auto comps = connected_components(g);
            std::vector<int> seen(g.vertex_count(), -1);
            int count = 0;
            for (VertexId s = 0; s < g.vertex_count(); ++s) {
                if (seen[s] >= 0)
                    continue;
                std::deque<VertexId> q{s};
                seen[s] = count;
                while (! q.empty()) {
                    auto v = q.front();
                    q.pop_front();
                    for (const auto & n : g.neighbors(v))
                        if (seen[n.vertex] < 0) {
                            seen[n.vertex] = count;
                            q.push_back(n.vertex);
                        }
                }
                ++count;
            }
            REQUIRE(comps.size() == static_cast<std::size_t>(count));
            for (const auto & c : comps)
                for (auto v : c)
                    CHECK(seen[v] == seen[c.front()]);
            CHECK(is_connected(g) == (count <= 1));
        }
    }

    TEST_CASE("induced and edge subgraphs")
    {
        auto g = make_graph({"C", "N", "O", "C"}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
        std::vector<VertexId> vs{2, 0, 1};
        auto h = induced_subgraph(g, vs);
        CHECK(h.vertex_count() == 3);
        CHECK(h.edge_count() == 2);
        CHECK(h.vertex_label(0) == "O");
        CHECK(h.adjacent(0, 2));
        CHECK(h.adjacent(1, 2));
        CHECK_FALSE(h.adjacent(0, 1));
        std::vector<VertexId> bad{0, 9};
        CHECK_THROWS_AS(induced_subgraph(g, bad), GraphError);

        std::vector<EdgeId> es{3, 1};
        std::vector<VertexId> origin;
        auto s = edge_subgraph(g, es, &origin);
        CHECK(s.vertex_count() == 4);
        CHECK(s.edge_count() == 2);
        CHECK(origin == std::vector<VertexId>{0, 1, 2, 3});
        CHECK(s.edge(0).label == g.edge(3).label);
        CHECK(is_edge_embedding(s, g, origin, es));
    }

    TEST_CASE("strip labels")
    {
        auto g = make_graph({"C", "N"}, {{0, 1}}, "2");
        auto s = strip_labels(g);
        CHECK(s.vertex_label(1) == kUnlabeled);
        CHECK(s.edge(0).label == kUnlabeled);
        CHECK(s.edge_count() == 1);
    }
}

TEST_SUITE("canonical")
{
    TEST_CASE("examples")
    {
        // alternating C4 rotated by two positions is the same graph
        auto a = make_graph({"C", "N", "C", "N"}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
        auto b = make_graph({"C", "N", "C", "N"}, {{2, 3}, {3, 0}, {0, 1}, {1, 2}});
        CHECK(canonical(a) == canonical(b));
        CHECK(canonical(make_complete(3)) != canonical(make_path(3)));
        CHECK(canonical(make_path(3, "C")) != canonical(make_path(3, "N")));
        CHECK(canonical(make_path(3, "C", "1")) != canonical(make_path(3, "C", "2")));
        CHECK(canonical(LabeledGraph{}) == canonical(LabeledGraph{}));
        CHECK(canonical(LabeledGraph{}) != canonical(make_path(1)));
    }

    TEST_CASE("canonical form is invariant under relabeling")
    {
        TestRng rng(21);
        for (int round = 0; round < 500; ++round) {
            auto g = random_graph(rng, 1 + pick(rng, 8), 0.1 + 0.8 * coin(rng, 0.5), {"C", "C", "N"}, {"1", "2"});
            auto h = permuted(g, random_permutation(g.vertex_count(), rng), rng);
            CHECK(canonical(g) == canonical(h));
            auto iso = find_isomorphism(g, h);
            REQUIRE(iso.has_value());
            CHECK(is_induced_embedding(g, h, *iso));
        }
    }

    TEST_CASE("canonical form separates non-isomorphic graphs")
    {
        // compared against exhaustive bijection search
        TestRng rng(22);
        int distinct = 0, same = 0;
        while (distinct < 500) {
            auto n = 1 + pick(rng, 6);
            auto m_p = 0.2 + 0.6 * static_cast<double>(pick(rng, 3)) / 2.0;
            auto a = random_graph(rng, n, m_p, {"C", "N"}, {"1"});
            auto b = random_graph(rng, n, m_p, {"C", "N"}, {"1"});
            bool iso = brute_isomorphic(a, b);
            CHECK((canonical(a) == canonical(b)) == iso);
            CHECK(isomorphic(a, b) == iso);
            iso ? ++same : ++distinct;
        }
        CHECK(same > 0);
    }

    TEST_CASE("regular graphs with equal refinement")
    {
        // C6 and two triangles: identical degree sequences
        auto c6 = make_cycle(6);
        auto two = make_graph({"C", "C", "C", "C", "C", "C"}, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
        CHECK(canonical(c6) != canonical(two));
        // K3,3 and the prism
        auto k33 = make_graph(std::vector<Label>(6, "C"),
            {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
        auto prism = make_graph(std::vector<Label>(6, "C"),
            {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
        CHECK(canonical(k33) != canonical(prism));
        TestRng rng(23);
        CHECK(canonical(k33) == canonical(permuted(k33, random_permutation(6, rng), rng)));
        CHECK(canonical(prism) == canonical(permuted(prism, random_permutation(6, rng), rng)));
    }
}

TEST_SUITE("embedding")
{
    TEST_CASE("induced versus monomorphism")
    {
        auto p3 = make_path(3);
        auto k3 = make_complete(3);
        CHECK_FALSE(find_embedding(p3, k3, EmbeddingKind::Induced).has_value());
        auto mono = find_embedding(p3, k3, EmbeddingKind::Monomorphism);
        REQUIRE(mono.has_value());
        CHECK(find_embedding(make_path(2), k3, EmbeddingKind::Induced).has_value());
        CHECK_FALSE(find_embedding(make_path(2, "N"), k3, EmbeddingKind::Induced).has_value());
    }

    TEST_CASE("edge map to vertex map")
    {
        auto k3 = make_complete(3);
        auto claw = make_star(3);
        std::vector<EdgeId> all{0, 1, 2};
        // a triangle's edges cannot be a claw's edges under any vertex map
        CHECK_FALSE(vertex_map_from_edge_map(k3, claw, all).has_value());
        CHECK_FALSE(edge_correspondence_is_induced(k3, all, claw, all));
        auto p3 = make_path(3);
        std::vector<EdgeId> two{0, 1};
        auto vm = vertex_map_from_edge_map(p3, claw, two);
        REQUIRE(vm.has_value());
        CHECK(is_edge_embedding(p3, claw, *vm, two));
    }
}
