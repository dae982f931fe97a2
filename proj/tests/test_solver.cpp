#include "support.hpp"

#include <mcs/oracle.hpp>
#include <mcs/product.hpp>
#include <mcs/solver.hpp>

#include <doctest.h>

#include <algorithm>

using namespace mcs;
using namespace mcs::test;

namespace {

auto config_for(Mode mode, bool connected, bool labeled) -> SolveConfig
{
    SolveConfig c;
    c.mode = mode;
    c.connected = connected;
    c.labeled = labeled;
    return c;
}

auto contains(const CandidateSet & set, const CanonicalForm & form) -> bool
{
    return std::any_of(set.representatives.begin(), set.representatives.end(),
        [&](const Candidate & c) { return c.form == form; });
}

// Tree with the path 1-2-4-3-5 and pendant edges 3-6 and 5-7 (ids shifted by one).
auto projection_tree() -> LabeledGraph
{
    return make_graph(std::vector<Label>(7, "C"), {{0, 1}, {1, 3}, {3, 2}, {2, 4}, {2, 5}, {4, 6}});
}

} // namespace

TEST_SUITE("solver")
{
    TEST_CASE("three triangles")
    {
        std::vector<LabeledGraph> g{make_complete(3), make_complete(3), make_complete(3)};
        auto r = solve(g, config_for(Mode::MVCS, true, true));
        REQUIRE(r.size() == 1);
        CHECK(r.front().size == 3);
        CHECK(r.front().form == canonical(make_complete(3)));
    }

    TEST_CASE("path and triangle share an edge")
    {
        std::vector<LabeledGraph> g{make_path(3), make_complete(3)};
        for (bool connected : {true, false}) {
            auto r = solve(g, config_for(Mode::MVCS, connected, true));
            REQUIRE(r.size() == 1);
            CHECK(r.front().size == 2);
            CHECK(r.front().form == canonical(make_path(2)));
        }
    }

    TEST_CASE("triangle and claw in edge mode")
    {
        std::vector<LabeledGraph> g{make_complete(3), make_star(3)};
        auto config = config_for(Mode::MECS, true, true);
        SolveStats stats;
        auto r = solve(g, config, &stats);
        REQUIRE(r.size() == 1);
        CHECK(r.front().size == 2);
        CHECK(r.front().form == canonical(make_path(3)));
        CHECK(stats.repaired_cliques > 0);
        CHECK(witnesses_valid(r, g, config));
    }

    TEST_CASE("empty inputs")
    {
        std::vector<LabeledGraph> g{LabeledGraph{}, make_path(3)};
        auto r = solve(g, config_for(Mode::MVCS, true, true));
        REQUIRE(r.size() == 1);
        CHECK(r.front().size == 0);
        CHECK(r.front().subgraph.vertex_count() == 0);
        // label-disjoint graphs share nothing
        std::vector<LabeledGraph> h{make_path(2, "C"), make_path(2, "N")};
        auto e = solve(h, config_for(Mode::MECS, true, true));
        REQUIRE(e.size() == 1);
        CHECK(e.front().size == 0);
        CHECK_THROWS(solve(std::vector<LabeledGraph>{make_path(2)}, SolveConfig{}));
    }

    TEST_CASE("step examples")
    {
        auto config = config_for(Mode::MVCS, true, true);
        std::vector<LabeledGraph> g{make_path(2), make_complete(3)};
        auto stage1 = initial_candidates(g, 0, config);
        REQUIRE(stage1.representatives.size() == 1);
        CHECK(stage1.stage == 1);
        auto stage2 = step(stage1, g, 1, config);
        REQUIRE(stage2.representatives.size() == 1);
        CHECK(stage2.representatives.front().form == canonical(make_path(2)));
        CHECK(stage2.stage == 2);

        CandidateSet empty;
        empty.stage = 1;
        Candidate none{LabeledGraph{}, canonical(LabeledGraph{}), {Witness{}, std::nullopt}};
        empty.representatives.push_back(none);
        auto after = step(empty, g, 1, config);
        REQUIRE(after.representatives.size() == 1);
        CHECK(after.representatives.front().graph.vertex_count() == 0);

        TestRng rng(51);
        for (int round = 0; round < 20; ++round) {
            auto h = random_graph(rng, 1 + pick(rng, 6), 0.4, {"C", "N"});
            std::vector<LabeledGraph> pair{h, h};
            auto s = step(initial_candidates(pair, 0, config_for(Mode::MVCS, false, true)), pair, 1,
                config_for(Mode::MVCS, false, true));
            CHECK(contains(s, canonical(h)));
        }
    }

    TEST_CASE("intermediate sets keep projections of non-maximum maximal cliques")
    {
        auto g = projection_tree();
        auto p = modular_product(g, g, false);
        // (1,5),(2,3),(4,4),(5,1),(3,2) with one-based ids
        std::vector<ProductVertex> members{{0, 4}, {1, 2}, {3, 3}, {4, 0}, {2, 1}};
        std::vector<std::size_t> k;
        for (auto m : members)
            k.push_back(*p.index_of(m));
        REQUIRE(is_clique(p, k));
        REQUIRE(is_type1_connected(p, k));
        // no product vertex extends it, by any edge type
        for (std::size_t v = 0; v < p.vertex_count(); ++v) {
            if (std::find(k.begin(), k.end(), v) != k.end())
                continue;
            auto grown = k;
            grown.push_back(v);
            CHECK_FALSE(is_clique(p, grown));
        }
        auto projection = project(p, members, Side::Right);
        CHECK(projection.vertex_count() == 5);
        CHECK(is_connected(projection));

        std::vector<LabeledGraph> pair{g, g};
        for (bool connected : {true, false}) {
            auto config = config_for(Mode::MVCS, connected, false);
            auto s = step(initial_candidates(pair, 0, config), pair, 1, config);
            CHECK(contains(s, canonical(strip_labels(projection))));
            auto r = solve(pair, config);
            auto o = oracle_mvcs(pair, connected, false);
            CHECK(sizes_of(r) == 7);
            CHECK(sizes_of(r) == o.max_size);
            CHECK(forms_of(r) == forms_of(o));
        }
    }

    TEST_CASE("bad triangle repair")
    {
        auto k3 = make_complete(3);
        auto claw = make_star(3);
        Clique t;
        t.members = {{0, 0}, {1, 1}, {2, 2}};
        t.type1_connected = true;
        auto parts = repair_bad_triangles(t, k3, claw);
        REQUIRE(parts.size() == 3);
        for (const auto & c : parts)
            CHECK(c.members.size() == 2);
        CHECK(repair_bad_triangles(t, k3, k3).size() == 1);
        CHECK(repair_bad_triangles(t, claw, claw).size() == 1);
        CHECK(repair_bad_triangles(t, claw, k3).size() == 3);
    }

    TEST_CASE("edge correspondence repair on line products")
    {
        auto k3 = make_complete(3);
        auto claw = make_star(3);
        auto lk = line_graph(k3).line_graph;
        auto lc = line_graph(claw).line_graph;
        auto p = modular_product(lk, lc, true);
        auto cliques = enumerate_maximal_connected_cliques(p, 0, Maximality::AmongConnected);
        REQUIRE_FALSE(cliques.empty());
        for (const auto & c : cliques) {
            auto parts = repair_edge_correspondence(p, c, k3, claw, true);
            for (const auto & part : parts)
                CHECK(part.members.size() <= 2);
        }
    }

    TEST_CASE("agreement with the oracle")
    {
        TestRng rng(52);
        for (int round = 0; round < 60; ++round) {
            bool labeled = coin(rng, 0.5);
            auto g = random_instance(rng, 2 + pick(rng, 3), 7, 8, labeled);
            for (auto mode : {Mode::MVCS, Mode::MECS})
                for (bool connected : {true, false}) {
                    auto config = config_for(mode, connected, labeled);
                    auto r = solve(g, config);
                    auto o = mode == Mode::MVCS ? oracle_mvcs(g, connected, labeled) : oracle_mecs(g, connected, labeled);
                    CHECK(sizes_of(r) == o.max_size);
                    CHECK(forms_of(r) == forms_of(o));
                    CHECK(witnesses_valid(r, g, config));
                }
        }
    }

    TEST_CASE("solve_with_bound matches solve without bound")
    {
        TestRng rng(53);
        for (int round = 0; round < 100; ++round) {
            auto g = random_instance(rng, 3, 7, 10, coin(rng, 0.5));
            auto config = config_for(coin(rng, 0.5) ? Mode::MVCS : Mode::MECS, coin(rng, 0.7), true);
            config.bound_pruning = false;
            auto plain = solve(g, config);
            auto bounded = solve_with_bound(g, config);
            CHECK(forms_of(plain) == forms_of(bounded));
            CHECK(sizes_of(plain) == sizes_of(bounded));
        }
    }

    TEST_CASE("results do not depend on input order or ordering heuristic")
    {
        TestRng rng(54);
        for (int round = 0; round < 15; ++round) {
            auto g = random_instance(rng, 3, 6, 8, true);
            auto config = config_for(round % 2 ? Mode::MECS : Mode::MVCS, true, true);
            auto reference = forms_of(solve(g, config));
            std::vector<std::size_t> idx{0, 1, 2};
            while (std::next_permutation(idx.begin(), idx.end())) {
                std::vector<LabeledGraph> h;
                for (auto i : idx)
                    h.push_back(g[i]);
                CHECK(forms_of(solve(h, config)) == reference);
            }
            for (auto k : {OrderingKind::VH, OrderingKind::WL, OrderingKind::NSPD, OrderingKind::INPUT,
                     OrderingKind::RANDOM}) {
                auto c = config;
                c.ordering = k;
                CHECK(forms_of(solve(g, c)) == reference);
            }
        }
    }

    TEST_CASE("parallel stages give the same answer")
    {
        TestRng rng(55);
        for (int round = 0; round < 10; ++round) {
            auto g = random_instance(rng, 4, 7, 9, true);
            auto config = config_for(Mode::MVCS, true, true);
            auto serial = forms_of(solve(g, config));
            config.parallelism = 4;
            CHECK(forms_of(solve(g, config)) == serial);
        }
    }

    TEST_CASE("choose_order")
    {
        std::vector<LabeledGraph> g{make_path(3), make_complete(3), make_star(3), make_cycle(4)};
        SolveConfig config;
        config.ordering = OrderingKind::INPUT;
        CHECK(choose_order(g, config) == std::vector<std::size_t>{0, 1, 2, 3});
        config.ordering = OrderingKind::RANDOM;
        config.seed = 9;
        auto a = choose_order(g, config);
        CHECK(a == choose_order(g, config));
        auto sorted = a;
        std::sort(sorted.begin(), sorted.end());
        CHECK(sorted == std::vector<std::size_t>{0, 1, 2, 3});
    }

    TEST_CASE("timeout reports the best bound")
    {
        TestRng rng(56);
        std::vector<LabeledGraph> g;
        for (int k = 0; k < 4; ++k)
            g.push_back(random_graph(rng, 30, 0.5));
        auto config = config_for(Mode::MVCS, true, false);
        config.time_limit = 0.05;
        CHECK_THROWS_AS(solve(g, config), Timeout);
    }
}
