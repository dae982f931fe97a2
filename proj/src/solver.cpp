#include <mcs/embedding.hpp>
#include <mcs/product.hpp>
#include <mcs/solver.hpp>

#include <algorithm>
#include <atomic>
#include <cctype>
#include <bit>
#include <chrono>
#include <cmath>
#include <exception>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

namespace mcs {

auto to_string(OrderingKind k) -> std::string
{
    switch (k) {
    case OrderingKind::VH: return "VH";
    case OrderingKind::WL: return "WL";
    case OrderingKind::NSPD: return "NSPD";
    case OrderingKind::MINMAX: return "MINMAX";
    case OrderingKind::INPUT: return "INPUT";
    case OrderingKind::RANDOM: return "RANDOM";
    }
    return "?";
}

auto parse_ordering(std::string_view text) -> OrderingKind
{
    std::string upper(text);
    std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char c) { return std::toupper(c); });
    for (auto k : {OrderingKind::VH, OrderingKind::WL, OrderingKind::NSPD, OrderingKind::MINMAX, OrderingKind::INPUT,
             OrderingKind::RANDOM})
        if (to_string(k) == upper)
            return k;
    throw std::invalid_argument("unknown ordering: " + std::string(text));
}

namespace {
    using Clock = std::chrono::steady_clock;

    auto seconds_since(Clock::time_point start) -> double
    {
        return std::chrono::duration<double>(Clock::now() - start).count();
    }

    // Runs body(i) for i in [0, count) on up to `workers` threads; rethrows the
    // first exception after all threads have stopped.
    template <typename Body>
    void parallel_for(std::size_t count, std::size_t workers, Body body)
    {
        workers = std::max<std::size_t>(1, std::min(workers, count));
        if (workers == 1) {
            for (std::size_t i = 0; i < count; ++i)
                body(i);
            return;
        }
        std::atomic<std::size_t> next{0};
        std::atomic<bool> failed{false};
        std::exception_ptr error;
        std::mutex error_mutex;
        auto run = [&] {
            while (! failed.load()) {
                auto i = next.fetch_add(1);
                if (i >= count)
                    return;
                try {
                    body(i);
                }
                catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (! error)
                        error = std::current_exception();
                    failed = true;
                }
            }
        };
        std::vector<std::thread> threads;
        for (std::size_t t = 0; t < workers; ++t)
            threads.emplace_back(run);
        for (auto & t : threads)
            t.join();
        if (error)
            std::rethrow_exception(error);
    }

    // Per-input data shared by every stage.
    struct Factor
    {
        std::shared_ptr<const LabeledGraph> source;
        std::shared_ptr<const LabeledGraph> operand; // source, or its line graph for MECS
        // tables by path cap, built on first use
        mutable std::mutex paths_mutex;
        mutable std::vector<std::unique_ptr<PathTable>> paths;

        auto paths_up_to(std::size_t cap) const -> const PathTable &
        {
            std::lock_guard lock(paths_mutex);
            if (paths.size() <= cap)
                paths.resize(cap + 1);
            if (! paths[cap])
                paths[cap] = std::make_unique<PathTable>(*operand, cap, true);
            return *paths[cap];
        }
    };

    struct Context
    {
        const SolveConfig & config;
        std::vector<LabeledGraph> graphs;
        std::vector<std::unique_ptr<Factor>> factors;
        Deadline deadline;
        SolveStats stats;
        std::mutex stats_mutex;

        Context(std::span<const LabeledGraph> inputs, const SolveConfig & c) :
            config(c),
            deadline(std::isfinite(c.time_limit) ? Deadline(std::chrono::duration<double>(c.time_limit)) : Deadline())
        {
            if (config.path_cap < 1)
                throw std::invalid_argument("path_cap must be at least 1");
            for (const auto & g : inputs)
                graphs.push_back(config.labeled ? g : strip_labels(g));
            factors.resize(graphs.size());
        }

        auto factor(std::size_t i) -> const Factor &
        {
            if (! factors[i]) {
                auto f = std::make_unique<Factor>();
                f->source = std::make_shared<const LabeledGraph>(graphs[i]);
                f->operand = config.mode == Mode::MECS
                    ? std::make_shared<const LabeledGraph>(line_graph(graphs[i]).line_graph)
                    : f->source;
                factors[i] = std::move(f);
            }
            return *factors[i];
        }

        void check_deadline() const
        {
            if (deadline.expired())
                throw Timeout(0);
        }
    };

    auto empty_candidate(std::size_t inputs, const std::vector<std::size_t> & covered) -> Candidate
    {
        Candidate c;
        c.form = canonical(c.graph);
        c.witnesses.resize(inputs);
        for (auto i : covered)
            c.witnesses[i] = Witness{};
        return c;
    }

    auto covered_inputs(const Candidate & c) -> std::vector<std::size_t>
    {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < c.witnesses.size(); ++i)
            if (c.witnesses[i])
                out.push_back(i);
        return out;
    }

    // Index of the input a candidate is an unchanged copy of, if any.
    auto whole_input(const Candidate & c, const Context & ctx) -> std::optional<std::size_t>
    {
        auto covered = covered_inputs(c);
        if (covered.size() != 1)
            return std::nullopt;
        const auto & g = ctx.graphs[covered.front()];
        const auto & w = *c.witnesses[covered.front()];
        auto identity = [](const std::vector<std::uint32_t> & map, std::size_t n) {
            if (map.size() != n)
                return false;
            for (std::size_t i = 0; i < n; ++i)
                if (map[i] != i)
                    return false;
            return true;
        };
        if (ctx.config.mode == Mode::MVCS ? ! identity(w.vertex_map, g.vertex_count())
                                          : ! identity(w.edge_map, g.edge_count()))
            return std::nullopt;
        return covered.front();
    }

    // One new candidate produced from one clique, before global deduplication.
    struct Produced
    {
        std::vector<std::uint32_t> key; // sorted image in the new input
        Candidate candidate;
    };

    auto extend_mvcs(const Candidate & base, const Context & ctx, std::size_t next, std::span<const ProductVertex> members)
        -> Produced
    {
        std::vector<VertexId> right;
        for (const auto & m : members)
            right.push_back(m.right);
        Produced out;
        out.key.assign(right.begin(), right.end());
        std::sort(out.key.begin(), out.key.end());

        auto & c = out.candidate;
        c.graph = induced_subgraph(ctx.graphs[next], right);
        c.graph.set_name("");
        c.witnesses.resize(base.witnesses.size());
        for (std::size_t i = 0; i < base.witnesses.size(); ++i) {
            if (! base.witnesses[i])
                continue;
            Witness w;
            for (const auto & m : members)
                w.vertex_map.push_back(base.witnesses[i]->vertex_map[m.left]);
            c.witnesses[i] = std::move(w);
        }
        c.witnesses[next] = Witness{right, {}};
        return out;
    }

    // Returns nothing when the edge correspondence is not induced.
    auto extend_mecs(const Candidate & base, const Context & ctx, std::size_t next, std::span<const ProductVertex> members)
        -> std::optional<Produced>
    {
        std::vector<EdgeId> left, right;
        for (const auto & m : members) {
            left.push_back(m.left);
            right.push_back(m.right);
        }
        std::vector<VertexId> origin;
        auto graph = edge_subgraph(ctx.graphs[next], right, &origin);
        auto to_base = vertex_map_from_edge_map(graph, base.graph, left);
        if (! to_base)
            return std::nullopt;

        Produced out;
        out.key.assign(right.begin(), right.end());
        std::sort(out.key.begin(), out.key.end());
        auto & c = out.candidate;
        c.graph = std::move(graph);
        c.graph.set_name("");
        c.witnesses.resize(base.witnesses.size());
        for (std::size_t i = 0; i < base.witnesses.size(); ++i) {
            if (! base.witnesses[i])
                continue;
            const auto & old = *base.witnesses[i];
            Witness w;
            for (auto v : *to_base)
                w.vertex_map.push_back(old.vertex_map[v]);
            for (auto e : left)
                w.edge_map.push_back(old.edge_map[e]);
            c.witnesses[i] = std::move(w);
        }
        c.witnesses[next] = Witness{origin, right};
        return out;
    }

    struct CandidateOutcome
    {
        std::vector<Produced> produced;
        std::size_t cliques = 0;
        std::size_t repaired = 0;
        double product_seconds = 0, clique_seconds = 0;
    };

    auto expand_candidate(const Candidate & base, Context & ctx, std::size_t next, std::size_t lower_bound)
        -> CandidateOutcome
    {
        const auto & config = ctx.config;
        const auto & target = ctx.factor(next);
        CandidateOutcome outcome;

        auto start = Clock::now();
        // an unchanged input shares its factor data
        const Factor * origin = nullptr;
        if (auto i = whole_input(base, ctx))
            origin = &ctx.factor(*i);
        std::shared_ptr<const LabeledGraph> base_operand;
        if (origin)
            base_operand = origin->operand;
        else if (config.mode == Mode::MECS)
            base_operand = std::make_shared<const LabeledGraph>(line_graph(base.graph).line_graph);
        else
            base_operand = std::make_shared<const LabeledGraph>(base.graph);
        auto product = modular_product(base_operand, target.operand, true);
        if (config.connected && config.prune_type0 && product.type0_edge_count() > 0) {
            std::optional<PathTable> own;
            const auto & base_paths =
                origin ? origin->paths_up_to(config.path_cap) : own.emplace(*base_operand, config.path_cap, true);
            // target paths longer than any base path cannot match
            auto cap = std::clamp<std::size_t>(base_paths.longest_path_bound(), 1, config.path_cap);
            product = prune_type0_edges(product, base_paths, target.paths_up_to(cap));
        }
        outcome.product_seconds = seconds_since(start);

        if (product.vertex_count() == 0) {
            if (lower_bound == 0) {
                auto covered = covered_inputs(base);
                covered.push_back(next);
                outcome.produced.push_back(Produced{{}, empty_candidate(base.witnesses.size(), covered)});
            }
            return outcome;
        }

        start = Clock::now();
        std::set<std::vector<std::uint32_t>> seen;
        auto accept = [&](const ProductGraph & host, std::span<const std::size_t> indices) {
            ++outcome.cliques;
            std::vector<ProductVertex> members;
            for (auto i : indices)
                members.push_back(host.vertex(i));
            if (config.mode == Mode::MVCS) {
                auto produced = extend_mvcs(base, ctx, next, members);
                if (seen.insert(produced.key).second)
                    outcome.produced.push_back(std::move(produced));
                return;
            }
            if (auto produced = extend_mecs(base, ctx, next, members)) {
                if (seen.insert(produced->key).second)
                    outcome.produced.push_back(std::move(*produced));
                return;
            }
            ++outcome.repaired;
            Clique clique;
            clique.indices.assign(indices.begin(), indices.end());
            clique.members = members;
            clique.type1_connected = is_type1_connected(host, indices);
            for (const auto & part : repair_edge_correspondence(host, clique, base.graph, ctx.graphs[next], config.connected)) {
                if (part.members.size() < lower_bound)
                    continue;
                auto produced = extend_mecs(base, ctx, next, part.members);
                if (! produced)
                    throw std::logic_error("repaired clique is still not induced");
                if (seen.insert(produced->key).second)
                    outcome.produced.push_back(std::move(*produced));
            }
        };

        if (config.connected) {
            for (const auto & component : type_a_components(product)) {
                if (component.vertex_count() < std::max<std::size_t>(lower_bound, 1))
                    continue;
                for_each_maximal_connected_clique(component, lower_bound, Maximality::AmongConnected,
                    [&](std::span<const std::size_t> c) { accept(component, c); }, ctx.deadline);
            }
        }
        else
            for_each_maximal_clique(product, lower_bound, [&](std::span<const std::size_t> c) { accept(product, c); },
                ctx.deadline);
        outcome.clique_seconds = seconds_since(start);
        return outcome;
    }

    auto step_impl(const CandidateSet & current, Context & ctx, std::size_t next, std::size_t lower_bound)
        -> CandidateSet
    {
        const auto mode = ctx.config.mode;
        std::vector<const Candidate *> work;
        for (const auto & c : current.representatives)
            if (c.size(mode) >= lower_bound)
                work.push_back(&c);

        // factors are built before fan-out
        ctx.factor(next);
        for (const auto * c : work)
            if (auto i = whole_input(*c, ctx))
                ctx.factor(*i);
        std::vector<CandidateOutcome> outcomes(work.size());
        parallel_for(work.size(), ctx.config.parallelism, [&](std::size_t i) {
            ctx.check_deadline();
            outcomes[i] = expand_candidate(*work[i], ctx, next, lower_bound);
            auto start = Clock::now();
            for (auto & p : outcomes[i].produced)
                p.candidate.form = canonical(p.candidate.graph);
            std::lock_guard lock(ctx.stats_mutex);
            ctx.stats.dedup_seconds += seconds_since(start);
        });

        auto start = Clock::now();
        StageStats stage;
        stage.candidates_in = work.size();
        std::map<CanonicalForm, Candidate> merged;
        for (auto & outcome : outcomes) {
            stage.cliques += outcome.cliques;
            ctx.stats.repaired_cliques += outcome.repaired;
            ctx.stats.product_seconds += outcome.product_seconds;
            ctx.stats.clique_seconds += outcome.clique_seconds;
            for (auto & p : outcome.produced)
                if (p.candidate.size(mode) >= lower_bound)
                    merged.try_emplace(p.candidate.form, std::move(p.candidate));
        }
        CandidateSet result;
        result.stage = current.stage + 1;
        for (auto & [form, candidate] : merged)
            result.representatives.push_back(std::move(candidate));
        stage.candidates_out = result.representatives.size();
        ctx.stats.stages.push_back(stage);
        ctx.stats.dedup_seconds += seconds_since(start);
        return result;
    }

    auto initial_impl(Context & ctx, std::size_t input) -> CandidateSet
    {
        const auto & g = ctx.graphs[input];
        Candidate c;
        c.witnesses.resize(ctx.graphs.size());
        Witness w;
        if (ctx.config.mode == Mode::MVCS) {
            c.graph = g;
            for (VertexId v = 0; v < g.vertex_count(); ++v)
                w.vertex_map.push_back(v);
        }
        else {
            std::vector<EdgeId> all(g.edge_count());
            for (EdgeId e = 0; e < g.edge_count(); ++e)
                all[e] = e;
            c.graph = edge_subgraph(g, all, &w.vertex_map);
            w.edge_map = all;
        }
        c.graph.set_name("");
        c.form = canonical(c.graph);
        c.witnesses[input] = std::move(w);
        CandidateSet set;
        set.stage = 1;
        set.representatives.push_back(std::move(c));
        return set;
    }

    auto largest(const CandidateSet & set, Mode mode) -> const Candidate *
    {
        const Candidate * best = nullptr;
        for (const auto & c : set.representatives)
            if (! best || c.size(mode) > best->size(mode))
                best = &c;
        return best;
    }

    // Follows the largest candidate down to the last input; the size reached
    // there is a realized common subgraph and hence a valid lower bound.
    auto dive(const CandidateSet & from, Context & ctx, const std::vector<std::size_t> & order, std::size_t position,
        std::size_t bound) -> std::size_t
    {
        const auto mode = ctx.config.mode;
        const auto * start = largest(from, mode);
        if (! start || start->size(mode) < bound)
            return bound;
        CandidateSet current;
        current.stage = from.stage;
        current.representatives.push_back(*start);
        auto saved = ctx.stats.stages;
        for (auto k = position; k < order.size(); ++k) {
            auto next = step_impl(current, ctx, order[k], bound);
            const auto * best = largest(next, mode);
            if (! best) {
                ctx.stats.stages = saved;
                return bound;
            }
            current.representatives = {*best};
            current.stage = next.stage;
        }
        ctx.stats.stages = saved;
        return std::max(bound, current.representatives.front().size(mode));
    }

    auto choose_order_impl(const Context & ctx) -> std::vector<std::size_t>
    {
        const auto n = ctx.graphs.size();
        std::vector<std::size_t> order(n);
        for (std::size_t i = 0; i < n; ++i)
            order[i] = i;
        switch (ctx.config.ordering) {
        case OrderingKind::INPUT: return order;
        case OrderingKind::RANDOM: {
            std::mt19937_64 rng(ctx.config.seed);
            for (auto i = n; i > 1; --i)
                std::swap(order[i - 1], order[rng() % i]);
            return order;
        }
        case OrderingKind::VH:
        case OrderingKind::WL:
        case OrderingKind::NSPD:
        case OrderingKind::MINMAX: break;
        }
        const auto measure = parse_measure(to_string(ctx.config.ordering));
        auto matrix = similarity_matrix(ctx.graphs, measure, ctx.config.mode, true, ctx.config.kernel);
        return greedy_order(matrix).sequence;
    }

    auto solve_impl(std::span<const LabeledGraph> graphs, const SolveConfig & config, SolveStats * stats)
        -> std::vector<EmbeddingResult>
    {
        if (graphs.size() < 2)
            throw std::invalid_argument("solve needs at least two graphs");
        if (! (config.time_limit > 0))
            throw std::invalid_argument("time_limit must be positive");
        const auto started = Clock::now();
        Context ctx(graphs, config);
        const auto mode = config.mode;
        std::size_t bound = 0;
        try {
            auto t = Clock::now();
            auto order = choose_order_impl(ctx);
            ctx.stats.order = order;
            ctx.stats.ordering_seconds = seconds_since(t);

            auto current = initial_impl(ctx, order.front());
            for (std::size_t k = 1; k < order.size(); ++k) {
                if (config.bound_pruning)
                    bound = dive(current, ctx, order, k, bound);
                current = step_impl(current, ctx, order[k], bound);
            }

            std::size_t best = 0;
            for (const auto & c : current.representatives)
                best = std::max(best, c.size(mode));
            std::vector<EmbeddingResult> results;
            for (auto & c : current.representatives) {
                if (c.size(mode) != best)
                    continue;
                EmbeddingResult r;
                r.size = best;
                r.form = c.form;
                r.subgraph = std::move(c.graph);
                for (auto & w : c.witnesses)
                    r.per_input.push_back(w.value_or(Witness{}));
                results.push_back(std::move(r));
            }
            std::sort(results.begin(), results.end(),
                [](const EmbeddingResult & a, const EmbeddingResult & b) { return a.form < b.form; });
            ctx.stats.bound = std::max(bound, best);
            ctx.stats.total_seconds = seconds_since(started);
            if (stats)
                *stats = ctx.stats;
            return results;
        }
        catch (const Timeout &) {
            ctx.stats.bound = bound;
            ctx.stats.total_seconds = seconds_since(started);
            if (stats)
                *stats = ctx.stats;
            throw Timeout(bound);
        }
    }
}

auto solve(std::span<const LabeledGraph> graphs, const SolveConfig & config, SolveStats * stats)
    -> std::vector<EmbeddingResult>
{
    return solve_impl(graphs, config, stats);
}

auto solve_with_bound(std::span<const LabeledGraph> graphs, const SolveConfig & config, SolveStats * stats)
    -> std::vector<EmbeddingResult>
{
    auto c = config;
    c.bound_pruning = true;
    return solve_impl(graphs, c, stats);
}

auto choose_order(std::span<const LabeledGraph> graphs, const SolveConfig & config) -> std::vector<std::size_t>
{
    Context ctx(graphs, config);
    return choose_order_impl(ctx);
}

auto initial_candidates(std::span<const LabeledGraph> graphs, std::size_t input, const SolveConfig & config)
    -> CandidateSet
{
    Context ctx(graphs, config);
    return initial_impl(ctx, input);
}

auto step(const CandidateSet & candidates, std::span<const LabeledGraph> graphs, std::size_t next,
    const SolveConfig & config, std::size_t lower_bound) -> CandidateSet
{
    if (candidates.representatives.empty())
        throw std::invalid_argument("step needs at least one candidate");
    Context ctx(graphs, config);
    return step_impl(candidates, ctx, next, lower_bound);
}

auto repair_bad_triangles(const Clique & triangle, const LabeledGraph & left_source, const LabeledGraph & right_source)
    -> std::vector<Clique>
{
    if (triangle.members.size() != 3)
        throw std::invalid_argument("repair_bad_triangles expects a 3-member clique");
    std::vector<EdgeId> left, right;
    for (const auto & m : triangle.members) {
        left.push_back(m.left);
        right.push_back(m.right);
    }
    // three pairwise-touching edges span 3 vertices (triangle) or 4 (claw)
    auto left_span = edge_subgraph(left_source, left).vertex_count();
    auto right_span = edge_subgraph(right_source, right).vertex_count();
    if (left_span == right_span)
        return {triangle};
    std::vector<Clique> parts;
    for (std::size_t drop = 0; drop < 3; ++drop) {
        Clique part;
        for (std::size_t i = 0; i < 3; ++i) {
            if (i == drop)
                continue;
            part.members.push_back(triangle.members[i]);
            if (! triangle.indices.empty())
                part.indices.push_back(triangle.indices[i]);
        }
        part.type1_connected = true;
        parts.push_back(std::move(part));
    }
    return parts;
}

namespace {
    auto correspondence_ok(const Clique & c, std::span<const std::size_t> positions, const LabeledGraph & left_source,
        const LabeledGraph & right_source) -> bool
    {
        std::vector<EdgeId> left, right;
        for (auto i : positions) {
            left.push_back(c.members[i].left);
            right.push_back(c.members[i].right);
        }
        return edge_correspondence_is_induced(left_source, left, right_source, right);
    }

    auto positions_connected(const ProductGraph & p, const Clique & c, std::span<const std::size_t> positions) -> bool
    {
        std::vector<std::size_t> indices;
        for (auto i : positions)
            indices.push_back(c.indices[i]);
        return is_type1_connected(p, indices);
    }
}

auto repair_edge_correspondence(const ProductGraph & p, const Clique & clique, const LabeledGraph & left_source,
    const LabeledGraph & right_source, bool connected) -> std::vector<Clique>
{
    const auto size = clique.members.size();
    std::vector<std::size_t> everything(size);
    for (std::size_t i = 0; i < size; ++i)
        everything[i] = i;
    if (correspondence_ok(clique, everything, left_source, right_source))
        return {clique};

    // TYPE1 components of the clique; each one is a vertex-disjoint piece on both sides
    std::vector<std::vector<std::size_t>> components;
    std::vector<bool> placed(size, false);
    for (std::size_t s = 0; s < size; ++s) {
        if (placed[s])
            continue;
        placed[s] = true;
        std::vector<std::size_t> component{s};
        for (std::size_t head = 0; head < component.size(); ++head)
            for (std::size_t t = 0; t < size; ++t)
                if (! placed[t] && p.type1_row(clique.indices[component[head]]).test(clique.indices[t])) {
                    placed[t] = true;
                    component.push_back(t);
                }
        std::sort(component.begin(), component.end());
        components.push_back(std::move(component));
    }

    // For each component, its maximal valid subsets.
    std::vector<std::vector<std::vector<std::size_t>>> options;
    for (const auto & component : components) {
        if (correspondence_ok(clique, component, left_source, right_source)) {
            options.push_back({component});
            continue;
        }
        const auto k = component.size();
        if (k > 20)
            throw std::logic_error("edge correspondence repair on an unexpectedly large component");
        std::vector<std::uint32_t> masks;
        for (std::uint32_t mask = 1; mask < (1U << k); ++mask)
            masks.push_back(mask);
        std::stable_sort(masks.begin(), masks.end(),
            [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) > std::popcount(b); });
        std::vector<std::uint32_t> kept;
        for (auto mask : masks) {
            if (std::any_of(kept.begin(), kept.end(), [&](std::uint32_t k2) { return (mask & k2) == mask; }))
                continue;
            std::vector<std::size_t> subset;
            for (std::size_t b = 0; b < k; ++b)
                if (mask & (1U << b))
                    subset.push_back(component[b]);
            if (connected && ! positions_connected(p, clique, subset))
                continue;
            if (correspondence_ok(clique, subset, left_source, right_source))
                kept.push_back(mask);
        }
        std::vector<std::vector<std::size_t>> choice;
        for (auto mask : kept) {
            std::vector<std::size_t> subset;
            for (std::size_t b = 0; b < k; ++b)
                if (mask & (1U << b))
                    subset.push_back(component[b]);
            choice.push_back(std::move(subset));
        }
        options.push_back(std::move(choice));
    }

    // every combination of one option per component
    std::vector<Clique> out;
    std::vector<std::size_t> pick(options.size(), 0);
    while (true) {
        std::vector<std::size_t> positions;
        for (std::size_t c = 0; c < options.size(); ++c)
            positions.insert(positions.end(), options[c][pick[c]].begin(), options[c][pick[c]].end());
        std::sort(positions.begin(), positions.end());
        Clique part;
        for (auto i : positions) {
            part.indices.push_back(clique.indices[i]);
            part.members.push_back(clique.members[i]);
        }
        part.type1_connected = is_type1_connected(p, part.indices);
        out.push_back(std::move(part));
        std::size_t c = 0;
        while (c < options.size() && ++pick[c] == options[c].size())
            pick[c++] = 0;
        if (c == options.size())
            break;
    }
    return out;
}

} // namespace mcs
