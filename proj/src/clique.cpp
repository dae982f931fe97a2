#include <mcs/clique.hpp>

#include <algorithm>

namespace mcs {

namespace {
    class DeadlineProbe
    {
    public:
        explicit DeadlineProbe(const Deadline & deadline) : deadline_(deadline) {}

        void tick()
        {
            if (deadline_.unlimited() || (++calls_ & 0x3ff) != 0)
                return;
            if (deadline_.expired())
                throw Timeout(0);
        }

    private:
        const Deadline & deadline_;
        std::size_t calls_ = 0;
    };

    auto report(std::vector<std::size_t> & members, const CliqueVisitor & visit)
    {
        auto sorted = members;
        std::sort(sorted.begin(), sorted.end());
        visit(sorted);
    }

    class ConnectedSearch
    {
    public:
        ConnectedSearch(const ProductGraph & p, std::size_t lower_bound, Maximality maximality,
            const CliqueVisitor & visit, const Deadline & deadline) :
            p_(p), lower_bound_(lower_bound), maximality_(maximality), visit_(visit), probe_(deadline)
        {
            const auto n = p.vertex_count();
            any_.reserve(n);
            for (std::size_t v = 0; v < n; ++v)
                any_.push_back(p.type1_row(v) | p.type0_row(v));
        }

        void run()
        {
            const auto n = p_.vertex_count();
            Bitset done(n);
            for (std::size_t u = 0; u < n; ++u) {
                const auto & t1 = p_.type1_row(u);
                const auto & t0 = p_.type0_row(u);
                Bitset candidates = t1 - done;
                Bitset disconnected = t0 - done;
                Bitset excluded = t1 & done;
                Bitset excluded_disconnected = t0 & done;
                clique_.assign(1, u);
                expand(candidates, disconnected, excluded, excluded_disconnected);
                done.set(u);
            }
        }

    private:
        const ProductGraph & p_;
        std::size_t lower_bound_;
        Maximality maximality_;
        const CliqueVisitor & visit_;
        DeadlineProbe probe_;
        std::vector<Bitset> any_;
        std::vector<std::size_t> clique_;

        // P: candidates reachable by TYPE1, D: candidates adjacent only by TYPE0,
        // X and Y: the same split for vertices already explored.
        void expand(Bitset & p, Bitset & d, Bitset & x, Bitset & y)
        {
            probe_.tick();
            if (clique_.size() + p.count() + d.count() < lower_bound_)
                return;
            if (p.none()) {
                bool maximal = x.none();
                if (maximality_ == Maximality::AmongAll)
                    maximal = maximal && d.none() && y.none();
                if (maximal && clique_.size() >= lower_bound_)
                    report(clique_, visit_);
                return;
            }
            for (auto v = p.find_first(); v != Bitset::npos; v = p.find_next(v)) {
                const auto & t1 = p_.type1_row(v);
                const auto & adjacent = any_[v];
                Bitset next_p = (p & adjacent) | (d & t1);
                Bitset next_d = (d & adjacent) - t1;
                Bitset next_x = (x & adjacent) | (y & t1);
                Bitset next_y = (y & adjacent) - t1;
                next_p.reset(v);
                clique_.push_back(v);
                expand(next_p, next_d, next_x, next_y);
                clique_.pop_back();
                p.reset(v);
                x.set(v);
                if (clique_.size() + p.count() + d.count() < lower_bound_)
                    return;
            }
        }
    };

    class PivotSearch
    {
    public:
        PivotSearch(const ProductGraph & p, std::size_t lower_bound, const CliqueVisitor & visit,
            const Deadline & deadline) :
            p_(p), lower_bound_(lower_bound), visit_(visit), probe_(deadline)
        {
            for (std::size_t v = 0; v < p.vertex_count(); ++v)
                any_.push_back(p.type1_row(v) | p.type0_row(v));
        }

        void run()
        {
            const auto n = p_.vertex_count();
            Bitset p(n), x(n);
            p.set();
            expand(p, x);
        }

    private:
        const ProductGraph & p_;
        std::size_t lower_bound_;
        const CliqueVisitor & visit_;
        DeadlineProbe probe_;
        std::vector<Bitset> any_;
        std::vector<std::size_t> clique_;

        void expand(Bitset & p, Bitset & x)
        {
            probe_.tick();
            if (clique_.size() + p.count() < lower_bound_)
                return;
            if (p.none()) {
                if (x.none() && clique_.size() >= lower_bound_ && ! clique_.empty())
                    report(clique_, visit_);
                return;
            }
            // pivot: vertex of P or X covering most of P
            std::size_t pivot = Bitset::npos, best = 0;
            for (const auto * pool : {&p, &x})
                for (auto u = pool->find_first(); u != Bitset::npos; u = pool->find_next(u)) {
                    auto covered = (p & any_[u]).count();
                    if (pivot == Bitset::npos || covered > best) {
                        pivot = u;
                        best = covered;
                    }
                }
            Bitset branch = p - any_[pivot];
            for (auto v = branch.find_first(); v != Bitset::npos; v = branch.find_next(v)) {
                Bitset next_p = p & any_[v];
                Bitset next_x = x & any_[v];
                clique_.push_back(v);
                expand(next_p, next_x);
                clique_.pop_back();
                p.reset(v);
                x.set(v);
            }
        }
    };

    auto collect(const ProductGraph & p, std::span<const std::size_t> indices) -> Clique
    {
        Clique c;
        c.indices.assign(indices.begin(), indices.end());
        for (auto i : indices)
            c.members.push_back(p.vertex(i));
        c.type1_connected = is_type1_connected(p, indices);
        return c;
    }
}

void for_each_maximal_connected_clique(const ProductGraph & p, std::size_t lower_bound, Maximality maximality,
    const CliqueVisitor & visit, const Deadline & deadline)
{
    ConnectedSearch search(p, lower_bound, maximality, visit, deadline);
    search.run();
}

void for_each_maximal_clique(const ProductGraph & p, std::size_t lower_bound, const CliqueVisitor & visit,
    const Deadline & deadline)
{
    if (p.vertex_count() == 0)
        return;
    PivotSearch search(p, lower_bound, visit, deadline);
    search.run();
}

auto enumerate_maximal_connected_cliques(const ProductGraph & p, std::size_t lower_bound, Maximality maximality,
    const Deadline & deadline) -> std::vector<Clique>
{
    std::vector<Clique> out;
    for_each_maximal_connected_clique(
        p, lower_bound, maximality, [&](std::span<const std::size_t> c) { out.push_back(collect(p, c)); }, deadline);
    std::sort(out.begin(), out.end(), [](const Clique & a, const Clique & b) { return a.indices < b.indices; });
    return out;
}

auto enumerate_maximal_cliques(const ProductGraph & p, std::size_t lower_bound, const Deadline & deadline)
    -> std::vector<Clique>
{
    std::vector<Clique> out;
    for_each_maximal_clique(p, lower_bound, [&](std::span<const std::size_t> c) { out.push_back(collect(p, c)); },
        deadline);
    std::sort(out.begin(), out.end(), [](const Clique & a, const Clique & b) { return a.indices < b.indices; });
    return out;
}

auto is_clique(const ProductGraph & p, std::span<const std::size_t> indices) -> bool
{
    for (std::size_t a = 0; a < indices.size(); ++a)
        for (std::size_t b = a + 1; b < indices.size(); ++b)
            if (! p.adjacent(indices[a], indices[b]))
                return false;
    return true;
}

auto is_type1_connected(const ProductGraph & p, std::span<const std::size_t> indices) -> bool
{
    if (indices.empty())
        return true;
    std::vector<bool> reached(indices.size(), false);
    std::vector<std::size_t> stack{0};
    reached[0] = true;
    std::size_t count = 1;
    while (! stack.empty()) {
        auto a = stack.back();
        stack.pop_back();
        for (std::size_t b = 0; b < indices.size(); ++b)
            if (! reached[b] && p.type1_row(indices[a]).test(indices[b])) {
                reached[b] = true;
                ++count;
                stack.push_back(b);
            }
    }
    return count == indices.size();
}

} // namespace mcs
