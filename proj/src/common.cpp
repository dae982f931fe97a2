#include <mcs/common.hpp>

namespace mcs {

auto to_string(Mode mode) -> std::string
{
    return mode == Mode::MVCS ? "mvcs" : "mecs";
}

auto parse_mode(std::string_view text) -> Mode
{
    if (text == "mvcs" || text == "MVCS")
        return Mode::MVCS;
    if (text == "mecs" || text == "MECS")
        return Mode::MECS;
    throw std::invalid_argument("unknown mode '" + std::string(text) + "'");
}

Timeout::Timeout(std::size_t best_bound) :
    std::runtime_error("time limit exceeded (best bound " + std::to_string(best_bound) + ")"),
    best_bound_(best_bound)
{
}

Deadline::Deadline(std::chrono::duration<double> budget) :
    end_(Clock::now() + std::chrono::duration_cast<Clock::duration>(budget)),
    unlimited_(false)
{
}

auto Deadline::expired() const -> bool
{
    return ! unlimited_ && Clock::now() >= end_;
}

} // namespace mcs
