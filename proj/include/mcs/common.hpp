#pragma once

#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mcs {

/// Which quantity a common subgraph maximizes.
enum class Mode { MVCS, MECS };

auto to_string(Mode mode) -> std::string;
auto parse_mode(std::string_view text) -> Mode;

/// Raised when a solve exceeds its time budget. Carries the best realized
/// solution size seen before the deadline (0 when none was completed).
class Timeout : public std::runtime_error
{
public:
    explicit Timeout(std::size_t best_bound);

    [[nodiscard]] auto best_bound() const noexcept -> std::size_t { return best_bound_; }

private:
    std::size_t best_bound_;
};

/// Wall-clock budget shared by all workers of one solve.
class Deadline
{
public:
    using Clock = std::chrono::steady_clock;

    Deadline() = default;
    explicit Deadline(std::chrono::duration<double> budget);

    [[nodiscard]] auto expired() const -> bool;
    [[nodiscard]] auto unlimited() const noexcept -> bool { return unlimited_; }

private:
    Clock::time_point end_{};
    bool unlimited_ = true;
};

/// Monotone maximum, safe to update from several threads.
class SharedBound
{
public:
    explicit SharedBound(std::size_t initial = 0) : value_(initial) {}

    [[nodiscard]] auto get() const noexcept -> std::size_t { return value_.load(std::memory_order_relaxed); }

    void raise(std::size_t candidate) noexcept
    {
        auto current = value_.load(std::memory_order_relaxed);
        while (candidate > current && ! value_.compare_exchange_weak(current, candidate, std::memory_order_relaxed)) {
        }
    }

private:
    std::atomic<std::size_t> value_;
};

// 64-bit FNV-1a, stable across platforms and runs.
constexpr std::uint64_t kFnvOffset = 14695981039346656037ULL;
constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

constexpr auto fnv1a(std::string_view text, std::uint64_t seed = kFnvOffset) -> std::uint64_t
{
    auto h = seed;
    for (unsigned char c : text) {
        h ^= c;
        h *= kFnvPrime;
    }
    return h;
}

constexpr auto hash_combine(std::uint64_t seed, std::uint64_t value) -> std::uint64_t
{
    for (int i = 0; i < 8; ++i) {
        seed ^= (value >> (8 * i)) & 0xffU;
        seed *= kFnvPrime;
    }
    return seed;
}

} // namespace mcs
