#pragma once

#include <cstdint>
#include <random>

namespace rankdiff {

/// Identifies one realization: a base seed plus the path index within a
/// batch. Named streams ("increments", "marks") are derived deterministically
/// from this record, so marks are independent of the driving noise and
/// batches are reproducible regardless of execution order.
struct SeedRecord {
    std::uint64_t base_seed = 0;
    std::uint64_t path_index = 0;
};

namespace detail {
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}
}  // namespace detail

enum class Stream : std::uint64_t { Increments = 1, Marks = 2 };

/// Engine for one named stream of one realization.
inline std::mt19937_64 make_stream(const SeedRecord& s, Stream which) {
    std::uint64_t x = detail::splitmix64(s.base_seed);
    x = detail::splitmix64(x ^ s.path_index);
    x = detail::splitmix64(x ^ static_cast<std::uint64_t>(which));
    return std::mt19937_64(x);
}

}  // namespace rankdiff
