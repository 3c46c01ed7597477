#pragma once

#include <cstdint>

namespace svt {

namespace detail {

// SplitMix64 finalizer; also used to hash stream coordinates.
inline std::uint64_t mix64(std::uint64_t z) noexcept {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace detail

// Small counter-based uniform generator (SplitMix64). One instance per
// simulation replication; streams derived from distinct coordinates are
// statistically independent, so the harness can fan out across workers
// without sharing state.
class RngStream {
public:
    explicit RngStream(std::uint64_t state) noexcept : state_(state) {}

    std::uint64_t next() noexcept {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform on the open interval (0, 1); never returns an exact endpoint.
    double uniform01() noexcept {
        return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
    }

private:
    std::uint64_t state_;
};

// Deterministic child stream for replication `rep` of the grid cell with
// per-sample size `size`. Identical (seed, size, rep) always yields the same
// stream regardless of worker scheduling.
inline RngStream replication_stream(std::uint64_t seed, std::uint64_t size,
                                    std::uint64_t rep) noexcept {
    std::uint64_t h = detail::mix64(seed);
    h = detail::mix64(h ^ detail::mix64(size ^ 0xa076'1d64'78bd'642fULL));
    h = detail::mix64(h ^ detail::mix64(rep ^ 0xe703'7ed1'a0b4'28dbULL));
    return RngStream(h);
}

} // namespace svt
