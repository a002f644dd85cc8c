#pragma once

#include <cstdint>

namespace firefleet {

/**
 * Stateless counter-based random generator.
 *
 * Every draw is a pure function of (seed, stream, counter), so consumers can
 * be evaluated in any order or in parallel and still produce identical
 * sequences. Extending a run from k to 2k samples keeps the first k draws
 * bit-identical, which the range and coverage estimators rely on.
 */
class Rng {
public:
    Rng(std::uint64_t seed, std::uint64_t stream) noexcept
        : key_(mix(mix(seed + kGamma) ^ (stream * kStreamSalt))) {}

    /** Child generator for an indexed substream (trial, grid point, ...). */
    Rng fork(std::uint64_t index) const noexcept {
        return Rng(key_, index + 1, Tag{});
    }

    std::uint64_t bits(std::uint64_t counter) const noexcept {
        return mix(key_ + (counter + 1) * kGamma);
    }

    /** Uniform double in [0, 1), 53 mantissa bits. */
    double uniform(std::uint64_t counter) const noexcept {
        return static_cast<double>(bits(counter) >> 11) * 0x1.0p-53;
    }

    double uniform(std::uint64_t counter, double lo, double hi) const noexcept {
        return lo + (hi - lo) * uniform(counter);
    }

private:
    struct Tag {};
    Rng(std::uint64_t parent_key, std::uint64_t salted_index, Tag) noexcept
        : key_(mix(parent_key ^ (salted_index * kForkSalt))) {}

    // SplitMix64 finalizer; passes the usual avalanche tests.
    static std::uint64_t mix(std::uint64_t z) noexcept {
        z += kGamma;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;
    static constexpr std::uint64_t kStreamSalt = 0xd1342543de82ef95ULL;
    static constexpr std::uint64_t kForkSalt = 0xaf251af3b0f025b5ULL;

    std::uint64_t key_;
};

// Stream ids keep independent consumers off each other's sequences.
namespace streams {
inline constexpr std::uint64_t kRangeSampling = 1;
inline constexpr std::uint64_t kDiskCoverage = 2;
inline constexpr std::uint64_t kPerimeterCoverage = 3;
inline constexpr std::uint64_t kReplacementSim = 4;
}  // namespace streams

}  // namespace firefleet
