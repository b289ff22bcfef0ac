#pragma once

#include <cstdint>
#include <random>

namespace mis {

// SplitMix64 scramble step. Used to expand raw seeds and to derive
// independent sub-streams from (seed, iteration, index) tuples.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
    return splitmix64(a ^ splitmix64(b));
}

// Sub-stream id for construction `index` of iteration `iteration` under a
// run seed. Keeps construction outcomes independent of timing.
inline std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t iteration,
                                   std::uint64_t index) {
    return mix_seed(mix_seed(seed, iteration + 1), index + 1);
}

// Seedable 64-bit generator with a portable output stream.
//
// Backed by std::mt19937_64, whose raw output sequence is fixed by the
// standard; the seed goes through one SplitMix64 scramble first. Uniform
// doubles take the top 53 bits, so results are bit-identical across
// platforms (std::uniform_real_distribution is not).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

    // Uniform double in [0, 1).
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    // Uniform integer in [0, max), max >= 1. floor(u * max), with the
    // (never-taken at u < 1) boundary clamped to max - 1.
    int uniform_int(int max) {
        int v = static_cast<int>(static_cast<double>(max) * uniform01());
        return v >= max ? max - 1 : v;
    }

    std::uint64_t next_u64() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

}  // namespace mis
