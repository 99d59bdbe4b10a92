#pragma once

#include <cstdint>
#include <random>

namespace specnoise {

// splitmix64: used only to derive independent stream seeds from a root seed,
// so parallel/ensemble work stays reproducible from one recorded integer.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Seed of stream `stream` derived from `root`. stream 0, 1, ... are
/// statistically independent generator seeds.
inline std::uint64_t derive_seed(std::uint64_t root, std::uint64_t stream) {
    std::uint64_t s = root ^ (0x5851f42d4c957f2dULL * (stream + 1));
    return splitmix64(s);
}

inline std::mt19937_64 make_rng(std::uint64_t root, std::uint64_t stream) {
    return std::mt19937_64(derive_seed(root, stream));
}

}  // namespace specnoise
