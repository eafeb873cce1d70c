#pragma once

#include <cstdint>
#include <string_view>

namespace recourse::prng {

/// SplitMix64 step (Steele, Lea & Flood). Advances `state` and returns the
/// next output. Used for every seeded choice so outputs are identical across
/// platforms and standard library implementations.
constexpr std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Stateless draw for (seed, stream, index): the first SplitMix64 output of
/// state = seed ^ splitmix64(stream) advanced `index` golden-ratio steps.
constexpr std::uint64_t draw(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
    std::uint64_t s = stream;
    std::uint64_t state = seed ^ splitmix64(s);
    state += index * 0x9E3779B97F4A7C15ULL;
    return splitmix64(state);
}

/// 64-bit FNV-1a, used to derive a stream id from text.
constexpr std::uint64_t fnv1a(std::string_view text) {
    std::uint64_t h = 14695981039346656037ULL;
    for (char c : text) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace recourse::prng
