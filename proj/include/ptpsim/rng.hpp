#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>

// Seeded substreams for reproducible runs. Each stream is an independently
// seeded std::mt19937_64; its output sequence is pinned by the C++ standard,
// so a given (root_seed, label) replays bit-identically on any platform.
// The transforms below use raw 64-bit draws only; std::*_distribution is
// avoided because its mapping is implementation-defined.

namespace ptpsim {

// FNV-1a, 64-bit.
constexpr std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ull;
    }
    return h;
}

// splitmix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_stream_seed(std::uint64_t root_seed, std::string_view label) {
    return mix64(root_seed ^ mix64(fnv1a64(label)));
}

class RngStream {
  public:
    RngStream(std::uint64_t root_seed, std::string label)
        : label_(std::move(label)), gen_(derive_stream_seed(root_seed, label_)) {}

    const std::string& label() const { return label_; }

    std::uint64_t next_u64() { return gen_(); }

    // Uniform in [0, 1), 53-bit resolution.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform in (0, 1]; Pareto inversion needs the closed upper end.
    double uniform_pos() { return 1.0 - uniform01(); }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Box-Muller, cosine branch only: two draws per sample, so the stream
    // position never depends on call history.
    double normal(double mean, double sigma) {
        constexpr double kTwoPi = 6.283185307179586;
        double u1 = uniform_pos();
        double u2 = uniform01();
        return mean + sigma * std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
    }

  private:
    std::string label_;
    std::mt19937_64 gen_;
};

} // namespace ptpsim
