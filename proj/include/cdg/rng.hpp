#pragma once

#include <cstdint>

namespace cdg {

// Counter-based generator (splitmix64 finalizer over a keyed counter).
// Every draw is a pure function of (seed, stream, counter), so substreams can
// be handed to worker threads and results do not depend on scheduling.
class Rng {
public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
        : seed_(seed), stream_(stream), counter_(0) {}

    // Independent substream; tag values must differ between siblings.
    Rng split(std::uint64_t tag) const { return Rng(seed_, mix(stream_ ^ mix(tag + 0x9e3779b97f4a7c15ull))); }

    std::uint64_t next_u64() { return mix(seed_ ^ mix(stream_ + mix(++counter_))); }

    // Uniform in [0, 1).
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    std::uint64_t next_below(std::uint64_t n) { return n ? next_u64() % n : 0; }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ull;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t counter_;
};

} // namespace cdg
