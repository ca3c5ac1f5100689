#pragma once

#include <cstdint>

namespace exnet {

// splitmix64 finalizer (Vigna / Steele-Lea-Flood). Used both as the
// sequence step and as the key mixer for stream splitting.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Stateless counter RNG. Every draw is a pure function of
// (seed, stream ids, counter), so adding firms, reordering evaluation, or
// changing thread counts never perturbs any other stream's draws.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    // Derive a substream key; chain as many ids as the context needs.
    CounterRng stream(std::uint64_t id) const {
        CounterRng r(mix64(seed_ ^ (id * 0x9e3779b97f4a7c15ULL + 0x7f4a7c15ULL)));
        return r;
    }
    CounterRng stream(std::uint64_t a, std::uint64_t b) const { return stream(a).stream(b); }
    CounterRng stream(std::uint64_t a, std::uint64_t b, std::uint64_t c) const {
        return stream(a).stream(b).stream(c);
    }

    std::uint64_t bits(std::uint64_t counter) const { return mix64(seed_ ^ mix64(counter + 1)); }

    // Uniform on [0, 1).
    double uniform(std::uint64_t counter) const {
        return static_cast<double>(bits(counter) >> 11) * 0x1.0p-53;
    }
    double uniform(std::uint64_t counter, double lo, double hi) const {
        return lo + (hi - lo) * uniform(counter);
    }

    // Standard normal via inverse-CDF of a single uniform draw.
    double normal(std::uint64_t counter) const;
    double normal(std::uint64_t counter, double mean, double sd) const {
        return mean + sd * normal(counter);
    }

    std::uint64_t key() const { return seed_; }

private:
    std::uint64_t seed_;
};

}  // namespace exnet
