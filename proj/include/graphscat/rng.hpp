#pragma once

#include <cstdint>
#include <random>

namespace graphscat {

/// Deterministic-in-seed generator. The double mapping is hand-rolled so
/// the stream does not depend on the standard library's distribution
/// implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    double uniform() { return (gen_() >> 11) * 0x1.0p-53; } // [0, 1)
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    std::int64_t randint(std::int64_t lo, std::int64_t hi) { // inclusive
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<std::int64_t>(gen_() % span);
    }

    std::uint64_t raw() { return gen_(); }

    /// Stream splitting for per-instance seeds.
    static std::uint64_t mix(std::uint64_t seed, std::uint64_t index) {
        std::uint64_t x = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

private:
    std::mt19937_64 gen_;
};

} // namespace graphscat
