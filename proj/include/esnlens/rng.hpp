#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <random>

namespace esnlens::rng {

/// SplitMix64 finalizer. Used to derive independent seeds from one root seed.
constexpr std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Seed derivation scheme: every consumer of randomness derives its own
/// stream as derive(root, {stream ids...}). Ids are small integers that
/// identify the purpose (layer index, trial index, ...), so sweeps and
/// re-runs are reproducible component by component.
constexpr std::uint64_t derive(std::uint64_t seed,
                               std::initializer_list<std::uint64_t> path) {
    std::uint64_t s = mix(seed);
    for (std::uint64_t id : path) s = mix(s ^ mix(id + 0x632be59bd9b4e019ULL));
    return s;
}

/// Deterministic random stream. Distribution code is hand-rolled on top of
/// std::mt19937_64 so sequences are identical across standard libraries.
class Stream {
  public:
    explicit Stream(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1) with 53 bits of precision.
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform01();
    }

    /// Standard normal via the polar (Marsaglia) method.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = uniform(-1.0, 1.0);
            v = uniform(-1.0, 1.0);
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double m = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * m;
        has_spare_ = true;
        return u * m;
    }

    std::uint64_t next_u64() { return engine_(); }

  private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace esnlens::rng
