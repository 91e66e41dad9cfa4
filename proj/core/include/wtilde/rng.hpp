/*
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#pragma once

#include <cstdint>
#include <cmath>
#include <numbers>
#include <random>

namespace wtilde {

// Deterministic 64-bit-seedable generator. Every random choice in the
// library flows through an Rng instance, so a run is fully reproducible
// from its seed. Instances are single-threaded; harnesses that want
// schedule-independent results derive one stream per trial or restart
// with Rng::stream.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Independent stream for (seed, index). The mapping is a fixed bit mix,
    // so stream i is the same no matter how many other streams were drawn.
    static Rng stream(std::uint64_t seed, std::uint64_t index) {
        return Rng(mix64(seed ^ mix64(index + 0x9e3779b97f4a7c15ULL)));
    }

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1) with 53-bit resolution. Built from raw engine bits
    // rather than std::uniform_real_distribution, whose output is not
    // pinned down by the standard.
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    // Standard normal deviate (Box-Muller, cosine branch).
    double gaussian() {
        const double u1 = 1.0 - uniform01();  // (0, 1], keeps log finite
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) *
               std::cos(2.0 * std::numbers::pi * u2);
    }

private:
    static std::uint64_t mix64(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    std::mt19937_64 engine_;
};

}  // namespace wtilde
