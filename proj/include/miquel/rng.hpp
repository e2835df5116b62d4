#pragma once

#include <cstdint>
#include <random>

namespace miquel {

/// Deterministic, platform-independent random source. mt19937_64 output is
/// pinned by the standard; the [0,1) mapping below avoids the library
/// distributions, whose exact sequences are implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double unit() {  // in [0, 1)
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

    int index(int n) { return static_cast<int>(engine_() % static_cast<std::uint64_t>(n)); }

private:
    std::mt19937_64 engine_;
};

}  // namespace miquel
