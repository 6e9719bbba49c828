#pragma once

#include <cstdint>
#include <random>

namespace tgd {

/// Seedable source of uniforms in [0, 1) with 53 bits of resolution.
///
/// Backed by std::mt19937_64, whose output sequence is fixed by the standard,
/// and a hand-rolled bits-to-double map, so a seed reproduces the same
/// variates on every conforming toolchain. Single owner; movable, not shared.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    std::uint64_t seed() const noexcept { return seed_; }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

} // namespace tgd
