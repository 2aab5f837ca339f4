#pragma once

#include <cstdint>

namespace forestmatrix {

/// Small seedable generator (splitmix64). One word of state, cheap to
/// construct, which matters because simulations create one generator per
/// walk or trial.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Exactly uniform integer in [0, bound) by rejection. bound >= 1.
    std::uint64_t uniform_below(std::uint64_t bound) {
        const std::uint64_t limit = bound * (UINT64_MAX / bound);
        for (;;) {
            const std::uint64_t v = next();
            if (v < limit) return v % bound;
        }
    }

private:
    std::uint64_t state_;
};

/// Seed-splitting contract: the stream for task (a, b) under a master seed
/// is SplitMix64(derive_stream(master, a, b)). Each (a, b) pair gets an
/// independent stream, so results never depend on how tasks are scheduled
/// across workers.
inline std::uint64_t derive_stream(std::uint64_t master, std::uint64_t a, std::uint64_t b) {
    auto mix = [](std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    std::uint64_t h = mix(master + 0x9e3779b97f4a7c15ULL * (a + 1));
    return mix(h + 0x9e3779b97f4a7c15ULL * (b + 1));
}

}  // namespace forestmatrix
