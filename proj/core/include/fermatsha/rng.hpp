#ifndef FERMATSHA_RNG_HPP
#define FERMATSHA_RNG_HPP

#include <cstdint>

namespace fermatsha {

// SplitMix64: tiny deterministic generator with identical output on every
// platform, which is what seeded verifiers need. Not for cryptography.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform-enough value in [0, bound); bound > 0. The multiply-shift map
    // keeps the sequence platform-independent.
    uint64_t below(uint64_t bound) {
        return static_cast<uint64_t>(
            (static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

private:
    uint64_t state_;
};

}  // namespace fermatsha

#endif
