#include "detlab/rng.hpp"

#include <limits>

namespace detlab {

namespace {

constexpr std::uint64_t kGoldenGamma = 0x9e3779b97f4a7c15ULL;

std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

std::uint64_t Prng::next_u64() {
    state_ += kGoldenGamma;
    return mix(state_);
}

std::int64_t Prng::uniform(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) {
        throw InvalidRangeError("uniform: lo " + std::to_string(lo) + " > hi " +
                                std::to_string(hi));
    }
    if (lo == std::numeric_limits<std::int64_t>::min() &&
        hi == std::numeric_limits<std::int64_t>::max()) {
        throw InvalidRangeError("uniform: span 2^64 does not fit in 64 bits");
    }
    // span = hi - lo + 1 in two's-complement arithmetic; 1 <= span <= 2^64-1.
    const std::uint64_t span =
        static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    if (span == 1) return lo;

    // Accept u only below the largest multiple of span, so every value in
    // [0, span) is hit by the same number of u's.
    const std::uint64_t umax = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t overhang = (umax % span + 1) % span;  // == 2^64 mod span
    std::uint64_t u;
    do {
        u = next_u64();
    } while (overhang != 0 && u > umax - overhang);
    return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + u % span);
}

std::int64_t sample_uniform(Prng& p, std::int64_t lo, std::int64_t hi) {
    return p.uniform(lo, hi);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    Prng idx_stream(index);
    Prng child(base ^ idx_stream.next_u64());
    return child.next_u64();
}

}  // namespace detlab
