#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "detlab/errors.hpp"

namespace detlab {

/// Identifier of the mixing algorithm, stamped into every report.
/// The algorithm itself is written out in the README together with
/// reference output vectors.
inline constexpr const char* kGeneratorId = "splitmix64-v1";

/// Deterministic 64-bit generator (splitmix64).
///
/// State advances by the 64-bit golden-gamma constant and each output is the
/// splitmix64 finalizer of the new state. Identical (generator_id, seed)
/// yields identical output streams on every platform.
class Prng {
public:
    explicit Prng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64();

    /// Uniform draw on [lo, hi] by rejection sampling; no modulo bias.
    /// Throws InvalidRangeError if lo > hi or the span does not fit in
    /// 64 bits (lo == INT64_MIN and hi == INT64_MAX).
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);

private:
    std::uint64_t state_;
};

/// Uniform integer on [lo, hi] drawn from p. Free-function form of
/// Prng::uniform for call sites that read better with the stream explicit.
std::int64_t sample_uniform(Prng& p, std::int64_t lo, std::int64_t hi);

/// Independent child seed for task `index` under `base` seed:
/// one splitmix64 step of (base XOR splitmix64(index)). Workers seeded this
/// way produce streams that do not depend on scheduling order.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

}  // namespace detlab
