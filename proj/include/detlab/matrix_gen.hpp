#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "detlab/int_matrix.hpp"
#include "detlab/rng.hpp"

namespace detlab {

/// Inclusive integer range.
struct IntRange {
    std::int64_t lo;
    std::int64_t hi;
};

/// Configuration of the big-matrix generator.
///
/// The generated matrix is basic * diag(10^e_1, ..., 10^e_n) + small, where
/// basic has entries in basic_range, small has entries in small_range, and
/// the exponents come from `exponents`. Defaults reproduce the regime of the
/// bundled reference case: n = 14, basic in [-99, 99], small in [-999, 999],
/// exponents 123 .. 1412.
struct GenConfig {
    std::uint64_t seed = 0;
    std::size_t n = 14;
    IntRange basic_range{-99, 99};
    IntRange small_range{-999, 999};
    std::vector<unsigned> exponents = default_exponents(14);

    /// The 14 stock exponents, truncated to n, or extended past 14 by
    /// repeating the last gap (93).
    static std::vector<unsigned> default_exponents(std::size_t n);

    /// Throws InvalidArgumentError / InvalidRangeError on a bad config.
    void validate() const;
};

/// n x n matrix with entries drawn row-major from [range.lo, range.hi].
IntMatrix gen_basic_matrix(Prng& p, std::size_t n, IntRange range);

/// basic * diag(10^e_1, ..., 10^e_n) + small, exactly.
IntMatrix compose_big_matrix(const IntMatrix& basic, const std::vector<unsigned>& exponents,
                             const IntMatrix& small);

/// Generates the full big matrix for one configuration: a single stream
/// seeded with config.seed draws basic (row-major), then small (row-major).
IntMatrix generate(const GenConfig& config);

/// The bundled 14x14 reference case with independently verified determinant
/// (it renders as 1.95124219131987e9762). Compiled in; never read from disk.
struct GoldenFixture {
    IntMatrix basic;
    std::vector<unsigned> exponents;
    IntMatrix small;

    IntMatrix big() const { return compose_big_matrix(basic, exponents, small); }
};

GoldenFixture golden_fixture();

/// The rendering the golden determinant must reproduce.
inline constexpr const char* kGoldenRendering = "1.95124219131987e9762";

}  // namespace detlab
