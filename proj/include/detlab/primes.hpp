#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

namespace detlab {

/// Number of primes in the embedded pool.
inline constexpr std::size_t kPrimePoolSize = 8192;

/// The 8192 largest primes below 2^31, in descending order
/// (kPrimePool[0] == 2147483647). Generated by scripts/make_prime_table.py.
///
/// Staying below 2^31 keeps every product of two residues below 2^62, so the
/// per-prime kernels never leave uint64_t. The pool covers reconstructions of
/// up to roughly 253,000 bits (~76,000 decimal digits).
extern const std::array<std::uint32_t, kPrimePoolSize> kPrimePool;

}  // namespace detlab
