#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "detlab/int_matrix.hpp"

namespace detlab {

/// The three independent exact determinant algorithms.
enum class DetAlgorithm { Bareiss, Cofactor, Modular };

std::string to_string(DetAlgorithm a);
DetAlgorithm det_algorithm_from_string(const std::string& name);

/// Fraction-free Bareiss elimination with row pivoting and sign tracking.
///
/// Pivots on the first nonzero entry in the current column; an all-zero
/// column returns 0 immediately. Every internal division must be exact;
/// a nonzero remainder throws InexactDivisionError (an implementation bug,
/// never a property of the input).
mpz_class det_bareiss(const IntMatrix& m);

/// Laplace expansion along the first row. Oracle for n <= 10 only;
/// larger matrices throw TooLargeForCofactorError.
mpz_class det_cofactor(const IntMatrix& m);

/// Smallest integer B with B^2 >= prod_i (sum_j m(i,j)^2); then |det m| <= B.
mpz_class hadamard_bound(const IntMatrix& m);

/// Exact determinant by Chinese remaindering over the embedded prime pool.
///
/// Consumes primes from kPrimePool (descending) until their product exceeds
/// 2*H+1 with H = hadamard_bound(m), computes det mod each prime, and
/// reconstructs with a symmetric lift (residue r maps to r - P when 2r > P).
/// Residue evaluation runs on `jobs` OpenMP threads (<= 1 means the serial
/// reference path, 0 means one per available core); the reconstruction is a
/// fixed-order fold, so the result is identical for every job count.
///
/// Throws PrimePoolExhaustedError (reporting the required product bit-length)
/// if the pool cannot cover 2*H+1.
mpz_class det_modular(const IntMatrix& m, int jobs = 1);

/// Serial reference for det_modular, kept as the comparison baseline.
mpz_class det_modular_serial(const IntMatrix& m);

/// Dispatch on the algorithm enum. Cofactor keeps its n <= 10 guard.
mpz_class compute_det(const IntMatrix& m, DetAlgorithm algo, int jobs = 1);

namespace kernel {

/// Determinant of m mod p, p an odd prime below 2^31. Gaussian elimination
/// over Z/p in uint64_t arithmetic.
std::uint64_t det_mod_prime(const IntMatrix& m, std::uint32_t p);

/// Residues of det(m) modulo each prime, serial loop.
std::vector<std::uint64_t> det_residues_serial(const IntMatrix& m,
                                               const std::vector<std::uint32_t>& primes);

/// Same values as det_residues_serial, OpenMP over the primes.
std::vector<std::uint64_t> det_residues_parallel(const IntMatrix& m,
                                                 const std::vector<std::uint32_t>& primes,
                                                 int jobs);

/// Primes from the pool whose product first exceeds `target`.
std::vector<std::uint32_t> select_primes(const mpz_class& target);

/// Fixed-order Chinese remainder fold of (residues, primes) into the
/// symmetric range (-P/2, P/2]. Order-independent of how residues were
/// produced: the fold order is the prime order.
mpz_class crt_symmetric(const std::vector<std::uint64_t>& residues,
                        const std::vector<std::uint32_t>& primes);

}  // namespace kernel

}  // namespace detlab
