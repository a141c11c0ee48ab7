#!/usr/bin/env python3
"""Regenerates src/primes_pool.cpp.

The pool is the 8192 largest primes below 2^31, in descending order.
Keeping every prime below 2^31 lets the modular kernels do all residue
arithmetic in uint64_t without overflow (products stay below 2^62).
"""

import sys

COUNT = 8192
LIMIT = 1 << 31


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    # Deterministic Miller-Rabin for n < 3,215,031,751
    for a in (2, 3, 5, 7):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def main(out_path: str) -> None:
    primes = []
    n = LIMIT - 1
    while len(primes) < COUNT:
        if is_prime(n):
            primes.append(n)
        n -= 2 if n % 2 else 1
    with open(out_path, "w") as f:
        f.write("// Generated by scripts/make_prime_table.py -- do not edit by hand.\n")
        f.write("// The %d largest primes below 2^31, descending.\n" % COUNT)
        f.write("\n#include \"detlab/primes.hpp\"\n\n")
        f.write("namespace detlab {\n\n")
        f.write("const std::array<std::uint32_t, kPrimePoolSize> kPrimePool = {\n")
        for i in range(0, COUNT, 8):
            row = ", ".join("%dU" % p for p in primes[i : i + 8])
            f.write("    " + row + ",\n")
        f.write("};\n\n")
        f.write("}  // namespace detlab\n")
    print("wrote %d primes to %s (first %d, last %d)" % (COUNT, out_path, primes[0], primes[-1]))


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "src/primes_pool.cpp")
