#include "detlab/determinant.hpp"

#include <omp.h>

#include "detlab/primes.hpp"

namespace detlab {

std::string to_string(DetAlgorithm a) {
    switch (a) {
        case DetAlgorithm::Bareiss: return "bareiss";
        case DetAlgorithm::Cofactor: return "cofactor";
        case DetAlgorithm::Modular: return "modular";
    }
    return "?";
}

DetAlgorithm det_algorithm_from_string(const std::string& name) {
    if (name == "bareiss") return DetAlgorithm::Bareiss;
    if (name == "cofactor") return DetAlgorithm::Cofactor;
    if (name == "modular") return DetAlgorithm::Modular;
    throw InvalidArgumentError("unknown determinant algorithm: '" + name + "'");
}

namespace {

void require_square(const IntMatrix& m) {
    if (!m.is_square()) throw NotSquareError(m.rows(), m.cols());
}

}  // namespace

mpz_class det_bareiss(const IntMatrix& m) {
    require_square(m);
    const std::size_t n = m.rows();
    IntMatrix a = m;  // working copy
    int sign = 1;
    mpz_class prev(1);
    mpz_class num, q, r;

    for (std::size_t k = 0; k + 1 < n; ++k) {
        // Pivot: first row at or below k with a nonzero entry in column k.
        std::size_t pivot = k;
        while (pivot < n && a.at(pivot, k) == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != k) {
            a.swap_rows(pivot, k);
            sign = -sign;
        }
        const mpz_class& akk = a.at(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                num = a.at(i, j) * akk - a.at(i, k) * a.at(k, j);
                mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                if (r != 0) {
                    throw InexactDivisionError(
                        "Bareiss step (" + std::to_string(k) + "," + std::to_string(i) + "," +
                        std::to_string(j) + ") left remainder " + r.get_str());
                }
                a.at(i, j) = q;
            }
            a.at(i, k) = 0;
        }
        prev = akk;
    }
    mpz_class det = a.at(n - 1, n - 1);
    if (sign < 0) det = -det;
    return det;
}

mpz_class det_cofactor(const IntMatrix& m) {
    require_square(m);
    if (m.rows() > 10) throw TooLargeForCofactorError(m.rows());

    // Recursion on an index list avoids copying minors.
    struct Expander {
        const IntMatrix& a;
        mpz_class expand(std::vector<std::size_t>& cols, std::size_t row) {
            if (cols.size() == 1) return a.at(row, cols[0]);
            mpz_class sum(0);
            for (std::size_t j = 0; j < cols.size(); ++j) {
                const mpz_class& entry = a.at(row, cols[j]);
                if (entry == 0) continue;
                std::size_t removed = cols[j];
                cols.erase(cols.begin() + static_cast<long>(j));
                mpz_class minor = expand(cols, row + 1);
                cols.insert(cols.begin() + static_cast<long>(j), removed);
                if (j % 2 == 0) {
                    sum += entry * minor;
                } else {
                    sum -= entry * minor;
                }
            }
            return sum;
        }
    };
    std::vector<std::size_t> cols(m.cols());
    for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
    Expander e{m};
    return e.expand(cols, 0);
}

mpz_class hadamard_bound(const IntMatrix& m) {
    require_square(m);
    mpz_class product(1), norm2, sq;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        norm2 = 0;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            sq = m.at(i, j) * m.at(i, j);
            norm2 += sq;
        }
        product *= norm2;
    }
    // Smallest B with B^2 >= product.
    mpz_class b, rem;
    mpz_sqrtrem(b.get_mpz_t(), rem.get_mpz_t(), product.get_mpz_t());
    if (rem != 0) ++b;
    return b;
}

namespace kernel {

namespace {

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t result = 1;
    base %= p;
    while (exp) {
        if (exp & 1) result = result * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return result;
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) { return mod_pow(a, p - 2, p); }

}  // namespace

std::uint64_t det_mod_prime(const IntMatrix& m, std::uint32_t p) {
    const std::size_t n = m.rows();
    const std::uint64_t P = p;
    std::vector<std::uint64_t> a(n * n);
    for (std::size_t i = 0; i < n * n; ++i) {
        a[i] = mpz_fdiv_ui(m.entries()[i].get_mpz_t(), p);
    }

    std::uint64_t det = 1;
    bool negate = false;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && a[pivot * n + k] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != k) {
            for (std::size_t j = k; j < n; ++j) std::swap(a[pivot * n + j], a[k * n + j]);
            negate = !negate;
        }
        const std::uint64_t pv = a[k * n + k];
        det = det * pv % P;
        const std::uint64_t inv = mod_inv(pv, P);
        for (std::size_t i = k + 1; i < n; ++i) {
            const std::uint64_t factor = a[i * n + k] * inv % P;
            if (factor == 0) continue;
            for (std::size_t j = k; j < n; ++j) {
                std::uint64_t sub = factor * a[k * n + j] % P;
                a[i * n + j] = (a[i * n + j] + P - sub) % P;
            }
        }
    }
    if (negate && det != 0) det = P - det;
    return det;
}

std::vector<std::uint64_t> det_residues_serial(const IntMatrix& m,
                                               const std::vector<std::uint32_t>& primes) {
    std::vector<std::uint64_t> residues(primes.size());
    for (std::size_t i = 0; i < primes.size(); ++i) {
        residues[i] = det_mod_prime(m, primes[i]);
    }
    return residues;
}

std::vector<std::uint64_t> det_residues_parallel(const IntMatrix& m,
                                                 const std::vector<std::uint32_t>& primes,
                                                 int jobs) {
    std::vector<std::uint64_t> residues(primes.size());
    const long count = static_cast<long>(primes.size());
    if (jobs == 0) jobs = omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 8) num_threads(jobs)
    for (long i = 0; i < count; ++i) {
        residues[static_cast<std::size_t>(i)] =
            det_mod_prime(m, primes[static_cast<std::size_t>(i)]);
    }
    return residues;
}

std::vector<std::uint32_t> select_primes(const mpz_class& target) {
    std::vector<std::uint32_t> primes;
    mpz_class product(1);
    for (std::uint32_t p : kPrimePool) {
        if (product > target) break;
        primes.push_back(p);
        product *= p;
    }
    if (product <= target) {
        throw PrimePoolExhaustedError(mpz_sizeinbase(target.get_mpz_t(), 2));
    }
    return primes;
}

mpz_class crt_symmetric(const std::vector<std::uint64_t>& residues,
                        const std::vector<std::uint32_t>& primes) {
    // Incremental Garner fold in pool order: x == residues[i] (mod primes[i]).
    mpz_class x(0), product(1), term;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        const std::uint64_t p = primes[i];
        const std::uint64_t x_mod_p = mpz_fdiv_ui(x.get_mpz_t(), static_cast<unsigned long>(p));
        const std::uint64_t prod_mod_p =
            mpz_fdiv_ui(product.get_mpz_t(), static_cast<unsigned long>(p));
        const std::uint64_t delta = (residues[i] + p - x_mod_p) % p;
        const std::uint64_t t = delta * mod_inv(prod_mod_p, p) % p;
        term = product * mpz_class(static_cast<unsigned long>(t));
        x += term;
        product *= static_cast<unsigned long>(p);
    }
    // Symmetric lift: residues above P/2 represent negative integers.
    mpz_class twice = 2 * x;
    if (twice > product) x -= product;
    return x;
}

}  // namespace kernel

namespace {

mpz_class det_modular_impl(const IntMatrix& m, int jobs) {
    require_square(m);
    const mpz_class h = hadamard_bound(m);
    const mpz_class target = 2 * h + 1;
    const std::vector<std::uint32_t> primes = kernel::select_primes(target);
    const std::vector<std::uint64_t> residues =
        jobs <= 1 ? kernel::det_residues_serial(m, primes)
                  : kernel::det_residues_parallel(m, primes, jobs);
    return kernel::crt_symmetric(residues, primes);
}

}  // namespace

mpz_class det_modular(const IntMatrix& m, int jobs) {
    if (jobs == 0) jobs = omp_get_max_threads();
    return det_modular_impl(m, jobs);
}

mpz_class det_modular_serial(const IntMatrix& m) { return det_modular_impl(m, 1); }

mpz_class compute_det(const IntMatrix& m, DetAlgorithm algo, int jobs) {
    switch (algo) {
        case DetAlgorithm::Bareiss: return det_bareiss(m);
        case DetAlgorithm::Cofactor: return det_cofactor(m);
        case DetAlgorithm::Modular: return det_modular(m, jobs);
    }
    throw InvalidArgumentError("unknown DetAlgorithm");
}

}  // namespace detlab
