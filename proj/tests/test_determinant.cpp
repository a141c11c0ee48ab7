#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "detlab/determinant.hpp"
#include "detlab/errors.hpp"
#include "detlab/matrix_gen.hpp"
#include "detlab/rng.hpp"

#include "test_support.hpp"

using namespace detlab;

namespace {

IntMatrix random_matrix(Prng& p, std::size_t n, std::int64_t lo, std::int64_t hi) {
    return gen_basic_matrix(p, n, IntRange{lo, hi});
}

}  // namespace

TEST_CASE("algorithm name round-trip") {
    for (DetAlgorithm a : {DetAlgorithm::Bareiss, DetAlgorithm::Cofactor, DetAlgorithm::Modular}) {
        CHECK(det_algorithm_from_string(to_string(a)) == a);
    }
    CHECK_THROWS_AS(det_algorithm_from_string("gauss"), InvalidArgumentError);
}

TEST_CASE("textbook cases agree across all three algorithms") {
    const IntMatrix id3 = IntMatrix::identity(3);
    const IntMatrix ad_bc{{1, 2}, {3, 4}};
    const IntMatrix tri{{3, 4}, {0, 5}};
    const IntMatrix neg1{{-7}};

    for (const IntMatrix* m : {&id3, &ad_bc, &tri, &neg1}) {
        const mpz_class b = det_bareiss(*m);
        CHECK(b == det_cofactor(*m));
        CHECK(b == det_modular(*m));
    }
    CHECK(det_bareiss(id3) == 1);
    CHECK(det_bareiss(ad_bc) == -2);
    CHECK(det_cofactor(IntMatrix::identity(4)) == 1);
    CHECK(det_cofactor(tri) == 15);
    CHECK(det_modular(neg1) == -7);  // sign recovered by the symmetric lift
}

TEST_CASE("non-square input is rejected everywhere") {
    const IntMatrix rect(2, 3);
    CHECK_THROWS_AS(det_bareiss(rect), NotSquareError);
    CHECK_THROWS_AS(det_cofactor(rect), NotSquareError);
    CHECK_THROWS_AS(det_modular(rect), NotSquareError);
    CHECK_THROWS_AS(hadamard_bound(rect), NotSquareError);
}

TEST_CASE("cofactor expansion is capped at 10x10") {
    CHECK(det_cofactor(IntMatrix::identity(10)) == 1);
    CHECK_THROWS_AS(det_cofactor(IntMatrix::identity(11)), TooLargeForCofactorError);
}

TEST_CASE("bareiss pivoting: zero columns, row swaps, singular input") {
    CHECK(det_bareiss(IntMatrix{{0, 1}, {0, 2}}) == 0);   // all-zero column
    CHECK(det_bareiss(IntMatrix{{0, 1}, {1, 0}}) == -1);  // one swap flips the sign
    CHECK(det_bareiss(IntMatrix{{1, 2}, {2, 4}}) == 0);   // rank deficient
    CHECK(det_bareiss(IntMatrix{{0, 0}, {0, 0}}) == 0);
}

TEST_CASE("hadamard_bound examples and minimality") {
    CHECK(hadamard_bound(IntMatrix::identity(2)) == 1);
    // row norms^2: 25 and 25, product 625, isqrt exact -> 25; |det| = 15 <= 25
    CHECK(hadamard_bound(IntMatrix{{3, 4}, {0, 5}}) == 25);
    // non-square product: rows (1,1) and (2,0) give 2*4 = 8, ceil(sqrt 8) = 3
    CHECK(hadamard_bound(IntMatrix{{1, 1}, {2, 0}}) == 3);
}

TEST_CASE("hadamard bound dominates |det| on a seeded suite") {
    Prng p(2024);
    for (int c = 0; c < 200; ++c) {
        const auto n = static_cast<std::size_t>(p.uniform(1, 6));
        const IntMatrix m = random_matrix(p, n, -999, 999);
        CHECK(abs(det_bareiss(m)) <= hadamard_bound(m));
    }
}

TEST_CASE("three algorithms agree on a seeded suite") {
    Prng p(77);
    for (int c = 0; c < 200; ++c) {
        const auto n = static_cast<std::size_t>(p.uniform(1, 7));
        const IntMatrix m = random_matrix(p, n, -999, 999);
        const mpz_class b = det_bareiss(m);
        CHECK(b == det_cofactor(m));
        CHECK(b == det_modular(m));
    }
}

TEST_CASE("determinant identities on seeded suites") {
    Prng p(4242);
    for (int c = 0; c < 60; ++c) {
        const auto n = static_cast<std::size_t>(p.uniform(2, 5));
        const IntMatrix a = random_matrix(p, n, -99, 99);
        const IntMatrix b = random_matrix(p, n, -99, 99);
        const mpz_class da = det_bareiss(a);

        CHECK(det_bareiss(a.transposed()) == da);

        IntMatrix swapped = a;
        swapped.swap_rows(0, n - 1);
        CHECK(det_bareiss(swapped) == -da);

        CHECK(det_bareiss(mat_mul(a, b)) == da * det_bareiss(b));
    }
}

TEST_CASE("diagonal scaling multiplies det by the diagonal product") {
    Prng p(555);
    for (int c = 0; c < 20; ++c) {
        const IntMatrix a = random_matrix(p, 4, -99, 99);
        std::vector<mpz_class> diag;
        mpz_class prod = 1;
        for (int j = 0; j < 4; ++j) {
            mpz_class d;
            mpz_ui_pow_ui(d.get_mpz_t(), 10, static_cast<unsigned>(p.uniform(0, 8)));
            diag.push_back(d);
            prod *= d;
        }
        CHECK(det_bareiss(mat_mul(a, IntMatrix::diagonal(diag))) == det_bareiss(a) * prod);
    }
}

TEST_CASE("det is a pure function: repeated calls return identical bits") {
    Prng p(99);
    const IntMatrix m = random_matrix(p, 6, -999, 999);
    CHECK(det_bareiss(m) == det_bareiss(m));
    CHECK(det_modular(m) == det_modular(m));
}

TEST_CASE("modular path: parallel residues match the serial reference") {
    Prng p(31337);
    for (int c = 0; c < 5; ++c) {
        const IntMatrix m = random_matrix(p, 8, -999, 999);
        const mpz_class serial = det_modular_serial(m);
        CHECK(det_modular(m, 0) == serial);
        CHECK(det_modular(m, 4) == serial);
    }
}

TEST_CASE("prime pool exhaustion reports the required bit-length") {
    // A single entry of ~254002 bits forces 2H+1 past the pool's capacity
    // (8192 primes just below 2^31, about 253950 product bits).
    mpz_class huge;
    mpz_ui_pow_ui(huge.get_mpz_t(), 2, 254001);
    IntMatrix m(1, 1);
    m.at(0, 0) = huge;
    CHECK_THROWS_AS(det_modular(m), PrimePoolExhaustedError);
    try {
        det_modular(m);
    } catch (const PrimePoolExhaustedError& e) {
        CHECK(e.required_bits() >= 254001);
    }
}

TEST_CASE("compute_det dispatches on the enum") {
    const IntMatrix m{{1, 2}, {3, 4}};
    CHECK(compute_det(m, DetAlgorithm::Bareiss) == -2);
    CHECK(compute_det(m, DetAlgorithm::Cofactor) == -2);
    CHECK(compute_det(m, DetAlgorithm::Modular) == -2);
    CHECK(compute_det(m, DetAlgorithm::Modular, 2) == -2);
}
