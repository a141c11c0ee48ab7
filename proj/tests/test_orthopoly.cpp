#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "detlab/errors.hpp"
#include "detlab/orthopoly.hpp"
#include "detlab/rng.hpp"

#include "test_support.hpp"

using namespace detlab;
using detlab::testsupport::random_measure;

namespace {

const DiscreteMeasure two_point({0, 1}, {1, 1});
const DiscreteMeasure one_point({2}, {3});

// --- rational Gram-Schmidt oracle -------------------------------------------
// Monic orthogonal polynomials over mpq_class, straight from the textbook
// procedure; the library's integer-normalized P_n must equal
// hankel_det(mu, n) * q_n.

using QPoly = std::vector<mpq_class>;  // coefficient index = degree

mpq_class q_eval(const QPoly& p, const mpz_class& x) {
    mpq_class acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) {
        acc = acc * x + p[i];
    }
    return acc;
}

mpq_class q_inner(const DiscreteMeasure& mu, const QPoly& p, const QPoly& q) {
    mpq_class sum = 0;
    for (std::size_t i = 0; i < mu.size(); ++i) {
        sum += mpq_class(mu.mass(i)) * q_eval(p, mu.node(i)) * q_eval(q, mu.node(i));
    }
    return sum;
}

QPoly gram_schmidt_monic(const DiscreteMeasure& mu, std::size_t n) {
    std::vector<QPoly> basis;
    for (std::size_t d = 0; d <= n; ++d) {
        QPoly q(d + 1, 0);
        q[d] = 1;  // x^d
        for (const QPoly& prev : basis) {
            const mpq_class coeff = q_inner(mu, q, prev) / q_inner(mu, prev, prev);
            for (std::size_t j = 0; j < prev.size(); ++j) {
                q[j] -= coeff * prev[j];
            }
        }
        basis.push_back(q);
    }
    return basis.back();
}

}  // namespace

TEST_CASE("measure invariants are enforced") {
    CHECK_THROWS_AS(DiscreteMeasure({}, {}), InvalidArgumentError);
    CHECK_THROWS_AS(DiscreteMeasure({1, 2}, {1}), InvalidArgumentError);
    CHECK_THROWS_AS(DiscreteMeasure({2, 1}, {1, 1}), InvalidArgumentError);   // not increasing
    CHECK_THROWS_AS(DiscreteMeasure({1, 1}, {1, 1}), InvalidArgumentError);   // not strict
    CHECK_THROWS_AS(DiscreteMeasure({0, 1}, {1, 0}), InvalidArgumentError);   // mass < 1
    CHECK(two_point.describe() == "{0:1, 1:1}");
}

TEST_CASE("polynomial value type") {
    CHECK(IntPolynomial().is_zero());
    CHECK(IntPolynomial({0, 0, 0}).is_zero());
    const IntPolynomial p({-1, 2, 0});  // trailing zero trimmed
    CHECK(p.degree() == 1);
    CHECK(p.leading_coefficient() == 2);
    CHECK(p.coefficient(0) == -1);
    CHECK(p.coefficient(7) == 0);
    CHECK(p.to_string() == "2*x - 1");
    CHECK(IntPolynomial({0, 0, 3}).to_string() == "3*x^2");
    CHECK(IntPolynomial().to_string() == "0");
}

TEST_CASE("moments: closed-form examples") {
    CHECK(moments(one_point, 2) == std::vector<mpz_class>{3, 6, 12});
    CHECK(moments(two_point, 3) == std::vector<mpz_class>{2, 1, 1, 1});
}

TEST_CASE("moments match a direct double-loop oracle") {
    Prng p(314);
    const DiscreteMeasure mu = random_measure(p, 5, {-50, 50}, {1, 20});
    const auto ms = moments(mu, 9);
    REQUIRE(ms.size() == 10);
    for (std::size_t j = 0; j <= 9; ++j) {
        mpz_class want = 0;
        for (std::size_t i = 0; i < mu.size(); ++i) {
            mpz_class pw;
            mpz_pow_ui(pw.get_mpz_t(), mu.node(i).get_mpz_t(), j);
            want += mu.mass(i) * pw;
        }
        CHECK(ms[j] == want);
    }
}

TEST_CASE("hankel determinants: convention, examples, rank deficiency") {
    CHECK(hankel_det(two_point, 0) == 1);  // Delta_{-1} = 1
    CHECK(hankel_det(two_point, 1) == 2);
    CHECK(hankel_det(two_point, 2) == 1);  // det [[2,1],[1,1]]
    CHECK(hankel_det(one_point, 1) == 3);
    CHECK(hankel_det(one_point, 2) == 0);  // one-point measure has rank 1
}

TEST_CASE("hankel determinants are positive up to N") {
    Prng p(2718);
    for (int c = 0; c < 5; ++c) {
        const DiscreteMeasure mu = random_measure(p, 4, {-50, 50}, {1, 20});
        for (std::size_t n = 1; n <= 4; ++n) {
            CHECK(hankel_det(mu, n) > 0);
        }
    }
}

TEST_CASE("orthogonal_poly: P0, the two-point P1, degree cap") {
    CHECK(orthogonal_poly(two_point, 0) == IntPolynomial({1}));
    CHECK(orthogonal_poly(one_point, 0) == IntPolynomial({1}));
    // det [[m0, m1], [1, x]] = m0*x - m1 = 2x - 1
    CHECK(orthogonal_poly(two_point, 1) == IntPolynomial({-1, 2}));
    CHECK_THROWS_AS(orthogonal_poly(two_point, 2), DegreeOutOfRangeError);
    CHECK_THROWS_AS(orthogonal_poly(one_point, 1), DegreeOutOfRangeError);
}

TEST_CASE("eval_poly: examples and a naive-oracle sweep") {
    const IntPolynomial p1({-1, 2});
    CHECK(eval_poly(p1, 1) == 1);
    CHECK(eval_poly(p1, 0) == -1);

    Prng p(161803);
    std::vector<mpz_class> coeffs;
    for (int i = 0; i <= 10; ++i) coeffs.emplace_back(static_cast<long>(p.uniform(-99, 99)));
    coeffs.back() = 7;  // keep degree exactly 10
    const IntPolynomial poly(coeffs);
    for (int c = 0; c < 10; ++c) {
        const mpz_class x(static_cast<long>(p.uniform(-20, 20)));
        mpz_class want = 0;
        for (std::size_t d = 0; d < coeffs.size(); ++d) {
            mpz_class pw;
            mpz_pow_ui(pw.get_mpz_t(), x.get_mpz_t(), d);
            want += coeffs[d] * pw;
        }
        CHECK(eval_poly(poly, x) == want);
    }
}

TEST_CASE("inner products: trivial examples") {
    const IntPolynomial one({1});
    CHECK(inner_product(two_point, orthogonal_poly(two_point, 1), one) == 0);
    CHECK(inner_product(two_point, one, one) == moments(two_point, 0)[0]);
}

TEST_CASE("orthogonality, norm identity, leading coefficient (seeded sweep)") {
    Prng p(606);
    for (int c = 0; c < 3; ++c) {
        const DiscreteMeasure mu = random_measure(p, 6, {-50, 50}, {1, 20});
        std::vector<IntPolynomial> ps;
        for (std::size_t n = 0; n <= 5; ++n) ps.push_back(orthogonal_poly(mu, n));
        for (std::size_t n = 0; n <= 5; ++n) {
            CHECK(ps[n].degree() == n);
            const mpz_class lead = hankel_det(mu, n);
            CHECK(lead > 0);
            CHECK(ps[n].leading_coefficient() == lead);
            CHECK(inner_product(mu, ps[n], ps[n]) == lead * hankel_det(mu, n + 1));
            for (std::size_t m = 0; m < n; ++m) {
                CHECK(inner_product(mu, ps[n], ps[m]) == 0);
            }
        }
    }
}

TEST_CASE("library P_n equals hankel_det * monic rational Gram-Schmidt") {
    Prng p(9091);
    for (int c = 0; c < 3; ++c) {
        const DiscreteMeasure mu = random_measure(p, 4, {-50, 50}, {1, 20});
        for (std::size_t n = 1; n <= 3; ++n) {
            const QPoly monic = gram_schmidt_monic(mu, n);
            const IntPolynomial pn = orthogonal_poly(mu, n);
            const mpq_class scale(hankel_det(mu, n));
            REQUIRE(monic.size() == n + 1);
            for (std::size_t d = 0; d <= n; ++d) {
                CHECK(mpq_class(pn.coefficient(d)) == scale * monic[d]);
            }
        }
    }
}

TEST_CASE("measure text format: exact bytes and round-trip") {
    CHECK(write_measure(two_point) == "detlab-measure v1\npoints 2\n0 1\n1 1\n");

    Prng p(13);
    const DiscreteMeasure mu = random_measure(p, 7, {-50, 50}, {1, 20});
    CHECK(read_measure(write_measure(mu)).describe() == mu.describe());

    testsupport::TempDir tmp("measure");
    const auto path = tmp.path() / "m.txt";
    write_measure_file(mu, path);
    CHECK(read_measure_file(path).describe() == mu.describe());
}

TEST_CASE("measure reader rejects malformed input") {
    CHECK_THROWS_AS(read_measure("detlab-measure v2\npoints 1\n0 1\n"), ParseError);
    CHECK_THROWS_AS(read_measure("detlab-measure v1\npoints 0\n"), ParseError);
    CHECK_THROWS_AS(read_measure("detlab-measure v1\npoints 2\n0 1\n"), ParseError);
    CHECK_THROWS_AS(read_measure("detlab-measure v1\npoints 1\n0 1 2\n"), ParseError);
    CHECK_THROWS_AS(read_measure("detlab-measure v1\npoints 1\n0 x\n"), ParseError);
    // structurally fine but violates the measure invariants
    CHECK_THROWS_AS(read_measure("detlab-measure v1\npoints 1\n0 0\n"), InvalidArgumentError);
    CHECK_THROWS_AS(read_measure("detlab-measure v1\npoints 2\n5 1\n4 1\n"), InvalidArgumentError);
    CHECK_THROWS_AS(read_measure_file("/nonexistent/m.txt"), ParseError);
}
