#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "detlab/determinant.hpp"
#include "detlab/errors.hpp"
#include "detlab/matrix_gen.hpp"
#include "detlab/render.hpp"
#include "detlab/rng.hpp"

using namespace detlab;

namespace {

mpz_class pow10(unsigned e) {
    mpz_class v;
    mpz_ui_pow_ui(v.get_mpz_t(), 10, e);
    return v;
}

}  // namespace

TEST_CASE("default exponents: stock 14, truncation, last-gap extension") {
    const std::vector<unsigned> stock{123, 152, 185, 220, 397, 449, 503,
                                      563, 979, 1059, 1143, 1229, 1319, 1412};
    CHECK(GenConfig::default_exponents(14) == stock);
    CHECK(GenConfig::default_exponents(3) == std::vector<unsigned>{123, 152, 185});
    // 1412 + 93 = 1505, + 93 = 1598
    const auto e16 = GenConfig::default_exponents(16);
    CHECK(e16.size() == 16);
    CHECK(e16[13] == 1412);
    CHECK(e16[14] == 1505);
    CHECK(e16[15] == 1598);
}

TEST_CASE("config validation") {
    GenConfig ok;
    CHECK_NOTHROW(ok.validate());

    GenConfig bad_n;
    bad_n.n = 0;
    bad_n.exponents.clear();
    CHECK_THROWS_AS(bad_n.validate(), InvalidArgumentError);

    GenConfig bad_range;
    bad_range.basic_range = {5, -5};
    CHECK_THROWS_AS(bad_range.validate(), InvalidRangeError);

    GenConfig bad_exp;
    bad_exp.exponents = {1, 2, 3};  // n stays 14
    CHECK_THROWS_AS(bad_exp.validate(), InvalidArgumentError);
}

TEST_CASE("gen_basic_matrix: singleton range, determinism, range, draw order") {
    Prng p7(0);
    CHECK(gen_basic_matrix(p7, 1, {7, 7}) == IntMatrix{{7}});

    Prng a(42), b(42);
    const IntMatrix ma = gen_basic_matrix(a, 14, {-99, 99});
    CHECK(ma == gen_basic_matrix(b, 14, {-99, 99}));

    Prng replay(42);
    for (std::size_t i = 0; i < 14; ++i) {
        for (std::size_t j = 0; j < 14; ++j) {
            const std::int64_t v = replay.uniform(-99, 99);  // row-major draw order
            CHECK(ma.at(i, j) == v);
            CHECK(v >= -99);
            CHECK(v <= 99);
        }
    }
}

TEST_CASE("compose_big_matrix: identity, scalar example, shape errors") {
    CHECK(compose_big_matrix(IntMatrix::identity(2), {0, 0}, IntMatrix(2, 2)) ==
          IntMatrix::identity(2));
    CHECK(compose_big_matrix(IntMatrix{{1}}, {3}, IntMatrix{{5}}) == IntMatrix{{1005}});
    CHECK_THROWS_AS(compose_big_matrix(IntMatrix(2, 2), {1, 2}, IntMatrix(3, 3)),
                    DimensionMismatchError);
    CHECK_THROWS_AS(compose_big_matrix(IntMatrix(2, 2), {1}, IntMatrix(2, 2)),
                    DimensionMismatchError);
}

TEST_CASE("generate is a pure function of the config") {
    GenConfig c;
    c.seed = 7;
    CHECK(generate(c) == generate(c));
    GenConfig d = c;
    d.seed = 8;
    CHECK(generate(c) != generate(d));
}

TEST_CASE("column congruence: low-order digits are exactly small's") {
    GenConfig c;
    c.seed = 11;
    const IntMatrix big = generate(c);

    // regenerate the same draws to recover basic and small
    Prng p(11);
    const IntMatrix basic = gen_basic_matrix(p, c.n, c.basic_range);
    const IntMatrix small = gen_basic_matrix(p, c.n, c.small_range);
    CHECK(big == compose_big_matrix(basic, c.exponents, small));

    for (std::size_t j = 0; j < c.n; ++j) {
        const mpz_class mod = pow10(c.exponents[j]);
        for (std::size_t i = 0; i < c.n; ++i) {
            CHECK((big.at(i, j) - small.at(i, j)) % mod == 0);
        }
    }
}

TEST_CASE("det of compose with zero small is det(basic) * 10^sum(e)") {
    Prng p(5);
    const IntMatrix basic = gen_basic_matrix(p, 4, {-99, 99});
    const std::vector<unsigned> e{2, 5, 7, 11};
    const IntMatrix big = compose_big_matrix(basic, e, IntMatrix(4, 4));
    CHECK(det_bareiss(big) == det_bareiss(basic) * pow10(2 + 5 + 7 + 11));
}

TEST_CASE("bundled fixture: frozen spot entries") {
    const GoldenFixture fx = golden_fixture();
    CHECK(fx.basic.rows() == 14);
    CHECK(fx.small.rows() == 14);
    CHECK(fx.exponents == GenConfig::default_exponents(14));
    CHECK(fx.basic.at(0, 0) == -32);
    CHECK(fx.small.at(0, 0) == 528);
    CHECK(fx.small.at(13, 13) == -805);
}

TEST_CASE("fixture composition: first entry through product and sum") {
    const GoldenFixture fx = golden_fixture();
    const IntMatrix powers = [&] {
        std::vector<mpz_class> diag;
        for (unsigned e : fx.exponents) diag.push_back(pow10(e));
        return IntMatrix::diagonal(diag);
    }();
    const IntMatrix scaled = mat_mul(fx.basic, powers);
    CHECK(scaled.at(0, 0) == -32 * pow10(123));
    const IntMatrix big = mat_add(scaled, fx.small);
    CHECK(big.at(0, 0) == -32 * pow10(123) + 528);
    CHECK(big == fx.big());
}

TEST_CASE("fixture determinant: both algorithms, rendering, sign, exponent") {
    const IntMatrix big = golden_fixture().big();
    const mpz_class bareiss = det_bareiss(big);
    const mpz_class modular = det_modular(big);
    CHECK(bareiss == modular);
    CHECK(sgn(bareiss) > 0);
    CHECK(render_scientific(bareiss) == kGoldenRendering);
    CHECK(digit_count(bareiss) == 9763);
    CHECK(render_exponent(bareiss) == 9762);
}
