#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "detlab/errors.hpp"
#include "detlab/int_matrix.hpp"

#include "test_support.hpp"

using namespace detlab;

TEST_CASE("construction enforces the shape invariants") {
    CHECK_THROWS_AS(IntMatrix(0, 3), InvalidArgumentError);
    CHECK_THROWS_AS(IntMatrix(3, 0), InvalidArgumentError);
    CHECK_THROWS_AS(IntMatrix(2, 2, std::vector<mpz_class>{1, 2, 3}), InvalidArgumentError);
    CHECK_THROWS_AS(IntMatrix({{1, 2}, {3}}), InvalidArgumentError);

    const IntMatrix m{{1, 2}, {3, 4}};
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 2);
    CHECK(m.at(1, 0) == 3);
}

TEST_CASE("identity, diagonal, transpose, row swap") {
    CHECK(IntMatrix::identity(3) == IntMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(IntMatrix::diagonal({2, 5}) == IntMatrix{{2, 0}, {0, 5}});

    const IntMatrix m{{1, 2, 3}, {4, 5, 6}};
    CHECK(m.transposed() == IntMatrix{{1, 4}, {2, 5}, {3, 6}});
    CHECK(m.transposed().transposed() == m);

    IntMatrix s{{1, 2}, {3, 4}};
    s.swap_rows(0, 1);
    CHECK(s == IntMatrix{{3, 4}, {1, 2}});
    CHECK_THROWS_AS(s.swap_rows(0, 2), InvalidArgumentError);
}

TEST_CASE("mat_mul: identity, column scaling, shape errors") {
    const IntMatrix x{{1, 2}, {3, 4}};
    CHECK(mat_mul(IntMatrix::identity(2), x) == x);

    // multiplying by diag(10, 100) scales columns
    CHECK(mat_mul(x, IntMatrix::diagonal({10, 100})) == IntMatrix{{10, 200}, {30, 400}});

    CHECK_THROWS_AS(mat_mul(x, IntMatrix(3, 2)), DimensionMismatchError);
}

TEST_CASE("mat_add: zero, 1x1, shape errors") {
    const IntMatrix x{{1, 2}, {3, 4}};
    CHECK(mat_add(x, IntMatrix(2, 2)) == x);
    CHECK(mat_add(IntMatrix{{1}}, IntMatrix{{5}}) == IntMatrix{{6}});
    CHECK_THROWS_AS(mat_add(x, IntMatrix(2, 3)), DimensionMismatchError);
}

TEST_CASE("text format writes exactly the documented bytes") {
    const IntMatrix m{{1, 2}, {-3, 4}};
    CHECK(write_matrix(m) == "detlab-matrix v1\nrows 2 cols 2\n1 2\n-3 4\n");
}

TEST_CASE("text format round-trips, including huge entries") {
    mpz_class big;
    mpz_ui_pow_ui(big.get_mpz_t(), 10, 1412);
    IntMatrix m(2, 3);
    m.at(0, 0) = big;
    m.at(1, 2) = -big - 7;
    CHECK(read_matrix(write_matrix(m)) == m);
}

TEST_CASE("file round-trip") {
    testsupport::TempDir tmp("matrix");
    const IntMatrix m{{1, -2, 3}, {4, 5, -6}, {-7, 8, 9}};
    const auto path = tmp.path() / "m.txt";
    write_matrix_file(m, path);
    CHECK(read_matrix_file(path) == m);
}

TEST_CASE("reader rejects malformed input") {
    CHECK_THROWS_AS(read_matrix("detlab-matrix v2\nrows 1 cols 1\n1\n"), ParseError);
    CHECK_THROWS_AS(read_matrix("detlab-matrix v1\n"), ParseError);
    CHECK_THROWS_AS(read_matrix("detlab-matrix v1\nrows 0 cols 1\n"), ParseError);
    CHECK_THROWS_AS(read_matrix("detlab-matrix v1\nrows x cols 1\n1\n"), ParseError);
    CHECK_THROWS_AS(read_matrix("detlab-matrix v1\nrows 1 cols 2\n1\n"), ParseError);       // short row
    CHECK_THROWS_AS(read_matrix("detlab-matrix v1\nrows 1 cols 1\n1 2\n"), ParseError);     // long row
    CHECK_THROWS_AS(read_matrix("detlab-matrix v1\nrows 1 cols 1\n1a\n"), ParseError);      // bad token
    CHECK_THROWS_AS(read_matrix("detlab-matrix v1\nrows 1 cols 1\n+1\n"), ParseError);      // no '+'
    CHECK_THROWS_AS(read_matrix("detlab-matrix v1\nrows 2 cols 1\n1\n"), ParseError);       // missing row
    CHECK_THROWS_AS(read_matrix_file("/nonexistent/matrix.txt"), ParseError);
}
