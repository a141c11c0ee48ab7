#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "json.hpp"

#include "detlab/casorati.hpp"
#include "detlab/errors.hpp"
#include "detlab/orthopoly.hpp"
#include "detlab/rng.hpp"

#include "test_support.hpp"

using namespace detlab;
using detlab::testsupport::random_measure;

namespace {

const DiscreteMeasure two_point({0, 1}, {1, 1});

}  // namespace

TEST_CASE("IndexSet invariants and describe") {
    CHECK_THROWS_AS(IndexSet({}), InvalidArgumentError);
    CHECK_THROWS_AS(IndexSet({1, 1}), InvalidArgumentError);
    CHECK_THROWS_AS(IndexSet({2, 1}), InvalidArgumentError);
    CHECK_THROWS_AS(IndexSet::consecutive(0, 0), InvalidArgumentError);

    const IndexSet f = IndexSet::consecutive(2, 3);
    CHECK(f.size() == 3);
    CHECK(f.indices() == std::vector<std::size_t>{2, 3, 4});
    CHECK(f.max_index() == 4);
    CHECK(f.describe() == "{2, 3, 4}");
}

TEST_CASE("casorati_matrix: the worked 2x2 and the 1x1 cases") {
    // P0 = 1, P1 = 2x - 1 on nodes 0, 1
    CHECK(casorati_matrix(two_point, IndexSet({0, 1}), 0) == IntMatrix{{1, 1}, {-1, 1}});
    CHECK(casorati_matrix(two_point, IndexSet({0}), 0) == IntMatrix{{1}});
    CHECK(casorati_matrix(two_point, IndexSet({0}), 1) == IntMatrix{{1}});
}

TEST_CASE("casorati_matrix rejects out-of-range degrees and nodes") {
    CHECK_THROWS_AS(casorati_matrix(two_point, IndexSet({0, 2}), 0), DegreeOutOfRangeError);
    CHECK_THROWS_AS(casorati_matrix(two_point, IndexSet({0, 1}), 1), NodeIndexOutOfRangeError);
    CHECK_THROWS_AS(casorati_matrix(two_point, IndexSet({0}), 2), NodeIndexOutOfRangeError);
}

TEST_CASE("entry provenance: matrix entries are P_{f_i}(a_{k+j})") {
    Prng p(808);
    const DiscreteMeasure mu = random_measure(p, 6, {-50, 50}, {1, 20});
    const IndexSet f({0, 2, 3});
    const std::size_t k = 1;
    const IntMatrix m = casorati_matrix(mu, f, k);
    REQUIRE(m.rows() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        const IntPolynomial pi = orthogonal_poly(mu, f.indices()[i]);
        for (std::size_t j = 0; j < 3; ++j) {
            CHECK(m.at(i, j) == eval_poly(pi, mu.node(k + j)));
        }
    }
}

TEST_CASE("casorati_det: worked example, l=1, and an exhaustive l=2 scan") {
    CHECK(casorati_det(two_point, IndexSet({0, 1}), 0) == 2);
    CHECK(casorati_det(two_point, IndexSet({0}), 0) == 1);
    CHECK(casorati_det(two_point, IndexSet({0}), 1) == 1);

    Prng p(110);
    const DiscreteMeasure mu = random_measure(p, 8, {-50, 50}, {1, 20});
    for (std::size_t n = 0; n + 1 <= 7; ++n) {
        for (std::size_t k = 0; k + 1 <= 7; ++k) {
            CHECK(casorati_det(mu, IndexSet::consecutive(n, 2), k) > 0);
        }
    }
}

TEST_CASE("ks_scan: report shape, determinism of cell order, minimum") {
    Prng p(220);
    const DiscreteMeasure mu = random_measure(p, 6, {-50, 50}, {1, 20});
    const ScanReport r = ks_scan(mu, 2, 3, 3, 1);

    CHECK(r.kind == "consecutive");
    CHECK(r.l == 2);
    CHECK(r.measure == mu.describe());
    CHECK(r.cells.size() == 16);  // n in 0..3, k in 0..3

    // n-major, then k, regardless of worker count
    std::size_t idx = 0;
    mpz_class min_seen;
    bool have_min = false;
    for (std::size_t n = 0; n <= 3; ++n) {
        for (std::size_t k = 0; k <= 3; ++k, ++idx) {
            REQUIRE(r.cells[idx].n.has_value());
            CHECK(*r.cells[idx].n == n);
            CHECK(r.cells[idx].k == k);
            const mpz_class v = casorati_det(mu, IndexSet::consecutive(n, 2), k);
            CHECK(r.cells[idx].sign == sgn(v));
            if (!have_min || v < min_seen) {
                min_seen = v;
                have_min = true;
            }
        }
    }
    REQUIRE(r.has_min);
    CHECK(r.min_value == min_seen);
    CHECK(r.violations.empty());  // even l: the theorem holds
}

TEST_CASE("ks_scan skips cells that do not fit and empties out when l > N") {
    Prng p(330);
    const DiscreteMeasure mu = random_measure(p, 4, {-50, 50}, {1, 20});

    // n and k are clamped by n + l - 1 <= N - 1 = 3
    const ScanReport r = ks_scan(mu, 2, 10, 10, 1);
    CHECK(r.cells.size() == 9);  // n, k in 0..2

    const ScanReport empty = ks_scan(mu, 5, 10, 10, 1);
    CHECK(empty.cells.empty());
    CHECK(empty.violations.empty());
    CHECK_FALSE(empty.has_min);

    CHECK_THROWS_AS(ks_scan(mu, 0, 1, 1, 1), InvalidArgumentError);
}

TEST_CASE("odd block sizes can violate positivity; zeros carry a marker") {
    // l = 1, F = {1}: cell value is P_1(a_k) which changes sign across nodes.
    const DiscreteMeasure sym({-1, 0, 1}, {1, 1, 1});  // P_1 = 3x
    const ScanReport r = ks_scan(sym, 1, 1, 2, 1);
    // cells: (n=0: 1 1 1), (n=1: -3 0 3)
    REQUIRE(r.cells.size() == 6);
    CHECK(r.violations.size() == 2);
    CHECK(*r.violations[0].n == 1);
    CHECK(r.violations[0].k == 0);
    CHECK_FALSE(r.violations[0].zero);
    CHECK(*r.violations[1].n == 1);
    CHECK(r.violations[1].k == 1);
    CHECK(r.violations[1].zero);
    CHECK(r.min_value == -3);
    CHECK(r.min_rendered == "-3e0");
}

TEST_CASE("general_scan: consistency with ks_scan and the F={0} row of ones") {
    Prng p(440);
    const DiscreteMeasure mu = random_measure(p, 7, {-50, 50}, {1, 20});

    // f = {0..l-1} reproduces the ks_scan n=0 row
    const ScanReport ks = ks_scan(mu, 3, 0, 4, 1);
    const ScanReport gs = general_scan(mu, IndexSet({0, 1, 2}), 4, 1);
    REQUIRE(ks.cells.size() == gs.cells.size());
    for (std::size_t i = 0; i < gs.cells.size(); ++i) {
        CHECK_FALSE(gs.cells[i].n.has_value());
        CHECK(gs.cells[i].k == ks.cells[i].k);
        CHECK(gs.cells[i].sign == ks.cells[i].sign);
        CHECK(gs.cells[i].rendered == ks.cells[i].rendered);
    }
    CHECK(gs.kind == "general");
    CHECK(gs.index_set == "{0, 1, 2}");

    const ScanReport ones = general_scan(mu, IndexSet({0}), 6, 1);
    for (const ScanCell& c : ones.cells) {
        CHECK(c.rendered == "1e0");
        CHECK(c.sign == 1);
    }

    CHECK_THROWS_AS(general_scan(mu, IndexSet({0, 9}), 2, 1), DegreeOutOfRangeError);
}

TEST_CASE("general_scan records non-consecutive index sets without asserting signs") {
    Prng p(550);
    const DiscreteMeasure mu = random_measure(p, 8, {-50, 50}, {1, 20});
    const ScanReport r = general_scan(mu, IndexSet({0, 2, 5, 7}), 10, 1);
    CHECK(r.cells.size() == 5);  // k in 0..4
    for (const ScanCell& c : r.cells) {
        CHECK((c.sign == -1 || c.sign == 0 || c.sign == 1));
    }
    CHECK(r.has_min);
}

TEST_CASE("full consecutive-index consistency across (n, k)") {
    Prng p(660);
    const DiscreteMeasure mu = random_measure(p, 6, {-50, 50}, {1, 20});
    const std::size_t l = 2;
    const ScanReport ks = ks_scan(mu, l, 10, 10, 1);
    std::size_t idx = 0;
    for (std::size_t n = 0; n + l - 1 <= 5; ++n) {
        const ScanReport gs = general_scan(mu, IndexSet::consecutive(n, l), 10, 1);
        for (std::size_t c = 0; c < gs.cells.size(); ++c, ++idx) {
            REQUIRE(idx < ks.cells.size());
            CHECK(ks.cells[idx].rendered == gs.cells[c].rendered);
            CHECK(ks.cells[idx].sign == gs.cells[c].sign);
        }
    }
    CHECK(idx == ks.cells.size());
}

TEST_CASE("parallel scans produce identical reports to the serial reference") {
    Prng p(770);
    const DiscreteMeasure mu = random_measure(p, 8, {-50, 50}, {1, 20});
    const ScanReport serial = ks_scan(mu, 3, 5, 5, 1);
    for (int jobs : {0, 2, 7}) {
        const ScanReport par = ks_scan(mu, 3, 5, 5, jobs);
        REQUIRE(par.cells.size() == serial.cells.size());
        for (std::size_t i = 0; i < serial.cells.size(); ++i) {
            CHECK(par.cells[i].n == serial.cells[i].n);
            CHECK(par.cells[i].k == serial.cells[i].k);
            CHECK(par.cells[i].sign == serial.cells[i].sign);
            CHECK(par.cells[i].rendered == serial.cells[i].rendered);
        }
        CHECK(par.min_value == serial.min_value);
        CHECK(par.min_n == serial.min_n);
        CHECK(par.min_k == serial.min_k);
    }
}

TEST_CASE("scan reports serialize to parseable JSON with exact minima") {
    const DiscreteMeasure sym({-1, 0, 1}, {1, 1, 1});
    ScanReport r = ks_scan(sym, 1, 1, 2, 1);
    r.generator_id = "none";
    const nlohmann::json j = nlohmann::json::parse(r.to_json());
    CHECK(j["kind"] == "consecutive");
    CHECK(j["l"] == 1);
    CHECK(j["cells"].size() == 6);
    CHECK(j["violations"].size() == 2);
    CHECK(j["violations"][1]["zero"] == true);
    CHECK(j["min"]["value"] == "-3");
    CHECK(j["min"]["n"] == 1);
    CHECK(j["min"]["k"] == 0);
}
