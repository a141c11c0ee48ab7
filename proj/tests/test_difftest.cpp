#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>

#include "json.hpp"

#include "detlab/difftest.hpp"
#include "detlab/matrix_gen.hpp"
#include "detlab/render.hpp"
#include "detlab/rng.hpp"

#include "test_support.hpp"

using namespace detlab;
using detlab::testsupport::chaos_table;
using detlab::testsupport::TempDir;

TEST_CASE("cross_check: agreement cases") {
    const Verdict id3 = cross_check(IntMatrix::identity(3),
                                    {DetAlgorithm::Bareiss, DetAlgorithm::Modular});
    CHECK(id3.agreement);
    CHECK(id3.value == 1);
    CHECK(id3.values.size() == 2);

    // duplicates collapse; all three algorithms run on a small matrix
    const Verdict all = cross_check(IntMatrix{{1, 2}, {3, 4}},
                                    {DetAlgorithm::Bareiss, DetAlgorithm::Cofactor,
                                     DetAlgorithm::Modular, DetAlgorithm::Bareiss});
    CHECK(all.agreement);
    CHECK(all.value == -2);
    CHECK(all.values.size() == 3);
}

TEST_CASE("cross_check: preconditions") {
    CHECK_THROWS_AS(cross_check(IntMatrix(2, 3), {DetAlgorithm::Bareiss}), NotSquareError);
    CHECK_THROWS_AS(cross_check(IntMatrix::identity(2), {}), InvalidArgumentError);
    CHECK_THROWS_AS(cross_check(IntMatrix::identity(11), {DetAlgorithm::Cofactor}),
                    TooLargeForCofactorError);
}

TEST_CASE("cross_check agrees on the bundled fixture") {
    const Verdict v = cross_check(golden_fixture().big(),
                                  {DetAlgorithm::Bareiss, DetAlgorithm::Modular});
    CHECK(v.agreement);
    CHECK(render_scientific(v.value) == kGoldenRendering);
}

TEST_CASE("an injected faulty algorithm is detected, both values recorded") {
    const IntMatrix m{{1, 2}, {3, 4}};
    const Verdict v = cross_check(m, {DetAlgorithm::Bareiss, DetAlgorithm::Modular},
                                  chaos_table());
    CHECK_FALSE(v.agreement);
    CHECK(v.values.at(DetAlgorithm::Bareiss) == -2);
    // chaos flips the (0,0) cofactor term: det - 2*1*4 = -10
    CHECK(v.values.at(DetAlgorithm::Modular) == -10);

    const nlohmann::json j = nlohmann::json::parse(v.to_json());
    CHECK(j["agreement"] == false);
    CHECK(j.count("value") == 0);
    CHECK(j["values"]["bareiss"]["exact"] == "-2");
    CHECK(j["values"]["modular"]["exact"] == "-10");
}

TEST_CASE("verdict JSON for agreements carries the exact value") {
    const Verdict v = cross_check(IntMatrix{{-7}}, {DetAlgorithm::Bareiss});
    const nlohmann::json j = nlohmann::json::parse(v.to_json());
    CHECK(j["agreement"] == true);
    CHECK(j["value"] == "-7");
    CHECK(j["rendered"] == "-7e0");
}

TEST_CASE("fuzz_run: deterministic content, zero disagreements, any job count") {
    GenConfig config;
    config.seed = 7;
    const std::size_t iters = 8;

    TempDir a("fuzz-a"), b("fuzz-b"), c("fuzz-c");
    const FuzzReport ra = fuzz_run(config, iters, a.path(), 1);
    const FuzzReport rb = fuzz_run(config, iters, b.path(), 1);
    const FuzzReport rc = fuzz_run(config, iters, c.path(), 3);

    CHECK(ra.disagreements == 0);
    CHECK(ra.corpus_entries.empty());
    CHECK(ra.generator_id == kGeneratorId);
    CHECK(ra.seed == 7);
    CHECK(ra.to_json(2, false) == rb.to_json(2, false));
    CHECK(ra.to_json(2, false) == rc.to_json(2, false));

    // nothing was persisted on an all-agreement run
    CHECK(std::filesystem::is_empty(a.path()));
}

TEST_CASE("fuzz_run rejects zero iterations") {
    TempDir tmp("fuzz-zero");
    GenConfig config;
    CHECK_THROWS_AS(fuzz_run(config, 0, tmp.path()), InvalidArgumentError);
}

TEST_CASE("chaos fuzzing: every iteration disagrees and persists, in order") {
    GenConfig config;
    config.seed = 99;
    const std::size_t iters = 10;

    TempDir tmp("fuzz-chaos");
    const FuzzReport r = fuzz_run(config, iters, tmp.path(), 1, chaos_table());
    REQUIRE(r.disagreements == iters);
    REQUIRE(r.corpus_entries.size() == iters);
    for (std::size_t i = 0; i < iters; ++i) {
        CHECK(r.corpus_entries[i] == (i < 10 ? "case-00000" + std::to_string(i)
                                             : "case-0000" + std::to_string(i)));
    }

    // parallel run: identical report content and identical corpus bytes
    TempDir tmp2("fuzz-chaos-par");
    const FuzzReport rp = fuzz_run(config, iters, tmp2.path(), 4, chaos_table());
    CHECK(r.to_json(2, false) == rp.to_json(2, false));
}

TEST_CASE("corpus cases round-trip bit-exactly and reproduce their verdict") {
    GenConfig config;
    config.seed = 99;
    TempDir tmp("fuzz-roundtrip");
    const FuzzReport r = fuzz_run(config, 4, tmp.path(), 1, chaos_table());
    REQUIRE(r.corpus_entries.size() == 4);

    for (std::size_t i = 0; i < 4; ++i) {
        const CorpusCase c = read_corpus_case(tmp.path() / r.corpus_entries[i]);

        // the matrix file reloads to exactly the generated matrix
        GenConfig iter_config = config;
        iter_config.seed = derive_seed(config.seed, i);
        CHECK(c.matrix == generate(iter_config));

        // metadata carries seed and both algorithm values, exact
        const nlohmann::json meta = nlohmann::json::parse(c.meta_json);
        CHECK(meta["iteration"] == i);
        CHECK(meta["seed"] == iter_config.seed);
        CHECK(meta["generator_id"] == kGeneratorId);

        // re-running the same table on the reloaded matrix reproduces the verdict
        const Verdict again = cross_check(
            c.matrix, {DetAlgorithm::Bareiss, DetAlgorithm::Modular}, chaos_table());
        CHECK_FALSE(again.agreement);
        CHECK(meta["values"]["bareiss"]["exact"] ==
              again.values.at(DetAlgorithm::Bareiss).get_str());
        CHECK(meta["values"]["modular"]["exact"] ==
              again.values.at(DetAlgorithm::Modular).get_str());
    }
}

TEST_CASE("an unwritable corpus root fails up front with an empty partial report") {
    TempDir tmp("fuzz-blocked");
    const auto blocked = tmp.path() / "blocked";
    std::ofstream(blocked) << "a file, not a directory\n";

    GenConfig config;
    config.seed = 1;
    CHECK_THROWS_AS(fuzz_run(config, 3, blocked), CorpusWriteFailure);
    try {
        fuzz_run(config, 3, blocked);
    } catch (const CorpusWriteFailure& e) {
        CHECK(e.partial_report().disagreements == 0);
        CHECK(e.partial_report().corpus_entries.empty());
        CHECK(e.partial_report().iterations == 3);
    }
}

TEST_CASE("a mid-campaign write failure aborts and flushes the partial report") {
    TempDir tmp("fuzz-midfail");
    // case-000002's slot is occupied by a regular file: the third write fails
    std::ofstream(tmp.path() / "case-000002") << "in the way\n";

    GenConfig config;
    config.seed = 99;
    try {
        fuzz_run(config, 5, tmp.path(), 1, chaos_table());
        FAIL("expected CorpusWriteFailure");
    } catch (const CorpusWriteFailure& e) {
        const FuzzReport& partial = e.partial_report();
        CHECK(partial.disagreements == 2);
        REQUIRE(partial.corpus_entries.size() == 2);
        CHECK(partial.corpus_entries[0] == "case-000000");
        CHECK(partial.corpus_entries[1] == "case-000001");
    }
}

TEST_CASE("export templates are bit-exact") {
    const IntMatrix m{{1, 2}, {3, 4}};
    CHECK(export_cas(m, CasDialect::MathematicaSyntax) == "Det[{{1, 2}, {3, 4}}]");
    CHECK(export_cas(m, CasDialect::MapleSyntax) ==
          "LinearAlgebra:-Determinant(Matrix([[1, 2], [3, 4]]));");
    CHECK(export_cas(m, CasDialect::SageSyntax) == "matrix(ZZ, [[1, 2], [3, 4]]).det()");

    const IntMatrix neg{{-5}};
    CHECK(export_cas(neg, CasDialect::MathematicaSyntax) == "Det[{{-5}}]");
    CHECK(export_cas(neg, CasDialect::MapleSyntax) ==
          "LinearAlgebra:-Determinant(Matrix([[-5]]));");
    CHECK(export_cas(neg, CasDialect::SageSyntax) == "matrix(ZZ, [[-5]]).det()");

    CHECK_THROWS_AS(export_cas(IntMatrix(2, 3), CasDialect::SageSyntax), NotSquareError);
}

TEST_CASE("dialect names round-trip") {
    for (CasDialect d : {CasDialect::MathematicaSyntax, CasDialect::MapleSyntax,
                         CasDialect::SageSyntax}) {
        CHECK(cas_dialect_from_string(to_string(d)) == d);
    }
    CHECK_THROWS_AS(cas_dialect_from_string("matlab"), InvalidArgumentError);
}

TEST_CASE("import_result accepts the documented noise") {
    CHECK(import_result("-2") == -2);
    CHECK(import_result("+7") == 7);
    CHECK(import_result("  42\n") == 42);
    CHECK(import_result("  1951\\\n2421  ") == 19512421);
    CHECK(import_result("1951\\\r\n2421") == 19512421);
    CHECK(import_result("1951\\\n    2421") == 19512421);  // continuation indentation
    CHECK(import_result("-\\\n12") == -12);
    CHECK(import_result("007") == 7);
}

TEST_CASE("import_result round-trips an exported determinant value") {
    const mpz_class det = det_bareiss(golden_fixture().big());
    CHECK(import_result(det.get_str()) == det);
}

TEST_CASE("import_result rejects everything else, naming the offending span") {
    CHECK_THROWS_AS(import_result(""), ParseError);
    CHECK_THROWS_AS(import_result("   "), ParseError);
    CHECK_THROWS_AS(import_result("-"), ParseError);
    CHECK_THROWS_AS(import_result("12 34"), ParseError);
    CHECK_THROWS_AS(import_result("1.5"), ParseError);
    CHECK_THROWS_AS(import_result("--2"), ParseError);
    CHECK_THROWS_AS(import_result("12-"), ParseError);
    CHECK_THROWS_AS(import_result("12\\34"), ParseError);
    CHECK_THROWS_AS(import_result("0x12"), ParseError);
    try {
        import_result("123a456");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("offset 3") != std::string::npos);
        CHECK(std::string(e.what()).find("'a'") != std::string::npos);
    }
}
