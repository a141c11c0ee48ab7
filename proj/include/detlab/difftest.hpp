#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "detlab/determinant.hpp"
#include "detlab/errors.hpp"
#include "detlab/int_matrix.hpp"
#include "detlab/matrix_gen.hpp"

namespace detlab {

/// Outcome of running several determinant algorithms on one matrix.
/// `values` always holds every result; `value` is meaningful iff the run
/// was an agreement (all results bit-identical).
struct Verdict {
    bool agreement = false;
    mpz_class value;
    std::map<DetAlgorithm, mpz_class> values;

    std::string to_json(int indent = 2) const;
};

/// Determinant bindings used by cross_check and fuzz_run. The default binds
/// the real algorithms; tests rebind a slot to a deliberately faulty
/// function to prove the harness detects disagreement.
struct AlgorithmTable {
    using DetFn = std::function<mpz_class(const IntMatrix&)>;

    DetFn bareiss;
    DetFn cofactor;
    DetFn modular;

    static AlgorithmTable standard();
};

/// Runs each requested algorithm on m (duplicates collapse; evaluation in
/// fixed enum order) and compares results bit-exactly.
///
/// Throws NotSquareError, InvalidArgumentError (empty request) and
/// TooLargeForCofactorError (Cofactor requested with n > 10).
Verdict cross_check(const IntMatrix& m, const std::vector<DetAlgorithm>& algorithms,
                    const AlgorithmTable& table = AlgorithmTable::standard());

/// Result of one fuzzing campaign. Identical (generator_id, seed, config,
/// iterations) produce identical content except wall_ms.
struct FuzzReport {
    std::string generator_id;
    std::uint64_t seed = 0;
    GenConfig config;
    std::size_t iterations = 0;
    std::size_t disagreements = 0;                // == corpus_entries.size()
    std::vector<std::string> corpus_entries;      // case ids, iteration order
    std::int64_t wall_ms = 0;                     // the only run-dependent field

    /// include_wall=false yields the run-independent content only.
    std::string to_json(int indent = 2, bool include_wall = true) const;
};

/// A corpus write failed; the campaign aborts and the report assembled so
/// far travels with the exception.
class CorpusWriteFailure : public Error {
public:
    CorpusWriteFailure(const std::string& what, FuzzReport partial)
        : Error(what), partial_(std::move(partial)) {}

    const FuzzReport& partial_report() const { return partial_; }

private:
    FuzzReport partial_;
};

/// The generation loop as a harness: for iteration i, reseed config with
/// derive_seed(config.seed, i), generate the big matrix, cross-check
/// {Bareiss, Modular}, and persist every disagreement to corpus_dir before
/// continuing (one directory per case: matrix.txt + meta.json).
///
/// `jobs` <= 1 runs iterations serially (the reference path); 0 means one
/// worker per core. Corpus writes are serialized through a single-writer
/// section and the report is assembled in iteration order, so the outcome
/// is identical for every job count.
FuzzReport fuzz_run(const GenConfig& config, std::size_t iterations,
                    const std::filesystem::path& corpus_dir, int jobs = 1,
                    const AlgorithmTable& table = AlgorithmTable::standard());

/// One persisted case, reloaded.
struct CorpusCase {
    std::string id;
    IntMatrix matrix = IntMatrix(1, 1);
    std::string meta_json;  // raw meta.json bytes
};

CorpusCase read_corpus_case(const std::filesystem::path& case_dir);

/// Target syntax for export_cas.
enum class CasDialect { MathematicaSyntax, MapleSyntax, SageSyntax };

std::string to_string(CasDialect d);
CasDialect cas_dialect_from_string(const std::string& name);

/// Self-contained determinant expression for an external system:
///
///   MathematicaSyntax   Det[{{1, 2}, {3, 4}}]
///   MapleSyntax         LinearAlgebra:-Determinant(Matrix([[1, 2], [3, 4]]));
///   SageSyntax          matrix(ZZ, [[1, 2], [3, 4]]).det()
std::string export_cas(const IntMatrix& m, CasDialect dialect);

/// Parses external CAS output: exactly one optionally signed decimal
/// integer, tolerating surrounding whitespace and backslash-newline line
/// continuations inside the digit run (indentation after a continuation is
/// skipped). Anything else throws ParseError naming the offending span.
mpz_class import_result(const std::string& text);

}  // namespace detlab
