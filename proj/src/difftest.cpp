#include "detlab/difftest.hpp"

#include <atomic>
#include <cctype>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>
#include <utility>

#include <omp.h>

#include "json.hpp"

#include "detlab/render.hpp"
#include "detlab/rng.hpp"

namespace detlab {

namespace {

nlohmann::json value_pair(const mpz_class& v) {
    return {{"exact", v.get_str()}, {"rendered", render_scientific(v)}};
}

nlohmann::json config_json(const GenConfig& c) {
    return {{"seed", c.seed},
            {"n", c.n},
            {"basic_range", {c.basic_range.lo, c.basic_range.hi}},
            {"small_range", {c.small_range.lo, c.small_range.hi}},
            {"exponents", c.exponents}};
}

std::string case_name(std::size_t iteration) {
    std::ostringstream out;
    out << "case-" << std::setw(6) << std::setfill('0') << iteration;
    return out.str();
}

void write_file_or_throw(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << content;
    out.flush();
    if (!out) {
        throw Error("cannot write " + path.string());
    }
}

// One directory per case: matrix.txt (detlab-matrix v1) + meta.json.
void persist_case(const std::filesystem::path& corpus_dir, const std::string& id,
                  const IntMatrix& m, const std::string& meta) {
    const std::filesystem::path dir = corpus_dir / id;
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec || !std::filesystem::is_directory(dir)) {
        throw Error("cannot create corpus case directory " + dir.string());
    }
    write_file_or_throw(dir / "matrix.txt", write_matrix(m));
    write_file_or_throw(dir / "meta.json", meta);
}

}  // namespace

std::string Verdict::to_json(int indent) const {
    nlohmann::json j;
    j["agreement"] = agreement;
    if (agreement) {
        j["value"] = value.get_str();
        j["rendered"] = render_scientific(value);
    }
    j["values"] = nlohmann::json::object();
    for (const auto& [algo, v] : values) {
        j["values"][to_string(algo)] = value_pair(v);
    }
    return j.dump(indent);
}

AlgorithmTable AlgorithmTable::standard() {
    AlgorithmTable t;
    t.bareiss = [](const IntMatrix& m) { return det_bareiss(m); };
    t.cofactor = [](const IntMatrix& m) { return det_cofactor(m); };
    t.modular = [](const IntMatrix& m) { return det_modular_serial(m); };
    return t;
}

Verdict cross_check(const IntMatrix& m, const std::vector<DetAlgorithm>& algorithms,
                    const AlgorithmTable& table) {
    if (!m.is_square()) {
        throw NotSquareError(m.rows(), m.cols());
    }
    if (algorithms.empty()) {
        throw InvalidArgumentError("cross_check: at least one algorithm is required");
    }
    const std::set<DetAlgorithm> wanted(algorithms.begin(), algorithms.end());
    if (wanted.count(DetAlgorithm::Cofactor) != 0 && m.rows() > 10) {
        throw TooLargeForCofactorError(m.rows());
    }

    Verdict verdict;
    for (DetAlgorithm algo : wanted) {
        const AlgorithmTable::DetFn& fn = algo == DetAlgorithm::Bareiss  ? table.bareiss
                                          : algo == DetAlgorithm::Cofactor ? table.cofactor
                                                                           : table.modular;
        verdict.values.emplace(algo, fn(m));
    }

    verdict.agreement = true;
    const mpz_class& first = verdict.values.begin()->second;
    for (const auto& [algo, v] : verdict.values) {
        if (v != first) {
            verdict.agreement = false;
            break;
        }
    }
    if (verdict.agreement) {
        verdict.value = first;
    }
    return verdict;
}

std::string FuzzReport::to_json(int indent, bool include_wall) const {
    nlohmann::json j;
    j["generator_id"] = generator_id;
    j["seed"] = seed;
    j["config"] = config_json(config);
    j["iterations"] = iterations;
    j["disagreements"] = disagreements;
    j["corpus_entries"] = corpus_entries;
    if (include_wall) {
        j["wall_ms"] = wall_ms;
    }
    return j.dump(indent);
}

FuzzReport fuzz_run(const GenConfig& config, std::size_t iterations,
                    const std::filesystem::path& corpus_dir, int jobs,
                    const AlgorithmTable& table) {
    config.validate();
    if (iterations == 0) {
        throw InvalidArgumentError("fuzz_run: iterations must be >= 1");
    }

    FuzzReport report;
    report.generator_id = kGeneratorId;
    report.seed = config.seed;
    report.config = config;
    report.iterations = iterations;

    // The corpus directory must be writable before any work starts.
    {
        std::error_code ec;
        std::filesystem::create_directories(corpus_dir, ec);
        if (ec || !std::filesystem::is_directory(corpus_dir)) {
            throw CorpusWriteFailure("fuzz_run: corpus directory " + corpus_dir.string() +
                                         " is not writable",
                                     report);
        }
    }

    const auto started = std::chrono::steady_clock::now();

    // case_ids[i] is nonempty iff iteration i's disagreement was persisted.
    std::vector<std::string> case_ids(iterations);
    std::atomic<bool> abort{false};
    std::string failure;

    auto body = [&](std::size_t i) {
        if (abort.load(std::memory_order_relaxed)) return;

        GenConfig iter_config = config;
        iter_config.seed = derive_seed(config.seed, i);
        const IntMatrix m = generate(iter_config);
        const Verdict verdict =
            cross_check(m, {DetAlgorithm::Bareiss, DetAlgorithm::Modular}, table);
        if (verdict.agreement) return;

        const std::string id = case_name(i);
        nlohmann::json meta;
        meta["case"] = id;
        meta["iteration"] = i;
        meta["seed"] = iter_config.seed;
        meta["base_seed"] = config.seed;
        meta["generator_id"] = kGeneratorId;
        meta["config"] = config_json(config);
        meta["values"] = nlohmann::json::object();
        for (const auto& [algo, v] : verdict.values) {
            meta["values"][to_string(algo)] = value_pair(v);
        }

        // Single-writer discipline: every corpus write goes through here.
#pragma omp critical(detlab_corpus_writer)
        {
            if (!abort.load(std::memory_order_relaxed)) {
                try {
                    persist_case(corpus_dir, id, m, meta.dump(2) + "\n");
                    case_ids[i] = id;
                } catch (const std::exception& e) {
                    failure = e.what();
                    abort.store(true, std::memory_order_relaxed);
                }
            }
        }
    };

    if (jobs == 0) jobs = omp_get_max_threads();
    if (jobs <= 1 || iterations < 2) {
        for (std::size_t i = 0; i < iterations; ++i) body(i);
    } else {
        std::exception_ptr boom;
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
        for (long i = 0; i < static_cast<long>(iterations); ++i) {
            try {
                body(static_cast<std::size_t>(i));
            } catch (...) {
#pragma omp critical(detlab_fuzz_boom)
                if (!boom) boom = std::current_exception();
            }
        }
        if (boom) std::rethrow_exception(boom);
    }

    for (std::size_t i = 0; i < iterations; ++i) {
        if (!case_ids[i].empty()) {
            report.corpus_entries.push_back(case_ids[i]);
        }
    }
    report.disagreements = report.corpus_entries.size();
    report.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - started)
                         .count();

    if (abort.load()) {
        throw CorpusWriteFailure("fuzz_run: corpus write failed: " + failure, report);
    }
    return report;
}

CorpusCase read_corpus_case(const std::filesystem::path& case_dir) {
    CorpusCase c;
    c.id = case_dir.filename().string();
    c.matrix = read_matrix_file(case_dir / "matrix.txt");
    std::ifstream in(case_dir / "meta.json", std::ios::binary);
    if (!in) {
        throw ParseError("cannot open " + (case_dir / "meta.json").string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    c.meta_json = buf.str();
    return c;
}

std::string to_string(CasDialect d) {
    switch (d) {
        case CasDialect::MathematicaSyntax: return "mathematica";
        case CasDialect::MapleSyntax: return "maple";
        case CasDialect::SageSyntax: return "sage";
    }
    return "?";
}

CasDialect cas_dialect_from_string(const std::string& name) {
    if (name == "mathematica") return CasDialect::MathematicaSyntax;
    if (name == "maple") return CasDialect::MapleSyntax;
    if (name == "sage") return CasDialect::SageSyntax;
    throw InvalidArgumentError("unknown CAS dialect: " + name);
}

namespace {

// Rows as "<open>e, e, ...<close>", rows joined with ", ".
std::string rows_text(const IntMatrix& m, char open, char close) {
    std::ostringstream out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i > 0) out << ", ";
        out << open;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j > 0) out << ", ";
            out << m.at(i, j).get_str();
        }
        out << close;
    }
    return out.str();
}

}  // namespace

std::string export_cas(const IntMatrix& m, CasDialect dialect) {
    if (!m.is_square()) {
        throw NotSquareError(m.rows(), m.cols());
    }
    switch (dialect) {
        case CasDialect::MathematicaSyntax:
            return "Det[{" + rows_text(m, '{', '}') + "}]";
        case CasDialect::MapleSyntax:
            return "LinearAlgebra:-Determinant(Matrix([" + rows_text(m, '[', ']') + "]));";
        case CasDialect::SageSyntax:
            return "matrix(ZZ, [" + rows_text(m, '[', ']') + "]).det()";
    }
    throw InvalidArgumentError("unknown CAS dialect");
}

namespace {

std::string offending_span(const std::string& text, std::size_t pos) {
    const std::size_t from = pos >= 8 ? pos - 8 : 0;
    const std::size_t len = std::min<std::size_t>(17, text.size() - from);
    std::string span;
    for (char c : text.substr(from, len)) {
        switch (c) {
            case '\n': span += "\\n"; break;
            case '\r': span += "\\r"; break;
            case '\t': span += "\\t"; break;
            default: span += c;
        }
    }
    return "offset " + std::to_string(pos) + " near \"" + span + "\"";
}

}  // namespace

mpz_class import_result(const std::string& text) {
    std::string digits;
    bool negative = false;
    bool sign_seen = false;
    bool digits_ended = false;  // whitespace after digits: nothing may follow

    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (c == '\\') {
            // Line continuation: backslash + (optional \r) + \n, then
            // indentation of the continuation line.
            std::size_t j = i + 1;
            if (j < text.size() && text[j] == '\r') ++j;
            if (j < text.size() && text[j] == '\n') {
                i = j + 1;
                while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
                continue;
            }
            throw ParseError("import_result: stray backslash at " + offending_span(text, i));
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            if (!digits.empty()) digits_ended = true;
            ++i;
            continue;
        }
        if (c == '+' || c == '-') {
            if (sign_seen || !digits.empty()) {
                throw ParseError("import_result: unexpected sign at " + offending_span(text, i));
            }
            sign_seen = true;
            negative = c == '-';
            ++i;
            continue;
        }
        if (c >= '0' && c <= '9') {
            if (digits_ended) {
                throw ParseError("import_result: second integer at " + offending_span(text, i));
            }
            digits += c;
            ++i;
            continue;
        }
        throw ParseError("import_result: unexpected character '" + std::string(1, c) + "' at " +
                         offending_span(text, i));
    }

    if (digits.empty()) {
        throw ParseError("import_result: no digits found");
    }
    mpz_class v(digits, 10);
    if (negative) v = -v;
    return v;
}

}  // namespace detlab
