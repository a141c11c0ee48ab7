// detlab command-line front end. Exit codes: 0 success, 1 verification
// failure (algorithm disagreement; positivity violation under --strict),
// 2 usage or I/O error.

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "detlab/casorati.hpp"
#include "detlab/determinant.hpp"
#include "detlab/difftest.hpp"
#include "detlab/errors.hpp"
#include "detlab/int_matrix.hpp"
#include "detlab/matrix_gen.hpp"
#include "detlab/orthopoly.hpp"
#include "detlab/render.hpp"
#include "detlab/rng.hpp"

namespace {

using namespace detlab;

// Exact decimal when short; scientific rendering plus digit count when the
// value gets long; --exact always prints every digit.
void print_value(const std::string& label, const mpz_class& v, bool exact) {
    const std::size_t digits = digit_count(v);
    if (exact) {
        std::cout << label << ": " << v.get_str() << "\n"
                  << "rendered: " << render_scientific(v) << "\n"
                  << "digits: " << digits << "\n";
    } else if (digits <= 20) {
        std::cout << label << ": " << v.get_str() << "\n";
    } else {
        std::cout << label << ": " << render_scientific(v) << "\n"
                  << "digits: " << digits << "\n";
    }
}

IntRange parse_range(const std::string& text) {
    const auto pos = text.find(':');
    if (pos == std::string::npos || pos == 0 || pos + 1 == text.size()) {
        throw InvalidArgumentError("range must be LO:HI, got '" + text + "'");
    }
    try {
        return IntRange{std::stoll(text.substr(0, pos)), std::stoll(text.substr(pos + 1))};
    } catch (const std::exception&) {
        throw InvalidArgumentError("range must be LO:HI with integer bounds, got '" + text + "'");
    }
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string part;
    std::istringstream in(text);
    while (std::getline(in, part, sep)) parts.push_back(part);
    return parts;
}

std::vector<unsigned> parse_unsigned_list(const std::string& text, const char* what) {
    std::vector<unsigned> out;
    for (const std::string& part : split(text, ',')) {
        try {
            out.push_back(static_cast<unsigned>(std::stoul(part)));
        } catch (const std::exception&) {
            throw InvalidArgumentError(std::string(what) + ": bad entry '" + part + "' in '" +
                                       text + "'");
        }
    }
    if (out.empty()) {
        throw InvalidArgumentError(std::string(what) + ": empty list");
    }
    return out;
}

std::vector<std::size_t> parse_index_list(const std::string& text) {
    std::vector<std::size_t> out;
    for (unsigned e : parse_unsigned_list(text, "--indices")) out.push_back(e);
    return out;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << content;
    out.flush();
    if (!out) throw Error("cannot write " + path);
}

void print_scan_summary(const ScanReport& report) {
    std::cout << "measure: " << report.measure << "\n"
              << "index_set: " << report.index_set << "\n"
              << "l: " << report.l << "\n"
              << "jobs: " << report.jobs << "\n"
              << "cells: " << report.cells.size() << "\n"
              << "violations: " << report.violations.size() << "\n";
    for (const ScanViolation& v : report.violations) {
        std::cout << "violation:";
        if (v.n) std::cout << " n=" << *v.n;
        std::cout << " k=" << v.k << " value=" << v.rendered << (v.zero ? " (zero)" : "") << "\n";
    }
    if (report.has_min) {
        std::cout << "min: " << report.min_rendered;
        if (report.min_n) std::cout << " at n=" << *report.min_n << " k=" << report.min_k;
        else std::cout << " at k=" << report.min_k;
        std::cout << "\n";
    } else {
        std::cout << "min: none (no valid cells)\n";
    }
}

int run_det(const std::string& in, const std::string& algo, bool exact) {
    const IntMatrix m = read_matrix_file(in);
    if (algo != "all") {
        const DetAlgorithm a = det_algorithm_from_string(algo);
        const mpz_class v = compute_det(m, a);
        std::cout << "algorithm: " << to_string(a) << "\n";
        print_value("det", v, exact);
        return 0;
    }

    std::vector<DetAlgorithm> algorithms{DetAlgorithm::Bareiss, DetAlgorithm::Modular};
    if (m.rows() <= 10) {
        algorithms.insert(algorithms.begin() + 1, DetAlgorithm::Cofactor);
    }
    std::cout << "algorithms:";
    for (DetAlgorithm a : algorithms) std::cout << " " << to_string(a);
    std::cout << "\n";

    const Verdict verdict = cross_check(m, algorithms);
    std::cout << "agreement: " << (verdict.agreement ? "true" : "false") << "\n";
    if (verdict.agreement) {
        print_value("det", verdict.value, exact);
        return 0;
    }
    for (const auto& [a, v] : verdict.values) {
        print_value(to_string(a), v, exact);
    }
    return 1;
}

int run_gen(std::uint64_t seed, std::size_t n, const std::string& basic_range,
            const std::string& small_range, const std::string& exponents,
            const std::string& out) {
    GenConfig config;
    config.seed = seed;
    config.n = n;
    if (!basic_range.empty()) config.basic_range = parse_range(basic_range);
    if (!small_range.empty()) config.small_range = parse_range(small_range);
    config.exponents = exponents.empty() ? GenConfig::default_exponents(n)
                                         : parse_unsigned_list(exponents, "--exponents");
    config.validate();

    const IntMatrix big = generate(config);
    write_matrix_file(big, out);
    std::cout << "generator_id: " << kGeneratorId << "\n"
              << "seed: " << config.seed << "\n"
              << "n: " << config.n << "\n"
              << "wrote: " << out << "\n";
    return 0;
}

int run_repro(bool exact) {
    const IntMatrix big = golden_fixture().big();
    const mpz_class bareiss = det_bareiss(big);
    const mpz_class modular = det_modular(big);
    std::cout << "algorithms: bareiss modular\n"
              << "agreement: " << (bareiss == modular ? "true" : "false") << "\n";
    if (bareiss != modular) {
        print_value("bareiss", bareiss, exact);
        print_value("modular", modular, exact);
        return 1;
    }
    print_value("det", bareiss, exact);
    return 0;
}

int run_fuzz(std::uint64_t seed, std::size_t iters, int jobs, const std::string& corpus,
             bool strict) {
    GenConfig config;
    config.seed = seed;
    try {
        const FuzzReport report = fuzz_run(config, iters, corpus, jobs);
        std::cout << "generator_id: " << report.generator_id << "\n"
                  << "seed: " << report.seed << "\n"
                  << "iterations: " << report.iterations << "\n"
                  << "jobs: " << jobs << "\n"
                  << "disagreements: " << report.disagreements << "\n";
        for (const std::string& id : report.corpus_entries) {
            std::cout << "corpus: " << id << "\n";
        }
        std::cout << "wall_ms: " << report.wall_ms << "\n";
        if (report.disagreements > 0) {
            return strict ? 1 : 0;
        }
        return 0;
    } catch (const CorpusWriteFailure& e) {
        // Flush what completed, then fail as an I/O error.
        std::cout << e.partial_report().to_json() << "\n";
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

int run_ks_scan(const std::string& measure_path, std::size_t l, std::size_t nmax,
                std::size_t kmax, int jobs, bool strict, const std::string& report_path) {
    const DiscreteMeasure mu = read_measure_file(measure_path);
    ScanReport report = ks_scan(mu, l, nmax, kmax, jobs);
    print_scan_summary(report);
    if (!report_path.empty()) {
        write_text_file(report_path, report.to_json() + "\n");
        std::cout << "report: " << report_path << "\n";
    }
    return (strict && !report.violations.empty()) ? 1 : 0;
}

int run_fscan(const std::string& measure_path, const std::string& indices, std::size_t kmax,
              const std::string& report_path) {
    const DiscreteMeasure mu = read_measure_file(measure_path);
    const IndexSet f(parse_index_list(indices));
    ScanReport report = general_scan(mu, f, kmax);
    print_scan_summary(report);
    if (!report_path.empty()) {
        write_text_file(report_path, report.to_json() + "\n");
        std::cout << "report: " << report_path << "\n";
    }
    return 0;
}

int run_export(const std::string& in, const std::string& dialect, const std::string& out) {
    const IntMatrix m = read_matrix_file(in);
    const std::string expr = export_cas(m, cas_dialect_from_string(dialect));
    if (out.empty()) {
        std::cout << expr << "\n";
    } else {
        write_text_file(out, expr + "\n");
        std::cout << "wrote: " << out << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact big-integer determinant laboratory"};
    app.require_subcommand(1);
    int rc = 0;

    // det
    std::string det_in, det_algo = "bareiss";
    bool det_exact = false;
    CLI::App* det = app.add_subcommand("det", "determinant of a matrix file");
    det->add_option("--in", det_in, "matrix file (detlab-matrix v1)")->required();
    det->add_option("--algo", det_algo, "bareiss|cofactor|modular|all")
        ->check(CLI::IsMember({"bareiss", "cofactor", "modular", "all"}));
    det->add_flag("--exact", det_exact, "print every digit");
    det->callback([&] { rc = run_det(det_in, det_algo, det_exact); });

    // gen
    std::uint64_t gen_seed = 0;
    std::size_t gen_n = 14;
    std::string gen_basic, gen_small, gen_exponents, gen_out;
    CLI::App* gen = app.add_subcommand("gen", "generate a structured random matrix");
    gen->add_option("--seed", gen_seed, "base seed (required: runs are reproducible)")
        ->required();
    gen->add_option("--n", gen_n, "matrix size");
    gen->add_option("--basic-range", gen_basic, "LO:HI for the basic matrix");
    gen->add_option("--small-range", gen_small, "LO:HI for the small matrix");
    gen->add_option("--exponents", gen_exponents, "comma-separated diagonal exponents");
    gen->add_option("--out", gen_out, "output matrix file")->required();
    gen->callback(
        [&] { rc = run_gen(gen_seed, gen_n, gen_basic, gen_small, gen_exponents, gen_out); });

    // repro
    bool repro_exact = false;
    CLI::App* repro =
        app.add_subcommand("repro", "rebuild the bundled reference matrix and print its det");
    repro->add_flag("--exact", repro_exact, "print every digit");
    repro->callback([&] { rc = run_repro(repro_exact); });

    // fuzz
    std::uint64_t fuzz_seed = 0;
    std::size_t fuzz_iters = 0;
    int fuzz_jobs = 1;
    std::string fuzz_corpus;
    bool fuzz_strict = false;
    CLI::App* fuzz = app.add_subcommand("fuzz", "differential determinant fuzzing");
    fuzz->add_option("--seed", fuzz_seed, "base seed")->required();
    fuzz->add_option("--iters", fuzz_iters, "iteration count")->required();
    fuzz->add_option("--jobs", fuzz_jobs, "worker count (0 = one per core)");
    fuzz->add_option("--corpus", fuzz_corpus, "directory for disagreement cases")->required();
    fuzz->add_flag("--strict", fuzz_strict, "exit 1 if any disagreement is found");
    fuzz->callback(
        [&] { rc = run_fuzz(fuzz_seed, fuzz_iters, fuzz_jobs, fuzz_corpus, fuzz_strict); });

    // ks-scan
    std::string ks_measure, ks_report;
    std::size_t ks_l = 0, ks_nmax = 0, ks_kmax = 0;
    int ks_jobs = 1;
    bool ks_strict = false;
    CLI::App* ks = app.add_subcommand("ks-scan", "consecutive-index positivity scan");
    ks->add_option("--measure", ks_measure, "measure file (detlab-measure v1)")->required();
    ks->add_option("--l", ks_l, "block size")->required();
    ks->add_option("--nmax", ks_nmax, "largest starting degree n")->required();
    ks->add_option("--kmax", ks_kmax, "largest node offset k")->required();
    ks->add_option("--jobs", ks_jobs, "worker count (0 = one per core)");
    ks->add_flag("--strict", ks_strict, "exit 1 if any violation is found");
    ks->add_option("--report", ks_report, "write the full JSON report here");
    ks->callback(
        [&] { rc = run_ks_scan(ks_measure, ks_l, ks_nmax, ks_kmax, ks_jobs, ks_strict, ks_report); });

    // fscan
    std::string fs_measure, fs_indices, fs_report;
    std::size_t fs_kmax = 0;
    CLI::App* fs = app.add_subcommand("fscan", "general index-set determinant scan");
    fs->add_option("--measure", fs_measure, "measure file (detlab-measure v1)")->required();
    fs->add_option("--indices", fs_indices, "comma-separated degrees f1,f2,...")->required();
    fs->add_option("--kmax", fs_kmax, "largest node offset k")->required();
    fs->add_option("--report", fs_report, "write the full JSON report here");
    fs->callback([&] { rc = run_fscan(fs_measure, fs_indices, fs_kmax, fs_report); });

    // export
    std::string ex_in, ex_dialect, ex_out;
    CLI::App* ex = app.add_subcommand("export", "emit a determinant expression for an external CAS");
    ex->add_option("--in", ex_in, "matrix file (detlab-matrix v1)")->required();
    ex->add_option("--dialect", ex_dialect, "mathematica|maple|sage")
        ->required()
        ->check(CLI::IsMember({"mathematica", "maple", "sage"}));
    ex->add_option("--out", ex_out, "write the expression here instead of stdout");
    ex->callback([&] { rc = run_export(ex_in, ex_dialect, ex_out); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const InternalDisagreementError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
