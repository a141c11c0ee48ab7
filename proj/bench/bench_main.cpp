// Serial-vs-parallel comparison bench for the three OpenMP kernels:
// modular determinant residues, positivity-scan cells, and fuzz iterations.
// Each row also cross-checks that both paths produce identical results;
// a mismatch is a bug, not a slow day.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include <omp.h>

#include "detlab/casorati.hpp"
#include "detlab/determinant.hpp"
#include "detlab/difftest.hpp"
#include "detlab/matrix_gen.hpp"
#include "detlab/orthopoly.hpp"

namespace {

using namespace detlab;

double time_ms(const std::function<void()>& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

bool scans_match(const ScanReport& a, const ScanReport& b) {
    if (a.cells.size() != b.cells.size()) return false;
    for (std::size_t i = 0; i < a.cells.size(); ++i) {
        if (a.cells[i].n != b.cells[i].n || a.cells[i].k != b.cells[i].k ||
            a.cells[i].sign != b.cells[i].sign || a.cells[i].rendered != b.cells[i].rendered) {
            return false;
        }
    }
    return a.has_min == b.has_min && a.min_value == b.min_value;
}

void report_row(const char* name, double serial_ms, double parallel_ms, bool match) {
    std::printf("%-18s %10.1f %12.1f %8.2fx  %s\n", name, serial_ms, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0, match ? "yes" : "NO");
}

}  // namespace

int main() {
    std::printf("threads available: %d\n\n", omp_get_max_threads());
    std::printf("%-18s %10s %12s %9s  %s\n", "kernel", "serial_ms", "parallel_ms", "speedup",
                "match");

    bool all_match = true;

    // 1. Modular determinant residues on the bundled 14x14 reference matrix.
    {
        const IntMatrix big = golden_fixture().big();
        mpz_class serial_det, parallel_det;
        const double s = time_ms([&] { serial_det = det_modular_serial(big); });
        const double p = time_ms([&] { parallel_det = det_modular(big, 0); });
        const bool ok = serial_det == parallel_det;
        all_match = all_match && ok;
        report_row("modular residues", s, p, ok);
    }

    // 2. Positivity-scan cells on a 10-point measure.
    {
        const DiscreteMeasure mu({-9, -7, -4, -1, 0, 2, 3, 5, 8, 9},
                                 {3, 1, 4, 1, 5, 9, 2, 6, 5, 3});
        ScanReport serial, parallel;
        const double s = time_ms([&] { serial = ks_scan(mu, 4, 6, 6, 1); });
        const double p = time_ms([&] { parallel = ks_scan(mu, 4, 6, 6, 0); });
        const bool ok = scans_match(serial, parallel);
        all_match = all_match && ok;
        report_row("scan cells", s, p, ok);
    }

    // 3. Fuzz iterations in the default (14x14) regime.
    {
        GenConfig config;
        config.seed = 20260819;
        const auto root = std::filesystem::temp_directory_path() / "detlab-bench";
        std::filesystem::remove_all(root);
        FuzzReport serial, parallel;
        const double s = time_ms([&] { serial = fuzz_run(config, 6, root / "serial", 1); });
        const double p = time_ms([&] { parallel = fuzz_run(config, 6, root / "parallel", 0); });
        const bool ok = serial.to_json(2, false) == parallel.to_json(2, false);
        all_match = all_match && ok;
        report_row("fuzz iterations", s, p, ok);
        std::filesystem::remove_all(root);
    }

    if (!all_match) {
        std::printf("\nresult mismatch between serial and parallel kernels\n");
        return 1;
    }
    return 0;
}
