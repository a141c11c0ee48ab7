#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "detlab/int_matrix.hpp"
#include "detlab/orthopoly.hpp"

namespace detlab {

/// Strictly increasing nonnegative polynomial degrees f_1 < ... < f_l.
class IndexSet {
public:
    explicit IndexSet(std::vector<std::size_t> indices);

    /// Consecutive block {n, n+1, ..., n+l-1}.
    static IndexSet consecutive(std::size_t n, std::size_t l);

    std::size_t size() const { return indices_.size(); }
    const std::vector<std::size_t>& indices() const { return indices_; }
    std::size_t max_index() const { return indices_.back(); }

    std::string describe() const;  // "{f1, f2, ...}"

private:
    std::vector<std::size_t> indices_;
};

/// One evaluated determinant cell. `n` is set for consecutive-block scans
/// and empty for general index-set scans (where the row set is fixed).
struct ScanCell {
    std::optional<std::size_t> n;
    std::size_t k = 0;
    int sign = 0;                // -1, 0, +1
    std::string rendered;        // scientific rendering of the exact value
};

/// Cells whose value violates strict positivity (value <= 0).
struct ScanViolation {
    std::optional<std::size_t> n;
    std::size_t k = 0;
    bool zero = false;           // explicit marker: zero is still a violation
    std::string rendered;
};

/// Outcome of a positivity scan, assembled in deterministic (n-major, then k)
/// order regardless of how many workers evaluated cells.
struct ScanReport {
    std::string kind;            // "consecutive" or "general"
    std::string measure;         // describe() of the scanned measure
    std::string index_set;       // describe() of F, or "l=<l> consecutive"
    std::size_t l = 0;
    std::vector<ScanCell> cells;
    std::vector<ScanViolation> violations;

    bool has_min = false;        // false iff the scan had no valid cells
    mpz_class min_value;
    std::string min_rendered;
    std::optional<std::size_t> min_n;
    std::size_t min_k = 0;

    std::string generator_id;    // metadata for reproduction
    std::optional<std::uint64_t> seed;
    std::string timestamp;       // ISO-8601 UTC, empty in library-only use
    int jobs = 1;

    /// Structured JSON form (exact min value as a decimal string).
    std::string to_json(int indent = 2) const;
};

/// The l x l matrix with entry (i, j) = P_{f_i}(a_{k+j}).
///
/// Throws DegreeOutOfRangeError if max(F) > N-1 and NodeIndexOutOfRangeError
/// if k + l - 1 > N-1.
IntMatrix casorati_matrix(const DiscreteMeasure& mu, const IndexSet& f, std::size_t k);

/// Determinant of casorati_matrix, computed with Bareiss and cross-checked
/// against the modular algorithm; disagreement (never expected) throws
/// InternalDisagreementError.
mpz_class casorati_det(const DiscreteMeasure& mu, const IndexSet& f, std::size_t k);

/// Consecutive-block positivity scan: evaluates the determinant for
/// F = {n, ..., n+l-1} at every (n, k) with n <= n_max, k <= k_max that fits
/// inside the measure (cells that do not fit are skipped, not errors).
/// `jobs` <= 1 runs the serial reference kernel; 0 means one per core.
ScanReport ks_scan(const DiscreteMeasure& mu, std::size_t l, std::size_t n_max,
                   std::size_t k_max, int jobs = 1);

/// Fixed index-set scan over k <= k_max. Reports signs and minima and
/// asserts nothing about them.
ScanReport general_scan(const DiscreteMeasure& mu, const IndexSet& f, std::size_t k_max,
                        int jobs = 1);

}  // namespace detlab
