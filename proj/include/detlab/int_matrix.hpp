#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "detlab/errors.hpp"

namespace detlab {

/// Dense matrix of arbitrary-precision signed integers, row-major.
///
/// All arithmetic on entries is exact. Matrices are value types; every
/// operation below is a pure function of its inputs.
class IntMatrix {
public:
    /// Zero-filled rows x cols matrix. Both dimensions must be >= 1.
    IntMatrix(std::size_t rows, std::size_t cols);

    /// Takes ownership of a row-major entry vector of length rows*cols.
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<mpz_class> entries);

    /// Convenience for literals in tests and fixtures.
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix diagonal(const std::vector<mpz_class>& diag);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const mpz_class& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    mpz_class& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

    const std::vector<mpz_class>& entries() const { return entries_; }

    IntMatrix transposed() const;
    void swap_rows(std::size_t i, std::size_t j);

    bool operator==(const IntMatrix& other) const;
    bool operator!=(const IntMatrix& other) const { return !(*this == other); }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<mpz_class> entries_;
};

/// Exact matrix product. Throws DimensionMismatchError unless a.cols == b.rows.
IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);

/// Exact entrywise sum. Throws DimensionMismatchError unless shapes match.
IntMatrix mat_add(const IntMatrix& a, const IntMatrix& b);

// --- detlab-matrix v1 text format ------------------------------------------
//
//   detlab-matrix v1
//   rows R cols C
//   <C single-space-separated decimal integers per line, R lines>
//
// The writer emits exactly this; the reader rejects anything else.

std::string write_matrix(const IntMatrix& m);
void write_matrix_file(const IntMatrix& m, const std::filesystem::path& path);

IntMatrix read_matrix(std::istream& in);
IntMatrix read_matrix(const std::string& text);
IntMatrix read_matrix_file(const std::filesystem::path& path);

}  // namespace detlab
