#include "detlab/int_matrix.hpp"

#include <fstream>
#include <sstream>
#include <utility>

namespace detlab {

namespace {

void check_dims(std::size_t rows, std::size_t cols) {
    if (rows < 1 || cols < 1) {
        throw InvalidArgumentError("matrix dimensions must be at least 1x1, got " +
                                   std::to_string(rows) + "x" + std::to_string(cols));
    }
}

}  // namespace

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {
    check_dims(rows, cols);
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<mpz_class> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    check_dims(rows, cols);
    if (entries_.size() != rows_ * cols_) {
        throw InvalidArgumentError("entry count " + std::to_string(entries_.size()) +
                                   " does not match " + std::to_string(rows_) + "x" +
                                   std::to_string(cols_));
    }
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    check_dims(rows_, cols_);
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) {
            throw InvalidArgumentError("ragged initializer: expected " + std::to_string(cols_) +
                                       " columns");
        }
        for (long v : row) entries_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<mpz_class>& diag) {
    IntMatrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m.at(i, i) = diag[i];
    return m;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i >= rows_ || j >= rows_) {
        throw InvalidArgumentError("row index out of range in swap_rows");
    }
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) {
        std::swap(entries_[i * cols_ + c], entries_[j * cols_ + c]);
    }
}

bool IntMatrix::operator==(const IntMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) {
        throw DimensionMismatchError("mat_mul: " + std::to_string(a.rows()) + "x" +
                                     std::to_string(a.cols()) + " times " +
                                     std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    }
    IntMatrix c(a.rows(), b.cols());
    mpz_class term;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const mpz_class& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                term = aik * b.at(k, j);
                c.at(i, j) += term;
            }
        }
    }
    return c;
}

IntMatrix mat_add(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionMismatchError("mat_add: " + std::to_string(a.rows()) + "x" +
                                     std::to_string(a.cols()) + " plus " +
                                     std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    }
    IntMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) + b.at(i, j);
    return c;
}

// --- text format -------------------------------------------------------------

std::string write_matrix(const IntMatrix& m) {
    std::ostringstream out;
    out << "detlab-matrix v1\n";
    out << "rows " << m.rows() << " cols " << m.cols() << "\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out << ' ';
            out << m.at(i, j);
        }
        out << '\n';
    }
    return out.str();
}

void write_matrix_file(const IntMatrix& m, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open for writing: " + path.string());
    out << write_matrix(m);
    if (!out.flush()) throw ParseError("write failed: " + path.string());
}

namespace {

bool valid_integer_token(const std::string& tok) {
    std::size_t i = 0;
    if (i < tok.size() && tok[i] == '-') ++i;
    if (i == tok.size()) return false;
    for (; i < tok.size(); ++i) {
        if (tok[i] < '0' || tok[i] > '9') return false;
    }
    return true;
}

}  // namespace

IntMatrix read_matrix(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != "detlab-matrix v1") {
        throw ParseError("expected header 'detlab-matrix v1', got '" + line + "'");
    }
    if (!std::getline(in, line)) throw ParseError("missing dimension line");
    std::istringstream dims(line);
    std::string kw_rows, kw_cols;
    std::size_t rows = 0, cols = 0;
    if (!(dims >> kw_rows >> rows >> kw_cols >> cols) || kw_rows != "rows" || kw_cols != "cols") {
        throw ParseError("malformed dimension line: '" + line + "'");
    }
    if (rows < 1 || cols < 1) throw ParseError("dimensions must be at least 1x1");

    std::vector<mpz_class> entries;
    entries.reserve(rows * cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!std::getline(in, line)) throw ParseError("missing row " + std::to_string(i + 1));
        std::istringstream row(line);
        std::string tok;
        for (std::size_t j = 0; j < cols; ++j) {
            if (!(row >> tok) || !valid_integer_token(tok)) {
                throw ParseError("row " + std::to_string(i + 1) + ": bad entry " +
                                 std::to_string(j + 1));
            }
            entries.emplace_back(tok);
        }
        if (row >> tok) {
            throw ParseError("row " + std::to_string(i + 1) + ": trailing data '" + tok + "'");
        }
    }
    return IntMatrix(rows, cols, std::move(entries));
}

IntMatrix read_matrix(const std::string& text) {
    std::istringstream in(text);
    return read_matrix(in);
}

IntMatrix read_matrix_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open: " + path.string());
    return read_matrix(in);
}

}  // namespace detlab
