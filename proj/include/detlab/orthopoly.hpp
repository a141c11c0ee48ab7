#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "detlab/errors.hpp"

namespace detlab {

/// Finite discrete positive measure: point masses M_i >= 1 at strictly
/// increasing integer nodes a_0 < a_1 < ... < a_{N-1}.
class DiscreteMeasure {
public:
    DiscreteMeasure(std::vector<mpz_class> nodes, std::vector<mpz_class> masses);

    std::size_t size() const { return nodes_.size(); }
    const std::vector<mpz_class>& nodes() const { return nodes_; }
    const std::vector<mpz_class>& masses() const { return masses_; }
    const mpz_class& node(std::size_t i) const { return nodes_[i]; }
    const mpz_class& mass(std::size_t i) const { return masses_[i]; }

    /// Compact one-line description for reports: "{a:M, a:M, ...}".
    std::string describe() const;

private:
    std::vector<mpz_class> nodes_;
    std::vector<mpz_class> masses_;
};

/// Dense integer polynomial; coefficient index = degree.
class IntPolynomial {
public:
    IntPolynomial() : coefficients_{0} {}
    explicit IntPolynomial(std::vector<mpz_class> coefficients);

    std::size_t degree() const { return coefficients_.size() - 1; }
    bool is_zero() const { return coefficients_.size() == 1 && coefficients_[0] == 0; }
    const std::vector<mpz_class>& coefficients() const { return coefficients_; }
    const mpz_class& leading_coefficient() const { return coefficients_.back(); }
    const mpz_class& coefficient(std::size_t deg) const;

    bool operator==(const IntPolynomial& other) const {
        return coefficients_ == other.coefficients_;
    }

    /// Human-readable form, e.g. "2*x - 1".
    std::string to_string() const;

private:
    std::vector<mpz_class> coefficients_;  // trailing zeros trimmed, never empty
};

/// Moments m_j = sum_i M_i * a_i^j for j = 0..upto, exact.
std::vector<mpz_class> moments(const DiscreteMeasure& mu, std::size_t upto);

/// Hankel determinant of the moment matrix (m_{i+j})_{i,j=0..n-1};
/// 1 for n == 0 by convention. Positive exactly while n <= size(mu).
mpz_class hankel_det(const DiscreteMeasure& mu, std::size_t n);

/// Integer-normalized orthogonal polynomial of degree n.
///
/// P_n is the determinant of the (n+1)x(n+1) matrix whose rows are the
/// moment windows (m_i, ..., m_{i+n}) for i = 0..n-1 and whose last row is
/// (1, x, ..., x^n), expanded along the last row. P_0 = 1; the leading
/// coefficient equals hankel_det(mu, n) > 0; coefficients are never reduced
/// by common factors.
///
/// Degrees are capped at size(mu)-1 (P_N vanishes on every node);
/// larger n throws DegreeOutOfRangeError.
IntPolynomial orthogonal_poly(const DiscreteMeasure& mu, std::size_t n);

/// Exact Horner evaluation.
mpz_class eval_poly(const IntPolynomial& p, const mpz_class& x);

/// sum_i M_i * p(a_i) * q(a_i), exact.
mpz_class inner_product(const DiscreteMeasure& mu, const IntPolynomial& p,
                        const IntPolynomial& q);

// --- detlab-measure v1 text format -------------------------------------------
//
//   detlab-measure v1
//   points N
//   <a_i M_i, one pair per line, N lines>

std::string write_measure(const DiscreteMeasure& mu);
void write_measure_file(const DiscreteMeasure& mu, const std::filesystem::path& path);
DiscreteMeasure read_measure(std::istream& in);
DiscreteMeasure read_measure(const std::string& text);
DiscreteMeasure read_measure_file(const std::filesystem::path& path);

}  // namespace detlab
