#include "detlab/matrix_gen.hpp"

namespace detlab {

std::vector<unsigned> GenConfig::default_exponents(std::size_t n) {
    static const std::vector<unsigned> stock = {123, 152, 185, 220,  397,  449,  503,
                                                563, 979, 1059, 1143, 1229, 1319, 1412};
    std::vector<unsigned> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (i < stock.size()) {
            out.push_back(stock[i]);
        } else {
            // Continue with the last gap, 1412 - 1319 = 93.
            out.push_back(out.back() + 93);
        }
    }
    return out;
}

void GenConfig::validate() const {
    if (n < 1) throw InvalidArgumentError("GenConfig: n must be at least 1");
    if (basic_range.lo > basic_range.hi) {
        throw InvalidRangeError("GenConfig: basic_range lo > hi");
    }
    if (small_range.lo > small_range.hi) {
        throw InvalidRangeError("GenConfig: small_range lo > hi");
    }
    if (exponents.size() != n) {
        throw InvalidArgumentError("GenConfig: " + std::to_string(exponents.size()) +
                                   " exponents for n = " + std::to_string(n));
    }
}

IntMatrix gen_basic_matrix(Prng& p, std::size_t n, IntRange range) {
    if (n < 1) throw InvalidArgumentError("gen_basic_matrix: n must be at least 1");
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m.at(i, j) = static_cast<long>(sample_uniform(p, range.lo, range.hi));
        }
    }
    return m;
}

IntMatrix compose_big_matrix(const IntMatrix& basic, const std::vector<unsigned>& exponents,
                             const IntMatrix& small) {
    const std::size_t n = basic.rows();
    if (!basic.is_square() || !small.is_square() || small.rows() != n) {
        throw DimensionMismatchError("compose_big_matrix: basic and small must both be " +
                                     std::to_string(n) + "x" + std::to_string(n));
    }
    if (exponents.size() != n) {
        throw DimensionMismatchError("compose_big_matrix: expected " + std::to_string(n) +
                                     " exponents, got " + std::to_string(exponents.size()));
    }
    std::vector<mpz_class> powers(n);
    for (std::size_t j = 0; j < n; ++j) {
        mpz_ui_pow_ui(powers[j].get_mpz_t(), 10, exponents[j]);
    }
    return mat_add(mat_mul(basic, IntMatrix::diagonal(powers)), small);
}

IntMatrix generate(const GenConfig& config) {
    config.validate();
    Prng stream(config.seed);
    IntMatrix basic = gen_basic_matrix(stream, config.n, config.basic_range);
    IntMatrix small = gen_basic_matrix(stream, config.n, config.small_range);
    return compose_big_matrix(basic, config.exponents, small);
}

}  // namespace detlab
