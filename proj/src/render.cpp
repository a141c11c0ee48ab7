#include "detlab/render.hpp"

#include <algorithm>

namespace detlab {

namespace {

constexpr std::size_t kSignificantDigits = 15;  // 1 leading + up to 14 further

std::string abs_digits(const mpz_class& x) {
    mpz_class a = abs(x);
    return a.get_str();
}

// Rounds a decimal digit string to kSignificantDigits, half to even.
// Returns the rounded digits and adds carry_out to the exponent when the
// round overflows into a new leading digit.
std::string round_digits(const std::string& digits, long& exponent) {
    if (digits.size() <= kSignificantDigits) return digits;

    std::string kept = digits.substr(0, kSignificantDigits);
    const char next = digits[kSignificantDigits];
    bool round_up;
    if (next > '5') {
        round_up = true;
    } else if (next < '5') {
        round_up = false;
    } else {
        // Exactly half iff every digit after the 5 is zero; then go to even.
        bool tail_zero = digits.find_first_not_of('0', kSignificantDigits + 1) == std::string::npos;
        if (tail_zero) {
            round_up = ((kept.back() - '0') % 2) != 0;
        } else {
            round_up = true;
        }
    }
    if (round_up) {
        std::size_t i = kept.size();
        while (i > 0) {
            --i;
            if (kept[i] != '9') {
                ++kept[i];
                std::fill(kept.begin() + static_cast<long>(i) + 1, kept.end(), '0');
                return kept;
            }
        }
        // All nines: 999... -> 1000..., one extra decimal place.
        ++exponent;
        kept.assign(kSignificantDigits, '0');
        kept[0] = '1';
    }
    return kept;
}

}  // namespace

std::string render_scientific(const mpz_class& x) {
    if (x == 0) return "0e0";

    const std::string digits = abs_digits(x);
    long exponent = static_cast<long>(digits.size()) - 1;
    std::string mantissa = round_digits(digits, exponent);

    // Trim trailing zeros; the leading digit always stays.
    std::size_t end = mantissa.find_last_not_of('0');
    mantissa.resize(std::max<std::size_t>(end + 1, 1));

    std::string out;
    if (sgn(x) < 0) out += '-';
    out += mantissa[0];
    if (mantissa.size() > 1) {
        out += '.';
        out.append(mantissa, 1, std::string::npos);
    }
    out += 'e';
    out += std::to_string(exponent);
    return out;
}

std::size_t digit_count(const mpz_class& x) {
    if (x == 0) return 1;
    return abs_digits(x).size();
}

long render_exponent(const mpz_class& x) {
    if (x == 0) return 0;
    const std::string digits = abs_digits(x);
    long exponent = static_cast<long>(digits.size()) - 1;
    round_digits(digits, exponent);
    return exponent;
}

}  // namespace detlab
