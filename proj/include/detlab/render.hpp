#pragma once

#include <cstddef>
#include <string>

#include <gmpxx.h>

namespace detlab {

/// Scientific rendering of an exact integer: sign, one leading digit, a
/// decimal point, up to 14 further significant digits (round half to even,
/// trailing zeros trimmed), 'e', decimal exponent.
///
///   1951242191319870... (9763 digits)  ->  "1.95124219131987e9762"
///   -2                                 ->  "-2e0"
///   5000                               ->  "5e3"
///   0                                  ->  "0e0"
std::string render_scientific(const mpz_class& x);

/// Number of decimal digits of |x|; 1 for x == 0.
std::size_t digit_count(const mpz_class& x);

/// Decimal exponent of the rendering: digit_count(x) - 1, adjusted when
/// rounding carries into a new digit (e.g. 999...9 -> 1e<n>).
long render_exponent(const mpz_class& x);

}  // namespace detlab
