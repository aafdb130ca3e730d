#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ordot {

/// Exact rational scalar used throughout the library.
using Q = mpq_class;

/// Builds a canonical rational from a numerator/denominator pair.
Q make_q(long num, long den = 1);

/// Canonical "p/q" form, lowest terms, q > 0. Integers render as "p/1".
std::string q_str(const Q& v);

/// Parses "p/q", "p", or a decimal-free integer string. Returns nothing on
/// malformed input or a zero denominator.
std::optional<Q> q_parse(std::string_view s);

Q q_abs(const Q& v);
Q q_min(const Q& a, const Q& b);
Q q_max(const Q& a, const Q& b);

/// lcm of the lowest-terms denominators of a range of rationals.
template <class It>
mpz_class denominator_lcm(It first, It last) {
  mpz_class l = 1;
  for (It it = first; it != last; ++it) {
    mpz_class den = it->get_den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
  }
  return l;
}

/// Comparison policy. Exact mode decides predicates by exact rational
/// comparison; approximate mode grants a tolerance band around equality so
/// that float-derived inputs do not produce spurious strict verdicts.
struct NumericMode {
  bool exact = true;
  Q tol = 0;

  static NumericMode Exact() { return NumericMode{true, 0}; }
  static NumericMode Approx(Q tolerance = Q(1, 1000000000)) {
    if (tolerance <= 0) throw std::invalid_argument("tolerance must be positive");
    return NumericMode{false, std::move(tolerance)};
  }

  bool is_zero(const Q& v) const { return exact ? v == 0 : q_abs(v) <= tol; }
  bool eq(const Q& a, const Q& b) const { return is_zero(a - b); }
  // a <= b, with tolerance slack in approximate mode
  bool leq(const Q& a, const Q& b) const { return exact ? a <= b : a <= b + tol; }
  bool lt(const Q& a, const Q& b) const { return leq(a, b) && !eq(a, b); }
};

/// Thrown when a cross-check that should be impossible to fail (exact
/// duality gap, method agreement, re-verification of a witness) fails.
/// Reaching it signals a bug in this library, never a user error.
struct internal_check_error : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace ordot
