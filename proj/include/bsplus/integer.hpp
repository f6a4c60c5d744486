#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace bsplus {

/// Exact integer used for every set element and group exponent.
using Integer = mpz_class;

inline std::string to_string(const Integer& v) { return v.get_str(10); }

/// Value as int64 when it fits, nullopt otherwise.
inline std::optional<std::int64_t> as_int64(const Integer& v) {
  if (mpz_fits_slong_p(v.get_mpz_t()) == 0) return std::nullopt;
  return static_cast<std::int64_t>(v.get_si());
}

/// base^exp for a machine-sized exponent.
inline Integer pow_ui(const Integer& base, unsigned long exp) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer out;
  mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

/// Floor remainder: result in [0, m) for m > 0.
inline Integer floor_mod(const Integer& a, const Integer& m) {
  Integer out;
  mpz_fdiv_r(out.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return out;
}

/// Exact quotient; caller guarantees d divides a.
inline Integer exact_div(const Integer& a, const Integer& d) {
  Integer out;
  mpz_divexact(out.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
  return out;
}

/// Parses an optionally signed decimal literal. Returns nullopt on malformed input.
std::optional<Integer> parse_integer(std::string_view text);

}  // namespace bsplus
