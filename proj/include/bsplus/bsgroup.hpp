#pragma once

#include "bsplus/integer.hpp"

#include <compare>
#include <stdexcept>

namespace bsplus {

/// The base n of BS(1,n) = <a, b | ab = b a^n>. Requires n >= 2.
class BSContext {
 public:
  explicit BSContext(unsigned long n) : n_(n) {
    if (n < 2) throw std::invalid_argument("BSContext: n must be at least 2");
  }
  unsigned long n() const { return n_; }

  /// n^m as an exact integer.
  Integer power(unsigned long m) const { return pow_ui(Integer(n_), m); }

  friend bool operator==(const BSContext&, const BSContext&) = default;

 private:
  unsigned long n_;
};

/// Normal form b^m a^x of a monoid element, m >= 0.
struct BSElement {
  unsigned long m = 0;
  Integer x;

  friend bool operator==(const BSElement& g, const BSElement& h) {
    return g.m == h.m && g.x == h.x;
  }
  /// Orders by b-exponent, then a-exponent.
  friend bool operator<(const BSElement& g, const BSElement& h) {
    return g.m != h.m ? g.m < h.m : g.x < h.x;
  }
};

inline BSElement identity() { return {0, Integer(0)}; }

/// (b^r a^x)(b^s a^y) = b^(r+s) a^(n^s x + y).
BSElement mul(const BSContext& ctx, const BSElement& g, const BSElement& h);

/// Commutation via (n^{m_h} - 1) x_g == (n^{m_g} - 1) x_h.
bool commutes(const BSContext& ctx, const BSElement& g, const BSElement& h);

/// Commutation by comparing both products directly.
bool commutes_by_products(const BSContext& ctx, const BSElement& g, const BSElement& h);

}  // namespace bsplus
