#pragma once

// Exact truncated Laurent series over arbitrary-precision integers, plus the
// Euler products and dissection/extraction operators built on top of them.
//
// A series knows its coefficients for every exponent strictly below `trunc`;
// exponents >= trunc are unknown and reading them is an error, never a silent
// zero.  The valuation may be negative.  Every operation records the tightest
// truncation bound implied by its inputs, so a recomputation at a larger N
// reproduces previously reported coefficients bit-exactly.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qfrob {

using Int = mpz_class;

/// Requested a coefficient at or beyond the truncation bound.
class TruncationError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Tried to invert a series whose lowest coefficient is not +1 or -1
/// (inversion is restricted to units of Z[[q]] so all arithmetic stays in
/// exact integers).
class NotAUnitError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Floor/ceil division for possibly negative numerators (positive divisor).
constexpr std::int64_t div_floor(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}
constexpr std::int64_t div_ceil(std::int64_t a, std::int64_t b) {
  return -div_floor(-a, b);
}
/// Nonnegative residue of a modulo m (m > 0).
constexpr std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  return a - m * div_floor(a, m);
}

class LaurentSeries {
 public:
  /// The zero series with trunc 0.
  LaurentSeries() : val_(0), trunc_(0) {}

  /// Zero series: no known nonzero coefficient below `trunc`.
  static LaurentSeries zero(std::int64_t trunc);
  /// The constant series 1 known below `trunc` (requires trunc >= 1).
  static LaurentSeries one(std::int64_t trunc);
  /// c * q^exponent known below `trunc` (requires exponent < trunc).
  static LaurentSeries monomial(Int c, std::int64_t exponent,
                                std::int64_t trunc);
  /// Builds from a dense window: coeffs[i] is the coefficient of
  /// q^(valuation+i); exponents in [valuation+coeffs.size(), trunc) are zero.
  static LaurentSeries from_coeffs(std::int64_t valuation, std::int64_t trunc,
                                   std::vector<Int> coeffs);

  std::int64_t valuation() const { return val_; }
  std::int64_t trunc() const { return trunc_; }
  /// True when no nonzero coefficient is known (valuation == trunc then).
  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficient of q^n.  Throws TruncationError for n >= trunc; returns 0
  /// below the valuation.
  const Int& coeff(std::int64_t n) const;

  /// Coefficients of q^lo .. q^(hi-1) as a dense vector (hi <= trunc).
  std::vector<Int> window(std::int64_t lo, std::int64_t hi) const;

  /// Multiplies by q^k (relabels exponents; trunc shifts along).
  LaurentSeries shifted(std::int64_t k) const;
  /// Multiplies every coefficient by c.
  LaurentSeries scaled(const Int& c) const;
  /// Prefix slice: same series with trunc lowered to at most N.
  LaurentSeries truncated(std::int64_t N) const;

 private:
  std::int64_t val_;
  std::int64_t trunc_;
  std::vector<Int> coeffs_;  // coeffs_[i] is the coefficient of q^(val_+i)

  void normalize();
};

LaurentSeries add(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries sub(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries neg(const LaurentSeries& a);

/// Cauchy product.  valuation = a.val + b.val;
/// trunc = min(a.trunc + b.val, b.trunc + a.val).  Schoolbook convolution.
LaurentSeries mul(const LaurentSeries& a, const LaurentSeries& b);

/// Multiplicative inverse of a unit series (lowest coefficient +1 or -1).
/// Result valuation is -a.valuation; the known window keeps its length.
LaurentSeries invert(const LaurentSeries& a);

/// Repeated-squaring power; negative e goes through invert first.
LaurentSeries pow(const LaurentSeries& a, std::int64_t e);

/// q -> q^m: exponents and truncation multiply by m (m >= 1).
LaurentSeries substitute_power(const LaurentSeries& a, std::int64_t m);

/// Keeps exactly the terms q^e with e = r (mod m), exponents unchanged.
LaurentSeries dissect(const LaurentSeries& a, std::int64_t m, std::int64_t r);

/// Returns sum_n g(m n + r) q^n: dissect, shift by -r, divide exponents by m.
LaurentSeries extract(const LaurentSeries& a, std::int64_t m, std::int64_t r);

inline const Int& coeff(const LaurentSeries& a, std::int64_t n) {
  return a.coeff(n);
}

inline LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
  return add(a, b);
}
inline LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) {
  return sub(a, b);
}
inline LaurentSeries operator-(const LaurentSeries& a) { return neg(a); }
inline LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  return mul(a, b);
}

/// First exponent (within the common known range) where a and b differ,
/// or nullopt if they agree everywhere both are known.
std::optional<std::int64_t> first_difference(const LaurentSeries& a,
                                             const LaurentSeries& b);
/// The comparison interval used by first_difference: [min valuation,
/// min trunc).
std::pair<std::int64_t, std::int64_t> common_range(const LaurentSeries& a,
                                                   const LaurentSeries& b);
inline bool agrees_on_common_range(const LaurentSeries& a,
                                   const LaurentSeries& b) {
  return !first_difference(a, b).has_value();
}

/// (q^k; q^k)_infinity truncated at N, via the pentagonal-number sparse
/// expansion.  Rejects k <= 0 or N <= 0.
LaurentSeries euler_product(std::int64_t k, std::int64_t N);

/// Generalized pentagonal exponents j(3j-1)/2 (j in Z) below N, each with its
/// sign (-1)^j, in increasing exponent order.
std::vector<std::pair<std::int64_t, int>> pentagonal_exponents(std::int64_t N);

/// Symbolic scalar * q^prefactor_exp * prod_k E_k^{e_k} with
/// E_k = (q^k;q^k)_inf.  Compilation at truncation N is deterministic.
struct EtaQuotientSpec {
  std::int64_t prefactor_exp = 0;
  Int scalar = 1;
  std::map<std::int64_t, std::int64_t> factors;  // level k -> exponent e_k

  /// Expands the product part to N coefficients via a single logarithmic-
  /// derivative recurrence (every division is checked exact), then applies
  /// the scalar and the q-power shift.  The result has trunc
  /// N + prefactor_exp.
  LaurentSeries compile(std::int64_t N) const;
};

/// Shorthand for building one eta quotient, e.g.
/// eta_quotient({{1, 3}, {9, -3}}, -1) for E1^3 / (q E9^3).
LaurentSeries eta_quotient(const std::map<std::int64_t, std::int64_t>& factors,
                           std::int64_t prefactor_exp, const Int& scalar,
                           std::int64_t N);
inline LaurentSeries eta_quotient(
    const std::map<std::int64_t, std::int64_t>& factors,
    std::int64_t prefactor_exp, std::int64_t N) {
  return eta_quotient(factors, prefactor_exp, Int(1), N);
}

}  // namespace qfrob
