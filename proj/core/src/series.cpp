#include "qfrob/series.hpp"

#include <algorithm>
#include <cassert>

namespace qfrob {

namespace {
const Int kZero = 0;
}  // namespace

void LaurentSeries::normalize() {
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(),
                  coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    val_ += static_cast<std::int64_t>(lead);
  }
  if (coeffs_.empty()) val_ = trunc_;
}

LaurentSeries LaurentSeries::zero(std::int64_t trunc) {
  LaurentSeries s;
  s.val_ = trunc;
  s.trunc_ = trunc;
  return s;
}

LaurentSeries LaurentSeries::one(std::int64_t trunc) {
  return monomial(Int(1), 0, trunc);
}

LaurentSeries LaurentSeries::monomial(Int c, std::int64_t exponent,
                                      std::int64_t trunc) {
  if (exponent >= trunc)
    throw std::invalid_argument("monomial exponent must lie below trunc");
  LaurentSeries s;
  s.val_ = exponent;
  s.trunc_ = trunc;
  s.coeffs_.push_back(std::move(c));
  s.normalize();
  return s;
}

LaurentSeries LaurentSeries::from_coeffs(std::int64_t valuation,
                                         std::int64_t trunc,
                                         std::vector<Int> coeffs) {
  if (static_cast<std::int64_t>(coeffs.size()) > trunc - valuation)
    throw std::invalid_argument("coefficient window exceeds trunc");
  LaurentSeries s;
  s.val_ = valuation;
  s.trunc_ = trunc;
  s.coeffs_ = std::move(coeffs);
  s.normalize();
  return s;
}

const Int& LaurentSeries::coeff(std::int64_t n) const {
  if (n >= trunc_)
    throw TruncationError("coefficient of q^" + std::to_string(n) +
                          " is beyond truncation " + std::to_string(trunc_));
  if (n < val_ || n - val_ >= static_cast<std::int64_t>(coeffs_.size()))
    return kZero;
  return coeffs_[static_cast<std::size_t>(n - val_)];
}

std::vector<Int> LaurentSeries::window(std::int64_t lo, std::int64_t hi) const {
  std::vector<Int> out;
  out.reserve(static_cast<std::size_t>(std::max<std::int64_t>(0, hi - lo)));
  for (std::int64_t n = lo; n < hi; ++n) out.push_back(coeff(n));
  return out;
}

LaurentSeries LaurentSeries::shifted(std::int64_t k) const {
  LaurentSeries s = *this;
  s.val_ += k;
  s.trunc_ += k;
  return s;
}

LaurentSeries LaurentSeries::scaled(const Int& c) const {
  if (c == 0) return zero(trunc_);
  LaurentSeries s = *this;
  for (Int& x : s.coeffs_) x *= c;
  return s;
}

LaurentSeries LaurentSeries::truncated(std::int64_t N) const {
  if (N >= trunc_) return *this;
  LaurentSeries s;
  s.trunc_ = N;
  s.val_ = std::min(val_, N);
  std::int64_t keep = std::min<std::int64_t>(
      static_cast<std::int64_t>(coeffs_.size()), N - val_);
  if (keep > 0)
    s.coeffs_.assign(coeffs_.begin(),
                     coeffs_.begin() + static_cast<std::ptrdiff_t>(keep));
  s.normalize();
  return s;
}

LaurentSeries add(const LaurentSeries& a, const LaurentSeries& b) {
  std::int64_t t = std::min(a.trunc(), b.trunc());
  std::int64_t v = std::min({a.valuation(), b.valuation(), t});
  std::vector<Int> c(static_cast<std::size_t>(t - v));
  for (const LaurentSeries* s : {&a, &b}) {
    std::int64_t hi = std::min(s->trunc(), t);
    for (std::int64_t e = s->valuation(); e < hi; ++e) {
      const Int& x = s->coeff(e);
      if (x != 0) c[static_cast<std::size_t>(e - v)] += x;
    }
  }
  return LaurentSeries::from_coeffs(v, t, std::move(c));
}

LaurentSeries neg(const LaurentSeries& a) { return a.scaled(Int(-1)); }

LaurentSeries sub(const LaurentSeries& a, const LaurentSeries& b) {
  return add(a, neg(b));
}

LaurentSeries mul(const LaurentSeries& a, const LaurentSeries& b) {
  std::int64_t t = std::min(a.trunc() + b.valuation(),
                            b.trunc() + a.valuation());
  if (a.is_zero() || b.is_zero()) return LaurentSeries::zero(t);
  std::int64_t v = a.valuation() + b.valuation();
  std::int64_t n = t - v;
  std::vector<Int> aw = a.window(a.valuation(),
                                 std::min(a.trunc(), a.valuation() + n));
  std::vector<Int> bw = b.window(b.valuation(),
                                 std::min(b.trunc(), b.valuation() + n));
  std::vector<Int> c(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < aw.size(); ++i) {
    if (sgn(aw[i]) == 0) continue;
    std::size_t jmax = std::min(bw.size(), static_cast<std::size_t>(n) - i);
    mpz_srcptr ai = aw[i].get_mpz_t();
    for (std::size_t j = 0; j < jmax; ++j) {
      if (sgn(bw[j]) == 0) continue;
      mpz_addmul(c[i + j].get_mpz_t(), ai, bw[j].get_mpz_t());
    }
  }
  return LaurentSeries::from_coeffs(v, t, std::move(c));
}

LaurentSeries invert(const LaurentSeries& a) {
  if (a.is_zero()) throw NotAUnitError("cannot invert the zero series");
  std::int64_t n = a.trunc() - a.valuation();
  std::vector<Int> u = a.window(a.valuation(), a.trunc());
  const Int& u0 = u[0];
  if (u0 != 1 && u0 != -1)
    throw NotAUnitError("lowest coefficient is not a unit over the integers");
  bool lead_one = (u0 == 1);
  std::vector<std::int64_t> support;
  for (std::int64_t k = 1; k < n; ++k)
    if (u[static_cast<std::size_t>(k)] != 0) support.push_back(k);
  std::vector<Int> v(static_cast<std::size_t>(n));
  v[0] = u0;
  Int s;
  for (std::int64_t m = 1; m < n; ++m) {
    s = 0;
    for (std::int64_t k : support) {
      if (k > m) break;
      mpz_addmul(s.get_mpz_t(), u[static_cast<std::size_t>(k)].get_mpz_t(),
                 v[static_cast<std::size_t>(m - k)].get_mpz_t());
    }
    v[static_cast<std::size_t>(m)] = lead_one ? Int(-s) : std::move(s);
  }
  return LaurentSeries::from_coeffs(-a.valuation(),
                                    a.trunc() - 2 * a.valuation(),
                                    std::move(v));
}

LaurentSeries pow(const LaurentSeries& a, std::int64_t e) {
  if (e < 0) return pow(invert(a), -e);
  if (a.is_zero()) {
    if (e == 0) return LaurentSeries::one(std::max<std::int64_t>(a.trunc(), 1));
    return LaurentSeries::zero(a.trunc() * e);
  }
  LaurentSeries r = LaurentSeries::one(a.trunc() - a.valuation());
  LaurentSeries base = a;
  std::uint64_t ue = static_cast<std::uint64_t>(e);
  while (ue != 0) {
    if (ue & 1) r = mul(r, base);
    ue >>= 1;
    if (ue != 0) base = mul(base, base);
  }
  return r;
}

LaurentSeries substitute_power(const LaurentSeries& a, std::int64_t m) {
  if (m < 1) throw std::invalid_argument("substitute_power requires m >= 1");
  if (a.is_zero()) return LaurentSeries::zero(a.trunc() * m);
  std::int64_t len = a.trunc() - a.valuation();
  std::vector<Int> c(static_cast<std::size_t>((len - 1) * m + 1));
  for (std::int64_t i = 0; i < len; ++i) {
    const Int& x = a.coeff(a.valuation() + i);
    if (x != 0) c[static_cast<std::size_t>(i * m)] = x;
  }
  return LaurentSeries::from_coeffs(a.valuation() * m, a.trunc() * m,
                                    std::move(c));
}

LaurentSeries dissect(const LaurentSeries& a, std::int64_t m, std::int64_t r) {
  if (m < 1 || r < 0 || r >= m)
    throw std::invalid_argument("dissect residue out of range");
  std::vector<Int> c(static_cast<std::size_t>(
      std::max<std::int64_t>(0, a.trunc() - a.valuation())));
  for (std::int64_t e = a.valuation(); e < a.trunc(); ++e)
    if (mod_floor(e, m) == r) c[static_cast<std::size_t>(e - a.valuation())] =
        a.coeff(e);
  return LaurentSeries::from_coeffs(a.valuation(), a.trunc(), std::move(c));
}

LaurentSeries extract(const LaurentSeries& a, std::int64_t m, std::int64_t r) {
  if (m < 1 || r < 0 || r >= m)
    throw std::invalid_argument("extract residue out of range");
  std::int64_t t = div_ceil(a.trunc() - r, m);
  std::int64_t lo = div_ceil(a.valuation() - r, m);
  std::vector<Int> c(static_cast<std::size_t>(std::max<std::int64_t>(0, t - lo)));
  for (std::int64_t e = a.valuation(); e < a.trunc(); ++e) {
    if (mod_floor(e, m) != mod_floor(r, m)) continue;
    std::int64_t nn = div_floor(e - r, m);
    if (nn >= lo && nn < t) c[static_cast<std::size_t>(nn - lo)] = a.coeff(e);
  }
  return LaurentSeries::from_coeffs(lo, t, std::move(c));
}

std::pair<std::int64_t, std::int64_t> common_range(const LaurentSeries& a,
                                                   const LaurentSeries& b) {
  return {std::min(a.valuation(), b.valuation()),
          std::min(a.trunc(), b.trunc())};
}

std::optional<std::int64_t> first_difference(const LaurentSeries& a,
                                             const LaurentSeries& b) {
  auto [lo, hi] = common_range(a, b);
  for (std::int64_t e = lo; e < hi; ++e)
    if (a.coeff(e) != b.coeff(e)) return e;
  return std::nullopt;
}

std::vector<std::pair<std::int64_t, int>> pentagonal_exponents(
    std::int64_t N) {
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t j = 0;; ++j) {
    std::int64_t e1 = j * (3 * j - 1) / 2;  // j >= 0
    std::int64_t e2 = j * (3 * j + 1) / 2;  // mirror of -j
    if (e1 >= N && e2 >= N) break;
    int sign = (j % 2 == 0) ? 1 : -1;
    if (e1 < N) out.emplace_back(e1, sign);
    if (j > 0 && e2 < N) out.emplace_back(e2, sign);
  }
  std::sort(out.begin(), out.end());
  return out;
}

LaurentSeries euler_product(std::int64_t k, std::int64_t N) {
  if (k <= 0) throw std::invalid_argument("euler_product requires k >= 1");
  if (N <= 0) throw std::invalid_argument("euler_product requires N >= 1");
  std::vector<Int> c(static_cast<std::size_t>(N));
  for (auto [e, sign] : pentagonal_exponents(div_ceil(N, k)))
    if (k * e < N) c[static_cast<std::size_t>(k * e)] += sign;
  return LaurentSeries::from_coeffs(0, N, std::move(c));
}

LaurentSeries EtaQuotientSpec::compile(std::int64_t N) const {
  if (N <= 0) throw std::invalid_argument("compile requires N >= 1");
  if (scalar == 0) return LaurentSeries::zero(N + prefactor_exp);
  // Logarithmic derivative of prod_k E_k^{e_k}: the coefficient of q^m in
  // q d/dq log(...) is l_m = -sum_{k | there} e_k * k * sigma_1(m/k), built
  // here by accumulating k*d over all multiples m = k*d*j below N.
  std::vector<std::int64_t> l(static_cast<std::size_t>(N), 0);
  for (auto [k, e] : factors) {
    if (k <= 0) throw std::invalid_argument("eta factor level must be >= 1");
    if (e == 0) continue;
    for (std::int64_t d = 1; k * d < N; ++d)
      for (std::int64_t mm = k * d; mm < N; mm += k * d)
        l[static_cast<std::size_t>(mm)] -= e * k * d;
  }
  // n * c_n = sum_{m=1..n} l_m * c_{n-m}; every division by n is exact.
  std::vector<Int> c(static_cast<std::size_t>(N));
  c[0] = 1;
  Int s;
  for (std::int64_t n = 1; n < N; ++n) {
    s = 0;
    for (std::int64_t m = 1; m <= n; ++m) {
      std::int64_t lm = l[static_cast<std::size_t>(m)];
      if (lm == 0) continue;
      mpz_srcptr prev = c[static_cast<std::size_t>(n - m)].get_mpz_t();
      if (lm > 0)
        mpz_addmul_ui(s.get_mpz_t(), prev, static_cast<unsigned long>(lm));
      else
        mpz_submul_ui(s.get_mpz_t(), prev, static_cast<unsigned long>(-lm));
    }
    if (!mpz_divisible_ui_p(s.get_mpz_t(), static_cast<unsigned long>(n)))
      throw std::logic_error("eta recurrence produced a non-exact division");
    mpz_divexact_ui(c[static_cast<std::size_t>(n)].get_mpz_t(), s.get_mpz_t(),
                    static_cast<unsigned long>(n));
  }
  LaurentSeries out = LaurentSeries::from_coeffs(0, N, std::move(c));
  if (scalar != 1) out = out.scaled(scalar);
  if (prefactor_exp != 0) out = out.shifted(prefactor_exp);
  return out;
}

LaurentSeries eta_quotient(const std::map<std::int64_t, std::int64_t>& factors,
                           std::int64_t prefactor_exp, const Int& scalar,
                           std::int64_t N) {
  EtaQuotientSpec spec;
  spec.prefactor_exp = prefactor_exp;
  spec.scalar = scalar;
  spec.factors = factors;
  return spec.compile(N);
}

}  // namespace qfrob
