#include "qfrob/congruences.hpp"

#include <chrono>
#include <stdexcept>
#include <string_view>

#include "qfrob/tables.hpp"
#include "qfrob/theta.hpp"

namespace qfrob {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::int64_t ipow(std::int64_t base, std::int64_t exp) {
  std::int64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

std::string family_id(const std::string& target, std::int64_t A,
                      std::int64_t B, std::int64_t p, std::int64_t e) {
  std::string name = target;
  constexpr std::string_view route_suffix = "_closed";
  if (name.size() > route_suffix.size() &&
      name.compare(name.size() - route_suffix.size(), route_suffix.size(),
                   route_suffix) == 0)
    name.resize(name.size() - route_suffix.size());
  return name + "-" + std::to_string(A) + "n" + std::to_string(B) + "-" +
         std::to_string(p) + "e" + std::to_string(e);
}

void require_valid(const CongruenceFamily& f) {
  if (f.A < 1 || f.B < 0 || f.B >= f.A)
    throw std::invalid_argument("congruence family '" + f.id +
                                "': need A >= 1 and 0 <= B < A");
  if (f.p < 2 || f.e < 1)
    throw std::invalid_argument("congruence family '" + f.id +
                                "': need p >= 2 and e >= 1");
}

std::int64_t parse_int64(const std::string& text) {
  std::size_t used = 0;
  std::int64_t value = 0;
  try {
    value = std::stoll(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("not an integer: '" + text + "'");
  }
  if (used != text.size())
    throw std::invalid_argument("not an integer: '" + text + "'");
  return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find(sep, start);
    if (pos == std::string::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace

const std::vector<CongruenceFamily>& congruence_registry() {
  static const std::vector<CongruenceFamily> rows = [] {
    std::vector<CongruenceFamily> v;
    auto add = [&v](const std::string& target, std::int64_t A, std::int64_t B,
                    std::int64_t p, std::int64_t e, bool sharp,
                    std::int64_t N) {
      v.push_back(CongruenceFamily{family_id(target, A, B, p, e), target, A, B,
                                   p, e, sharp, N});
    };
    const std::string c3 = "cphi3_closed";
    const std::string c9 = "cphi9_closed";
    struct Row {
      std::int64_t A, B, e;
    };

    // Ten sharp families for the 3-colored count.
    const Row sharp3[] = {{3, 1, 2},    {3, 2, 3},     {9, 5, 5},
                          {9, 8, 7},    {27, 17, 8},   {27, 26, 9},
                          {81, 44, 10}, {81, 71, 12},  {243, 152, 13},
                          {243, 233, 14}};
    for (const Row& r : sharp3) add(c3, r.A, r.B, 3, r.e, true, 5000);

    // The 3-colored chains for general k, instantiated at the deepest k
    // with several indices below N=5000 (k=3), plus the first chain at
    // k=4 where a couple of indices still fit:
    //   step 3^{2k},   offset (7*3^{2k}+1)/8,    modulus 3^{4k+5}
    //   step 3^{2k+1}, offset (5*3^{2k+1}+1)/8,  modulus 3^{4k+6}
    //   step 3^{2k+1}, offset (23*3^{2k}+1)/8,   modulus 3^{4k+7}
    //   step 3^{2k+2}, offset (13*3^{2k+1}+1)/8, modulus 3^{4k+8}
    for (std::int64_t k = 3; k <= 3; ++k) {
      add(c3, ipow(3, 2 * k), (7 * ipow(3, 2 * k) + 1) / 8, 3, 4 * k + 5,
          false, 5000);
      add(c3, ipow(3, 2 * k + 1), (5 * ipow(3, 2 * k + 1) + 1) / 8, 3,
          4 * k + 6, false, 5000);
      add(c3, ipow(3, 2 * k + 1), (23 * ipow(3, 2 * k) + 1) / 8, 3, 4 * k + 7,
          false, 5000);
      add(c3, ipow(3, 2 * k + 2), (13 * ipow(3, 2 * k + 1) + 1) / 8, 3,
          4 * k + 8, false, 5000);
    }
    add(c3, ipow(3, 8), (7 * ipow(3, 8) + 1) / 8, 3, 21, false, 5000);

    // Ten sharp families for the 9-colored count.
    const Row sharp9[] = {{9, 3, 2},     {9, 6, 3},     {27, 15, 5},
                          {27, 24, 7},   {81, 51, 8},   {81, 78, 9},
                          {243, 132, 10}, {243, 213, 12}, {729, 456, 13},
                          {729, 699, 14}};
    for (const Row& r : sharp9) add(c9, r.A, r.B, 3, r.e, true, 5000);

    // The 9-colored chains at k=3:
    //   step 3^{2k+1}, offset (7*3^{2k+1}+3)/8,  modulus 3^{4k+5}
    //   step 3^{2k+2}, offset (5*3^{2k+2}+3)/8,  modulus 3^{4k+6}
    //   step 3^{2k+2}, offset (23*3^{2k+1}+3)/8, modulus 3^{4k+7}
    //   step 3^{2k+3}, offset (13*3^{2k+2}+3)/8, modulus 3^{4k+8}
    for (std::int64_t k = 3; k <= 3; ++k) {
      add(c9, ipow(3, 2 * k + 1), (7 * ipow(3, 2 * k + 1) + 3) / 8, 3,
          4 * k + 5, false, 5000);
      add(c9, ipow(3, 2 * k + 2), (5 * ipow(3, 2 * k + 2) + 3) / 8, 3,
          4 * k + 6, false, 5000);
      add(c9, ipow(3, 2 * k + 2), (23 * ipow(3, 2 * k + 1) + 3) / 8, 3,
          4 * k + 7, false, 5000);
      add(c9, ipow(3, 2 * k + 3), (13 * ipow(3, 2 * k + 2) + 3) / 8, 3,
          4 * k + 8, false, 5000);
    }

    // Full-color-cycle 3-colored count: step 3^k, offset 8^{-1} mod 3^k,
    // modulus 3^{2k+2} for even k and 3^{2k+1} for odd k, k <= 4.
    for (std::int64_t k = 1; k <= 4; ++k)
      add("cphibar3", ipow(3, k), inverse_mod(8, ipow(3, k)), 3,
          k % 2 == 0 ? 2 * k + 2 : 2 * k + 1, false, 3000);

    // 3-colored odd-step chain: step 3^{2k-1}, offset (5*3^{2k-1}+1)/8,
    // modulus 3^{4k-1}, k <= 3.  The k=1 row coincides with the sharp
    // (3n+2, 3^3) family above and is not repeated.
    for (std::int64_t k = 2; k <= 3; ++k)
      add(c3, ipow(3, 2 * k - 1), (5 * ipow(3, 2 * k - 1) + 1) / 8, 3,
          4 * k - 1, false, 3000);
    // 3-colored even-step chain: step 3^{2k}, offset (7*3^{2k}+1)/8,
    // modulus 3^{4k+2}, k <= 3.
    for (std::int64_t k = 1; k <= 3; ++k)
      add(c3, ipow(3, 2 * k), (7 * ipow(3, 2 * k) + 1) / 8, 3, 4 * k + 2,
          false, 3000);

    // 9-colored even-step chain: step 3^{2k}, offset (5*3^{2k}+3)/8,
    // modulus 3^{4k-1}, k <= 2.  The k=1 row coincides with the sharp
    // (9n+6, 3^3) family.
    add(c9, ipow(3, 4), (5 * ipow(3, 4) + 3) / 8, 3, 7, false, 3000);
    // 9-colored odd-step chain: step 3^{2k+1}, offset (7*3^{2k+1}+3)/8,
    // modulus 3^{4k+2}, k <= 2.
    for (std::int64_t k = 1; k <= 2; ++k)
      add(c9, ipow(3, 2 * k + 1), (7 * ipow(3, 2 * k + 1) + 3) / 8, 3,
          4 * k + 2, false, 3000);

    // Single 9-colored rows.  (9n+3, 3^2) is already present sharp.
    add(c9, 9, 6, 3, 2, false, 3000);
    add(c9, 3, 1, 3, 4, false, 3000);
    add(c9, 3, 2, 3, 6, false, 3000);

    // 2-colored rows: step 5^k, offset 12^{-1} mod 5^k, modulus 5^k, k <= 2.
    for (std::int64_t k = 1; k <= 2; ++k)
      add("cphi2", ipow(5, k), inverse_mod(12, ipow(5, k)), 5, k, false, 3000);

    return v;
  }();
  return rows;
}

const CongruenceFamily* find_congruence(const std::string& id) {
  for (const CongruenceFamily& f : congruence_registry())
    if (f.id == id) return &f;
  return nullptr;
}

CongruenceFamily parse_family_spec(const std::string& text) {
  const std::vector<std::string> parts = split(text, ';');
  if (parts.size() != 4)
    throw std::invalid_argument(
        "family spec must be \"target;A;B;mod=m\", got '" + text + "'");
  CongruenceFamily f;
  f.id = text;
  f.target = parts[0];
  if (!is_series_id(f.target))
    throw std::invalid_argument("unknown series id '" + f.target + "'");
  f.A = parse_int64(parts[1]);
  f.B = parse_int64(parts[2]);
  if (parts[3].rfind("mod=", 0) != 0)
    throw std::invalid_argument("fourth field must be mod=<prime power>");
  std::int64_t modulus = parse_int64(parts[3].substr(4));
  if (modulus < 2)
    throw std::invalid_argument("modulus must be at least 2");
  std::int64_t p = 2;
  while (modulus % p != 0) ++p;
  std::int64_t e = 0, rest = modulus;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1)
    throw std::invalid_argument("modulus " + std::to_string(modulus) +
                                " is not a prime power");
  f.p = p;
  f.e = e;
  f.sharp = false;
  require_valid(f);
  return f;
}

VerificationReport verify_congruence(const CongruenceFamily& family,
                                     std::int64_t N,
                                     const BuildOptions& opts) {
  require_valid(family);
  auto t0 = Clock::now();
  VerificationReport report;
  report.id = family.id;
  report.N = N;
  if (family.B >= N) {
    report.status = VerifyStatus::infeasible;
    report.elapsed_ms = ms_since(t0);
    return report;
  }
  try {
    const LaurentSeries s = build(family.target, N, opts);
    Int modulus;
    mpz_ui_pow_ui(modulus.get_mpz_t(),
                  static_cast<unsigned long>(family.p),
                  static_cast<unsigned long>(family.e));
    const std::int64_t n_top = (N - 1 - family.B) / family.A;
    for (std::int64_t n = 0; n <= n_top; ++n) {
      const std::int64_t idx = family.A * n + family.B;
      const Int& c = s.coeff(idx);
      if (!mpz_divisible_p(c.get_mpz_t(), modulus.get_mpz_t())) {
        report.status = VerifyStatus::violated;
        if (report.witnesses.size() < kMaxReportWitnesses)
          report.witnesses.push_back(
              Witness{idx, c,
                      padic_order(c, static_cast<unsigned long>(family.p))});
      }
    }
    report.n_max = n_top;
  } catch (const BudgetExceededError&) {
    report.status = VerifyStatus::infeasible;
  }
  report.elapsed_ms = ms_since(t0);
  return report;
}

VerificationReport sharpness_check(const CongruenceFamily& family,
                                   std::int64_t N, const BuildOptions& opts) {
  require_valid(family);
  if (!family.sharp)
    throw std::invalid_argument(
        "sharpness_check: family '" + family.id +
        "' does not claim its exponent is best possible");
  auto t0 = Clock::now();
  VerificationReport report;
  report.id = family.id + "-sharp";
  report.N = N;
  report.status = VerifyStatus::infeasible;
  if (family.B >= N) {
    report.elapsed_ms = ms_since(t0);
    return report;
  }
  try {
    const LaurentSeries s = build(family.target, N, opts);
    const std::int64_t n_top = (N - 1 - family.B) / family.A;
    for (std::int64_t n = 0; n <= n_top; ++n) {
      const std::int64_t idx = family.A * n + family.B;
      const Int& c = s.coeff(idx);
      auto v = padic_order(c, static_cast<unsigned long>(family.p));
      if (v && *v == family.e) {
        report.status = VerifyStatus::verified;
        report.witnesses.push_back(Witness{idx, c, v});
        report.n_max = n;
        report.elapsed_ms = ms_since(t0);
        return report;
      }
    }
    report.n_max = n_top;
  } catch (const BudgetExceededError&) {
    report.status = VerifyStatus::infeasible;
  }
  report.elapsed_ms = ms_since(t0);
  return report;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  if (m < 2) throw std::invalid_argument("inverse_mod: modulus must be >= 2");
  std::int64_t r0 = m, r1 = ((a % m) + m) % m;
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    const std::int64_t r2 = r0 - q * r1;
    const std::int64_t s2 = s0 - q * s1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  if (r0 != 1)
    throw std::invalid_argument("inverse_mod: arguments are not coprime");
  return ((s0 % m) + m) % m;
}

}  // namespace qfrob
