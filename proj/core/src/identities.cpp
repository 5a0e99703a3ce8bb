#include "qfrob/identities.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <stdexcept>
#include <utility>

#include "qfrob/congruences.hpp"
#include "qfrob/tables.hpp"

namespace qfrob {

namespace {

using Clock = std::chrono::steady_clock;
using Factors = std::map<std::int64_t, std::int64_t>;
using Checker =
    std::function<void(VerificationReport&, std::int64_t, const BuildOptions&)>;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

Int pow3(std::int64_t e) {
  Int m;
  mpz_ui_pow_ui(m.get_mpz_t(), 3, static_cast<unsigned long>(e));
  return m;
}

/// Margin added to component truncations so that the inversions and shifts
/// on the right-hand sides never pull the compared range below N.
constexpr std::int64_t kPad = 16;

void note_difference(VerificationReport& r, std::int64_t n, const Int& d) {
  r.status = VerifyStatus::violated;
  if (r.witnesses.size() < kMaxReportWitnesses)
    r.witnesses.push_back(Witness{n, d, padic_order(d, 3)});
}

void compare_exact(VerificationReport& r, const LaurentSeries& lhs,
                   const LaurentSeries& rhs) {
  const auto [lo, hi] = common_range(lhs, rhs);
  if (hi <= lo) {
    r.status = VerifyStatus::infeasible;
    return;
  }
  r.n_max = hi - 1;
  for (std::int64_t n = lo; n < hi; ++n) {
    const Int d = lhs.coeff(n) - rhs.coeff(n);
    if (d != 0) note_difference(r, n, d);
  }
}

void compare_mod(VerificationReport& r, const LaurentSeries& lhs,
                 const LaurentSeries& rhs, const Int& modulus) {
  const auto [lo, hi] = common_range(lhs, rhs);
  if (hi <= lo) {
    r.status = VerifyStatus::infeasible;
    return;
  }
  r.n_max = hi - 1;
  for (std::int64_t n = lo; n < hi; ++n) {
    const Int d = lhs.coeff(n) - rhs.coeff(n);
    if (!mpz_divisible_p(d.get_mpz_t(), modulus.get_mpz_t()))
      note_difference(r, n, d);
  }
}

LaurentSeries eq(const Factors& f, std::int64_t prefac, const Int& scalar,
                 std::int64_t M) {
  return eta_quotient(f, prefac, scalar, M);
}

/// The cubic theta series evaluated at q^3, known at least below M.
LaurentSeries a_sub_q3(std::int64_t M, const BuildOptions& opts) {
  return substitute_power(build("a_of_q", div_ceil(M, 3) + 1, opts), 3);
}

/// c + s, with the constant clipped to s's truncation.
LaurentSeries plus_const(const LaurentSeries& s, const Int& c) {
  return add(s, LaurentSeries::monomial(c, 0, s.trunc()));
}

/// sum_{j>=1} coeffs[j-1] * u^j, accumulated by successive multiplication.
LaurentSeries power_combination(const LaurentSeries& u,
                                const std::vector<Int>& coeffs) {
  LaurentSeries acc = LaurentSeries::zero(u.trunc());
  LaurentSeries cur;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    cur = (j == 0) ? u : mul(cur, u);
    if (coeffs[j] != 0) acc = add(acc, cur.scaled(coeffs[j]));
  }
  return acc;
}

/// Checks that the exponents == 2 (mod 3) part of `arg` equals
/// (S/q) * V^vshift * sum_j coeffs[j] V^j with V = T^4 q^{-9}.
void check_h32_entry(VerificationReport& r, const BuildOptions& opts,
                     std::int64_t K, const LaurentSeries& arg,
                     const std::vector<Int>& coeffs, std::int64_t vshift) {
  const LaurentSeries lhs = dissect(arg, 3, 2);
  const LaurentSeries V = pow(build("T", K, opts), 4).shifted(-9);
  LaurentSeries sum = power_combination(V, coeffs);
  if (vshift > 0) sum = mul(sum, pow(V, vshift));
  compare_exact(r, lhs, mul(build("S", K, opts).shifted(-1), sum));
}

/// Checks one row-generating identity: the (A n + B)-progression of
/// `target` against the table row contracted into powers of
/// U = T^{-4} xi^{-4} q^9, wrapped in the shape's prefactor and the
/// trailing (xi + 9) or (1 + 9 xi^{-1}) combination.
void check_row_identity(VerificationReport& r, std::int64_t N,
                        const BuildOptions& opts, const char* target,
                        std::int64_t A, std::int64_t B, TableFamily fam,
                        std::int64_t row, bool odd_shape, long scalar) {
  const std::int64_t K = N + kPad;
  const LaurentSeries lhs = extract(build(target, A * N + B + 1, opts), A, B);
  const LaurentSeries xi = build("xi", K, opts);
  const LaurentSeries T = build("T", K, opts);
  const LaurentSeries xi_inv = invert(xi);
  const LaurentSeries t_inv4 = pow(invert(T), 4);
  const LaurentSeries U = mul(t_inv4, pow(xi_inv, 4)).shifted(9);
  const LaurentSeries P =
      power_combination(U, table_row(fam, row, table_row_support(fam, row)));
  const bool zw = (fam == TableFamily::z || fam == TableFamily::w);
  LaurentSeries pref, combo;
  if (odd_shape) {
    pref = zw ? mul(eq({{9, 15}, {3, -16}}, 3, scalar, K), t_inv4.shifted(9))
              : mul(T, invert(euler_product(3, K))).shifted(-3).scaled(scalar);
    combo = plus_const(xi, 9);
  } else {
    pref = zw ? mul(eq({{3, 11}, {9, -12}}, -4, scalar, K),
                    pow(T, 4).shifted(-9))
              : invert(euler_product(3, K)).shifted(-1).scaled(scalar);
    combo = plus_const(xi_inv.scaled(9), 1);
  }
  compare_exact(r, lhs, mul(mul(pref, P), combo));
}

/// Checks target9(3A n + 3B) == target3(A n + B) (mod 3^e) coefficientwise.
void check_coupled_progression(VerificationReport& r, std::int64_t N,
                               const BuildOptions& opts, std::int64_t A,
                               std::int64_t B, std::int64_t e) {
  const LaurentSeries lhs =
      extract(build("cphi9_closed", N, opts), 3 * A, 3 * B);
  const LaurentSeries rhs = extract(build("cphi3_closed", N, opts), A, B);
  compare_mod(r, lhs, rhs, pow3(e));
}

struct Entry {
  std::string id;
  std::int64_t default_N;
  Checker run;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table = [] {
    std::vector<Entry> v;
    auto put = [&v](std::string id, std::int64_t dN, Checker fn) {
      v.push_back(Entry{std::move(id), dN, std::move(fn)});
    };
    using R = VerificationReport;
    using I = std::int64_t;
    using BO = BuildOptions;

    // --- Core eta-quotient and cubic-theta identities. ---
    put("modular-eq", 300, [](R& r, I N, const BO& o) {
      (void)o;
      const I K = N + kPad;
      const LaurentSeries lhs = eq({{1, 9}, {9, 3}}, 0, 1, K) +
                                eq({{1, 6}, {9, 6}}, 1, 9, K) +
                                eq({{1, 3}, {9, 9}}, 2, 27, K);
      compare_exact(r, lhs, eq({{3, 12}}, 0, 1, K));
    });
    put("a-lambert-eta", 300, [](R& r, I N, const BO& o) {
      const I K = N + kPad;
      compare_exact(r, build("a_of_q", K, o),
                    eq({{1, 3}, {3, -1}}, 0, 1, K) +
                        eq({{9, 3}, {3, -1}}, 1, 9, K));
    });
    put("a-cubed", 300, [](R& r, I N, const BO& o) {
      const I K = N + kPad;
      compare_exact(r, pow(build("a_of_q", K, o), 3),
                    eq({{1, 9}, {3, -3}}, 0, 1, K) +
                        eq({{3, 9}, {1, -3}}, 1, 27, K));
    });
    put("a-triplicate-1", 300, [](R& r, I N, const BO& o) {
      const I K = N + kPad;
      compare_exact(r, build("a_of_q", K, o),
                    sub(a_sub_q3(K, o).scaled(3),
                        eq({{1, 3}, {3, -1}}, 0, 2, K)));
    });
    put("a-triplicate-2", 300, [](R& r, I N, const BO& o) {
      const I K = N + kPad;
      compare_exact(r, build("a_of_q", K, o),
                    add(a_sub_q3(K, o), eq({{9, 3}, {3, -1}}, 1, 6, K)));
    });
    put("cube-dissection", 300, [](R& r, I N, const BO& o) {
      const I K = N + kPad;
      compare_exact(r, eq({{1, 3}}, 0, 1, K),
                    sub(mul(euler_product(3, K), a_sub_q3(K, o)),
                        eq({{9, 3}}, 1, 3, K)));
    });
    put("inv-cube-dissection", 300, [](R& r, I N, const BO& o) {
      const I K = N + kPad;
      const LaurentSeries a3 = a_sub_q3(K, o);
      const LaurentSeries rhs =
          mul(eq({{9, 3}, {3, -10}}, 0, 1, K), pow(a3, 2)) +
          mul(eq({{9, 6}, {3, -11}}, 1, 3, K), a3) +
          eq({{9, 9}, {3, -12}}, 2, 9, K);
      compare_exact(r, pow(invert(euler_product(1, K)), 3), rhs);
    });

    // --- The two twelve-weight combinations and their 3-dissections. ---
    put("F1-eq-F2", 300, [](R& r, I N, const BO& o) {
      const I K = N + kPad;
      compare_exact(r, build("F1", K, o), build("F2", K, o));
    });
    put("F1-3dissect-0", 300, [](R& r, I N, const BO& o) {
      const I K = N + kPad;
      const LaurentSeries a3 = a_sub_q3(K, o);
      compare_exact(r, dissect(build("F1", K, o), 3, 0),
                    add(pow(a3, 4),
                        mul(eq({{9, 9}, {3, -3}}, 3, 2160, K), a3)));
    });
    put("F1-3dissect-1", 300, [](R& r, I N, const BO& o) {
      const I K = N + kPad;
      const LaurentSeries a3 = a_sub_q3(K, o);
      const LaurentSeries rhs =
          eq({{3, 8}}, 1, 243, K) +
          mul(eq({{9, 3}, {3, -1}}, 1, -252, K), pow(a3, 3)) +
          eq({{9, 12}, {3, -4}}, 4, 13122, K);
      compare_exact(r, dissect(build("F1", K, o), 3, 1), rhs);
    });
    put("F1-3dissect-2", 300, [](R& r, I N, const BO& o) {
      const I K = N + kPad;
      compare_exact(r, dissect(build("F1", K, o), 3, 2),
                    mul(eq({{9, 6}, {3, -2}}, 2, 756, K),
                        pow(a_sub_q3(K, o), 2)));
    });
    put("F2-3dissect-0", 300, [](R& r, I N, const BO& o) {
      const I K = N + kPad;
      const LaurentSeries a3 = a_sub_q3(K, o);
      const LaurentSeries rhs =
          mul(eq({{3, 3}, {9, -1}}, 0, 1, K), pow(a3, 3)) +
          mul(eq({{27, 3}, {9, -1}}, 3, 9, K), pow(a3, 3)) +
          eq({{9, 8}}, 3, -27, K) +
          mul(eq({{9, 9}, {3, -3}}, 3, 2187, K), a3) +
          eq({{9, 8}, {27, 3}, {3, -3}}, 6, -243, K);
      compare_exact(r, dissect(build("F2", K, o), 3, 0), rhs);
    });
    put("F2-3dissect-1", 300, [](R& r, I N, const BO& o) {
      const I K = N + kPad;
      const LaurentSeries a3 = a_sub_q3(K, o);
      const LaurentSeries rhs =
          mul(eq({{3, 2}, {9, 2}}, 1, -9, K), pow(a3, 2)) +
          mul(eq({{9, 2}, {27, 3}, {3, -1}}, 4, -81, K), pow(a3, 2)) +
          eq({{9, 12}, {3, -4}}, 4, 6561, K);
      compare_exact(r, dissect(build("F2", K, o), 3, 1), rhs);
    });
    put("F2-3dissect-2", 300, [](R& r, I N, const BO& o) {
      const I K = N + kPad;
      const LaurentSeries a3 = a_sub_q3(K, o);
      const LaurentSeries rhs =
          mul(eq({{3, 1}, {9, 5}}, 2, 27, K), a3) +
          mul(eq({{9, 6}, {3, -2}}, 2, 729, K), pow(a3, 2)) +
          mul(eq({{9, 5}, {27, 3}, {3, -2}}, 5, 243, K), a3);
      compare_exact(r, dissect(build("F2", K, o), 3, 2), rhs);
    });

    // --- Eta-quotient form of the first 3-colored progression. ---
    put("cphi3-3n2", 300, [](R& r, I N, const BO& o) {
      const I K = N + kPad;
      const LaurentSeries lhs =
          extract(build("cphi3_closed", 3 * N + 3, o), 3, 2);
      compare_exact(r, lhs,
                    eq({{3, 8}, {1, -9}}, 0, 27, K) +
                        eq({{3, 8}, {9, 3}, {1, -12}}, 1, 243, K));
    });

    // --- Extraction of the 2 (mod 3) part of inverse xi powers, and of
    //     the two four-step combinations, against the m / a / b tables. ---
    for (I i = 1; i <= 6; ++i) {
      put("xi-inv-dissect-" + std::to_string(i), 300,
          [i](R& r, I N, const BO& o) {
            const I K = N + kPad;
            const LaurentSeries xi_inv = invert(build("xi", K, o));
            check_h32_entry(r, o, K, pow(xi_inv, i),
                            table_row(TableFamily::m, i, i), 0);
          });
    }
    for (I i = 1; i <= 2; ++i) {
      put("xi-combo-a-" + std::to_string(i), 300,
          [i](R& r, I N, const BO& o) {
            const I K = N + kPad;
            const LaurentSeries xi_inv = invert(build("xi", K, o));
            const LaurentSeries arg =
                add(pow(xi_inv, 4 * i + 1).scaled(9), pow(xi_inv, 4 * i));
            check_h32_entry(r, o, K, arg,
                            table_row(TableFamily::a, i, 3 * i + 1), i);
          });
    }
    for (I i = 1; i <= 2; ++i) {
      put("xi-combo-b-" + std::to_string(i), 300,
          [i](R& r, I N, const BO& o) {
            const I K = N + kPad;
            const LaurentSeries xi_inv = invert(build("xi", K, o));
            const LaurentSeries arg =
                add(pow(xi_inv, 4 * i - 1), pow(xi_inv, 4 * i).scaled(9));
            check_h32_entry(r, o, K, arg, table_row(TableFamily::b, i, 3 * i),
                            i);
          });
    }

    // --- Row-generating identities for the four contraction tables. ---
    put("cphi3-gen-3n2", 300, [](R& r, I N, const BO& o) {
      check_row_identity(r, N, o, "cphi3_closed", 3, 2, TableFamily::x, 1,
                         true, 9);
    });
    put("cphi3-gen-9n8", 300, [](R& r, I N, const BO& o) {
      check_row_identity(r, N, o, "cphi3_closed", 9, 8, TableFamily::x, 2,
                         false, 9);
    });
    put("cphi3-gen-27n17", 150, [](R& r, I N, const BO& o) {
      check_row_identity(r, N, o, "cphi3_closed", 27, 17, TableFamily::x, 3,
                         true, 9);
    });
    put("cphi3-gen-81n71", 150, [](R& r, I N, const BO& o) {
      check_row_identity(r, N, o, "cphi3_closed", 81, 71, TableFamily::x, 4,
                         false, 9);
    });
    put("a3-gen-9n6", 300, [](R& r, I N, const BO& o) {
      check_row_identity(r, N, o, "a3", 9, 6, TableFamily::y, 1, true, 9);
    });
    put("a3-gen-27n24", 200, [](R& r, I N, const BO& o) {
      check_row_identity(r, N, o, "a3", 27, 24, TableFamily::y, 2, false, 9);
    });
    put("a4-gen-9n6", 300, [](R& r, I N, const BO& o) {
      check_row_identity(r, N, o, "a4", 9, 6, TableFamily::z, 1, true, 3);
    });
    put("a4-gen-27n24", 200, [](R& r, I N, const BO& o) {
      check_row_identity(r, N, o, "a4", 27, 24, TableFamily::z, 2, false, 3);
    });
    put("a5-gen-9n6", 300, [](R& r, I N, const BO& o) {
      check_row_identity(r, N, o, "a5", 9, 6, TableFamily::w, 1, true, 9);
    });
    put("a5-gen-27n24", 200, [](R& r, I N, const BO& o) {
      check_row_identity(r, N, o, "a5", 27, 24, TableFamily::w, 2, false, 9);
    });

    // --- Small structural relations between the named series. ---
    put("t-xi-product", 300, [](R& r, I N, const BO& o) {
      const I K = N + kPad;
      const LaurentSeries rhs =
          mul(invert(build("T", K, o)), invert(build("xi", K, o))).shifted(3);
      compare_exact(r, eq({{3, 3}, {1, -3}}, 1, 1, K), rhs);
    });
    put("a1-3n-eq-cphi3", 300, [](R& r, I N, const BO& o) {
      compare_exact(r, extract(build("a1", 3 * N + 1, o), 3, 0),
                    build("cphi3_closed", N + 1, o));
    });
    put("cphi9-3n-via-cphi3", 300, [](R& r, I N, const BO& o) {
      const LaurentSeries c3 = build("cphi3_closed", 9 * N + 10, o);
      const LaurentSeries lhs =
          extract(build("cphi9_closed", 3 * N + 3, o), 3, 0);
      compare_exact(r, lhs,
                    add(c3, extract(c3, 9, 8).shifted(1).scaled(3)));
    });
    put("cphi9-3n-via-a-series", 300, [](R& r, I N, const BO& o) {
      const LaurentSeries lhs =
          extract(build("cphi9_closed", 3 * N + 1, o), 3, 0);
      const LaurentSeries rhs =
          build("cphi3_closed", N + 1, o) +
          extract(build("a3", 3 * N + 1, o), 3, 0).scaled(324) -
          extract(build("a4", 3 * N + 1, o), 3, 0).scaled(1458) +
          extract(build("a5", 3 * N + 1, o), 3, 0).scaled(19683);
      compare_exact(r, lhs, rhs);
    });

    // --- Coupled 9-colored / 3-colored progressions modulo powers of 3. ---
    put("cphi9-vs-cphi3-9n8-3e11", 5000, [](R& r, I N, const BO& o) {
      check_coupled_progression(r, N, o, 9, 8, 11);
    });
    put("cphi9-vs-cphi3-81n71-3e15", 5000, [](R& r, I N, const BO& o) {
      check_coupled_progression(r, N, o, 81, 71, 15);
    });
    put("cphi9-vs-cphi3-3n2-3e8", 5000, [](R& r, I N, const BO& o) {
      check_coupled_progression(r, N, o, 3, 2, 8);
    });
    put("cphi9-vs-cphi3-27n17-3e12", 5000, [](R& r, I N, const BO& o) {
      check_coupled_progression(r, N, o, 27, 17, 12);
    });
    put("cphi9-vs-cphi3-243n152-3e16", 5000, [](R& r, I N, const BO& o) {
      check_coupled_progression(r, N, o, 243, 152, 16);
    });

    // --- Divisibility of the auxiliary eta-quotient progressions. ---
    auto progression = [](const char* target, I A, I B, I e) {
      return [target, A, B, e](R& r, I N, const BO& o) {
        r = verify_congruence(CongruenceFamily{"", target, A, B, 3, e, false,
                                               N},
                              N, o);
      };
    };
    put("a3-9n6-3e4", 3000, progression("a3", 9, 6, 4));
    put("a3-27n24-3e7", 3000, progression("a3", 27, 24, 7));
    put("a4-9n6-3e2", 3000, progression("a4", 9, 6, 2));
    put("a4-27n24-3e5", 3000, progression("a4", 27, 24, 5));
    put("a5-9n6-3e3", 3000, progression("a5", 9, 6, 3));
    put("a5-27n24-3e6", 3000, progression("a5", 27, 24, 6));

    // --- Eta form of the depth-3 3-colored progression, modulo 3^10. ---
    put("cphi3-27n17-eta-form", 150, [](R& r, I N, const BO& o) {
      const LaurentSeries lhs =
          extract(build("cphi3_closed", 27 * N + 18, o), 27, 17);
      const LaurentSeries rhs =
          pow(euler_product(3, N + 1), 5)
              .scaled(Int(9) * table_entry(TableFamily::x, 3, 1));
      compare_mod(r, lhs, rhs, pow3(10));
    });

    // --- Moebius-inverted count agrees off multiples of 3. ---
    put("cphibar3-eq-cphi3-coprime3", 300, [](R& r, I N, const BO& o) {
      const LaurentSeries bar = cphibar_series(3, N + 1);
      const LaurentSeries c3 = build("cphi3_closed", N + 1, o);
      compare_exact(r, add(dissect(bar, 3, 1), dissect(bar, 3, 2)),
                    add(dissect(c3, 3, 1), dissect(c3, 3, 2)));
    });

    return v;
  }();
  return table;
}

const Entry* find_entry(const std::string& id) {
  for (const Entry& e : entries())
    if (e.id == id) return &e;
  return nullptr;
}

}  // namespace

const std::vector<IdentityInfo>& identity_registry() {
  static const std::vector<IdentityInfo> infos = [] {
    std::vector<IdentityInfo> v;
    for (const Entry& e : entries()) v.push_back(IdentityInfo{e.id, e.default_N});
    return v;
  }();
  return infos;
}

bool is_identity_id(const std::string& id) { return find_entry(id) != nullptr; }

VerificationReport verify_identity(const std::string& id, std::int64_t N,
                                   const BuildOptions& opts) {
  const Entry* e = find_entry(id);
  if (!e) throw std::invalid_argument("unknown identity id '" + id + "'");
  if (N < 1)
    throw std::invalid_argument("verify_identity: need N >= 1, got " +
                                std::to_string(N));
  const auto t0 = Clock::now();
  VerificationReport r;
  e->run(r, N, opts);
  r.id = id;
  r.N = N;
  r.elapsed_ms = ms_since(t0);
  return r;
}

std::optional<Suite> suite_from_name(const std::string& name) {
  if (name == "identities") return Suite::identities;
  if (name == "theorems") return Suite::theorems;
  if (name == "bounds") return Suite::bounds;
  if (name == "all") return Suite::all;
  return std::nullopt;
}

std::vector<VerificationReport> run_suite(Suite suite, std::int64_t N,
                                          const BuildOptions& opts) {
  std::vector<VerificationReport> out;
  const auto run_identities = [&] {
    for (const Entry& e : entries())
      out.push_back(
          verify_identity(e.id, std::min(N, e.default_N), opts));
  };
  const auto run_theorems = [&] {
    for (const CongruenceFamily& f : congruence_registry())
      out.push_back(verify_congruence(f, std::min(N, f.default_N), opts));
  };
  const auto run_sharpness = [&] {
    for (const CongruenceFamily& f : congruence_registry())
      if (f.sharp)
        out.push_back(sharpness_check(f, std::min(N, f.default_N), opts));
  };
  const auto run_bounds = [&] {
    for (const std::string& id : valuation_audit_ids())
      out.push_back(verify_valuation_bounds(id));
  };
  switch (suite) {
    case Suite::identities:
      run_identities();
      break;
    case Suite::theorems:
      run_theorems();
      break;
    case Suite::bounds:
      run_bounds();
      break;
    case Suite::all:
      run_identities();
      run_theorems();
      run_sharpness();
      run_bounds();
      break;
  }
  return out;
}

}  // namespace qfrob
