#include "qfrob/genfun.hpp"

#include <chrono>
#include <filesystem>
#include <map>
#include <mutex>
#include <set>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qfrob/cache.hpp"
#include "qfrob/tables.hpp"

namespace qfrob {

namespace {

std::recursive_mutex g_build_mutex;
std::unordered_map<std::string, LaurentSeries> g_build_cache;
std::set<std::string> g_disk_verified;

LaurentSeries build_impl(const std::string& id, std::int64_t N,
                         const BuildOptions& opts);
LaurentSeries cphibar_impl_k(std::int64_t k, std::int64_t N,
                             const BuildOptions& opts);

struct EtaTerm {
  std::map<std::int64_t, std::int64_t> factors;
  std::int64_t prefactor_exp = 0;
  Int scalar = 1;
};

// Sum of eta-quotient pieces, each compiled deep enough that the sum has
// every coefficient below N known (trunc exactly N for prefactors >= 0).
LaurentSeries eta_sum(const std::vector<EtaTerm>& terms, std::int64_t N) {
  LaurentSeries acc = LaurentSeries::zero(N);
  for (const EtaTerm& t : terms) {
    if (N <= t.prefactor_exp) continue;  // the piece has no terms below N
    acc = add(acc, eta_quotient(t.factors, t.prefactor_exp, t.scalar,
                                N - t.prefactor_exp));
  }
  return acc;
}

bool identical(const LaurentSeries& a, const LaurentSeries& b) {
  return a.valuation() == b.valuation() && a.trunc() == b.trunc() &&
         agrees_on_common_range(a, b);
}

LaurentSeries compute_route(const std::string& id, std::int64_t N,
                            const BuildOptions& opts) {
  if (id == "p") return invert(euler_product(1, N));
  if (id.size() == 5 && id.compare(0, 4, "cphi") == 0 && id[4] >= '1' &&
      id[4] <= '9') {
    std::int64_t k = id[4] - '0';
    LaurentSeries theta = theta_lattice(k, N, opts.lattice_budget);
    return mul(theta, pow(invert(euler_product(1, N)), k));
  }
  if (id == "cphi3_closed")
    return mul(borwein_a(N), eta_quotient({{1, -3}}, 0, N));
  if (id == "cphi9_closed")
    return eta_sum({{{{1, 3}, {3, -4}}, 0, 1},
                    {{{9, 3}, {3, -4}}, 1, -240},
                    {{{3, 8}, {1, -9}}, 1, 324},
                    {{{9, 6}, {1, -3}, {3, -4}}, 2, -1458},
                    {{{9, 12}, {1, -9}, {3, -4}}, 4, 19683}},
                   N);
  if (id == "cphibar2") return cphibar_impl_k(2, N, opts);
  if (id == "cphibar3") return cphibar_impl_k(3, N, opts);
  if (id == "cphibar9") return cphibar_impl_k(9, N, opts);
  if (id == "a1") return eta_quotient({{1, 3}, {3, -4}}, 0, N);
  if (id == "a2") return eta_sum({{{{9, 3}, {3, -4}}, 1, 1}}, N);
  if (id == "a3") return eta_sum({{{{3, 8}, {1, -9}}, 1, 1}}, N);
  if (id == "a4") return eta_sum({{{{9, 6}, {1, -3}, {3, -4}}, 2, 1}}, N);
  if (id == "a5") return eta_sum({{{{9, 12}, {1, -9}, {3, -4}}, 4, 1}}, N);
  if (id == "xi") return eta_quotient({{1, 3}, {9, -3}}, -1, N + 1);
  if (id == "T") return eta_sum({{{{9, 3}, {3, -3}}, 3, 1}}, N);
  if (id == "S")
    return eta_sum({{{{3, 4}, {9, -4}}, 0, 1}, {{{3, 1}, {27, 3}, {9, -4}}, 3, 9}},
                   N);
  if (id == "a_of_q") return borwein_a(N);
  if (id == "F1")
    return eta_sum({{{{1, 12}, {3, -4}}, 0, 1},
                    {{{1, 9}, {9, 3}, {3, -4}}, 1, -240},
                    {{{3, 8}}, 1, 243},
                    {{{1, 6}, {9, 6}, {3, -4}}, 2, -1458},
                    {{{9, 12}, {3, -4}}, 4, 19683}},
                   N);
  if (id == "F2")
    return eta_sum({{{{1, 9}, {9, -1}}, 0, 1},
                    {{{1, 9}, {27, 3}, {3, -3}, {9, -1}}, 3, 9},
                    {{{3, 8}, {9, 3}, {1, -3}}, 2, 729}},
                   N);
  throw std::invalid_argument("unknown series id '" + id + "'");
}

LaurentSeries build_impl(const std::string& id, std::int64_t N,
                         const BuildOptions& opts) {
  if (N < 1) throw std::invalid_argument("build requires N >= 1");
  if (!is_series_id(id))
    throw std::invalid_argument("unknown series id '" + id + "'");

  bool want_disk_check = opts.verify_cache && !opts.cache_dir.empty() &&
                         g_disk_verified.find(id) == g_disk_verified.end();
  auto it = g_build_cache.find(id);
  if (it != g_build_cache.end() && it->second.trunc() >= N && !want_disk_check)
    return it->second.truncated(N);

  std::string path;
  bool have_file = false;
  if (!opts.cache_dir.empty()) {
    path = cache_path_for(opts.cache_dir, id);
    have_file = std::filesystem::exists(path);
  }

  if (have_file) {
    auto [disk_id, disk_series] = read_series_cache_file(path);
    if (disk_id != id)
      throw CacheFormatError("cache file " + path + " holds series '" +
                             disk_id + "', expected '" + id + "'");
    if (opts.verify_cache) {
      std::int64_t depth = std::max(N, disk_series.trunc());
      LaurentSeries fresh = compute_route(id, depth, opts);
      if (!identical(fresh.truncated(disk_series.trunc()), disk_series))
        throw CacheFormatError("cache file " + path +
                               " disagrees with recomputation");
      g_disk_verified.insert(id);
      auto cur = g_build_cache.find(id);
      if (cur == g_build_cache.end() || cur->second.trunc() < fresh.trunc())
        g_build_cache.insert_or_assign(id, fresh);
      if (fresh.trunc() > disk_series.trunc())
        write_series_cache_file(path, id, fresh);
      return fresh.truncated(N);
    }
    if (disk_series.trunc() >= N) {
      auto cur = g_build_cache.find(id);
      if (cur == g_build_cache.end() ||
          cur->second.trunc() < disk_series.trunc())
        g_build_cache.insert_or_assign(id, disk_series);
      return disk_series.truncated(N);
    }
  }

  LaurentSeries fresh = compute_route(id, N, opts);
  auto cur = g_build_cache.find(id);
  if (cur == g_build_cache.end() || cur->second.trunc() < fresh.trunc())
    g_build_cache.insert_or_assign(id, fresh);
  if (!opts.cache_dir.empty()) write_series_cache_file(path, id, fresh);
  return fresh.truncated(N);
}

LaurentSeries cphibar_impl_k(std::int64_t k, std::int64_t N,
                             const BuildOptions& opts) {
  std::vector<Int> out(static_cast<std::size_t>(N));
  for (std::int64_t d = 1; d <= k; ++d) {
    if (k % d != 0) continue;
    int mu = mobius(d);
    if (mu == 0) continue;
    std::int64_t kd = k / d;
    std::string comp_id;
    if (kd == 1)
      comp_id = "p";
    else if (kd == 2)
      comp_id = "cphi2";
    else if (kd == 3)
      comp_id = "cphi3_closed";
    else if (kd == 9)
      comp_id = "cphi9_closed";
    else
      throw std::invalid_argument("cphibar_series: unsupported k");
    LaurentSeries comp = build_impl(comp_id, N, opts);
    for (std::int64_t n = 0; n < N; n += d) {
      const Int& c = coeff(comp, n / d);
      if (mu > 0)
        out[static_cast<std::size_t>(n)] += c;
      else
        out[static_cast<std::size_t>(n)] -= c;
    }
  }
  return LaurentSeries::from_coeffs(0, N, std::move(out));
}

}  // namespace

const std::vector<std::string>& series_ids() {
  static const std::vector<std::string> ids = {
      "p",        "cphi1",        "cphi2",        "cphi3",    "cphi4",
      "cphi5",    "cphi6",        "cphi7",        "cphi8",    "cphi9",
      "cphi3_closed", "cphi9_closed", "cphibar2", "cphibar3", "cphibar9",
      "a1",       "a2",           "a3",           "a4",       "a5",
      "xi",       "T",            "S",            "a_of_q",   "F1",
      "F2"};
  return ids;
}

bool is_series_id(const std::string& id) {
  const auto& ids = series_ids();
  for (const auto& s : ids)
    if (s == id) return true;
  return false;
}

LaurentSeries build(const std::string& id, std::int64_t N) {
  return build(id, N, BuildOptions{});
}

LaurentSeries build(const std::string& id, std::int64_t N,
                    const BuildOptions& opts) {
  std::lock_guard<std::recursive_mutex> lock(g_build_mutex);
  return build_impl(id, N, opts);
}

int mobius(std::int64_t n) {
  if (n <= 0) throw std::invalid_argument("mobius requires n >= 1");
  int count = 0;
  for (std::int64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      n /= f;
      if (n % f == 0) return 0;
      ++count;
    }
  }
  if (n > 1) ++count;
  return count % 2 == 0 ? 1 : -1;
}

LaurentSeries cphibar_series(std::int64_t k, std::int64_t N) {
  if (k != 2 && k != 3 && k != 9)
    throw std::invalid_argument("cphibar_series: supported k are 2, 3, 9");
  std::lock_guard<std::recursive_mutex> lock(g_build_mutex);
  return cphibar_impl_k(k, N, BuildOptions{});
}

VerificationReport cross_check_cphi(std::int64_t k, std::int64_t N,
                                    std::int64_t lattice_budget) {
  if (k != 3 && k != 9)
    throw std::invalid_argument("cross_check_cphi: k must be 3 or 9");
  auto t0 = std::chrono::steady_clock::now();
  VerificationReport r;
  r.id = "cross-check-cphi" + std::to_string(k);
  r.N = N;
  r.n_max = N - 1;
  r.status = VerifyStatus::verified;

  BuildOptions opts;
  opts.lattice_budget = lattice_budget;
  std::lock_guard<std::recursive_mutex> lock(g_build_mutex);
  try {
    LaurentSeries theta = build_impl("cphi" + std::to_string(k), N, opts);
    LaurentSeries closed =
        build_impl(k == 3 ? "cphi3_closed" : "cphi9_closed", N, opts);
    for (std::int64_t n = 0; n < N; ++n) {
      Int diff = coeff(theta, n) - coeff(closed, n);
      if (diff != 0) {
        r.status = VerifyStatus::violated;
        r.witnesses.push_back(Witness{n, diff, padic_order(diff)});
        break;
      }
    }
  } catch (const BudgetExceededError&) {
    r.status = VerifyStatus::infeasible;
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(
                     std::chrono::steady_clock::now() - t0)
                     .count();
  return r;
}

}  // namespace qfrob
