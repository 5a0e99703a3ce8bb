#include "qfrob/cache.hpp"

#include <fstream>
#include <sstream>

namespace qfrob {

void write_series_cache(std::ostream& out, const std::string& id,
                        const LaurentSeries& s) {
  out << "series-id " << id << " valuation " << s.valuation() << " trunc "
      << s.trunc() << "\n";
  for (std::int64_t n = s.valuation(); n < s.trunc(); ++n)
    out << s.coeff(n).get_str() << "\n";
}

void write_series_cache_file(const std::string& path, const std::string& id,
                             const LaurentSeries& s) {
  std::ofstream f(path, std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open cache file for writing: " + path);
  write_series_cache(f, id, s);
  if (!f) throw std::runtime_error("failed while writing cache file: " + path);
}

CachedSeries read_series_cache(std::istream& in) {
  std::string header;
  if (!std::getline(in, header))
    throw CacheFormatError("cache stream is empty");
  std::istringstream hs(header);
  std::string kw_id, id, kw_val, kw_trunc;
  std::int64_t val = 0, trunc = 0;
  if (!(hs >> kw_id >> id >> kw_val >> val >> kw_trunc >> trunc) ||
      kw_id != "series-id" || kw_val != "valuation" || kw_trunc != "trunc")
    throw CacheFormatError("malformed cache header: " + header);
  std::string tail;
  if (hs >> tail) throw CacheFormatError("trailing data in cache header");
  if (trunc < val) throw CacheFormatError("cache header has trunc < valuation");
  std::vector<Int> coeffs;
  coeffs.reserve(static_cast<std::size_t>(trunc - val));
  std::string line;
  for (std::int64_t n = val; n < trunc; ++n) {
    if (!std::getline(in, line))
      throw CacheFormatError("cache body ended early at exponent " +
                             std::to_string(n));
    Int x;
    if (line.empty() || mpz_set_str(x.get_mpz_t(), line.c_str(), 10) != 0)
      throw CacheFormatError("malformed cache coefficient line: " + line);
    coeffs.push_back(std::move(x));
  }
  while (std::getline(in, line))
    if (!line.empty())
      throw CacheFormatError("trailing data after cache body");
  return {id, LaurentSeries::from_coeffs(val, trunc, std::move(coeffs))};
}

CachedSeries read_series_cache_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw CacheFormatError("cannot open cache file: " + path);
  return read_series_cache(f);
}

std::string cache_path_for(const std::string& dir, const std::string& id) {
  return dir + "/" + id + ".series";
}

}  // namespace qfrob
