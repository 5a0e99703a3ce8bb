// Tests for the line-oriented coefficient cache: round-trips through
// streams and files (including negative valuations), strict rejection of
// malformed input, and the standard per-id file naming.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "qfrob/cache.hpp"

using namespace qfrob;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("qfrob-cache-test-" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

bool same_series(const LaurentSeries& a, const LaurentSeries& b) {
  return a.valuation() == b.valuation() && a.trunc() == b.trunc() &&
         !first_difference(a, b).has_value();
}

}  // namespace

TEST_CASE("stream round-trip preserves id, valuation, trunc, coefficients") {
  const LaurentSeries s = LaurentSeries::from_coeffs(
      -1, 5, {Int(1), Int(0), Int("-123456789012345678901234567890")});
  std::ostringstream out;
  write_series_cache(out, "some-series", s);
  std::istringstream in(out.str());
  const CachedSeries back = read_series_cache(in);
  CHECK(back.id == "some-series");
  CHECK(same_series(back.series, s));
}

TEST_CASE("the cache file format is the documented header plus one line per"
          " coefficient") {
  const LaurentSeries s =
      LaurentSeries::from_coeffs(2, 5, {Int(7), Int(-8), Int(9)});
  std::ostringstream out;
  write_series_cache(out, "abc", s);
  CHECK(out.str() == "series-id abc valuation 2 trunc 5\n7\n-8\n9\n");
}

TEST_CASE("file round-trip under the standard per-id name") {
  TempDir tmp;
  const std::string dir = tmp.path.string();
  const LaurentSeries s =
      LaurentSeries::from_coeffs(0, 4, {Int(1), Int(9), Int(27), Int(82)});
  const std::string path = cache_path_for(dir, "demo");
  CHECK(path == dir + "/demo.series");
  write_series_cache_file(path, "demo", s);
  const CachedSeries back = read_series_cache_file(path);
  CHECK(back.id == "demo");
  CHECK(same_series(back.series, s));
}

TEST_CASE("a zero-length window round-trips") {
  std::ostringstream out;
  write_series_cache(out, "empty", LaurentSeries::zero(0));
  std::istringstream in(out.str());
  const CachedSeries back = read_series_cache(in);
  CHECK(back.series.is_zero());
  CHECK(back.series.trunc() == 0);
}

TEST_CASE("malformed cache input is rejected") {
  auto reject = [](const std::string& text) {
    std::istringstream in(text);
    CHECK_THROWS_AS(read_series_cache(in), CacheFormatError);
  };
  reject("");                                           // empty stream
  reject("garbage\n");                                  // bad header
  reject("series-id x valuation 0\n");                  // truncated header
  reject("series-id x valuation 0 trunc 2 extra\n1\n1\n");  // header junk
  reject("series-id x valuation 5 trunc 2\n");          // trunc < valuation
  reject("series-id x valuation 0 trunc 3\n1\n2\n");    // body ends early
  reject("series-id x valuation 0 trunc 2\n1\nxyz\n");  // non-integer line
  reject("series-id x valuation 0 trunc 2\n1\n2\n3\n"); // trailing data
  reject("series-id x valuation 0 trunc 1\n\n");        // empty coefficient
}

TEST_CASE("reading a missing file reports a cache error") {
  TempDir tmp;
  CHECK_THROWS_AS(read_series_cache_file((tmp.path / "absent.series").string()),
                  CacheFormatError);
}
