#pragma once

// Line-oriented coefficient cache files.
//
// Format: a header line `series-id <id> valuation <v> trunc <N>` followed by
// one decimal integer per line for the exponents v, v+1, ..., N-1 in order.
// Writers emit exactly this; readers reject malformed files.

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "qfrob/series.hpp"

namespace qfrob {

/// A cache file (or stream) that does not follow the format exactly.
class CacheFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CachedSeries {
  std::string id;
  LaurentSeries series;
};

void write_series_cache(std::ostream& out, const std::string& id,
                        const LaurentSeries& s);
void write_series_cache_file(const std::string& path, const std::string& id,
                             const LaurentSeries& s);

/// Parses a cache stream; throws CacheFormatError on any deviation.
CachedSeries read_series_cache(std::istream& in);
/// Throws CacheFormatError if the file is missing or malformed.
CachedSeries read_series_cache_file(const std::string& path);

/// Standard cache location for a series id under a cache directory.
std::string cache_path_for(const std::string& dir, const std::string& id);

}  // namespace qfrob
