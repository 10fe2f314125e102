#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "hh/resolver.hpp"

namespace hh {

// A cache file that cannot be trusted: wrong format or version, foreign algebra, or
// differentials that fail revalidation.
struct CacheError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr const char* kCacheFormat = "hhe78-resolution";
inline constexpr int kCacheVersion = 1;

// {"format", "version", "algebra": {family, s, characteristic, hash}, "max_degree",
//  "terms": [[[i, j], ...] per degree], "differentials": [[[[k, p, q, "c"], ...] per column] per degree]}
nlohmann::json resolution_to_json(const Resolution& res);
// revalidates the header, index ranges, epsilon d_0 = 0, d d = 0, exactness and minimality
Resolution resolution_from_json(const Algebra& alg, const nlohmann::json& j);

// writes to a temporary file next to path, then renames
void cache_store(const Resolution& res, const std::string& path);
Resolution cache_load(const Algebra& alg, const std::string& path);

std::string cache_file_name(Family family, int s, uint32_t characteristic);
// E78_CACHE_DIR
std::optional<std::string> default_cache_dir();

}  // namespace hh
