#ifndef FERMATSHA_CACHE_HPP
#define FERMATSHA_CACHE_HPP

#include <filesystem>
#include <string>

#include "fermatsha/bernoulli.hpp"

namespace fermatsha {

// Persistent Bernoulli tables keyed by p. A cache file carries a format
// version and a checksum over its records; a version mismatch or corrupt
// body triggers recomputation (with a warning), never a hard failure.
// Writes go through a temp file and an atomic rename.

inline constexpr int kCacheFormatVersion = 1;
inline constexpr const char* kCacheMagic = "fermat-sha-bernoulli-cache";
inline constexpr const char* kCacheEnvVar = "FERMAT_SHA_CACHE";

struct CacheResult {
    BernoulliTable table;
    bool from_cache = false;  // true when no recomputation happened
};

CacheResult cache_load_or_build(const OddPrime& p, const std::filesystem::path& path);

// Precedence: explicit flag value, then $FERMAT_SHA_CACHE, then a per-user
// cache directory ($XDG_CACHE_HOME or ~/.cache).
std::filesystem::path resolve_cache_path(const std::string& flag_value);

}  // namespace fermatsha

#endif
