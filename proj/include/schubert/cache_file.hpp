#pragma once

// Persistent text cache of basis polynomials, one file per basis.
//
//   SCHUBCACHE <version> <basis>
//   code=<comma-separated Lehmer code> poly=<canonical polynomial text>
//
// Records are sorted by code.  Writes go to a temporary file that is then
// renamed over the target, so readers never see a partial file.

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "schubert/basis.hpp"

namespace schubert {

inline constexpr int cache_format_version = 1;
inline constexpr const char* cache_magic = "SCHUBCACHE";

/// Wrong magic, wrong basis, or a malformed record.  The message names the
/// offending line.
class CacheError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class CacheLoadStatus { loaded, missing, version_mismatch };

struct CacheLoadResult {
  CacheLoadStatus status = CacheLoadStatus::missing;
  std::size_t records = 0;
};

/// File holding `basis` for a cache rooted at `base`: the Schubert basis
/// uses `base` itself, the others append ".<basis name>".
std::filesystem::path cache_path_for(const std::filesystem::path& base, Basis basis);

/// Writes every cached polynomial of `basis`.  Throws std::runtime_error on
/// I/O failure.
void cache_store(const std::filesystem::path& path, const Engine& engine, Basis basis);

/// Validates the whole file, then preloads it into `engine`.  Nothing is
/// loaded if any record is bad (CacheError) or the version differs.
CacheLoadResult cache_load(const std::filesystem::path& path, Engine& engine, Basis basis);

/// Loads or stores all three bases under `base`.  Problems are returned as
/// warnings instead of thrown.
std::vector<std::string> cache_load_all(const std::filesystem::path& base, Engine& engine);
std::vector<std::string> cache_store_all(const std::filesystem::path& base,
                                         const Engine& engine);

}  // namespace schubert
