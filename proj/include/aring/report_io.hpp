#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "aring/element.hpp"
#include "aring/modtables.hpp"
#include "aring/verify.hpp"

namespace aring {

inline constexpr int kCacheSchemaVersion = 1;

/// JSON Lines: one record object per line, then one trailing object with the
/// summary, environment and notes.  Byte-identical across identical runs.
std::string report_to_jsonl(const Report& report);

/// CSV with header statement_id,p,params,lhs,rhs,verdict; notes and summary
/// appended as '#' comment lines.
std::string report_to_csv(const Report& report);

/// Residue vector as JSON Lines: {"label":...,"p":...,"residue":...} per prime.
std::string element_to_jsonl(const AElement& e);

/// CSV with header label,p,residue.
std::string element_to_csv(const AElement& e);

/// Persisted Gregory residue tables, one JSON object per line keyed by
/// (quantity, p, schema_version).  Entries with a foreign schema version are
/// ignored on load; every load is re-verifiable against recomputation.
std::map<std::uint64_t, GregoryResidues> load_gregory_cache(const std::string& path);

/// Atomic write (temp file + rename) of every table held by the cache.
void save_gregory_cache(const std::string& path, GregoryCache& cache);

/// Write a string to a file atomically; "-" or empty writes to stdout.
void write_output(const std::string& path, const std::string& content);

}  // namespace aring
