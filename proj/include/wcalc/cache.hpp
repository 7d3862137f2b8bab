#pragma once

// Persistent cache of computed Weyl tables: canonical element words plus the
// packed Bruhat table, stored as versioned JSON keyed by the type string.
// Loads validate against a freshly enumerated group; corrupt files are
// rebuilt with a warning.  Writes go through a temp file and a rename.

#include <filesystem>
#include <string>

#include "wcalc/weyl.hpp"

namespace wcalc {

inline constexpr int kCacheSchemaVersion = 1;

std::filesystem::path cache_file_path(const std::filesystem::path& dir,
                                      const std::string& type_string);

// Loads the Bruhat table for g from dir when a valid file exists; otherwise
// builds it and writes the file.  Returns true on a cache hit.
bool attach_bruhat_cache(const WeylGroup& g, const std::filesystem::path& dir);

// Removes this tool's cache files from dir; returns how many were deleted.
int clear_cache(const std::filesystem::path& dir);

}  // namespace wcalc
