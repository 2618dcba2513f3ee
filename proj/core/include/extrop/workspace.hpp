#pragma once

// Content-addressed on-disk cache for computed results (atlases, face
// lattices).  Entries carry a format version; a mismatch is a miss.

#include "extrop/io.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace extrop {

/// FNV-1a, 64 bit.
std::uint64_t fnv1a(const std::string& bytes);

class Workspace {
 public:
  static constexpr const char* kVersion = "extrop-cache-1";

  /// Disabled workspace: every lookup misses and nothing is stored.
  Workspace() = default;
  explicit Workspace(std::string directory);
  /// Directory from EXTROP_CACHE_DIR; disabled when unset or empty.
  static Workspace from_environment();

  bool enabled() const { return !dir_.empty(); }
  const std::string& directory() const { return dir_; }

  /// Key of a request: kind tag plus canonical JSON of the inputs.
  static std::string key(const std::string& kind, const Json& request);

  std::optional<std::string> load(const std::string& kind, const Json& request) const;
  /// Best effort; I/O failures leave the cache unchanged.
  void store(const std::string& kind, const Json& request, const std::string& payload) const;

 private:
  std::string path_for(const std::string& key) const;
  std::string dir_;
};

}  // namespace extrop
