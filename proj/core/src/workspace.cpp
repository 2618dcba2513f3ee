#include "extrop/workspace.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace extrop {

namespace fs = std::filesystem;

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

Workspace::Workspace(std::string directory) : dir_(std::move(directory)) {}

Workspace Workspace::from_environment() {
  const char* d = std::getenv("EXTROP_CACHE_DIR");
  return d && *d ? Workspace(d) : Workspace();
}

std::string Workspace::key(const std::string& kind, const Json& request) {
  const std::string canon = std::string(kVersion) + "\n" + kind + "\n" + request.dump();
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(canon)));
  return kind + "-" + buf;
}

std::string Workspace::path_for(const std::string& key) const { return (fs::path(dir_) / (key + ".cache")).string(); }

std::optional<std::string> Workspace::load(const std::string& kind, const Json& request) const {
  if (!enabled()) return std::nullopt;
  std::ifstream in(path_for(key(kind, request)), std::ios::binary);
  if (!in) return std::nullopt;
  // header: version, then the full request so that hash collisions miss
  std::string version, stored_request;
  if (!std::getline(in, version) || version != kVersion) return std::nullopt;
  if (!std::getline(in, stored_request) || stored_request != request.dump()) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void Workspace::store(const std::string& kind, const Json& request, const std::string& payload) const {
  if (!enabled()) return;
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) return;
  const std::string path = path_for(key(kind, request));
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return;
    out << kVersion << '\n' << request.dump() << '\n' << payload;
    if (!out) return;
  }
  fs::rename(tmp, path, ec);
}

}  // namespace extrop
