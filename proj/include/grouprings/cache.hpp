#pragma once

#include "grouprings/report.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>

namespace gring {

/// On-disk JSON result cache keyed by (artifact version, group fingerprint,
/// command). Writes are atomic (temp file + rename). GROUPRINGS_CACHE_DIR
/// overrides the location.
class ResultCache {
public:
  explicit ResultCache(bool enabled = true) : enabled_(enabled) {
    const char* env = std::getenv("GROUPRINGS_CACHE_DIR");
    if (env && *env)
      dir_ = env;
    else
      dir_ = std::filesystem::temp_directory_path() / "grouprings-cache";
  }

  std::optional<json> load(const std::string& fingerprint, const std::string& command) const {
    if (!enabled_) return std::nullopt;
    auto p = path_for(fingerprint, command);
    std::ifstream in(p);
    if (!in) return std::nullopt;
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded()) return std::nullopt;
    // corruption guard: the stored fingerprint must match the key
    if (!j.contains("fingerprint") || j["fingerprint"] != fingerprint) return std::nullopt;
    if (!j.contains("artifact_version") || j["artifact_version"] != kArtifactVersion)
      return std::nullopt;
    return j;
  }

  void store(const std::string& fingerprint, const std::string& command, const json& j) const {
    if (!enabled_) return;
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    auto p = path_for(fingerprint, command);
    auto tmp = p;
    tmp += ".tmp";
    {
      std::ofstream out(tmp);
      out << j.dump(2) << "\n";
    }
    std::filesystem::rename(tmp, p, ec);
  }

  const std::filesystem::path& dir() const { return dir_; }

private:
  std::filesystem::path path_for(const std::string& fingerprint, const std::string& cmd) const {
    return dir_ / (std::string(kArtifactVersion) + "-" + fingerprint + "-" + cmd + ".json");
  }
  bool enabled_;
  std::filesystem::path dir_;
};

} // namespace gring
