#include "therm/hash.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>

#include "therm/blob.hpp"
#include "therm/errors.hpp"

namespace therm {

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
  return std::string(buf);
}

std::string file_digest(const std::string& path) {
  const auto bytes = read_bytes(path);
  return hex64(fnv1a(bytes.data(), bytes.size()));
}

std::string dir_digest(const std::string& dir) {
  namespace fs = std::filesystem;
  std::vector<std::string> rel;
  for (const auto& e : fs::recursive_directory_iterator(dir)) {
    if (e.is_regular_file()) {
      rel.push_back(fs::relative(e.path(), dir).generic_string());
    }
  }
  std::sort(rel.begin(), rel.end());
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const auto& r : rel) {
    h = fnv1a(r, h);
    const auto bytes = read_bytes((fs::path(dir) / r).string());
    h = fnv1a(bytes.data(), bytes.size(), h);
  }
  return hex64(h);
}

}  // namespace therm
