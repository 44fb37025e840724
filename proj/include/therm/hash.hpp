#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace therm {

// FNV-1a 64-bit. Used for config/dataset fingerprints; not cryptographic.
inline std::uint64_t fnv1a(const void* data, std::size_t len,
                           std::uint64_t h = 0xcbf29ce484222325ULL) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::uint64_t fnv1a(const std::string& s,
                           std::uint64_t h = 0xcbf29ce484222325ULL) {
  return fnv1a(s.data(), s.size(), h);
}

std::string hex64(std::uint64_t v);

// FNV-1a digest of a file's bytes, as 16 hex chars. Throws IoError.
std::string file_digest(const std::string& path);

// Digest of every regular file under dir (sorted relative paths + contents).
std::string dir_digest(const std::string& dir);

}  // namespace therm
