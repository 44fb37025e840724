#include "therm/blob.hpp"

#include <bit>
#include <cstring>
#include <fstream>

#include "therm/errors.hpp"

static_assert(std::endian::native == std::endian::little,
              "on-disk format is little-endian; big-endian hosts unsupported");
static_assert(sizeof(float) == 4);

namespace therm {

void write_bytes(const std::string& path, const std::vector<unsigned char>& b) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open for write: " + path);
  f.write(reinterpret_cast<const char*>(b.data()),
          static_cast<std::streamsize>(b.size()));
  if (!f) throw IoError("short write: " + path);
}

std::vector<unsigned char> read_bytes(const std::string& path) {
  std::ifstream f(path, std::ios::binary | std::ios::ate);
  if (!f) throw IoError("cannot open: " + path);
  const auto size = static_cast<std::size_t>(f.tellg());
  f.seekg(0);
  std::vector<unsigned char> out(size);
  f.read(reinterpret_cast<char*>(out.data()),
         static_cast<std::streamsize>(size));
  if (!f) throw IoError("short read: " + path);
  return out;
}

void write_f32_blob(const std::string& path, const std::vector<float>& v) {
  std::vector<unsigned char> b(v.size() * 4);
  std::memcpy(b.data(), v.data(), b.size());
  write_bytes(path, b);
}

std::vector<float> read_f32_blob(const std::string& path) {
  const auto b = read_bytes(path);
  if (b.size() % 4 != 0) throw IoError("blob size not divisible by 4: " + path);
  std::vector<float> v(b.size() / 4);
  std::memcpy(v.data(), b.data(), b.size());
  return v;
}

void append_f32(std::vector<unsigned char>& out, const std::vector<float>& v) {
  const std::size_t at = out.size();
  out.resize(at + v.size() * 4);
  std::memcpy(out.data() + at, v.data(), v.size() * 4);
}

std::vector<float> slice_f32(const std::vector<unsigned char>& raw,
                             std::size_t offset_bytes, std::size_t count) {
  if (offset_bytes + count * 4 > raw.size())
    throw IoError("f32 slice out of range");
  std::vector<float> v(count);
  std::memcpy(v.data(), raw.data() + offset_bytes, count * 4);
  return v;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open for write: " + path);
  f << text;
  if (!f) throw IoError("short write: " + path);
}

std::string read_text(const std::string& path) {
  const auto b = read_bytes(path);
  return std::string(b.begin(), b.end());
}

}  // namespace therm
