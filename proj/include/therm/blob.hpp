#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace therm {

// Raw little-endian f32 blobs. All on-disk arrays use this format.
void write_f32_blob(const std::string& path, const std::vector<float>& v);
std::vector<float> read_f32_blob(const std::string& path);

// Appending variant used for multi-array sample files.
void append_f32(std::vector<unsigned char>& out, const std::vector<float>& v);
std::vector<float> slice_f32(const std::vector<unsigned char>& raw,
                             std::size_t offset_bytes, std::size_t count);

void write_bytes(const std::string& path, const std::vector<unsigned char>& b);
std::vector<unsigned char> read_bytes(const std::string& path);

void write_text(const std::string& path, const std::string& text);
std::string read_text(const std::string& path);

}  // namespace therm
