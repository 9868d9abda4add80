#pragma once

#include <cstdint>
#include <string>

namespace recoil {

// Shortest round-trip decimal representation of a double (std::to_chars).
// Locale-independent, '.' decimal separator; used for all CSV and JSON
// number output so identical runs produce identical bytes.
std::string format_double(double v);

// 64-bit FNV-1a hash of a byte string, lowercase hex. Used to fingerprint
// species data files in output metadata.
std::string fnv1a_hex(const std::string& bytes);
std::uint64_t fnv1a(const std::string& bytes);

// Whole-file read/write; throw IoError with the path on failure.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace recoil
