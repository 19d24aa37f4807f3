// Copyright the lra authors. Apache-2.0 license; see LICENSE in the project root.

#ifndef LRA_UTIL_HPP_
#define LRA_UTIL_HPP_

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace lra {

/// FNV-1a 64-bit content hash. Stable across platforms and runs; used for
/// input digests in run manifests and artifact caching.
std::uint64_t fnv1a64(std::string_view bytes);

/// Digest of a file's raw bytes, rendered as a fixed-width hex string.
/// Throws std::runtime_error if the file cannot be read.
std::string file_digest(const std::filesystem::path& path);

/// Digest of an in-memory buffer, same rendering as file_digest.
std::string content_digest(std::string_view bytes);

std::string lowercase_ascii(std::string_view s);

/// Reads an entire file into a string. Throws std::runtime_error with the
/// file name on failure.
std::string read_file(const std::filesystem::path& path);

void write_file(const std::filesystem::path& path, std::string_view bytes);

/// Wall-clock stopwatch for per-stage timings.
class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double elapsed_ms() const {
    auto d = std::chrono::steady_clock::now() - start_;
    return std::chrono::duration<double, std::milli>(d).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

// Little-endian binary serialization helpers. All persisted artifacts use
// these so the on-disk formats are byte-identical across runs.
void put_u32(std::string& out, std::uint32_t v);
void put_u64(std::string& out, std::uint64_t v);
void put_f64(std::string& out, double v);
void put_str(std::string& out, std::string_view s);

class ByteReader {
 public:
  ByteReader(std::string_view bytes, std::string name)
      : bytes_(bytes), name_(std::move(name)) {}

  std::uint32_t get_u32();
  std::uint64_t get_u64();
  double get_f64();
  std::string get_str();
  void expect_magic(std::string_view magic);
  bool at_end() const { return pos_ == bytes_.size(); }

 private:
  void need(std::size_t n);

  std::string_view bytes_;
  std::string name_;
  std::size_t pos_ = 0;
};

}  // namespace lra

#endif  // LRA_UTIL_HPP_
