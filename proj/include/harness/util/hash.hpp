#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace harness {

// FNV-1a, stable across platforms and runs (std::hash is not), used for
// engine identity strings and manifest fingerprints.
inline std::uint64_t fnv1a64(std::string_view data,
                             std::uint64_t seed = 0xcbf29ce484222325ull) {
  std::uint64_t h = seed;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string hex64(std::uint64_t v);

// FNV-1a over a file's bytes; throws ConfigError if unreadable.
std::uint64_t fnv1a64_file(const std::string& path);

}  // namespace harness
