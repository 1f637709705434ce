#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace mubclass {

// FNV-1a over the canonical serialized result; stable across platforms.
inline std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string fnv1a64_hex(std::string_view data);

}  // namespace mubclass
