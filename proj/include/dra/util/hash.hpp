#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace dra {

/// FNV-1a 64-bit hash of a byte string.
std::uint64_t fnv1a64(std::string_view data);

/// fnv1a64 rendered as 16 lowercase hex digits. Filename and URL safe.
std::string fnv1a64_hex(std::string_view data);

/// Stable digest of an ordered topic list, used to key scripted uniqueness
/// answers. Entries are joined with an unprintable separator before hashing
/// so ["ab","c"] and ["a","bc"] digest differently.
std::string topics_digest(const std::vector<std::string>& topics);

} // namespace dra
