#pragma once

#include "evoloop/json.hpp"

#include <string>
#include <string_view>

namespace evoloop {

// SHA-256 of the input bytes, rendered as 64 lowercase hex characters.
std::string sha256_hex(std::string_view bytes);

// Digest of a document's canonical serialization.
inline std::string digest_of(const Json& j) { return sha256_hex(canonical(j)); }

// Genesis constant for the audit chain: the 32-byte zero digest in hex.
inline const std::string& genesis_digest() {
  static const std::string g(64, '0');
  return g;
}

}  // namespace evoloop
