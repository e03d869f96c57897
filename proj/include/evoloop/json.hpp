#pragma once

#include <json.hpp>

#include <string>

namespace evoloop {

using Json = nlohmann::json;

// Canonical serialization: object keys in lexicographic order (nlohmann's
// std::map backing), no insignificant whitespace. Digests and on-disk
// artifact bytes are defined over this form.
inline std::string canonical(const Json& j) { return j.dump(); }

}  // namespace evoloop
