#pragma once

#include <cstdint>
#include <string>

#include "sktgc/core.hpp"

namespace sktgc::detail {

inline void require_materializable(std::uint64_t words) {
  if (words == 0 || words > kMaxMaterializedWords)
    throw InvalidParameters("code of " + (words ? std::to_string(words) : std::string("> 2^64")) +
                            " words exceeds the 2^24 materialization bound; use encode/decode");
}

}  // namespace sktgc::detail
