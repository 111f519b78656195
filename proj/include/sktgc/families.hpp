#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "sktgc/binary.hpp"
#include "sktgc/core.hpp"

namespace sktgc {

enum class Family {
  k3Sk,          // 3sktgc
  k2SkA,         // 2sktgc-a
  k2SkB,         // 2sktgc-b
  k2SkC,         // 2sktgc-c
  k1SkOdd,       // 1sktgc-odd: length 2n+1
  k1SkEven,      // 1sktgc-even: length 2n+2
  k1SkGeneral,   // 1sktgc-general: any base case, `steps` rounds
  kMary,         // mary: m >= 5
  kQuaternary,   // quaternary
  kTernaryNc,    // ternary-nc
  kTernaryC,     // ternary-c
};

// Throws InvalidParameters for unknown ids.
Family parse_family(std::string_view id);
std::string_view family_id(Family f);

struct FamilyParams {
  Family family = Family::k3Sk;
  int n = 0;
  unsigned m = 0;                 // mary only
  std::optional<BaseCase> base;   // general only
  int steps = 1;                  // general only
};

// Skew tolerance the family guarantees (3, 2 or 1).
int family_k(Family f);
bool family_complete(Family f);

Code build_family(const FamilyParams& p);
std::uint64_t predicted_family_size(const FamilyParams& p);
std::size_t family_length(const FamilyParams& p);
unsigned family_alphabet(const FamilyParams& p);

}  // namespace sktgc
