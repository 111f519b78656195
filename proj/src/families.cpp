#include "sktgc/families.hpp"

#include <array>
#include <utility>

#include "sktgc/mary.hpp"

namespace sktgc {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 11> kIds = {{
    {Family::k3Sk, "3sktgc"},
    {Family::k2SkA, "2sktgc-a"},
    {Family::k2SkB, "2sktgc-b"},
    {Family::k2SkC, "2sktgc-c"},
    {Family::k1SkOdd, "1sktgc-odd"},
    {Family::k1SkEven, "1sktgc-even"},
    {Family::k1SkGeneral, "1sktgc-general"},
    {Family::kMary, "mary"},
    {Family::kQuaternary, "quaternary"},
    {Family::kTernaryNc, "ternary-nc"},
    {Family::kTernaryC, "ternary-c"},
}};

TwoSkVariant two_variant(Family f) {
  return f == Family::k2SkA ? TwoSkVariant::kA : f == Family::k2SkB ? TwoSkVariant::kB : TwoSkVariant::kC;
}

// Odd and even 1-SkTGC level n is the seed grown n-1 times.
const BaseCase& level_base(Family f) { return f == Family::k1SkOdd ? odd_base() : even_base(); }

void require_n(const FamilyParams& p, int min_n) {
  if (p.n < min_n)
    throw InvalidParameters(std::string(family_id(p.family)) + " needs n >= " + std::to_string(min_n));
}

}  // namespace

Family parse_family(std::string_view id) {
  for (auto [f, name] : kIds)
    if (name == id) return f;
  throw InvalidParameters("unknown family '" + std::string(id) + "'");
}

std::string_view family_id(Family f) {
  for (auto [g, name] : kIds)
    if (g == f) return name;
  return "?";
}

int family_k(Family f) {
  switch (f) {
    case Family::k3Sk: return 3;
    case Family::k2SkA:
    case Family::k2SkB:
    case Family::k2SkC: return 2;
    default: return 1;
  }
}

bool family_complete(Family f) {
  switch (f) {
    case Family::k3Sk:
    case Family::k2SkC:
    case Family::kMary:
    case Family::kQuaternary:
    case Family::kTernaryNc:
    case Family::kTernaryC: return true;
    default: return false;
  }
}

Code build_family(const FamilyParams& p) {
  switch (p.family) {
    case Family::k3Sk: return build_3sktgc(p.n);
    case Family::k2SkA:
    case Family::k2SkB:
    case Family::k2SkC: return build_2sktgc(p.n, two_variant(p.family));
    case Family::k1SkOdd:
    case Family::k1SkEven:
      require_n(p, 2);
      return build_1sktgc(level_base(p.family), p.n - 1, OneSkVariant::kB);
    case Family::k1SkGeneral:
      if (!p.base) throw InvalidParameters("1sktgc-general needs a base case");
      return build_1sktgc(*p.base, p.steps, OneSkVariant::kB);
    case Family::kMary: return build_mary_large(p.m, p.n);
    case Family::kQuaternary: return build_quaternary(p.n);
    case Family::kTernaryNc: return build_ternary(p.n, false);
    case Family::kTernaryC: return build_ternary(p.n, true);
  }
  throw InvalidParameters("unknown family");
}

std::uint64_t predicted_family_size(const FamilyParams& p) {
  switch (p.family) {
    case Family::k3Sk: return predicted_size_3sk(p.n);
    case Family::k2SkA:
    case Family::k2SkB:
    case Family::k2SkC: return predicted_size_2sk(p.n, two_variant(p.family));
    case Family::k1SkOdd:
    case Family::k1SkEven: {
      require_n(p, 2);
      const BaseCase& b = level_base(p.family);
      return predicted_size_1sk(b.left, b.right, b.size(), p.n - 1, OneSkVariant::kB);
    }
    case Family::k1SkGeneral:
      if (!p.base) throw InvalidParameters("1sktgc-general needs a base case");
      if (p.steps < 1) throw InvalidParameters("1sktgc-general needs steps >= 1");
      return predicted_size_1sk(p.base->left, p.base->right, p.base->size(), p.steps, OneSkVariant::kB);
    case Family::kMary:
      if (p.m < 5) throw InvalidAlphabet("mary needs m >= 5");
      require_n(p, 1);
      return space_size(p.m, static_cast<std::size_t>(p.n));
    case Family::kQuaternary: require_n(p, 1); return space_size(4, static_cast<std::size_t>(p.n));
    case Family::kTernaryNc: require_n(p, 2); return space_size(3, static_cast<std::size_t>(p.n));
    case Family::kTernaryC: require_n(p, 3); return space_size(3, static_cast<std::size_t>(p.n));
  }
  throw InvalidParameters("unknown family");
}

std::size_t family_length(const FamilyParams& p) {
  switch (p.family) {
    case Family::k1SkOdd: return static_cast<std::size_t>(2 * p.n + 1);
    case Family::k1SkEven: return static_cast<std::size_t>(2 * p.n + 2);
    case Family::k1SkGeneral:
      if (!p.base) throw InvalidParameters("1sktgc-general needs a base case");
      return static_cast<std::size_t>(p.base->length() + 2 * p.steps);
    default: return static_cast<std::size_t>(p.n);
  }
}

unsigned family_alphabet(const FamilyParams& p) {
  switch (p.family) {
    case Family::kMary: return p.m;
    case Family::kQuaternary: return 4;
    case Family::kTernaryNc:
    case Family::kTernaryC: return 3;
    default: return 2;
  }
}

}  // namespace sktgc
