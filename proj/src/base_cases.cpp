#include <stdexcept>

#include "bundled_bases.inc"
#include "sktgc/binary.hpp"
#include "sktgc/listing.hpp"

namespace sktgc {

namespace {

BaseCase load_bundled(std::string_view text, int left, int right) {
  Code code = parse_listing(text);
  if (!check_base_conditions(code, left, right).empty())
    throw std::logic_error("bundled base case failed validation");
  return BaseCase{left, right, code.with_indexing(Indexing::signed_range(left, right))};
}

}  // namespace

const BaseCase& bundled_base(int n0) {
  static const BaseCase six = load_bundled(bundled::kBaseSix, 4, 1);
  static const BaseCase seven = load_bundled(bundled::kBaseSeven, 3, 3);
  if (n0 == 6) return six;
  if (n0 == 7) return seven;
  throw InvalidParameters("bundled base cases exist for n0 = 6 and n0 = 7 only");
}

}  // namespace sktgc
