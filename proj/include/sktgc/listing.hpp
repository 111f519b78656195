#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "sktgc/core.hpp"

namespace sktgc {

// Canonical text listing:
//
//   # m=<m> n=<n> cyclic=<0|1> indexing=<std|signed:L,R>
//   <one word per line, one decimal digit per symbol, leftmost first>
//
// Only alphabets with m <= 10 can be written this way.
std::string to_listing(const Code& code);
void write_listing(std::ostream& os, const Code& code);

Code parse_listing(std::string_view text);
Code read_listing(std::istream& is);
Code load_listing(const std::string& path);
void save_listing(const std::string& path, const Code& code);

}  // namespace sktgc
