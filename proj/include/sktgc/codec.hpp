#pragma once

#include <compare>
#include <cstdint>
#include <span>

#include "sktgc/core.hpp"

// Linear-time rank (decode) and unrank (encode) for the cyclic binary codes
// B_n of the 2-SkTGC recursion, its complete variant C_n, and the odd-length
// 1-SkTGC B_n of length 2n+1 (base A_1 = [000, 001, 011, 111]).
namespace sktgc::codec {

// 0-based index into a code's word list.
struct Rank {
  std::uint64_t value = 0;
  friend auto operator<=>(const Rank&, const Rank&) = default;
};

// Counts symbol reads and writes, for checking linear work.
struct OpCounter {
  std::uint64_t symbol_ops = 0;
};

// |A_i| of the odd-length recursion, (7/12) 2^{2i+1} - 2/3, for 1 <= i <= 31.
std::uint64_t capacity(int level);
// |B_n| of the odd-length recursion, (7/12) 2^{2n+1} - 8/3, for 2 <= n <= 31.
std::uint64_t odd_code_size(int n);

// B_n of the 2-SkTGC recursion, 4 <= n <= 63. The two words outside the code,
// e_{n-2} and e_{n-2}+e_n, raise NotInCode.
Rank decode_2sk(std::span<const Symbol> word, int n, OpCounter* ops = nullptr);
Codeword encode_2sk(Rank rank, int n, OpCounter* ops = nullptr);

// C_n, the complete 2-SkTGC: B_n with e_{n-2}, e_{n-2}+e_n inserted after 0.
Rank decode_2sk_complete(std::span<const Symbol> word, int n);
Codeword encode_2sk_complete(Rank rank, int n);

// Odd-length 1-SkTGC B_n, 2 <= n <= 31. `word` lists positions -n..n left
// to right. Words removed or never generated raise NotInCode.
Rank decode_1sk(std::span<const Symbol> word, int n, OpCounter* ops = nullptr);
Codeword encode_1sk(Rank rank, int n, OpCounter* ops = nullptr);

}  // namespace sktgc::codec
