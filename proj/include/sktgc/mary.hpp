#pragma once

#include <array>

#include "sktgc/core.hpp"

namespace sktgc {

// phi: 00 -> 0, 01 -> 1, 11 -> 2, 10 -> 3. One-bit neighbours map to values
// one apart modulo 4.
Symbol pair_map(Symbol hi, Symbol lo);
std::array<Symbol, 2> pair_map_inverse(Symbol q);

// phi applied to non-overlapping bit pairs of every word; length must be even.
Code apply_pair_map(const Code& binary);

// Complete cyclic m-ary 1-SkTGC, m >= 5, n >= 1.
Code build_mary_large(unsigned m, int n);

// Complete cyclic quaternary 1-SkTGC: phi of the complete 2-SkTGC of length 2n.
Code build_quaternary(int n);

// Complete ternary 1-SkTGC. Non-cyclic (n >= 2) begins with 0 and ends with
// e_1; cyclic needs n >= 3.
Code build_ternary(int n, bool cyclic);

}  // namespace sktgc
