#pragma once

#include <cstdint>
#include <vector>

#include "sktgc/core.hpp"

namespace sktgc {

enum class TwoSkVariant { kA, kB, kC };
enum class OneSkVariant { kA, kB };

// Seed for the generalized doubling recursion: a non-cyclic binary 1-SkTGC of
// length L+R+1 with signed positions -L..R.
struct BaseCase {
  int left = 1;
  int right = 1;
  Code code;

  int length() const noexcept { return left + right + 1; }
  std::uint64_t size() const noexcept { return code.size(); }
};

// Every admissibility condition the code fails when read with positions
// -left..right. Empty means the code is a valid base case.
std::vector<BaseViolation> check_base_conditions(const Code& code, int left, int right);

// Complete cyclic 3-SkTGC of length n >= 1 (supercomposite reflect-and-shift).
Code build_3sktgc(int n);

// A: non-cyclic, 2^n - 1 words, n >= 3.
// B: cyclic, 2^n - 2 words, n >= 4.
// C: cyclic and complete, n >= 4.
Code build_2sktgc(int n, TwoSkVariant variant);

// Runs the four-block recursion `steps` times from `base`. Variant B returns
// the cyclic code B_steps (steps >= 1), variant A the non-cyclic A_steps.
// Positions stay signed: -(L+steps)..(R+steps).
Code build_1sktgc(const BaseCase& base, int steps, OneSkVariant variant);

// A_1 = [000, 001, 011, 111] with L = R = 1.
const BaseCase& odd_base();
// A_1 = [0000, 0001, 0011, 0111, 1111] with L = 2, R = 1.
const BaseCase& even_base();
// Bundled optimal seeds: n0 = 6 (L=4, R=1, 47 words) or n0 = 7 (L=3, R=3,
// 108 words).
const BaseCase& bundled_base(int n0);

std::uint64_t predicted_size_3sk(int n);
std::uint64_t predicted_size_2sk(int n, TwoSkVariant variant);
// Size after `steps` rounds. For variant B, steps = 0 gives the extended
// b_0 = a_0 - (L - R + 2) used by the recursion.
std::uint64_t predicted_size_1sk(int left, int right, std::uint64_t base_size, int steps,
                                 OneSkVariant variant);

// Leading constant c of |B_s| ~ c * 2^N: (a_0 + (L-R+2)/3) / 2^{L+R+1}.
double base_constant(int left, int right, std::uint64_t base_size);

}  // namespace sktgc
