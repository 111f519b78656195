#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sktgc/core.hpp"

namespace sktgc {

// First codeword, first transition, then one fixed-width record per later
// transition: non-cyclic codes store P-2 records; cyclic codes store P-1,
// the last being the wrap step, which must lead back to the first word.
//
// Record layout, MSB first:
//   m = 2: delta in [-k, k] \ {0} packed into ceil(log2 2k) bits (0 bits
//          for k = 0); the direction follows from the current bit.
//   m > 2: delta + k in ceil(log2(2k+1)) bits, then 1 direction bit
//          (0 for +1, 1 for -1).
struct CompressedCode {
  unsigned m = 2;
  std::size_t length = 0;
  std::uint64_t size = 0;
  bool cyclic = false;
  int k = 0;
  Indexing indexing;
  TransitionStep first;  // standard position 1..n

  std::vector<std::uint8_t> bits;  // first codeword, then records
  std::uint64_t bit_count = 0;

  std::uint64_t record_count() const noexcept;
  static int symbol_bits(unsigned m) noexcept;
  static int record_bits(unsigned m, int k) noexcept;
  std::uint64_t header_bits() const noexcept { return static_cast<std::uint64_t>(symbol_bits(m)) * length; }

  friend bool operator==(const CompressedCode&, const CompressedCode&) = default;
};

// k is the measured max |delta_i - delta_{i+1}|. Throws NotSkewTolerant if
// the code has no valid transition sequence, InvalidParameters if P < 2.
CompressedCode compress(const Code& code);

// Throws MalformedStream.
Code decompress(const CompressedCode& cc);

// "SKTG", version, big-endian header, the bit stream, and a CRC-32 of all
// preceding bytes.
std::vector<std::uint8_t> serialize(const CompressedCode& cc);
CompressedCode parse_compressed(std::span<const std::uint8_t> bytes);

}  // namespace sktgc
