#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sktgc/error.hpp"

namespace sktgc {

using Symbol = std::uint8_t;

// Codes beyond this many words are only reachable through rank/unrank.
inline constexpr std::size_t kMaxMaterializedWords = std::size_t{1} << 24;

// Asymptotic rate of the earlier recursive 1-SkTGC family, log2(3)/2.
inline constexpr double kPriorRecursiveRate = 0.79248125036057812;

// Maps 0-based storage slots to the positions used when talking about a
// word. Standard numbers slots 1..n; Signed numbers them -L..R.
class Indexing {
 public:
  static Indexing standard() { return Indexing{}; }
  static Indexing signed_range(int left, int right);

  bool is_signed() const noexcept { return signed_; }
  int left() const noexcept { return left_; }
  int right() const noexcept { return right_; }

  int position(std::size_t slot) const noexcept {
    return signed_ ? static_cast<int>(slot) - left_ : static_cast<int>(slot) + 1;
  }
  std::size_t slot(int position) const noexcept {
    return static_cast<std::size_t>(signed_ ? position + left_ : position - 1);
  }
  bool contains(int position, std::size_t length) const noexcept;

  // Indexing of the word obtained by adding one slot on each side.
  Indexing widened() const;

  // "std" or "signed:L,R", as used in listing headers.
  std::string to_string() const;

  friend bool operator==(const Indexing&, const Indexing&) = default;

 private:
  bool signed_ = false;
  int left_ = 0;
  int right_ = 0;
};

// A single word over Z_m together with its position convention.
class Codeword {
 public:
  Codeword() = default;
  Codeword(std::vector<Symbol> symbols, unsigned m = 2,
           Indexing indexing = Indexing::standard());

  // Digits left to right; one decimal digit per symbol.
  static Codeword parse(std::string_view digits, unsigned m = 2,
                        Indexing indexing = Indexing::standard());

  std::size_t length() const noexcept { return symbols_.size(); }
  unsigned alphabet() const noexcept { return m_; }
  const Indexing& indexing() const noexcept { return indexing_; }
  std::span<const Symbol> symbols() const noexcept { return symbols_; }

  // Symbol at a position in this word's own convention.
  Symbol at(int position) const;

  std::string to_string() const;

  friend bool operator==(const Codeword&, const Codeword&) = default;

 private:
  std::vector<Symbol> symbols_;
  unsigned m_ = 2;
  Indexing indexing_;
};

// An ordered list of equal-length words over Z_m, stored row-major.
class Code {
 public:
  Code() = default;
  Code(std::size_t length, unsigned m, bool cyclic, Indexing indexing,
       std::vector<Symbol> symbols);

  static Code from_strings(const std::vector<std::string>& words, unsigned m = 2,
                           bool cyclic = false,
                           Indexing indexing = Indexing::standard());

  std::size_t size() const noexcept { return length_ ? symbols_.size() / length_ : 0; }
  std::size_t length() const noexcept { return length_; }
  unsigned alphabet() const noexcept { return m_; }
  bool cyclic() const noexcept { return cyclic_; }
  const Indexing& indexing() const noexcept { return indexing_; }

  std::span<const Symbol> word(std::size_t i) const noexcept {
    return {symbols_.data() + i * length_, length_};
  }
  Codeword codeword(std::size_t i) const;
  std::string word_string(std::size_t i) const;
  std::vector<std::string> to_strings() const;
  std::span<const Symbol> symbols() const noexcept { return symbols_; }

  Code with_cyclic(bool cyclic) const;
  Code with_indexing(Indexing indexing) const;

  friend bool operator==(const Code&, const Code&) = default;

 private:
  std::size_t length_ = 0;
  unsigned m_ = 2;
  bool cyclic_ = false;
  Indexing indexing_;
  std::vector<Symbol> symbols_;
};

struct TransitionStep {
  int position = 0;   // in the code's indexing convention
  int direction = 1;  // +1 or -1, value change modulo m

  friend bool operator==(const TransitionStep&, const TransitionStep&) = default;
};

struct TransitionSequence {
  std::vector<TransitionStep> steps;
  bool cyclic = false;
  std::size_t length = 0;
  Indexing indexing;

  // Positions renumbered to 1..n.
  std::vector<int> standard_positions() const;
  std::vector<int> positions() const;
};

// Transition sequence of a Gray code; P-1 steps, or P if cyclic.
// Throws NotAGrayStep naming the offending step.
TransitionSequence transitions(const Code& code);

// Rebuilds a code from its first word and a transition sequence. The wrap
// step of a cyclic sequence must return to the first word.
Code reconstruct(const Codeword& first, const TransitionSequence& ts);

enum class DeriveOp { kDropFirst, kDropLast, kTrimBoth, kReverse };

// C', C*, C-hat and reversed C. The result is always non-cyclic.
Code derive(const Code& code, DeriveOp op);

struct RateMetrics {
  double density = 0.0;  // P / m^n
  double rate = 0.0;     // log_m(P) / n
};

RateMetrics rate_metrics(const Code& code);
RateMetrics rate_metrics(std::uint64_t size, unsigned m, std::size_t length);

// m^n if it fits in 64 bits, else 0.
std::uint64_t space_size(unsigned m, std::size_t length) noexcept;

// Mixed-radix value of a word, leftmost symbol most significant.
std::uint64_t word_value(std::span<const Symbol> word, unsigned m) noexcept;

}  // namespace sktgc
