#include "sktgc/codec.hpp"

#include <array>
#include <string>
#include <vector>

namespace sktgc::codec {

namespace {

constexpr int kNoIndex = -1;

// Rank of each 3-bit word (leftmost most significant) in the 2-SkTGC seed
// A_3 = [000, 001, 011, 111, 110, 100, 101]; 010 is absent.
constexpr std::array<int, 8> kLookupA3 = {0, 1, kNoIndex, 2, 5, 6, 4, 3};
constexpr std::array<const char*, 7> kA3 = {"000", "001", "011", "111", "110", "100", "101"};

// Rank of each 3-bit word in A_1 = [000, 001, 011, 111].
constexpr std::array<int, 8> kLookupA1 = {0, 1, kNoIndex, 2, kNoIndex, kNoIndex, kNoIndex, 3};
constexpr std::array<const char*, 4> kA1 = {"000", "001", "011", "111"};

// (left, right) outer bits of each block of B_i, block 4 wrapping to 00.
constexpr std::array<std::array<Symbol, 2>, 5> kOuterBits = {{{0, 0}, {0, 1}, {1, 1}, {1, 0}, {0, 0}}};

constexpr std::uint64_t pow2(int e) { return std::uint64_t{1} << e; }

void check_binary(std::span<const Symbol> word) {
  for (Symbol s : word)
    if (s > 1) throw InvalidParameters("codeword is not binary");
}

void tick(OpCounter* ops, std::uint64_t k = 1) {
  if (ops) ops->symbol_ops += k;
}

// Which of the five blocks of B_i holds `pos`, given L = |A_{i-1}|.
int block_of(std::uint64_t pos, std::uint64_t l) {
  if (pos == 0) return 0;
  if (pos <= l) return 1;
  if (pos <= 2 * l) return 2;
  if (pos <= 3 * l) return 3;
  return 4;
}

// Position in A_{i-1} of the inner word at `pos` of B_i.
std::uint64_t inner_rank(std::uint64_t pos, int block, std::uint64_t l) {
  switch (block) {
    case 0: return 0;
    case 1: return pos - 1;
    case 2: return 2 * l - pos;
    case 3: return pos - 2 * l - 1;
    default: return 4 * l - pos;
  }
}

}  // namespace

std::uint64_t capacity(int level) {
  if (level < 1 || level > 31) throw InvalidParameters("capacity level must be in [1, 31]");
  // (7 * 2^{2i-1} - 2) / 3; 7 * 2^61 still fits in 64 bits.
  return ((std::uint64_t{7} << (2 * level - 1)) - 2) / 3;
}

std::uint64_t odd_code_size(int n) {
  if (n < 2 || n > 31) throw InvalidParameters("odd-length 1-SkTGC needs 2 <= n <= 31");
  return capacity(n) - 2;
}

Rank decode_2sk(std::span<const Symbol> word, int n, OpCounter* ops) {
  if (n < 4 || n > 63) throw InvalidLength("2-SkTGC codec needs 4 <= n <= 63");
  if (word.size() != static_cast<std::size_t>(n)) throw InvalidLength("word length differs from n");
  check_binary(word);
  auto bit = [&](int i) {  // 1-based
    tick(ops);
    return word[static_cast<std::size_t>(i - 1)];
  };

  int first = 0;
  for (int i = 1; i <= n && first == 0; ++i)
    if (bit(i)) first = i;

  // c[1..j] = e_{j-2} or e_{j-2} + e_j for the step j = first + 2 at which the
  // word was inserted; j = n means one of the two words missing from B_n.
  int n0 = 3;
  std::uint64_t pos = 0;
  bool special = false;
  const int j = first + 2;
  if (first != 0 && j <= n && bit(j - 1) == 0) {
    if (j == n) throw NotInCode("word is one of the two words missing from B_n");
    if (j >= 4) {
      n0 = j;
      pos = bit(j) ? pow2(j) - 2 : pow2(j) - 3;
      special = true;
    }
  }
  if (!special) {
    const int v = bit(1) * 4 + bit(2) * 2 + bit(3);
    if (kLookupA3[static_cast<std::size_t>(v)] == kNoIndex) throw NotInCode("prefix 010 never occurs");
    pos = static_cast<std::uint64_t>(kLookupA3[static_cast<std::size_t>(v)]);
  }
  for (int i = n0 + 1; i <= n; ++i) {
    const std::uint64_t mod = pow2(i) - 2;
    pos = bit(i) == 0 ? (mod - pos) % mod : pos + 1;
  }
  return Rank{pos};
}

Codeword encode_2sk(Rank rank, int n, OpCounter* ops) {
  if (n < 4 || n > 63) throw InvalidLength("2-SkTGC codec needs 4 <= n <= 63");
  if (rank.value > pow2(n) - 3) throw RankOutOfRange("rank exceeds 2^n - 3");
  std::vector<Symbol> c(static_cast<std::size_t>(n), 0);
  auto set = [&](int i, Symbol v) {
    tick(ops);
    c[static_cast<std::size_t>(i - 1)] = v;
  };
  std::uint64_t pos = rank.value;

  auto descend = [&](int i) {
    const std::uint64_t mod = pow2(i) - 2;
    if (pos >= 1 && pos <= pow2(i - 1) - 1) {
      set(i, 1);
      pos -= 1;
    } else {
      set(i, 0);
      pos = (mod - pos) % mod;
    }
  };

  descend(n);
  for (int i = n - 1; i >= 4; --i) {
    if (pos == pow2(i) - 2) {
      set(i, 1);
      set(i - 2, 1);
      return Codeword(std::move(c));
    }
    if (pos == pow2(i) - 3) {
      set(i - 2, 1);
      return Codeword(std::move(c));
    }
    descend(i);
  }
  for (int i = 0; i < 3; ++i) set(i + 1, static_cast<Symbol>(kA3[pos][i] - '0'));
  return Codeword(std::move(c));
}

Rank decode_2sk_complete(std::span<const Symbol> word, int n) {
  if (n < 4 || n > 63) throw InvalidLength("2-SkTGC codec needs 4 <= n <= 63");
  if (word.size() != static_cast<std::size_t>(n)) throw InvalidLength("word length differs from n");
  check_binary(word);
  const auto k = static_cast<std::size_t>(n);
  bool zero_except_tail = true;  // zero apart from slots n-3 and n-1
  for (std::size_t s = 0; s < k; ++s)
    if (s != k - 3 && s != k - 1 && word[s]) zero_except_tail = false;
  if (zero_except_tail) {
    if (word[k - 3] == 0 && word[k - 1] == 0) return Rank{0};
    if (word[k - 3] == 1) return Rank{word[k - 1] ? 2u : 1u};
  }
  return Rank{decode_2sk(word, n).value + 2};
}

Codeword encode_2sk_complete(Rank rank, int n) {
  if (n < 4 || n > 63) throw InvalidLength("2-SkTGC codec needs 4 <= n <= 63");
  if (rank.value > pow2(n) - 1) throw RankOutOfRange("rank exceeds 2^n - 1");
  if (rank.value >= 3) return encode_2sk(Rank{rank.value - 2}, n);
  std::vector<Symbol> c(static_cast<std::size_t>(n), 0);
  if (rank.value >= 1) c[static_cast<std::size_t>(n - 3)] = 1;
  if (rank.value == 2) c[static_cast<std::size_t>(n - 1)] = 1;
  return Codeword(std::move(c));
}

Rank decode_1sk(std::span<const Symbol> word, int n, OpCounter* ops) {
  if (n < 2 || n > 31) throw InvalidLength("1-SkTGC codec needs 2 <= n <= 31");
  if (word.size() != static_cast<std::size_t>(2 * n + 1)) throw InvalidLength("word length must be 2n+1");
  check_binary(word);
  auto bit = [&](int p) {  // signed position
    tick(ops);
    return word[static_cast<std::size_t>(p + n)];
  };

  int n0 = 1;
  std::uint64_t pos = 0;
  bool found = false;

  // Added at step m: c[-m..m] = sum_{i=1}^{m-1} e_i + sum_{i=1}^{j} e_{-i}.
  if (bit(0) == 0) {
    int ones = 0;
    while (ones < n && bit(ones + 1)) ++ones;
    const int m = ones + 1;
    if (ones >= 1 && m <= n - 1) {
      int j = 0;
      while (j < m && bit(-(j + 1))) ++j;
      bool zeros = j >= 1;
      for (int i = j + 1; zeros && i <= m; ++i)
        if (bit(-i)) zeros = false;
      if (zeros) {
        n0 = m;
        pos = capacity(m) - static_cast<std::uint64_t>(m) - 1 + static_cast<std::uint64_t>(j);
        found = true;
      }
    }
  }

  // Removed at step m: c[-m..m] = sum_{i=j}^{m-1} e_i with 2 <= j <= m-1.
  if (!found && bit(0) == 0 && bit(1) == 0) {
    int first = 2;
    while (first <= n && !bit(first)) ++first;
    if (first <= n) {
      int last = first;
      while (last + 1 <= n && bit(last + 1)) ++last;
      const int m = last + 1;
      if (m <= n - 1) {
        bool zeros = true;
        for (int i = 1; zeros && i <= m; ++i)
          if (bit(-i)) zeros = false;
        if (zeros) throw NotInCode("word was removed when extending the code");
      }
    }
  }

  if (!found) {
    const int v = bit(-1) * 4 + bit(0) * 2 + bit(1);
    if (kLookupA1[static_cast<std::size_t>(v)] == kNoIndex) throw NotInCode("middle three symbols not in A_1");
    pos = static_cast<std::uint64_t>(kLookupA1[static_cast<std::size_t>(v)]);
  }

  for (int i = n0 + 1; i <= n; ++i) {
    const std::uint64_t l = capacity(i - 1);
    const bool right = bit(i) != 0;
    const bool left = bit(-i) != 0;
    if (right && !left) {
      pos = pos + 1;
    } else if (right && left) {
      pos = 2 * l - pos;
    } else if (left) {
      pos = 2 * l + 1 + pos;
    } else {
      pos = (4 * l - pos) % (4 * l);
    }
  }
  // The update rules accept some words the code never lists; re-encoding
  // catches them in another linear pass.
  if (pos >= odd_code_size(n)) throw NotInCode("word does not belong to the code");
  const Codeword back = encode_1sk(Rank{pos}, n, ops);
  for (std::size_t s = 0; s < word.size(); ++s)
    if (back.symbols()[s] != word[s]) throw NotInCode("word does not belong to the code");
  return Rank{pos};
}

Codeword encode_1sk(Rank rank, int n, OpCounter* ops) {
  if (n < 2 || n > 31) throw InvalidLength("1-SkTGC codec needs 2 <= n <= 31");
  if (rank.value >= odd_code_size(n)) throw RankOutOfRange("rank exceeds the code size");
  std::vector<Symbol> c(static_cast<std::size_t>(2 * n + 1), 0);
  auto set = [&](int p, Symbol v) {
    tick(ops);
    c[static_cast<std::size_t>(p + n)] = v;
  };
  std::uint64_t pos = rank.value;

  auto descend = [&](int i) {
    const std::uint64_t l = capacity(i - 1);
    const int block = block_of(pos, l);
    set(-i, kOuterBits[static_cast<std::size_t>(block)][0]);
    set(i, kOuterBits[static_cast<std::size_t>(block)][1]);
    pos = inner_rank(pos, block, l);
  };

  descend(n);
  for (int i = n - 1; i >= 2; --i) {
    const std::uint64_t tail = capacity(i) - static_cast<std::uint64_t>(i);
    if (pos >= tail) {
      // sum_{j=1}^{i-1} e_j + sum_{j=1}^{pos-tail+1} e_{-j}
      for (int p = 1; p <= i - 1; ++p) set(p, 1);
      const auto ones = static_cast<int>(pos - tail + 1);
      for (int p = 1; p <= ones; ++p) set(-p, 1);
      return Codeword(std::move(c), 2, Indexing::signed_range(n, n));
    }
    descend(i);
  }
  for (int p = -1; p <= 1; ++p) set(p, static_cast<Symbol>(kA1[pos][p + 1] - '0'));
  return Codeword(std::move(c), 2, Indexing::signed_range(n, n));
}

}  // namespace sktgc::codec
