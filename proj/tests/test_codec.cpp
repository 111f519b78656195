#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sktgc/binary.hpp"
#include "sktgc/codec.hpp"

using namespace sktgc;
using codec::Rank;

namespace {

std::vector<Symbol> bits(const std::string& s) {
  std::vector<Symbol> out;
  for (char c : s) out.push_back(static_cast<Symbol>(c - '0'));
  return out;
}

std::string str(const Codeword& w) { return w.to_string(); }

// Number of positions where two words differ, and the first such position.
std::pair<int, int> diff(const Codeword& a, const Codeword& b) {
  int count = 0, first = -1;
  for (std::size_t i = 0; i < a.length(); ++i) {
    if (a.symbols()[i] == b.symbols()[i]) continue;
    if (first < 0) first = static_cast<int>(i);
    ++count;
  }
  return {count, first};
}

}  // namespace

TEST_CASE("capacity recursion") {
  CHECK(codec::capacity(1) == 4);
  CHECK(codec::capacity(2) == 18);
  for (int i = 1; i < 31; ++i) CHECK(codec::capacity(i + 1) == 4 * codec::capacity(i) + 2);
  CHECK(codec::odd_code_size(2) == 16);
  CHECK_THROWS_AS(codec::capacity(0), InvalidParameters);
  CHECK_THROWS_AS(codec::odd_code_size(32), InvalidParameters);
}

TEST_CASE("worked 2-SkTGC ranks at n = 4") {
  CHECK(codec::decode_2sk(bits("1010"), 4).value == 8);
  CHECK(codec::decode_2sk(bits("0010"), 4).value == 13);
  CHECK_THROWS_AS(codec::decode_2sk(bits("0100"), 4), NotInCode);
  CHECK_THROWS_AS(codec::decode_2sk(bits("0101"), 4), NotInCode);
  CHECK(str(codec::encode_2sk(Rank{8}, 4)) == "1010");
}

TEST_CASE("2-SkTGC codec agrees with the materialized lists") {
  for (int n = 4; n <= 12; ++n) {
    for (auto variant : {TwoSkVariant::kB, TwoSkVariant::kC}) {
      const Code c = build_2sktgc(n, variant);
      for (std::size_t i = 0; i < c.size(); ++i) {
        const auto w = c.word(i);
        if (variant == TwoSkVariant::kB) {
          CHECK(codec::decode_2sk(w, n).value == i);
          CHECK(codec::encode_2sk(Rank{i}, n).symbols().size() == static_cast<std::size_t>(n));
          CHECK(std::equal(w.begin(), w.end(), codec::encode_2sk(Rank{i}, n).symbols().begin()));
        } else {
          CHECK(codec::decode_2sk_complete(w, n).value == i);
          CHECK(std::equal(w.begin(), w.end(), codec::encode_2sk_complete(Rank{i}, n).symbols().begin()));
        }
      }
    }
  }
}

TEST_CASE("2-SkTGC codec input validation") {
  CHECK_THROWS_AS(codec::decode_2sk(bits("101"), 3), InvalidLength);
  CHECK_THROWS_AS(codec::decode_2sk(bits("101"), 4), InvalidLength);
  CHECK_THROWS_AS(codec::decode_2sk(bits("1020"), 4), InvalidParameters);
  CHECK_THROWS_AS(codec::encode_2sk(Rank{14}, 4), RankOutOfRange);
  CHECK_NOTHROW(codec::encode_2sk(Rank{13}, 4));
  CHECK_THROWS_AS(codec::encode_2sk_complete(Rank{16}, 4), RankOutOfRange);
}

TEST_CASE("worked 1-SkTGC ranks at n = 2") {
  CHECK(codec::decode_1sk(bits("11111"), 2).value == 5);
  CHECK_THROWS_AS(codec::decode_1sk(bits("00100"), 2), NotInCode);
  const Codeword w = codec::encode_1sk(Rank{15}, 2);
  CHECK(str(w) == "00010");
  CHECK(w.indexing() == Indexing::signed_range(2, 2));
}

TEST_CASE("1-SkTGC codec agrees with the materialized lists") {
  for (int n = 2; n <= 7; ++n) {
    const Code c = build_1sktgc(odd_base(), n - 1, OneSkVariant::kB);
    REQUIRE(c.size() == codec::odd_code_size(n));
    const auto idx = oracle::index_of(oracle::words(c));
    for (std::size_t i = 0; i < c.size(); ++i) {
      CHECK(codec::decode_1sk(c.word(i), n).value == i);
      CHECK(codec::encode_1sk(Rank{i}, n).to_string() == c.word_string(i));
    }
    // Everything else in the space is rejected.
    for (const auto& w : oracle::all_words(2, 2 * n + 1)) {
      if (idx.count(w)) continue;
      CHECK_THROWS_AS(codec::decode_1sk(bits(w), n), NotInCode);
    }
  }
}

TEST_CASE("1-SkTGC codec input validation") {
  CHECK_THROWS_AS(codec::decode_1sk(bits("111"), 1), InvalidLength);
  CHECK_THROWS_AS(codec::decode_1sk(bits("1111"), 2), InvalidLength);
  CHECK_THROWS_AS(codec::encode_1sk(Rank{16}, 2), RankOutOfRange);
}

TEST_CASE("codec work is linear in n") {
  std::mt19937_64 rng(7);
  for (int n = 8; n <= 60; n += 4) {
    std::uniform_int_distribution<std::uint64_t> pick(0, (std::uint64_t{1} << n) - 3);
    for (int t = 0; t < 20; ++t) {
      codec::OpCounter enc, dec;
      const Codeword w = codec::encode_2sk(Rank{pick(rng)}, n, &enc);
      codec::decode_2sk(w.symbols(), n, &dec);
      CHECK(enc.symbol_ops <= static_cast<std::uint64_t>(2 * n));
      CHECK(dec.symbol_ops <= static_cast<std::uint64_t>(2 * n));
    }
  }
  for (int n = 4; n <= 30; n += 2) {
    std::uniform_int_distribution<std::uint64_t> pick(0, codec::odd_code_size(n) - 1);
    for (int t = 0; t < 20; ++t) {
      codec::OpCounter enc, dec;
      const Codeword w = codec::encode_1sk(Rank{pick(rng)}, n, &enc);
      codec::decode_1sk(w.symbols(), n, &dec);
      CHECK(enc.symbol_ops <= static_cast<std::uint64_t>(2 * n + 1));
      // Decode, then the re-encode check.
      CHECK(dec.symbol_ops <= static_cast<std::uint64_t>(3 * (2 * n + 1)));
    }
  }
}

TEST_CASE("random ranks at large n round trip and neighbours differ in one bit") {
  std::mt19937_64 rng(2024);
  for (int n : {20, 30, 48, 63}) {
    const std::uint64_t size = (std::uint64_t{1} << n) - 2;
    std::uniform_int_distribution<std::uint64_t> pick(0, size - 1);
    for (int t = 0; t < 200; ++t) {
      const std::uint64_t r = pick(rng);
      const Codeword w = codec::encode_2sk(Rank{r}, n);
      CHECK(codec::decode_2sk(w.symbols(), n).value == r);
      const Codeword next = codec::encode_2sk(Rank{(r + 1) % size}, n);
      CHECK(diff(w, next).first == 1);
    }
  }
  for (int n : {20, 30}) {
    const std::uint64_t size = codec::odd_code_size(n);
    std::uniform_int_distribution<std::uint64_t> pick(0, size - 1);
    for (int t = 0; t < 200; ++t) {
      const std::uint64_t r = pick(rng);
      const Codeword w = codec::encode_1sk(Rank{r}, n);
      CHECK(codec::decode_1sk(w.symbols(), n).value == r);
      const Codeword next = codec::encode_1sk(Rank{(r + 1) % size}, n);
      const Codeword after = codec::encode_1sk(Rank{(r + 2) % size}, n);
      const auto d1 = diff(w, next), d2 = diff(next, after);
      CHECK(d1.first == 1);
      CHECK(d2.first == 1);
      CHECK(std::abs(d1.second - d2.second) <= 1);
    }
  }
}
