#include <doctest.h>

#include "oracles.hpp"
#include "sktgc/binary.hpp"

using namespace sktgc;

TEST_CASE("3-SkTGC is complete, cyclic and 3-skew for small n") {
  for (int n = 1; n <= 10; ++n) {
    const Code c = build_3sktgc(n);
    const auto w = oracle::words(c);
    CHECK(c.cyclic());
    CHECK(c.size() == predicted_size_3sk(n));
    CHECK(oracle::is_complete(w, 2, n));
    if (n >= 2) CHECK(oracle::is_k_skew(w, 2, true, 3));
  }
  CHECK(build_3sktgc(3).to_strings() ==
        std::vector<std::string>{"000", "001", "011", "111", "101", "100", "110", "010"});
}

TEST_CASE("2-SkTGC variants have the predicted sizes and tolerance") {
  for (int n = 3; n <= 12; ++n) {
    const Code a = build_2sktgc(n, TwoSkVariant::kA);
    CHECK(a.size() == (std::uint64_t{1} << n) - 1);
    CHECK_FALSE(a.cyclic());
    CHECK(oracle::is_k_skew(oracle::words(a), 2, false, 2));
    if (n < 4) continue;
    const Code b = build_2sktgc(n, TwoSkVariant::kB);
    const Code c = build_2sktgc(n, TwoSkVariant::kC);
    CHECK(b.size() == predicted_size_2sk(n, TwoSkVariant::kB));
    CHECK(b.size() == (std::uint64_t{1} << n) - 2);
    CHECK(c.size() == (std::uint64_t{1} << n));
    CHECK(oracle::is_k_skew(oracle::words(b), 2, true, 2));
    CHECK(oracle::is_k_skew(oracle::words(c), 2, true, 2));
    CHECK(oracle::is_complete(oracle::words(c), 2, n));
  }
}

TEST_CASE("2-SkTGC seed and the words B_n leaves out") {
  CHECK(build_2sktgc(3, TwoSkVariant::kA).to_strings() ==
        std::vector<std::string>{"000", "001", "011", "111", "110", "100", "101"});
  for (int n = 4; n <= 9; ++n) {
    const auto idx = oracle::index_of(oracle::words(build_2sktgc(n, TwoSkVariant::kB)));
    CHECK(idx.count(oracle::unit_sum(n, {n - 2})) == 0);
    CHECK(idx.count(oracle::unit_sum(n, {n - 2, n})) == 0);
  }
  CHECK_THROWS_AS(build_2sktgc(3, TwoSkVariant::kB), InvalidLength);
  CHECK_THROWS_AS(build_2sktgc(2, TwoSkVariant::kA), InvalidLength);
}

TEST_CASE("odd and even 1-SkTGC sizes follow the single-step recursion") {
  for (const BaseCase* base : {&odd_base(), &even_base()}) {
    for (int s = 1; s <= 5; ++s) {
      const Code b = build_1sktgc(*base, s, OneSkVariant::kB);
      const Code a = build_1sktgc(*base, s, OneSkVariant::kA);
      const bool cyc = true;
      CHECK(b.size() == oracle::recursion_size(base->left, base->right, base->size(), s, cyc));
      CHECK(a.size() == oracle::recursion_size(base->left, base->right, base->size(), s, false));
      CHECK(b.size() ==
            predicted_size_1sk(base->left, base->right, base->size(), s, OneSkVariant::kB));
      CHECK(a.size() ==
            predicted_size_1sk(base->left, base->right, base->size(), s, OneSkVariant::kA));
      CHECK(b.cyclic());
      CHECK_FALSE(a.cyclic());
      CHECK(b.length() == static_cast<std::size_t>(base->length() + 2 * s));
      CHECK(b.indexing() == Indexing::signed_range(base->left + s, base->right + s));
      if (b.size() <= 20000) {
        CHECK(oracle::is_k_skew(oracle::words(b), 2, true, 1));
        CHECK(oracle::is_k_skew(oracle::words(a), 2, false, 1));
      }
    }
  }
}

TEST_CASE("B_1 from the odd seed is the four-block wrap") {
  const Code b = build_1sktgc(odd_base(), 1, OneSkVariant::kB);
  CHECK(b.size() == 16);
  CHECK(b.word_string(0) == "00000");
  CHECK(b.word_string(1) == "00001");
}

TEST_CASE("bundled seeds satisfy every base condition") {
  for (int n0 : {6, 7}) {
    const BaseCase& base = bundled_base(n0);
    CHECK(base.length() == n0);
    CHECK(check_base_conditions(base.code, base.left, base.right).empty());
    CHECK(oracle::is_k_skew(oracle::words(base.code), 2, false, 1));
  }
  CHECK(bundled_base(6).size() == 47);
  CHECK(bundled_base(7).size() == 108);
  CHECK(base_constant(4, 1, 47) == doctest::Approx(0.760416667).epsilon(1e-9));
  CHECK(base_constant(3, 3, 108) == doctest::Approx(0.848958333).epsilon(1e-9));
  CHECK(check_base_conditions(odd_base().code, 1, 1).empty());
  CHECK(check_base_conditions(even_base().code, 2, 1).empty());
}

TEST_CASE("generalized recursion from the bundled seeds") {
  const BaseCase& base = bundled_base(7);
  for (int s = 1; s <= 3; ++s) {
    const Code b = build_1sktgc(base, s, OneSkVariant::kB);
    CHECK(b.size() == oracle::recursion_size(3, 3, 108, s, true));
    if (s <= 2) CHECK(oracle::is_k_skew(oracle::words(b), 2, true, 1));
  }
}

TEST_CASE("a seed that breaks the staircase is rejected") {
  // The 2-SkTGC seed read with positions -1..1 is not a valid 1-SkTGC base.
  const Code a3 = build_2sktgc(3, TwoSkVariant::kA).with_indexing(Indexing::signed_range(1, 1));
  CHECK_FALSE(check_base_conditions(a3, 1, 1).empty());
  CHECK_THROWS_AS(build_1sktgc(BaseCase{1, 1, a3}, 1, OneSkVariant::kB), InvalidBase);
  try {
    build_1sktgc(BaseCase{1, 1, a3}, 1, OneSkVariant::kB);
  } catch (const InvalidBase& e) {
    CHECK_FALSE(e.violations().empty());
    CHECK_FALSE(e.violations().front().witness.empty());
  }
}

TEST_CASE("base condition witnesses") {
  // The odd seed followed by the forbidden word e_{-1} + e_1.
  const Code bad = Code::from_strings({"000", "001", "011", "111", "101"}, 2, false, Indexing::signed_range(1, 1));
  const auto v = check_base_conditions(bad, 1, 1);
  REQUIRE_FALSE(v.empty());
  bool forbidden = false;
  for (const auto& x : v) forbidden |= x.condition == BaseViolation::Condition::kForbiddenWord;
  CHECK(forbidden);
  CHECK_THROWS_AS(build_1sktgc(odd_base(), 0, OneSkVariant::kB), InvalidParameters);
}
