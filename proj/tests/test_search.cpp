#include <doctest.h>

#include "oracles.hpp"
#include "sktgc/binary.hpp"
#include "sktgc/search.hpp"

using namespace sktgc;

namespace {

struct Row {
  int n0, left, right;
  std::uint64_t a0;
};

// Longest base cases per shape, from exhaustive search.
constexpr Row kRows[] = {
    {4, 2, 1, 11}, {4, 1, 2, 9},  {5, 3, 1, 18}, {5, 2, 2, 18}, {5, 1, 3, 24},
    {6, 4, 1, 47}, {6, 3, 2, 47}, {6, 2, 3, 45}, {6, 1, 4, 47},
};

}  // namespace

TEST_CASE("base search finds the optimal sizes") {
  for (const Row& row : kRows) {
    CAPTURE(row.n0);
    CAPTURE(row.left);
    const auto r = search_base(row.n0, row.left, row.right);
    CHECK(r.exhausted);
    CHECK(r.best_size == row.a0);
    REQUIRE(r.best);
    CHECK(r.best->size() == row.a0);
    CHECK(check_base_conditions(*r.best, row.left, row.right).empty());
    CHECK(oracle::is_k_skew(oracle::words(*r.best), 2, false, 1));
    CHECK(r.constant == doctest::Approx(base_constant(row.left, row.right, row.a0)));
  }
}

TEST_CASE("the n0 = 6 optimum is the bundled seed size") {
  const auto r = search_base(6, 4, 1);
  CHECK(r.best_size == bundled_base(6).size());
  CHECK(r.summary().rfind("a0=47 c=0.760416667 exhausted=true nodes=", 0) == 0);
}

TEST_CASE("search result does not depend on successor order or pruning") {
  const auto plain = search_base(5, 2, 2);
  for (std::uint64_t seed : {1u, 2u, 99u}) {
    const auto shuffled = search_base(5, 2, 2, {.shuffle_seed = seed});
    CHECK(shuffled.best_size == plain.best_size);
    CHECK(*shuffled.best == *plain.best);
  }
  const auto unbounded = search_base(5, 2, 2, {.bound_pruning = false});
  CHECK(unbounded.best_size == plain.best_size);
  CHECK(unbounded.nodes >= plain.nodes);
  const auto threaded = search_base(6, 2, 3, {.jobs = 4});
  CHECK(threaded.best_size == 45);
  CHECK(*threaded.best == *search_base(6, 2, 3).best);
}

TEST_CASE("budget exhaustion is reported") {
  const auto r = search_base(6, 4, 1, {.node_budget = 100});
  CHECK_FALSE(r.exhausted);
  CHECK(r.summary().find("exhausted=false") != std::string::npos);
}

TEST_CASE("complete binary 1-SkTGC existence") {
  struct Case {
    int n;
    bool cyclic, exists;
  };
  const Case cases[] = {{2, true, true},  {3, true, true},  {4, true, false}, {4, false, true},
                        {5, true, true},  {6, true, false}, {6, false, true}};
  for (const Case& c : cases) {
    CAPTURE(c.n);
    CAPTURE(c.cyclic);
    const auto r = search_complete_1sktgc(c.n, c.cyclic);
    CHECK(r.best.has_value() == c.exists);
    if (r.best) {
      CHECK(r.best->cyclic() == c.cyclic);
      CHECK(oracle::is_complete(oracle::words(*r.best), 2, c.n));
      CHECK(oracle::is_k_skew(oracle::words(*r.best), 2, c.cyclic, 1));
    } else {
      CHECK(r.exhausted);
    }
    const auto nosym = search_complete_1sktgc(c.n, c.cyclic, {.symmetry_pruning = false});
    CHECK(nosym.best.has_value() == c.exists);
    const auto shuffled = search_complete_1sktgc(c.n, c.cyclic, {.shuffle_seed = 5});
    CHECK(shuffled.best.has_value() == c.exists);
  }
}

TEST_CASE("search argument checks") {
  CHECK_THROWS_AS(search_base(5, 2, 1), InvalidParameters);
  CHECK_THROWS_AS(search_base(9, 4, 4), InvalidParameters);
  CHECK_THROWS_AS(search_complete_1sktgc(9, true), InvalidParameters);
}

TEST_CASE("validate_base") {
  CHECK(validate_base(bundled_base(7).code, 3, 3).size() == 108);
  CHECK_THROWS_AS(validate_base(build_2sktgc(3, TwoSkVariant::kA), 1, 1), InvalidBase);
}
