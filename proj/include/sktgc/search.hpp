#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "sktgc/binary.hpp"
#include "sktgc/core.hpp"

namespace sktgc {

struct SearchOptions {
  std::uint64_t node_budget = 1'000'000'000;
  unsigned jobs = 1;
  // Reachability bound on the remaining path length.
  bool bound_pruning = true;
  // Complete search only: restrict the first change to the left half of the
  // positions (the first word is always fixed to 0).
  bool symmetry_pruning = true;
  // Randomized successor order; the reported code does not depend on it
  // when the search is exhausted.
  std::optional<std::uint64_t> shuffle_seed;
  // Depth below the root at which subtrees are handed to workers.
  int split_depth = 6;
};

struct SearchResult {
  std::optional<Code> best;
  std::uint64_t best_size = 0;
  double constant = 0.0;  // (a_0 + (L-R+2)/3) / 2^{N0}; base search only
  std::uint64_t nodes = 0;
  bool exhausted = false;  // the whole space was searched

  // a0=<int> c=<decimal> exhausted=<bool> nodes=<int>
  std::string summary() const;
};

// Longest base case over Z_2^{n0} with the given L, R (n0 = L+R+1 <= 8).
// Among equally long codes the lexicographically smallest word sequence wins.
// Node counts are reproducible only with jobs = 1.
SearchResult search_base(int n0, int left, int right, const SearchOptions& options = {});

// A complete binary 1-SkTGC of length n (n <= 8), cyclic or not. The first
// code found in successor order is returned; exhausted with no code
// certifies that none exists.
SearchResult search_complete_1sktgc(int n, bool cyclic, const SearchOptions& options = {});

// Throws InvalidBase naming every violated condition.
BaseCase validate_base(const Code& code, int left, int right);

}  // namespace sktgc
