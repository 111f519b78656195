#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "sktgc/core.hpp"

namespace sktgc {

struct VerifyOptions {
  std::optional<int> expected_k;  // fail the skew check above this
  bool require_complete = false;  // otherwise completeness is informational
  unsigned jobs = 1;
};

struct Finding {
  bool pass = true;
  std::optional<std::size_t> index;  // first counterexample
  std::string detail;
};

struct VerificationReport {
  std::size_t size = 0;
  std::size_t length = 0;
  unsigned alphabet = 2;
  bool cyclic = false;

  Finding distinct;
  Finding gray;     // consecutive words differ by +-1 mod m in one position
  Finding closure;  // last-to-first step, only checked for cyclic codes
  Finding skew;     // k_min <= expected_k
  Finding complete;

  // max |delta_i - delta_{i+1}| over consecutive transitions (cyclically for
  // cyclic codes); unset when the Gray check fails.
  std::optional<int> k_min;
  std::map<int, std::uint64_t> jump_histogram;
  std::uint64_t size2_jumps = 0;
  RateMetrics metrics;

  // Distinct, Gray, closure and skew; completeness only when required.
  bool require_complete = false;
  bool passed() const;

  // Line-oriented key=value text.
  std::string to_text() const;
  std::string to_json() const;
};

VerificationReport verify(const Code& code, const VerifyOptions& options = {});

// Undirected edge multiset on positions 1..n; {a, b} stored with a <= b.
struct TransitionGraph {
  std::size_t vertices = 0;
  std::map<std::pair<int, int>, std::uint64_t> edges;

  bool has_edge(int a, int b) const;
  friend bool operator==(const TransitionGraph&, const TransitionGraph&) = default;
};

// Edges {delta_i, delta_{i+1}} over standard positions, wrapping if ts is
// cyclic. Throws PositionOutOfRange.
TransitionGraph induced_graph(const TransitionSequence& ts, std::size_t n);
TransitionGraph induced_graph(const std::vector<int>& positions, bool cyclic, std::size_t n);

// Whether g is a subgraph of the Toeplitz graph T_{k,n} (edges joining
// positions at distance <= k), with self-loops only if allowed.
bool compatible(const TransitionGraph& g, int k, std::size_t n, bool allow_self_loops);

// Edge set of T_{k,n} without self-loops, each edge with multiplicity 1.
TransitionGraph toeplitz_graph(int k, std::size_t n);

std::string to_dot(const TransitionGraph& g);

}  // namespace sktgc
