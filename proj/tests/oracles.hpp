#pragma once

// Test-side reference implementations. They work on plain strings and share
// nothing with the library beyond the Code accessors used to read words out.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "sktgc/core.hpp"

namespace oracle {

inline std::vector<std::string> words(const sktgc::Code& c) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    std::string w;
    for (auto s : c.word(i)) w.push_back(static_cast<char>('0' + s));
    out.push_back(w);
  }
  return out;
}

// 1-based position of the single +-1 (mod m) change, or 0.
inline int step(const std::string& a, const std::string& b, int m) {
  int pos = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == b[i]) continue;
    if (pos) return 0;
    const int x = a[i] - '0', y = b[i] - '0';
    if ((x + 1) % m != y && (y + 1) % m != x) return 0;
    pos = static_cast<int>(i) + 1;
  }
  return pos;
}

// Transition positions, wrap step included for cyclic lists; empty on failure.
inline std::vector<int> positions(const std::vector<std::string>& w, int m, bool cyclic) {
  std::vector<int> out;
  const std::size_t steps = cyclic ? w.size() : w.size() - 1;
  for (std::size_t i = 0; i < steps; ++i) {
    const int p = step(w[i], w[(i + 1) % w.size()], m);
    if (!p) return {};
    out.push_back(p);
  }
  return out;
}

// Distinct words, valid steps, and consecutive changes at most k apart.
inline bool is_k_skew(const std::vector<std::string>& w, int m, bool cyclic, int k) {
  if (std::set<std::string>(w.begin(), w.end()).size() != w.size()) return false;
  const auto p = positions(w, m, cyclic);
  if (p.empty() && w.size() > 1) return false;
  const std::size_t pairs = cyclic ? p.size() : p.size() - 1;
  for (std::size_t i = 0; i < pairs; ++i)
    if (std::abs(p[i] - p[(i + 1) % p.size()]) > k) return false;
  return true;
}

inline int max_jump(const std::vector<int>& p, bool cyclic) {
  int k = 0;
  const std::size_t pairs = cyclic ? p.size() : p.size() - 1;
  for (std::size_t i = 0; i < pairs; ++i) k = std::max(k, std::abs(p[i] - p[(i + 1) % p.size()]));
  return k;
}

// Every word of Z_m^n, in odometer order.
inline std::vector<std::string> all_words(int m, int n) {
  std::vector<std::string> out;
  std::string w(static_cast<std::size_t>(n), '0');
  for (;;) {
    out.push_back(w);
    int i = n - 1;
    while (i >= 0 && w[static_cast<std::size_t>(i)] == '0' + m - 1) w[static_cast<std::size_t>(i--)] = '0';
    if (i < 0) return out;
    ++w[static_cast<std::size_t>(i)];
  }
}

inline bool is_complete(const std::vector<std::string>& w, int m, int n) {
  std::vector<std::string> sorted = w;
  std::sort(sorted.begin(), sorted.end());
  return sorted == all_words(m, n);
}

inline std::map<std::string, std::size_t> index_of(const std::vector<std::string>& w) {
  std::map<std::string, std::size_t> out;
  for (std::size_t i = 0; i < w.size(); ++i) out[w[i]] = i;
  return out;
}

// Sizes of the doubling recursion stepped one level at a time: B grows as four
// copies of the previous A, and A then drops R+s-1 words and gains L+s+1.
inline std::uint64_t recursion_size(int left, int right, std::uint64_t a0, int steps, bool cyclic_b) {
  std::int64_t a = static_cast<std::int64_t>(a0), b = 0;
  for (int s = 1; s <= steps; ++s) {
    b = 4 * a;
    a = b - (right + s - 1) + (left + s + 1);
  }
  return static_cast<std::uint64_t>(cyclic_b ? b : a);
}

// sum_{i in ones} e_i as a string over standard positions 1..n.
inline std::string unit_sum(int n, std::initializer_list<int> ones) {
  std::string w(static_cast<std::size_t>(n), '0');
  for (int i : ones) w[static_cast<std::size_t>(i - 1)] = '1';
  return w;
}

}  // namespace oracle
