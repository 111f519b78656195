#include "sktgc/verifier.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <thread>
#include <vector>

#include <json.hpp>

namespace sktgc {

namespace {

constexpr int kNoStep = 0;

// Standard position (1..n) of the single +-1 change between two words, or
// kNoStep.
int gray_position(std::span<const Symbol> a, std::span<const Symbol> b, unsigned m) {
  int pos = kNoStep;
  for (std::size_t s = 0; s < a.size(); ++s) {
    if (a[s] == b[s]) continue;
    if (pos != kNoStep) return kNoStep;
    const unsigned up = (a[s] + 1u) % m;
    const unsigned down = (a[s] + m - 1u) % m;
    if (b[s] != up && b[s] != down) return kNoStep;
    pos = static_cast<int>(s) + 1;
  }
  return pos;
}

struct StepChunk {
  std::vector<int> positions;
  std::optional<std::size_t> bad;
};

// Step positions for word pairs (i, i+1 mod P) with i in [lo, hi).
StepChunk scan_steps(const Code& code, std::size_t lo, std::size_t hi) {
  StepChunk out;
  out.positions.reserve(hi - lo);
  const std::size_t p = code.size();
  for (std::size_t i = lo; i < hi; ++i) {
    const int pos = gray_position(code.word(i), code.word((i + 1) % p), code.alphabet());
    if (pos == kNoStep) {
      out.bad = i;
      return out;
    }
    out.positions.push_back(pos);
  }
  return out;
}

Finding check_distinct(const Code& code) {
  const std::size_t p = code.size();
  const std::uint64_t space = space_size(code.alphabet(), code.length());
  if (space != 0 && space <= kMaxMaterializedWords) {
    std::vector<std::uint32_t> seen(space, 0);  // 1 + first index
    for (std::size_t i = 0; i < p; ++i) {
      auto& slot = seen[word_value(code.word(i), code.alphabet())];
      if (slot) return {false, i, "repeats word " + std::to_string(slot - 1)};
      slot = static_cast<std::uint32_t>(i + 1);
    }
    return {};
  }
  std::vector<std::size_t> order(p);
  std::iota(order.begin(), order.end(), 0);
  auto less = [&](std::size_t x, std::size_t y) {
    auto a = code.word(x), b = code.word(y);
    if (std::equal(a.begin(), a.end(), b.begin())) return x < y;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  };
  std::sort(order.begin(), order.end(), less);
  std::optional<std::size_t> worst;
  std::size_t first = 0;
  for (std::size_t i = 1; i < p; ++i) {
    auto a = code.word(order[i - 1]), b = code.word(order[i]);
    if (std::equal(a.begin(), a.end(), b.begin())) {
      if (!worst || order[i] < *worst) {
        worst = order[i];
        first = order[i - 1];
      }
    }
  }
  if (worst) return {false, worst, "repeats word " + std::to_string(first)};
  return {};
}

void json_finding(nlohmann::ordered_json& j, const char* key, const Finding& f) {
  nlohmann::ordered_json o;
  o["pass"] = f.pass;
  if (f.index) o["index"] = *f.index;
  if (!f.detail.empty()) o["detail"] = f.detail;
  j[key] = o;
}

void text_finding(std::ostringstream& os, const char* key, const Finding& f) {
  os << key << '=' << (f.pass ? "pass" : "fail");
  if (f.index) os << " " << key << "_index=" << *f.index;
  if (!f.detail.empty()) os << " " << key << "_detail=\"" << f.detail << '"';
  os << '\n';
}

}  // namespace

bool VerificationReport::passed() const {
  return distinct.pass && gray.pass && closure.pass && skew.pass && (!require_complete || complete.pass);
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  os << "size=" << size << "\nlength=" << length << "\nm=" << alphabet << "\ncyclic=" << (cyclic ? 1 : 0) << '\n';
  text_finding(os, "distinct", distinct);
  text_finding(os, "gray", gray);
  text_finding(os, "closure", closure);
  text_finding(os, "skew", skew);
  text_finding(os, "complete", complete);
  os << "k_min=";
  if (k_min) os << *k_min; else os << "none";
  os << "\njumps=";
  bool first = true;
  for (auto [d, c] : jump_histogram) {
    os << (first ? "" : ",") << d << ':' << c;
    first = false;
  }
  os << "\nsize2_jumps=" << size2_jumps;
  os.precision(12);
  os << "\ndensity=" << metrics.density << "\nrate=" << metrics.rate;
  os << "\nresult=" << (passed() ? "pass" : "fail") << '\n';
  return os.str();
}

std::string VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["size"] = size;
  j["length"] = length;
  j["m"] = alphabet;
  j["cyclic"] = cyclic;
  json_finding(j, "distinct", distinct);
  json_finding(j, "gray", gray);
  json_finding(j, "closure", closure);
  json_finding(j, "skew", skew);
  json_finding(j, "complete", complete);
  j["k_min"] = k_min ? nlohmann::ordered_json(*k_min) : nlohmann::ordered_json(nullptr);
  nlohmann::ordered_json hist = nlohmann::ordered_json::object();
  for (auto [d, c] : jump_histogram) hist[std::to_string(d)] = c;
  j["jump_histogram"] = hist;
  j["size2_jumps"] = size2_jumps;
  j["density"] = metrics.density;
  j["rate"] = metrics.rate;
  j["pass"] = passed();
  return j.dump();
}

VerificationReport verify(const Code& code, const VerifyOptions& options) {
  VerificationReport r;
  r.size = code.size();
  r.length = code.length();
  r.alphabet = code.alphabet();
  r.cyclic = code.cyclic();
  r.require_complete = options.require_complete;
  const std::size_t p = code.size();
  if (p == 0) {
    r.distinct = {false, std::nullopt, "empty code"};
    r.gray = r.distinct;
    return r;
  }
  r.metrics = rate_metrics(code);
  r.distinct = check_distinct(code);

  const std::uint64_t space = space_size(code.alphabet(), code.length());
  const bool full = space != 0 && p == space;
  r.complete = full && r.distinct.pass
                   ? Finding{}
                   : Finding{false, std::nullopt, std::to_string(p) + " of " +
                                                      (space ? std::to_string(space) : std::string("> 2^64")) +
                                                      " words"};

  // Steps i -> i+1 for i < P-1, plus the wrap step for cyclic codes.
  const std::size_t inner = p - 1;
  const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(inner / 4096 + 1)));
  std::vector<StepChunk> chunks(jobs);
  {
    std::vector<std::thread> workers;
    for (unsigned t = 0; t < jobs; ++t) {
      const std::size_t lo = inner * t / jobs, hi = inner * (t + 1) / jobs;
      if (jobs == 1) {
        chunks[t] = scan_steps(code, lo, hi);
      } else {
        workers.emplace_back([&, t, lo, hi] { chunks[t] = scan_steps(code, lo, hi); });
      }
    }
    for (auto& w : workers) w.join();
  }
  std::vector<int> deltas;
  deltas.reserve(p);
  for (auto& c : chunks) {
    if (c.bad) {
      r.gray = {false, c.bad, "words " + std::to_string(*c.bad) + " and " + std::to_string(*c.bad + 1) +
                                  " are not one +-1 step apart"};
      break;
    }
    deltas.insert(deltas.end(), c.positions.begin(), c.positions.end());
  }
  if (code.cyclic() && r.gray.pass) {
    const int pos = p >= 2 ? gray_position(code.word(p - 1), code.word(0), code.alphabet()) : kNoStep;
    if (pos == kNoStep) {
      r.closure = {false, p - 1, "last word is not one +-1 step from the first"};
    } else {
      deltas.push_back(pos);
    }
  }
  if (!r.gray.pass || !r.closure.pass) {
    r.skew = {false, std::nullopt, "no valid transition sequence"};
    return r;
  }

  int k = 0;
  std::optional<std::size_t> first_over;
  const std::size_t pairs = code.cyclic() ? deltas.size() : deltas.size() > 0 ? deltas.size() - 1 : 0;
  for (std::size_t i = 0; i < pairs; ++i) {
    const int d = std::abs(deltas[i] - deltas[(i + 1) % deltas.size()]);
    ++r.jump_histogram[d];
    if (d == 2) ++r.size2_jumps;
    if (options.expected_k && d > *options.expected_k && !first_over) first_over = i;
    k = std::max(k, d);
  }
  r.k_min = k;
  if (first_over)
    r.skew = {false, first_over,
              "transitions " + std::to_string(*first_over) + " and " + std::to_string(*first_over + 1) +
                  " are more than " + std::to_string(*options.expected_k) + " apart"};
  return r;
}

bool TransitionGraph::has_edge(int a, int b) const {
  return edges.count({std::min(a, b), std::max(a, b)}) != 0;
}

TransitionGraph induced_graph(const std::vector<int>& positions, bool cyclic, std::size_t n) {
  TransitionGraph g;
  g.vertices = n;
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if (positions[i] < 1 || static_cast<std::size_t>(positions[i]) > n)
      throw PositionOutOfRange("transition " + std::to_string(i) + " at position " +
                               std::to_string(positions[i]) + " outside 1.." + std::to_string(n));
  }
  const std::size_t pairs = cyclic ? positions.size() : positions.empty() ? 0 : positions.size() - 1;
  for (std::size_t i = 0; i < pairs; ++i) {
    const int a = positions[i], b = positions[(i + 1) % positions.size()];
    ++g.edges[{std::min(a, b), std::max(a, b)}];
  }
  return g;
}

TransitionGraph induced_graph(const TransitionSequence& ts, std::size_t n) {
  return induced_graph(ts.standard_positions(), ts.cyclic, n);
}

bool compatible(const TransitionGraph& g, int k, std::size_t n, bool allow_self_loops) {
  for (const auto& [e, count] : g.edges) {
    (void)count;
    const auto [a, b] = e;
    if (a < 1 || static_cast<std::size_t>(b) > n) return false;
    if (a == b && !allow_self_loops) return false;
    if (b - a > k) return false;
  }
  return true;
}

TransitionGraph toeplitz_graph(int k, std::size_t n) {
  TransitionGraph g;
  g.vertices = n;
  for (int a = 1; a <= static_cast<int>(n); ++a)
    for (int b = a + 1; b <= std::min(static_cast<int>(n), a + k); ++b) g.edges[{a, b}] = 1;
  return g;
}

std::string to_dot(const TransitionGraph& g) {
  std::ostringstream os;
  os << "graph induced {\n";
  for (std::size_t v = 1; v <= g.vertices; ++v) os << "  " << v << ";\n";
  for (const auto& [e, count] : g.edges) os << "  " << e.first << " -- " << e.second << " [weight=" << count << "];\n";
  os << "}\n";
  return os.str();
}

}  // namespace sktgc
