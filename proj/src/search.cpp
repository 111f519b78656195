#include "sktgc/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <iomanip>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>
#include <vector>

namespace sktgc {

namespace {

// Words are held as their value, leftmost slot most significant, so that
// comparing integers compares words lexicographically.
using Word = std::uint32_t;
using Path = std::vector<Word>;

constexpr int kAnySlot = -1;
constexpr std::uint64_t kFlushEvery = 1024;
constexpr int kBoundInterval = 3;

struct Problem {
  int n = 0;
  Path prefix;               // planted opening words
  int prefix_slot = kAnySlot;  // slot of the last planted change
  std::vector<Word> forbidden;
  bool complete = false;
  bool cyclic = false;
  int end_slot = 0;          // base search: last change must be in this slot
  int first_slot_limit = 0;  // complete search: first change in slots [0, limit]
};

Word flip(Word w, int slot, int n) { return w ^ (Word{1} << (n - 1 - slot)); }

bool lex_less(const Path& a, const Path& b) { return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end()); }

// Longer wins, then lexicographically smaller.
bool better(const Path& a, const Path& b) {
  if (a.size() != b.size()) return a.size() > b.size();
  return lex_less(a, b);
}

struct Shared {
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> out_of_budget{false};
  std::atomic<std::size_t> best_len{0};
  std::atomic<std::size_t> found_task{SIZE_MAX};  // complete search
  std::uint64_t budget = 0;
};

class Worker {
 public:
  Worker(const Problem& pb, const SearchOptions& opt, Shared& shared, std::uint64_t seed)
      : pb_(pb), opt_(opt), shared_(shared), rng_(seed) {
    const std::size_t space = std::size_t{1} << pb.n;
    visited_.assign(space, 0);
    state_stamp_.assign(space * static_cast<std::size_t>(pb.n), 0);
    word_stamp_.assign(space, 0);
    for (Word f : pb.forbidden) visited_[f] = 1;
  }

  // Runs the subtree below `start`; returns false when the budget ran out.
  bool run(const Path& start, int slot) {
    for (Word w : start) visited_[w] = 1;
    path_ = start;
    const bool ok = dfs(slot);
    for (Word w : start) visited_[w] = 0;
    for (Word f : pb_.forbidden) visited_[f] = 1;
    flush();
    return ok;
  }

  // Consider `path` as a finished candidate.
  void offer(const Path& path) {
    if (!found_ || better(path, best_)) {
      best_ = path;
      found_ = true;
      std::size_t cur = shared_.best_len.load();
      while (path.size() > cur && !shared_.best_len.compare_exchange_weak(cur, path.size())) {
      }
    }
  }

  bool accepts(int slot) const {
    if (!pb_.complete) return slot == pb_.end_slot;
    if (path_.size() != (std::size_t{1} << pb_.n)) return false;
    if (!pb_.cyclic) return true;
    // The wrap step back to the first word must also be adjacent.
    const Word diff = path_.back() ^ path_.front();
    if (std::popcount(diff) != 1) return false;
    const int wrap = pb_.n - 1 - std::countr_zero(diff);
    const int first = pb_.n - 1 - std::countr_zero(path_[0] ^ path_[1]);
    return std::abs(wrap - slot) <= 1 && std::abs(wrap - first) <= 1;
  }

  bool found() const { return found_; }
  const Path& best() const { return best_; }

 private:
  void flush() {
    if (local_nodes_ == 0) return;
    const std::uint64_t total = shared_.nodes.fetch_add(local_nodes_) + local_nodes_;
    local_nodes_ = 0;
    if (total > shared_.budget) shared_.out_of_budget = true;
  }

  // Unvisited words reachable from (w, slot) through legal moves.
  std::size_t reach(Word w, int slot) {
    ++stamp_;
    std::size_t count = 0;
    stack_.clear();
    auto push = [&](Word x, int s) {
      auto& st = state_stamp_[static_cast<std::size_t>(x) * static_cast<std::size_t>(pb_.n) + static_cast<std::size_t>(s)];
      if (st == stamp_) return;
      st = stamp_;
      if (word_stamp_[x] != stamp_) {
        word_stamp_[x] = stamp_;
        ++count;
      }
      stack_.push_back({x, s});
    };
    auto expand = [&](Word x, int s) {
      for (int d : {-1, 1}) {
        const int ns = s + d;
        if (ns < 0 || ns >= pb_.n) continue;
        const Word y = flip(x, ns, pb_.n);
        if (!visited_[y]) push(y, ns);
      }
    };
    if (slot == kAnySlot) {
      for (int s = 0; s < pb_.n; ++s) {
        const Word y = flip(w, s, pb_.n);
        if (!visited_[y]) push(y, s);
      }
    } else {
      expand(w, slot);
    }
    while (!stack_.empty()) {
      auto [x, s] = stack_.back();
      stack_.pop_back();
      expand(x, s);
    }
    return count;
  }

  bool dfs(int slot) {
    if (++local_nodes_ >= kFlushEvery) flush();
    if (shared_.out_of_budget) return false;
    if (path_.size() >= 2 && accepts(slot)) {
      offer(path_);
      if (pb_.complete) return true;
    }
    const std::size_t remaining = (std::size_t{1} << pb_.n) - path_.size();
    if (opt_.bound_pruning && remaining > 0 && path_.size() % kBoundInterval == 0) {
      const std::size_t r = reach(path_.back(), slot);
      if (pb_.complete) {
        if (r < remaining - pb_.forbidden.size()) return true;
      } else if (path_.size() + r < std::max(shared_.best_len.load(), found_ ? best_.size() : 0)) {
        return true;
      }
    }

    int slots[16];
    int count = 0;
    if (slot == kAnySlot) {
      const int limit = pb_.complete ? pb_.first_slot_limit : pb_.n - 1;
      for (int s = 0; s <= limit; ++s) slots[count++] = s;
    } else {
      for (int d : {-1, 1})
        if (slot + d >= 0 && slot + d < pb_.n) slots[count++] = slot + d;
    }
    const Word w = path_.back();
    std::sort(slots, slots + count, [&](int a, int b) { return flip(w, a, pb_.n) < flip(w, b, pb_.n); });
    if (opt_.shuffle_seed) std::shuffle(slots, slots + count, rng_);

    for (int i = 0; i < count; ++i) {
      const Word y = flip(w, slots[i], pb_.n);
      if (visited_[y]) continue;
      visited_[y] = 1;
      path_.push_back(y);
      const bool ok = dfs(slots[i]);
      path_.pop_back();
      visited_[y] = 0;
      if (!ok) return false;
      if (pb_.complete && found_) return true;
    }
    return true;
  }

  const Problem& pb_;
  const SearchOptions& opt_;
  Shared& shared_;
  std::mt19937_64 rng_;

  std::vector<std::uint8_t> visited_;
  std::vector<std::uint32_t> state_stamp_;
  std::vector<std::uint32_t> word_stamp_;
  std::uint32_t stamp_ = 0;
  std::vector<std::pair<Word, int>> stack_;
  Path path_;
  Path best_;
  bool found_ = false;
  std::uint64_t local_nodes_ = 0;
};

struct Task {
  Path path;
  int slot;
};

// Prefixes `depth` moves below the planted root, in successor order. Paths
// that already finish above that depth are offered to `root`.
void collect_tasks(const Problem& pb, int depth, Path& path, int slot, std::vector<std::uint8_t>& visited,
                   Worker& root, std::vector<Task>& out) {
  if (depth == 0) {
    out.push_back({path, slot});
    return;
  }
  if (!pb.complete && path.size() >= 2 && slot == pb.end_slot) root.offer(path);
  int slots[16];
  int count = 0;
  if (slot == kAnySlot) {
    const int limit = pb.complete ? pb.first_slot_limit : pb.n - 1;
    for (int s = 0; s <= limit; ++s) slots[count++] = s;
  } else {
    for (int d : {-1, 1})
      if (slot + d >= 0 && slot + d < pb.n) slots[count++] = slot + d;
  }
  const Word w = path.back();
  std::sort(slots, slots + count, [&](int a, int b) { return flip(w, a, pb.n) < flip(w, b, pb.n); });
  bool leaf = true;
  for (int i = 0; i < count; ++i) {
    const Word y = flip(w, slots[i], pb.n);
    if (visited[y]) continue;
    leaf = false;
    visited[y] = 1;
    path.push_back(y);
    collect_tasks(pb, depth - 1, path, slots[i], visited, root, out);
    path.pop_back();
    visited[y] = 0;
  }
  // A dead end above the split depth may itself be a complete code.
  if (leaf && pb.complete) out.push_back({path, slot});
}

struct Outcome {
  std::optional<Path> best;
  std::uint64_t nodes = 0;
  bool out_of_budget = false;
  bool stopped_early = false;
};

Outcome solve(const Problem& pb, const SearchOptions& opt) {
  Shared shared;
  shared.budget = opt.node_budget;
  const std::uint64_t seed = opt.shuffle_seed.value_or(0);

  Worker root(pb, opt, shared, seed);
  std::vector<std::uint8_t> visited(std::size_t{1} << pb.n, 0);
  for (Word f : pb.forbidden) visited[f] = 1;
  for (Word w : pb.prefix) visited[w] = 1;
  Path path = pb.prefix;
  std::vector<Task> tasks;
  collect_tasks(pb, std::max(0, opt.split_depth), path, pb.prefix_slot, visited, root, tasks);

  const unsigned jobs = std::max(1u, std::min<unsigned>(opt.jobs, static_cast<unsigned>(tasks.size())));
  std::atomic<std::size_t> next{0};
  std::vector<std::optional<Path>> per_task(tasks.size());
  std::mutex merge;
  std::optional<Path> best;
  if (root.found()) best = root.best();

  auto work = [&](unsigned id) {
    for (;;) {
      const std::size_t t = next.fetch_add(1);
      if (t >= tasks.size() || shared.out_of_budget) return;
      if (pb.complete && t > shared.found_task.load()) return;
      Worker w(pb, opt, shared, seed + id * 0x9e3779b97f4a7c15ull + t);
      w.run(tasks[t].path, tasks[t].slot);
      if (!w.found()) continue;
      if (pb.complete) {
        per_task[t] = w.best();
        std::size_t cur = shared.found_task.load();
        while (t < cur && !shared.found_task.compare_exchange_weak(cur, t)) {
        }
      } else {
        std::lock_guard<std::mutex> lock(merge);
        if (!best || better(w.best(), *best)) best = w.best();
      }
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < jobs; ++id) pool.emplace_back(work, id);
    for (auto& th : pool) th.join();
  }

  Outcome out;
  out.nodes = shared.nodes.load() + tasks.size();
  out.out_of_budget = shared.out_of_budget.load();
  if (pb.complete) {
    const std::size_t t = shared.found_task.load();
    if (t != SIZE_MAX) {
      out.best = per_task[t];
      out.stopped_early = true;
      // A lower task that ran out of budget could still hold an earlier code.
      out.out_of_budget = false;
    }
  } else {
    out.best = best;
  }
  return out;
}

Code to_code(const Path& path, int n, bool cyclic, Indexing indexing) {
  std::vector<Symbol> symbols;
  symbols.reserve(path.size() * static_cast<std::size_t>(n));
  for (Word w : path)
    for (int s = 0; s < n; ++s) symbols.push_back(static_cast<Symbol>((w >> (n - 1 - s)) & 1u));
  return Code(static_cast<std::size_t>(n), 2, cyclic, indexing, std::move(symbols));
}

}  // namespace

std::string SearchResult::summary() const {
  std::ostringstream os;
  os << "a0=" << best_size << " c=" << std::fixed << std::setprecision(9) << constant
     << " exhausted=" << (exhausted ? "true" : "false") << " nodes=" << nodes;
  return os.str();
}

SearchResult search_base(int n0, int left, int right, const SearchOptions& options) {
  if (left < 1 || right < 1) throw InvalidParameters("L and R must be at least 1");
  if (n0 != left + right + 1) throw InvalidParameters("n0 must equal L + R + 1");
  if (n0 > 8) throw InvalidParameters("base search supports n0 <= 8");

  Problem pb;
  pb.n = n0;
  pb.end_slot = 0;  // position -L
  // Staircase 0, e_R, e_{R-1}+e_R, ..., sum_{i=0}^{R} e_i: slots n0-1 down to L.
  Word w = 0;
  pb.prefix.push_back(w);
  for (int slot = n0 - 1; slot >= left; --slot) {
    w = flip(w, slot, n0);
    pb.prefix.push_back(w);
    pb.prefix_slot = slot;
  }
  // sum_{i=1}^{j} e_{-i} + sum_{i=1}^{R} e_i for j = 1..L.
  Word f = 0;
  for (int slot = left + 1; slot < n0; ++slot) f = flip(f, slot, n0);
  for (int j = 1; j <= left; ++j) {
    f = flip(f, left - j, n0);
    pb.forbidden.push_back(f);
  }

  const Outcome out = solve(pb, options);
  SearchResult r;
  r.nodes = out.nodes;
  r.exhausted = !out.out_of_budget;
  if (out.best) {
    r.best = to_code(*out.best, n0, false, Indexing::signed_range(left, right));
    r.best_size = out.best->size();
    r.constant = base_constant(left, right, r.best_size);
  }
  return r;
}

SearchResult search_complete_1sktgc(int n, bool cyclic, const SearchOptions& options) {
  if (n < 1 || n > 8) throw InvalidParameters("complete search supports 1 <= n <= 8");
  SearchResult r;
  if (n == 1) {
    // [0; 1] is trivially complete, cyclic or not.
    r.best = Code::from_strings({"0", "1"}, 2, cyclic);
    r.best_size = 2;
    r.nodes = 1;
    return r;
  }
  Problem pb;
  pb.n = n;
  pb.complete = true;
  pb.cyclic = cyclic;
  pb.prefix = {0};
  pb.prefix_slot = kAnySlot;
  // Any complete code can be translated to start at 0, so that is always
  // fixed; mirroring the positions moves the first change to the left half.
  pb.first_slot_limit = options.symmetry_pruning ? (n - 1) / 2 : n - 1;

  const Outcome out = solve(pb, options);
  r.nodes = out.nodes;
  r.exhausted = !out.out_of_budget && !out.stopped_early;
  if (out.best) {
    r.best = to_code(*out.best, n, cyclic, Indexing::standard());
    r.best_size = out.best->size();
  }
  return r;
}

BaseCase validate_base(const Code& code, int left, int right) {
  auto violations = check_base_conditions(code, left, right);
  if (!violations.empty()) throw InvalidBase(std::move(violations));
  return BaseCase{left, right, code.with_indexing(Indexing::signed_range(left, right)).with_cyclic(false)};
}

}  // namespace sktgc
