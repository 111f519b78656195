#include "sktgc/binary.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "materialize.hpp"
#include "sktgc/listing.hpp"

namespace sktgc {

namespace {

using Words = std::vector<Symbol>;

using detail::require_materializable;

void append_word(Words& out, const Symbol* w, std::size_t n) { out.insert(out.end(), w, w + n); }

// [0 | 0], [A | 1], [reverse(A') | 0]: one new column on the right.
Words reflect_right(const Words& a, std::size_t n) {
  const std::size_t p = a.size() / n;
  Words out;
  out.reserve(2 * p * (n + 1));
  out.insert(out.end(), n + 1, Symbol{0});
  for (std::size_t i = 0; i < p; ++i) {
    append_word(out, a.data() + i * n, n);
    out.push_back(1);
  }
  for (std::size_t i = p; i-- > 1;) {
    append_word(out, a.data() + i * n, n);
    out.push_back(0);
  }
  return out;
}

// Four blocks around A with a new column on each side:
// [0|0|0], [0|A|1], [1|rev A|1], [1|A|0], [0|rev A'|0].
Words wrap_four_blocks(const Words& a, std::size_t n) {
  const std::size_t p = a.size() / n;
  Words out;
  out.reserve(4 * p * (n + 2));
  auto emit = [&](Symbol left, std::size_t i, Symbol right) {
    out.push_back(left);
    append_word(out, a.data() + i * n, n);
    out.push_back(right);
  };
  out.insert(out.end(), n + 2, Symbol{0});
  for (std::size_t i = 0; i < p; ++i) emit(0, i, 1);
  for (std::size_t i = p; i-- > 0;) emit(1, i, 1);
  for (std::size_t i = 0; i < p; ++i) emit(1, i, 0);
  for (std::size_t i = p; i-- > 1;) emit(0, i, 0);
  return out;
}

Words from_rows(std::initializer_list<const char*> rows) {
  Words out;
  for (const char* r : rows)
    for (const char* c = r; *c; ++c) out.push_back(static_cast<Symbol>(*c - '0'));
  return out;
}

// Two-sided power of four times a rational with denominator 3, exactly.
std::uint64_t closed_form_1sk(std::int64_t base_size, std::int64_t d, int steps) {
  __int128 four = 1;
  for (int i = 0; i < steps; ++i) four *= 4;
  const __int128 num = four * (3 * base_size + d) - 4 * d;
  if (num % 3 != 0 || num < 0) throw InvalidParameters("closed form is not a non-negative integer");
  const __int128 v = num / 3;
  if (v > static_cast<__int128>(UINT64_MAX)) throw InvalidParameters("size overflows 64 bits");
  return static_cast<std::uint64_t>(v);
}

}  // namespace

Code build_3sktgc(int n) {
  if (n < 1) throw InvalidLength("3-SkTGC needs n >= 1");
  require_materializable(predicted_size_3sk(n));
  Words a = {0, 1};
  for (int len = 1; len < n; ++len) a = reflect_right(a, static_cast<std::size_t>(len));
  return Code(static_cast<std::size_t>(n), 2, true, Indexing::standard(), std::move(a));
}

Code build_2sktgc(int n, TwoSkVariant variant) {
  const int min_n = variant == TwoSkVariant::kA ? 3 : 4;
  if (n < min_n)
    throw InvalidLength("2-SkTGC variant needs n >= " + std::to_string(min_n) + ", got " + std::to_string(n));
  require_materializable(predicted_size_2sk(n, variant));

  Words a = from_rows({"000", "001", "011", "111", "110", "100", "101"});
  const int last_a = variant == TwoSkVariant::kA ? n : n - 1;
  for (int len = 3; len < last_a; ++len) {
    const auto k = static_cast<std::size_t>(len);
    Words b = reflect_right(a, k);
    b.resize(b.size() - (k + 1));  // B*_{k+1}
    // e_{k-1} and e_{k-1} + e_{k+1}, 1-based positions, length k+1.
    Words extra(2 * (k + 1), 0);
    extra[k - 2] = 1;
    extra[(k + 1) + (k - 2)] = 1;
    extra[(k + 1) + k] = 1;
    b.insert(b.end(), extra.begin(), extra.end());
    a = std::move(b);
  }
  if (variant == TwoSkVariant::kA)
    return Code(static_cast<std::size_t>(n), 2, false, Indexing::standard(), std::move(a));

  const auto k = static_cast<std::size_t>(n);
  Words b = reflect_right(a, k - 1);
  if (variant == TwoSkVariant::kB) return Code(k, 2, true, Indexing::standard(), std::move(b));

  // C_n = [0, e_{n-2}, e_{n-2} + e_n, B'_n].
  Words c(3 * k, 0);
  c[k + (k - 3)] = 1;
  c[2 * k + (k - 3)] = 1;
  c[2 * k + (k - 1)] = 1;
  c.insert(c.end(), b.begin() + static_cast<std::ptrdiff_t>(k), b.end());
  return Code(k, 2, true, Indexing::standard(), std::move(c));
}

std::vector<BaseViolation> check_base_conditions(const Code& code, int left, int right) {
  using C = BaseViolation::Condition;
  std::vector<BaseViolation> out;
  if (left < 1 || right < 1) {
    out.push_back({C::kShape, "L and R must be at least 1"});
    return out;
  }
  const auto n = static_cast<std::size_t>(left + right + 1);
  if (code.alphabet() != 2) out.push_back({C::kShape, "alphabet is not binary"});
  if (code.length() != n)
    out.push_back({C::kShape, "length " + std::to_string(code.length()) + " != L+R+1 = " + std::to_string(n)});
  if (code.size() < 2) out.push_back({C::kShape, "fewer than two words"});
  if (!out.empty()) return out;

  const Indexing ix = Indexing::signed_range(left, right);
  const std::size_t p = code.size();

  // Transition positions (signed); a step that is not a single flip ends the scan.
  std::vector<int> delta;
  delta.reserve(p - 1);
  for (std::size_t i = 0; i + 1 < p; ++i) {
    auto a = code.word(i);
    auto b = code.word(i + 1);
    int changed = -1, count = 0;
    for (std::size_t s = 0; s < n; ++s)
      if (a[s] != b[s]) {
        changed = static_cast<int>(s);
        ++count;
      }
    if (count != 1) {
      out.push_back({C::kNotSkewTolerant, "words " + std::to_string(i) + " and " + std::to_string(i + 1) +
                                              " differ in " + std::to_string(count) + " positions"});
      delta.clear();
      break;
    }
    delta.push_back(ix.position(static_cast<std::size_t>(changed)));
  }
  if (!delta.empty()) {
    for (std::size_t i = 0; i + 1 < delta.size(); ++i)
      if (std::abs(delta[i] - delta[i + 1]) > 1) {
        out.push_back({C::kNotSkewTolerant, "transitions " + std::to_string(i) + "," + std::to_string(i + 1) +
                                                " at positions " + std::to_string(delta[i]) + "," +
                                                std::to_string(delta[i + 1])});
        break;
      }
    if (delta.front() != right)
      out.push_back({C::kFirstChange, "first change at " + std::to_string(delta.front())});
    if (delta.back() != -left)
      out.push_back({C::kLastChange, "last change at " + std::to_string(delta.back())});
  }

  {
    std::vector<std::uint64_t> values(p);
    for (std::size_t i = 0; i < p; ++i) values[i] = word_value(code.word(i), 2);
    std::vector<std::uint64_t> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    if (auto it = std::adjacent_find(sorted.begin(), sorted.end()); it != sorted.end()) {
      const auto at = static_cast<std::size_t>(std::find(values.begin(), values.end(), *it) - values.begin());
      out.push_back({C::kRepeatedWord, code.word_string(at)});
    }
  }

  // Staircase 0, e_R, e_{R-1}+e_R, ..., sum_{i=0}^R e_i.
  {
    std::vector<Symbol> expect(n, 0);
    const std::size_t stairs = static_cast<std::size_t>(right) + 2;
    for (std::size_t i = 0; i < stairs; ++i) {
      if (i > 0) expect[ix.slot(right - static_cast<int>(i) + 1)] = 1;
      if (i >= p || !std::equal(expect.begin(), expect.end(), code.word(i).begin())) {
        out.push_back({C::kStaircase, "word " + std::to_string(i) +
                                          (i < p ? " is " + code.word_string(i) : std::string(" missing"))});
        break;
      }
    }
  }

  // sum_{i=1}^j e_{-i} + sum_{i=1}^R e_i must be absent, 1 <= j <= L.
  {
    std::vector<Symbol> w(n, 0);
    for (int i = 1; i <= right; ++i) w[ix.slot(i)] = 1;
    for (int j = 1; j <= left; ++j) {
      w[ix.slot(-j)] = 1;
      for (std::size_t i = 0; i < p; ++i)
        if (std::equal(w.begin(), w.end(), code.word(i).begin())) {
          out.push_back({C::kForbiddenWord, code.word_string(i) + " at index " + std::to_string(i)});
          break;
        }
    }
  }
  return out;
}

Code build_1sktgc(const BaseCase& base, int steps, OneSkVariant variant) {
  if (steps < 0) throw InvalidParameters("steps must be non-negative");
  if (variant == OneSkVariant::kB && steps < 1) throw InvalidParameters("variant B needs steps >= 1");
  if (auto bad = check_base_conditions(base.code, base.left, base.right); !bad.empty())
    throw InvalidBase(std::move(bad));
  require_materializable(predicted_size_1sk(base.left, base.right, base.size(), steps, variant));

  const int left = base.left, right = base.right;
  auto sym = base.code.symbols();
  Words a(sym.begin(), sym.end());
  std::size_t n = base.code.length();

  for (int s = 0; s < steps; ++s) {
    Words b = wrap_four_blocks(a, n);
    n += 2;
    const Indexing ix = Indexing::signed_range(left + s + 1, right + s + 1);
    if (variant == OneSkVariant::kB && s + 1 == steps) return Code(n, 2, true, ix, std::move(b));

    // Drop the trailing R+s-1 staircase words, then walk the ones leftwards:
    // sum_{i=1}^j e_{-i} + sum_{i=1}^{R+s} e_i for j = 1..L+s+1.
    const auto drop = static_cast<std::size_t>(right + s - 1);
    b.resize(b.size() - drop * n);
    std::vector<Symbol> w(n, 0);
    for (int i = 1; i <= right + s; ++i) w[ix.slot(i)] = 1;
    for (int j = 1; j <= left + s + 1; ++j) {
      w[ix.slot(-j)] = 1;
      b.insert(b.end(), w.begin(), w.end());
    }
    a = std::move(b);
  }
  return Code(n, 2, false, Indexing::signed_range(left + steps, right + steps), std::move(a));
}

const BaseCase& odd_base() {
  static const BaseCase base{
      1, 1, Code(3, 2, false, Indexing::signed_range(1, 1), from_rows({"000", "001", "011", "111"}))};
  return base;
}

const BaseCase& even_base() {
  static const BaseCase base{
      2, 1,
      Code(4, 2, false, Indexing::signed_range(2, 1), from_rows({"0000", "0001", "0011", "0111", "1111"}))};
  return base;
}

std::uint64_t predicted_size_3sk(int n) {
  if (n < 1 || n > 63) throw InvalidParameters("3-SkTGC size defined for 1 <= n <= 63");
  return std::uint64_t{1} << n;
}

std::uint64_t predicted_size_2sk(int n, TwoSkVariant variant) {
  const int min_n = variant == TwoSkVariant::kA ? 3 : 4;
  if (n < min_n || n > 63) throw InvalidParameters("2-SkTGC size outside its parameter range");
  const std::uint64_t full = std::uint64_t{1} << n;
  switch (variant) {
    case TwoSkVariant::kA: return full - 1;
    case TwoSkVariant::kB: return full - 2;
    case TwoSkVariant::kC: return full;
  }
  return 0;
}

std::uint64_t predicted_size_1sk(int left, int right, std::uint64_t base_size, int steps,
                                 OneSkVariant variant) {
  if (left < 1 || right < 1 || steps < 0 || steps > 30)
    throw InvalidParameters("1-SkTGC size needs L, R >= 1 and 0 <= steps <= 30");
  const std::int64_t d = left - right + 2;
  const auto a0 = static_cast<std::int64_t>(base_size);
  if (variant == OneSkVariant::kA && steps == 0) return base_size;
  const std::uint64_t b = closed_form_1sk(a0, d, steps);
  if (variant == OneSkVariant::kB) return b;
  return static_cast<std::uint64_t>(static_cast<std::int64_t>(b) + d);
}

double base_constant(int left, int right, std::uint64_t base_size) {
  const double d = left - right + 2;
  return (static_cast<double>(base_size) + d / 3.0) / std::ldexp(1.0, left + right + 1);
}

}  // namespace sktgc
