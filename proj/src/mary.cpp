#include "sktgc/mary.hpp"

#include <string>

#include "materialize.hpp"
#include "sktgc/binary.hpp"

namespace sktgc {

namespace {

using Words = std::vector<Symbol>;

void append_row(Words& out, const Symbol* w, std::size_t n, Symbol last) {
  out.insert(out.end(), w, w + n);
  out.push_back(last);
}

}  // namespace

Symbol pair_map(Symbol hi, Symbol lo) {
  if (hi > 1 || lo > 1) throw InvalidAlphabet("pair map takes two bits");
  static constexpr Symbol table[2][2] = {{0, 1}, {3, 2}};
  return table[hi][lo];
}

std::array<Symbol, 2> pair_map_inverse(Symbol q) {
  static constexpr std::array<std::array<Symbol, 2>, 4> table = {{{0, 0}, {0, 1}, {1, 1}, {1, 0}}};
  if (q > 3) throw InvalidAlphabet("pair map inverse takes a symbol of Z_4");
  return table[q];
}

Code apply_pair_map(const Code& binary) {
  if (binary.alphabet() != 2) throw InvalidAlphabet("pair map needs a binary code");
  if (binary.length() % 2 != 0) throw InvalidLength("pair map needs even length");
  const std::size_t half = binary.length() / 2;
  Words out;
  out.reserve(binary.size() * half);
  const auto sym = binary.symbols();
  for (std::size_t i = 0; i < sym.size(); i += 2) out.push_back(pair_map(sym[i], sym[i + 1]));
  return Code(half, 4, binary.cyclic(), Indexing::standard(), std::move(out));
}

Code build_mary_large(unsigned m, int n) {
  if (m < 5) throw InvalidAlphabet("this construction needs m >= 5");
  if (n < 1) throw InvalidLength("m-ary code needs n >= 1");
  detail::require_materializable(space_size(m, static_cast<std::size_t>(n)));

  Words a;
  for (unsigned v = 0; v < m; ++v) a.push_back(static_cast<Symbol>(v));
  for (std::size_t len = 1; len < static_cast<std::size_t>(n); ++len) {
    const std::size_t p = a.size() / len;
    const Symbol* first = a.data();
    Words next;
    next.reserve(p * m * (len + 1));
    for (unsigned v = m - 2; v-- > 0;) append_row(next, first, len, static_cast<Symbol>(v));
    for (unsigned v = 0; v < m; ++v) {
      // A'_n for even v, its reverse for odd v.
      if (v % 2 == 0) {
        for (std::size_t i = 1; i < p; ++i) append_row(next, a.data() + i * len, len, static_cast<Symbol>(v));
      } else {
        for (std::size_t i = p; i-- > 1;) append_row(next, a.data() + i * len, len, static_cast<Symbol>(v));
      }
    }
    append_row(next, first, len, static_cast<Symbol>(m - 1));
    append_row(next, first, len, static_cast<Symbol>(m - 2));
    a = std::move(next);
  }
  return Code(static_cast<std::size_t>(n), m, true, Indexing::standard(), std::move(a));
}

Code build_quaternary(int n) {
  if (n < 1) throw InvalidLength("quaternary code needs n >= 1");
  if (n == 1) return apply_pair_map(Code::from_strings({"00", "01", "11", "10"}, 2, true));
  return apply_pair_map(build_2sktgc(2 * n, TwoSkVariant::kC));
}

Code build_ternary(int n, bool cyclic) {
  const int min_n = cyclic ? 3 : 2;
  if (n < min_n) throw InvalidLength("ternary code needs n >= " + std::to_string(min_n));
  detail::require_materializable(space_size(3, static_cast<std::size_t>(n)));

  Words a = {0, 0, 0, 1, 0, 2, 2, 2, 2, 0, 2, 1, 1, 1, 1, 2, 1, 0};
  const int last_a = cyclic ? n - 1 : n;
  for (std::size_t len = 2; len < static_cast<std::size_t>(last_a); ++len) {
    const std::size_t p = a.size() / len;
    const Symbol* c = a.data();
    const Symbol* d = a.data() + (p - 1) * len;
    Words next;
    next.reserve(3 * p * (len + 1));
    for (Symbol v : {0, 2, 1}) append_row(next, c, len, v);
    for (std::size_t i = 1; i + 1 < p; ++i) append_row(next, a.data() + i * len, len, 1);
    for (std::size_t i = p - 1; i-- > 1;) append_row(next, a.data() + i * len, len, 0);
    for (std::size_t i = 1; i + 1 < p; ++i) append_row(next, a.data() + i * len, len, 2);
    for (Symbol v : {2, 1, 0}) append_row(next, d, len, v);
    a = std::move(next);
  }
  const auto len = static_cast<std::size_t>(last_a);
  if (!cyclic) return Code(len, 3, false, Indexing::standard(), std::move(a));

  // Three copies of A_{n-1}, shifted by 0, e_1, 2e_1, tagged by a last column.
  const std::size_t p = a.size() / len;
  Words b;
  b.reserve(3 * p * (len + 1));
  for (Symbol shift = 0; shift < 3; ++shift) {
    for (std::size_t i = 0; i < p; ++i) {
      const Symbol* w = a.data() + i * len;
      b.push_back(static_cast<Symbol>((w[0] + shift) % 3));
      b.insert(b.end(), w + 1, w + len);
      b.push_back(shift);
    }
  }
  return Code(len + 1, 3, true, Indexing::standard(), std::move(b));
}

}  // namespace sktgc
