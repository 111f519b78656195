#include "sktgc/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace sktgc {

const char* to_string(BaseViolation::Condition condition) {
  using C = BaseViolation::Condition;
  switch (condition) {
    case C::kShape: return "shape";
    case C::kFirstChange: return "first-change";
    case C::kLastChange: return "last-change";
    case C::kStaircase: return "staircase";
    case C::kForbiddenWord: return "forbidden-word";
    case C::kNotSkewTolerant: return "not-1-sktgc";
    case C::kRepeatedWord: return "repeated-word";
  }
  return "unknown";
}

namespace {

std::string describe(const std::vector<BaseViolation>& violations) {
  std::ostringstream os;
  os << "invalid base case:";
  for (const auto& v : violations) os << ' ' << to_string(v.condition) << " (" << v.witness << ')';
  return os.str();
}

}  // namespace

InvalidBase::InvalidBase(std::vector<BaseViolation> violations)
    : Error(describe(violations)), violations_(std::move(violations)) {}

Indexing Indexing::signed_range(int left, int right) {
  if (left < 1 || right < 1) throw InvalidParameters("signed indexing needs L >= 1 and R >= 1");
  Indexing ix;
  ix.signed_ = true;
  ix.left_ = left;
  ix.right_ = right;
  return ix;
}

bool Indexing::contains(int position, std::size_t length) const noexcept {
  if (signed_) return position >= -left_ && position <= right_;
  return position >= 1 && static_cast<std::size_t>(position) <= length;
}

Indexing Indexing::widened() const {
  if (!signed_) return *this;
  return signed_range(left_ + 1, right_ + 1);
}

std::string Indexing::to_string() const {
  if (!signed_) return "std";
  return "signed:" + std::to_string(left_) + "," + std::to_string(right_);
}

Codeword::Codeword(std::vector<Symbol> symbols, unsigned m, Indexing indexing)
    : symbols_(std::move(symbols)), m_(m), indexing_(indexing) {
  if (m < 2 || m > 256) throw InvalidAlphabet("alphabet size must be in [2, 256]");
  if (symbols_.empty()) throw InvalidLength("codeword must be nonempty");
  for (Symbol s : symbols_)
    if (s >= m) throw InvalidParameters("symbol " + std::to_string(s) + " outside Z_" + std::to_string(m));
  if (indexing_.is_signed() &&
      static_cast<std::size_t>(indexing_.left() + indexing_.right() + 1) != symbols_.size())
    throw InvalidParameters("signed indexing " + indexing_.to_string() + " does not match length " +
                            std::to_string(symbols_.size()));
}

Codeword Codeword::parse(std::string_view digits, unsigned m, Indexing indexing) {
  std::vector<Symbol> symbols;
  symbols.reserve(digits.size());
  for (char ch : digits) {
    if (ch < '0' || ch > '9') throw ParseError(std::string("not a digit: '") + ch + "'");
    symbols.push_back(static_cast<Symbol>(ch - '0'));
  }
  return Codeword(std::move(symbols), m, indexing);
}

Symbol Codeword::at(int position) const {
  if (!indexing_.contains(position, symbols_.size()))
    throw PositionOutOfRange("position " + std::to_string(position) + " outside the word");
  return symbols_[indexing_.slot(position)];
}

std::string Codeword::to_string() const {
  std::string s;
  s.reserve(symbols_.size());
  for (Symbol x : symbols_) s.push_back(static_cast<char>('0' + x));
  return s;
}

Code::Code(std::size_t length, unsigned m, bool cyclic, Indexing indexing,
           std::vector<Symbol> symbols)
    : length_(length), m_(m), cyclic_(cyclic), indexing_(indexing), symbols_(std::move(symbols)) {
  if (m < 2 || m > 256) throw InvalidAlphabet("alphabet size must be in [2, 256]");
  if (length == 0) throw InvalidLength("code length must be positive");
  if (symbols_.size() % length != 0) throw InvalidParameters("symbol count is not a multiple of the length");
  if (indexing.is_signed() &&
      static_cast<std::size_t>(indexing.left() + indexing.right() + 1) != length)
    throw InvalidParameters("signed indexing " + indexing.to_string() + " does not match length " +
                            std::to_string(length));
  for (Symbol s : symbols_)
    if (s >= m) throw InvalidParameters("symbol " + std::to_string(s) + " outside Z_" + std::to_string(m));
}

Code Code::from_strings(const std::vector<std::string>& words, unsigned m, bool cyclic,
                        Indexing indexing) {
  if (words.empty()) throw EmptyResult("no words given");
  const std::size_t n = words.front().size();
  std::vector<Symbol> symbols;
  symbols.reserve(words.size() * n);
  for (const auto& w : words) {
    if (w.size() != n) throw ParseError("words of differing length: '" + w + "'");
    for (char ch : w) {
      if (ch < '0' || ch > '9') throw ParseError("not a digit in '" + w + "'");
      symbols.push_back(static_cast<Symbol>(ch - '0'));
    }
  }
  return Code(n, m, cyclic, indexing, std::move(symbols));
}

Codeword Code::codeword(std::size_t i) const {
  auto w = word(i);
  return Codeword(std::vector<Symbol>(w.begin(), w.end()), m_, indexing_);
}

std::string Code::word_string(std::size_t i) const {
  std::string s;
  s.reserve(length_);
  for (Symbol x : word(i)) s.push_back(static_cast<char>('0' + x));
  return s;
}

std::vector<std::string> Code::to_strings() const {
  std::vector<std::string> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back(word_string(i));
  return out;
}

Code Code::with_cyclic(bool cyclic) const {
  Code c = *this;
  c.cyclic_ = cyclic;
  return c;
}

Code Code::with_indexing(Indexing indexing) const {
  return Code(length_, m_, cyclic_, indexing, symbols_);
}

std::vector<int> TransitionSequence::positions() const {
  std::vector<int> out;
  out.reserve(steps.size());
  for (const auto& s : steps) out.push_back(s.position);
  return out;
}

std::vector<int> TransitionSequence::standard_positions() const {
  std::vector<int> out;
  out.reserve(steps.size());
  for (const auto& s : steps) out.push_back(static_cast<int>(indexing.slot(s.position)) + 1);
  return out;
}

namespace {

// Single +-1 step from a to b, or throws.
TransitionStep step_between(std::span<const Symbol> a, std::span<const Symbol> b, unsigned m,
                            const Indexing& ix, std::size_t index) {
  std::size_t changed = a.size();
  for (std::size_t s = 0; s < a.size(); ++s) {
    if (a[s] == b[s]) continue;
    if (changed != a.size())
      throw NotAGrayStep(index, "step " + std::to_string(index) + " changes more than one position");
    changed = s;
  }
  if (changed == a.size())
    throw NotAGrayStep(index, "step " + std::to_string(index) + " repeats a word");
  const unsigned up = (b[changed] + m - a[changed]) % m;
  int direction;
  if (m == 2) {
    direction = b[changed] > a[changed] ? 1 : -1;
  } else if (up == 1) {
    direction = 1;
  } else if (up == m - 1) {
    direction = -1;
  } else {
    throw NotAGrayStep(index, "step " + std::to_string(index) + " changes a symbol by more than 1");
  }
  return {ix.position(changed), direction};
}

}  // namespace

TransitionSequence transitions(const Code& code) {
  const std::size_t p = code.size();
  if (p < 2) throw InvalidParameters("transition sequence needs at least two words");
  TransitionSequence ts;
  ts.cyclic = code.cyclic();
  ts.length = code.length();
  ts.indexing = code.indexing();
  ts.steps.reserve(code.cyclic() ? p : p - 1);
  for (std::size_t i = 0; i + 1 < p; ++i)
    ts.steps.push_back(step_between(code.word(i), code.word(i + 1), code.alphabet(), code.indexing(), i));
  if (code.cyclic())
    ts.steps.push_back(step_between(code.word(p - 1), code.word(0), code.alphabet(), code.indexing(), p - 1));
  return ts;
}

Code reconstruct(const Codeword& first, const TransitionSequence& ts) {
  const unsigned m = first.alphabet();
  const std::size_t n = first.length();
  const std::size_t words = ts.cyclic ? ts.steps.size() : ts.steps.size() + 1;
  std::vector<Symbol> symbols;
  symbols.reserve(words * n);
  std::vector<Symbol> cur(first.symbols().begin(), first.symbols().end());
  symbols.insert(symbols.end(), cur.begin(), cur.end());
  for (std::size_t i = 0; i < ts.steps.size(); ++i) {
    const auto& st = ts.steps[i];
    if (!ts.indexing.contains(st.position, n))
      throw PositionOutOfRange("transition " + std::to_string(i) + " at position " +
                               std::to_string(st.position) + " is outside the word");
    auto& x = cur[ts.indexing.slot(st.position)];
    x = static_cast<Symbol>((x + m + st.direction) % m);
    if (i + 1 == ts.steps.size() && ts.cyclic) {
      if (!std::equal(cur.begin(), cur.end(), first.symbols().begin()))
        throw NotAGrayStep(i, "wrap step does not return to the first word");
      break;
    }
    symbols.insert(symbols.end(), cur.begin(), cur.end());
  }
  return Code(n, m, ts.cyclic, first.indexing(), std::move(symbols));
}

Code derive(const Code& code, DeriveOp op) {
  const std::size_t p = code.size();
  const std::size_t n = code.length();
  if (p == 0) throw EmptyResult("cannot derive from an empty code");
  auto sym = code.symbols();
  std::vector<Symbol> out;
  switch (op) {
    case DeriveOp::kDropFirst:
      if (p < 2) throw EmptyResult("dropping the first word leaves nothing");
      out.assign(sym.begin() + static_cast<std::ptrdiff_t>(n), sym.end());
      break;
    case DeriveOp::kDropLast:
      if (p < 2) throw EmptyResult("dropping the last word leaves nothing");
      out.assign(sym.begin(), sym.end() - static_cast<std::ptrdiff_t>(n));
      break;
    case DeriveOp::kTrimBoth:
      if (p < 3) throw EmptyResult("trimming both ends leaves nothing");
      out.assign(sym.begin() + static_cast<std::ptrdiff_t>(n), sym.end() - static_cast<std::ptrdiff_t>(n));
      break;
    case DeriveOp::kReverse:
      out.reserve(sym.size());
      for (std::size_t i = p; i-- > 0;) {
        auto w = code.word(i);
        out.insert(out.end(), w.begin(), w.end());
      }
      break;
  }
  return Code(n, code.alphabet(), false, code.indexing(), std::move(out));
}

std::uint64_t space_size(unsigned m, std::size_t length) noexcept {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < length; ++i) {
    if (v > std::numeric_limits<std::uint64_t>::max() / m) return 0;
    v *= m;
  }
  return v;
}

RateMetrics rate_metrics(std::uint64_t size, unsigned m, std::size_t length) {
  RateMetrics r;
  if (size == 0 || length == 0) return r;
  if (const auto space = space_size(m, length); space != 0) {
    r.density = static_cast<double>(static_cast<long double>(size) / static_cast<long double>(space));
  } else {
    r.density = std::exp(std::log(static_cast<double>(size)) -
                         static_cast<double>(length) * std::log(static_cast<double>(m)));
  }
  r.rate = std::log(static_cast<double>(size)) / std::log(static_cast<double>(m)) /
           static_cast<double>(length);
  return r;
}

RateMetrics rate_metrics(const Code& code) {
  return rate_metrics(code.size(), code.alphabet(), code.length());
}

std::uint64_t word_value(std::span<const Symbol> word, unsigned m) noexcept {
  std::uint64_t v = 0;
  for (Symbol s : word) v = v * m + s;
  return v;
}

}  // namespace sktgc
