#include "sktgc/compress.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <string>

#include <zlib.h>

namespace sktgc {

namespace {

constexpr std::uint8_t kMagic[4] = {'S', 'K', 'T', 'G'};
constexpr std::uint8_t kVersion = 1;
constexpr std::uint8_t kFlagCyclic = 1;

int ceil_log2(std::uint64_t v) { return v <= 1 ? 0 : std::bit_width(v - 1); }

class BitWriter {
 public:
  void put(std::uint64_t value, int width) {
    for (int b = width - 1; b >= 0; --b) {
      if (count_ % 8 == 0) bytes_.push_back(0);
      if ((value >> b) & 1u) bytes_.back() |= static_cast<std::uint8_t>(0x80u >> (count_ % 8));
      ++count_;
    }
  }
  std::vector<std::uint8_t> bytes_;
  std::uint64_t count_ = 0;
};

class BitReader {
 public:
  BitReader(const std::vector<std::uint8_t>& bytes, std::uint64_t count) : bytes_(bytes), count_(count) {}
  std::uint64_t get(int width) {
    if (pos_ + static_cast<std::uint64_t>(width) > count_) throw MalformedStream("bit stream is truncated");
    std::uint64_t v = 0;
    for (int b = 0; b < width; ++b, ++pos_) v = (v << 1) | ((bytes_[pos_ / 8] >> (7 - pos_ % 8)) & 1u);
    return v;
  }
  std::uint64_t remaining() const { return count_ - pos_; }

 private:
  const std::vector<std::uint8_t>& bytes_;
  std::uint64_t count_;
  std::uint64_t pos_ = 0;
};

class ByteWriter {
 public:
  void u8(std::uint64_t v) { out.push_back(static_cast<std::uint8_t>(v)); }
  void be(std::uint64_t v, int bytes) {
    for (int i = bytes - 1; i >= 0; --i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  std::vector<std::uint8_t> out;
};

class ByteReader {
 public:
  explicit ByteReader(std::span<const std::uint8_t> in) : in_(in) {}
  std::uint64_t be(int bytes) {
    if (pos_ + static_cast<std::size_t>(bytes) > in_.size()) throw MalformedStream("file is truncated");
    std::uint64_t v = 0;
    for (int i = 0; i < bytes; ++i) v = (v << 8) | in_[pos_++];
    return v;
  }
  std::size_t pos() const { return pos_; }

 private:
  std::span<const std::uint8_t> in_;
  std::size_t pos_ = 0;
};

std::uint32_t crc(std::span<const std::uint8_t> bytes) {
  return static_cast<std::uint32_t>(crc32(crc32(0L, Z_NULL, 0), bytes.data(), static_cast<uInt>(bytes.size())));
}

}  // namespace

int CompressedCode::symbol_bits(unsigned m) noexcept { return ceil_log2(m); }

int CompressedCode::record_bits(unsigned m, int k) noexcept {
  if (m == 2) return k == 0 ? 0 : ceil_log2(2 * static_cast<std::uint64_t>(k));
  return ceil_log2(2 * static_cast<std::uint64_t>(k) + 1) + 1;
}

std::uint64_t CompressedCode::record_count() const noexcept {
  if (size < 2) return 0;
  return cyclic ? size - 1 : size - 2;
}

CompressedCode compress(const Code& code) {
  if (code.size() < 2) throw InvalidParameters("compression needs at least two words");
  TransitionSequence ts;
  try {
    ts = transitions(code);
  } catch (const NotAGrayStep& e) {
    throw NotSkewTolerant(std::string("no valid transition sequence: ") + e.what());
  }
  const std::vector<int> pos = ts.standard_positions();
  int k = 0;
  for (std::size_t i = 0; i + 1 < pos.size(); ++i) k = std::max(k, std::abs(pos[i + 1] - pos[i]));

  CompressedCode cc;
  cc.m = code.alphabet();
  cc.length = code.length();
  cc.size = code.size();
  cc.cyclic = code.cyclic();
  cc.k = k;
  cc.indexing = code.indexing();
  cc.first = {pos[0], ts.steps[0].direction};

  BitWriter bw;
  const int sb = CompressedCode::symbol_bits(cc.m);
  for (Symbol s : code.word(0)) bw.put(s, sb);
  const int rb = CompressedCode::record_bits(cc.m, k);
  for (std::size_t i = 1; i < pos.size(); ++i) {
    const int delta = pos[i] - pos[i - 1];
    if (cc.m == 2) {
      if (k > 0) bw.put(static_cast<std::uint64_t>(delta < 0 ? delta + k : delta + k - 1), rb);
    } else {
      bw.put(static_cast<std::uint64_t>(delta + k), rb - 1);
      bw.put(ts.steps[i].direction > 0 ? 0 : 1, 1);
    }
  }
  cc.bits = std::move(bw.bytes_);
  cc.bit_count = bw.count_;
  return cc;
}

Code decompress(const CompressedCode& cc) {
  if (cc.m < 2 || cc.m > 256) throw MalformedStream("alphabet size out of range");
  if (cc.length == 0) throw MalformedStream("zero word length");
  if (cc.size < 2) throw MalformedStream("fewer than two words");
  if (cc.size > kMaxMaterializedWords) throw MalformedStream("code too large to materialize");
  if (cc.k < 0 || (cc.k > 0 && static_cast<std::size_t>(cc.k) >= cc.length)) throw MalformedStream("k out of range");
  const int n = static_cast<int>(cc.length);
  const int sb = CompressedCode::symbol_bits(cc.m);
  const int rb = CompressedCode::record_bits(cc.m, cc.k);
  const std::uint64_t expected = static_cast<std::uint64_t>(sb) * cc.length + cc.record_count() * static_cast<std::uint64_t>(rb);
  if (cc.bit_count != expected || cc.bits.size() != (cc.bit_count + 7) / 8)
    throw MalformedStream("stream length does not match the header");

  BitReader br(cc.bits, cc.bit_count);
  std::vector<Symbol> word(cc.length);
  for (auto& s : word) {
    const std::uint64_t v = br.get(sb);
    if (v >= cc.m) throw MalformedStream("first codeword has a symbol outside Z_m");
    s = static_cast<Symbol>(v);
  }
  const std::vector<Symbol> first_word = word;

  std::vector<Symbol> out;
  out.reserve(cc.size * cc.length);
  out.insert(out.end(), word.begin(), word.end());

  auto apply = [&](int position, int direction) {
    if (position < 1 || position > n)
      throw MalformedStream("transition walks to position " + std::to_string(position) + " outside 1.." +
                            std::to_string(n));
    Symbol& s = word[static_cast<std::size_t>(position - 1)];
    if (cc.m == 2) {
      s ^= 1u;
    } else {
      s = static_cast<Symbol>((s + cc.m + static_cast<unsigned>(direction)) % cc.m);
    }
  };

  int position = cc.first.position;
  if (cc.m != 2 && cc.first.direction != 1 && cc.first.direction != -1)
    throw MalformedStream("first direction must be +1 or -1");
  apply(position, cc.first.direction);
  const std::uint64_t records = cc.record_count();
  for (std::uint64_t r = 0; r < records; ++r) {
    out.insert(out.end(), word.begin(), word.end());
    int delta = 0;
    int direction = 1;
    if (cc.m == 2) {
      if (cc.k > 0) {
        const auto v = static_cast<int>(br.get(rb));
        if (v >= 2 * cc.k) throw MalformedStream("unused delta code");
        delta = v < cc.k ? v - cc.k : v - cc.k + 1;
      }
    } else {
      const auto v = static_cast<int>(br.get(rb - 1));
      if (v > 2 * cc.k) throw MalformedStream("unused delta code");
      delta = v - cc.k;
      direction = br.get(1) ? -1 : 1;
    }
    position += delta;
    apply(position, direction);
  }
  if (cc.cyclic) {
    if (word != first_word) throw MalformedStream("wrap step does not return to the first word");
  } else {
    out.insert(out.end(), word.begin(), word.end());
  }
  return Code(cc.length, cc.m, cc.cyclic, cc.indexing, std::move(out));
}

std::vector<std::uint8_t> serialize(const CompressedCode& cc) {
  ByteWriter w;
  for (std::uint8_t c : kMagic) w.u8(c);
  w.u8(kVersion);
  w.u8(cc.cyclic ? kFlagCyclic : 0);
  w.be(cc.m, 2);
  w.be(cc.length, 4);
  w.be(cc.size, 8);
  w.u8(static_cast<std::uint64_t>(cc.k));
  w.u8(cc.indexing.is_signed() ? 1 : 0);
  w.be(static_cast<std::uint64_t>(cc.indexing.left()), 4);
  w.be(static_cast<std::uint64_t>(cc.indexing.right()), 4);
  w.be(static_cast<std::uint64_t>(cc.first.position), 4);
  w.u8(cc.first.direction > 0 ? 0 : 1);
  w.be(cc.bit_count, 8);
  w.out.insert(w.out.end(), cc.bits.begin(), cc.bits.end());
  w.be(crc(w.out), 4);
  return w.out;
}

CompressedCode parse_compressed(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 4 || !std::equal(kMagic, kMagic + 4, bytes.begin())) throw MalformedStream("missing SKTG magic");
  if (bytes.size() < 8) throw MalformedStream("file is truncated");
  const auto body = bytes.first(bytes.size() - 4);
  ByteReader tail(bytes.subspan(bytes.size() - 4));
  if (tail.be(4) != crc(body)) throw MalformedStream("checksum mismatch");

  ByteReader r(body);
  r.be(4);
  if (r.be(1) != kVersion) throw MalformedStream("unsupported format version");
  CompressedCode cc;
  const auto flags = r.be(1);
  if (flags & ~std::uint64_t{kFlagCyclic}) throw MalformedStream("unknown flags");
  cc.cyclic = (flags & kFlagCyclic) != 0;
  cc.m = static_cast<unsigned>(r.be(2));
  cc.length = static_cast<std::size_t>(r.be(4));
  cc.size = r.be(8);
  cc.k = static_cast<int>(r.be(1));
  const auto is_signed = r.be(1);
  const auto left = static_cast<int>(r.be(4));
  const auto right = static_cast<int>(r.be(4));
  if (is_signed > 1) throw MalformedStream("unknown indexing");
  if (is_signed) {
    if (left < 1 || right < 1 || static_cast<std::size_t>(left + right + 1) != cc.length)
      throw MalformedStream("signed indexing does not match the word length");
    cc.indexing = Indexing::signed_range(left, right);
  }
  cc.first.position = static_cast<int>(r.be(4));
  cc.first.direction = r.be(1) ? -1 : 1;
  cc.bit_count = r.be(8);
  const std::size_t nbytes = static_cast<std::size_t>((cc.bit_count + 7) / 8);
  if (body.size() - r.pos() != nbytes) throw MalformedStream("bit stream length does not match the header");
  cc.bits.assign(body.begin() + static_cast<std::ptrdiff_t>(r.pos()), body.end());
  return cc;
}

}  // namespace sktgc
