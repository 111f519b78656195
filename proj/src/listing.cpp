#include "sktgc/listing.hpp"

#include <charconv>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>

namespace sktgc {

namespace {

int parse_int(std::string_view s, std::string_view what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw ParseError("bad value for " + std::string(what) + ": '" + std::string(s) + "'");
  return v;
}

struct Header {
  unsigned m = 0;
  std::size_t n = 0;
  bool cyclic = false;
  Indexing indexing;
};

Header parse_header(std::string_view line) {
  if (line.empty() || line.front() != '#') throw ParseError("listing must start with a '#' header line");
  Header h;
  bool have_m = false, have_n = false, have_cyclic = false, have_indexing = false;
  std::istringstream fields{std::string(line.substr(1))};
  std::string field;
  while (fields >> field) {
    const auto eq = field.find('=');
    if (eq == std::string::npos) throw ParseError("malformed header field '" + field + "'");
    const std::string_view key = std::string_view(field).substr(0, eq);
    const std::string_view value = std::string_view(field).substr(eq + 1);
    if (key == "m") {
      h.m = static_cast<unsigned>(parse_int(value, "m"));
      have_m = true;
    } else if (key == "n") {
      h.n = static_cast<std::size_t>(parse_int(value, "n"));
      have_n = true;
    } else if (key == "cyclic") {
      if (value != "0" && value != "1") throw ParseError("cyclic must be 0 or 1");
      h.cyclic = value == "1";
      have_cyclic = true;
    } else if (key == "indexing") {
      if (value == "std") {
        h.indexing = Indexing::standard();
      } else if (value.starts_with("signed:")) {
        const auto rest = value.substr(7);
        const auto comma = rest.find(',');
        if (comma == std::string_view::npos) throw ParseError("indexing must be signed:L,R");
        h.indexing = Indexing::signed_range(parse_int(rest.substr(0, comma), "L"),
                                            parse_int(rest.substr(comma + 1), "R"));
      } else {
        throw ParseError("unknown indexing '" + std::string(value) + "'");
      }
      have_indexing = true;
    } else {
      throw ParseError("unknown header field '" + std::string(key) + "'");
    }
  }
  if (!(have_m && have_n && have_cyclic && have_indexing))
    throw ParseError("header needs m, n, cyclic and indexing");
  if (h.m < 2 || h.m > 10) throw ParseError("text listings support 2 <= m <= 10");
  if (h.n == 0) throw ParseError("n must be positive");
  return h;
}

}  // namespace

void write_listing(std::ostream& os, const Code& code) {
  if (code.alphabet() > 10) throw InvalidParameters("text listings support m <= 10; use the binary format");
  os << "# m=" << code.alphabet() << " n=" << code.length() << " cyclic=" << (code.cyclic() ? 1 : 0)
     << " indexing=" << code.indexing().to_string() << '\n';
  std::string line(code.length() + 1, '\n');
  for (std::size_t i = 0; i < code.size(); ++i) {
    auto w = code.word(i);
    for (std::size_t s = 0; s < w.size(); ++s) line[s] = static_cast<char>('0' + w[s]);
    os.write(line.data(), static_cast<std::streamsize>(line.size()));
  }
}

std::string to_listing(const Code& code) {
  std::ostringstream os;
  write_listing(os, code);
  return os.str();
}

Code parse_listing(std::string_view text) {
  std::size_t pos = 0;
  auto next_line = [&](std::string_view& out) {
    if (pos >= text.size()) return false;
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    out = text.substr(pos, end - pos);
    if (!out.empty() && out.back() == '\r') out.remove_suffix(1);
    pos = end + 1;
    return true;
  };
  std::string_view line;
  if (!next_line(line)) throw ParseError("empty listing");
  const Header h = parse_header(line);
  std::vector<Symbol> symbols;
  std::size_t lineno = 1;
  while (next_line(line)) {
    ++lineno;
    if (line.empty()) continue;
    if (line.size() != h.n)
      throw ParseError("line " + std::to_string(lineno) + ": expected " + std::to_string(h.n) + " symbols");
    for (char ch : line) {
      if (ch < '0' || ch > '9')
        throw ParseError("line " + std::to_string(lineno) + ": not a digit");
      const auto s = static_cast<Symbol>(ch - '0');
      if (s >= h.m) throw ParseError("line " + std::to_string(lineno) + ": symbol outside Z_m");
      symbols.push_back(s);
    }
  }
  if (symbols.empty()) throw ParseError("listing has no words");
  return Code(h.n, h.m, h.cyclic, h.indexing, std::move(symbols));
}

Code read_listing(std::istream& is) {
  std::string text{std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>()};
  return parse_listing(text);
}

Code load_listing(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return read_listing(in);
}

void save_listing(const std::string& path, const Code& code) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  write_listing(out, code);
}

}  // namespace sktgc
