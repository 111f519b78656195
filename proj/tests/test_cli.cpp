#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "sktgc/binary.hpp"
#include "sktgc/listing.hpp"

using namespace sktgc;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("sktgc_cli_" + name);
}

}  // namespace

TEST_CASE("generate writes a listing") {
  const auto r = run({"generate", "--family", "2sktgc-c", "--n", "4"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.rfind("# m=2 n=4 cyclic=1 indexing=std\n0000\n0100\n0101\n0001\n", 0) == 0);
  CHECK(parse_listing(r.out) == build_2sktgc(4, TwoSkVariant::kC));
}

TEST_CASE("generate then verify") {
  const auto gen = run({"generate", "--family", "1sktgc-general", "--n0", "7", "--steps", "2"});
  REQUIRE(gen.code == 0);
  const auto ver = run({"verify", "--k", "1"}, gen.out);
  CHECK(ver.code == cli::kExitOk);
  CHECK(ver.out.find("result=pass") != std::string::npos);
  const auto json = run({"verify", "--json"}, gen.out);
  CHECK(json.code == 0);
  CHECK(json.out.find("\"pass\":true}") != std::string::npos);
}

TEST_CASE("a tampered listing fails verification") {
  std::string text = run({"generate", "--family", "2sktgc-b", "--n", "5"}).out;
  // Swap the second and third words.
  const auto a = text.find('\n') + 1 + 6;
  std::swap_ranges(text.begin() + static_cast<long>(a), text.begin() + static_cast<long>(a + 5),
                   text.begin() + static_cast<long>(a + 6));
  const auto r = run({"verify"}, text);
  CHECK(r.code == cli::kExitFailed);
  CHECK(r.out.find("result=fail") != std::string::npos);
  CHECK(run({"verify", "--k", "1"}, run({"generate", "--family", "3sktgc", "--n", "4"}).out).code ==
        cli::kExitFailed);
  CHECK(run({"verify", "--complete"}, run({"generate", "--family", "2sktgc-b", "--n", "5"}).out).code ==
        cli::kExitFailed);
}

TEST_CASE("encode and decode") {
  auto r = run({"decode", "--family", "1sktgc-odd", "--n", "2", "--word", "11111"});
  CHECK(r.code == 0);
  CHECK(r.out == "5\n");
  CHECK(run({"decode", "--family", "1sktgc-odd", "--n", "2", "--word", "00100"}).code == cli::kExitFailed);
  r = run({"encode", "--family", "1sktgc-odd", "--n", "2", "--rank", "15"});
  CHECK(r.out == "00010\n");
  r = run({"decode", "--family", "2sktgc-b", "--n", "4", "--word", "1010"});
  CHECK(r.out == "8\n");
  r = run({"encode", "--family", "2sktgc-c", "--n", "40", "--rank", "123456789"});
  CHECK(r.code == 0);
  const std::string word = r.out.substr(0, r.out.size() - 1);
  CHECK(run({"decode", "--family", "2sktgc-c", "--n", "40", "--word", word}).out == "123456789\n");
  CHECK(run({"encode", "--family", "2sktgc-b", "--n", "4", "--rank", "14"}).code == cli::kExitInvalid);
  CHECK(run({"encode", "--family", "3sktgc", "--n", "4", "--rank", "1"}).code == cli::kExitInvalid);
}

TEST_CASE("invalid arguments exit with 2") {
  CHECK(run({"generate", "--family", "nope", "--n", "4"}).code == cli::kExitInvalid);
  CHECK(run({"generate", "--family", "2sktgc-b", "--n", "3"}).code == cli::kExitInvalid);
  CHECK(run({"generate", "--family", "3sktgc", "--n", "30"}).code == cli::kExitInvalid);
  CHECK(run({"frobnicate"}).code == cli::kExitInvalid);
  CHECK(run({"verify"}, "garbage\n").code == cli::kExitInvalid);
  CHECK(run({"search-base", "--n0", "5", "--l", "1", "--r", "1"}).code == cli::kExitInvalid);
}

TEST_CASE("search subcommands") {
  const auto path = temp_path("base.txt");
  auto r = run({"search-base", "--n0", "4", "--l", "2", "--r", "1", "-o", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("a0=11 ", 0) == 0);
  CHECK(r.out.find("exhausted=true") != std::string::npos);
  CHECK(load_listing(path.string()).size() == 11);
  std::filesystem::remove(path);

  r = run({"search-complete", "--n", "4", "--cyclic"});
  CHECK(r.code == 0);
  CHECK(r.out.find("exhausted=true") != std::string::npos);
  CHECK(r.out.find("a0=0") != std::string::npos);
  r = run({"search-complete", "--n", "5", "--cyclic"});
  CHECK(r.out.find("a0=32") != std::string::npos);
}

TEST_CASE("compress and decompress through files") {
  const auto listing = temp_path("code.txt"), packed = temp_path("code.sktg"), back = temp_path("back.txt");
  save_listing(listing.string(), build_1sktgc(odd_base(), 3, OneSkVariant::kB));
  CHECK(run({"compress", "-i", listing.string(), "-o", packed.string()}).code == 0);
  CHECK(run({"decompress", "-i", packed.string(), "-o", back.string()}).code == 0);
  CHECK(load_listing(back.string()) == load_listing(listing.string()));

  // Flip a byte in the stream body.
  {
    std::fstream f(packed, std::ios::in | std::ios::out | std::ios::binary);
    f.seekp(50);
    f.put('\x5a');
  }
  CHECK(run({"decompress", "-i", packed.string()}).code == cli::kExitInvalid);
  for (const auto& p : {listing, packed, back}) std::filesystem::remove(p);
}

TEST_CASE("graph and stats") {
  const auto g = run({"graph"}, run({"generate", "--family", "3sktgc", "--n", "3"}).out);
  CHECK(g.code == 0);
  CHECK(g.out.rfind("graph induced {", 0) == 0);

  auto s = run({"stats", "--family", "1sktgc-odd", "--n", "10"});
  CHECK(s.code == 0);
  CHECK(s.out.find("size=MATCH") != std::string::npos);
  CHECK(s.out.find("density=0.583332") != std::string::npos);
  s = run({"stats", "--family", "2sktgc-b", "--n", "40"});
  CHECK(s.code == 0);
  CHECK(s.out.find("actual=not-materialized") != std::string::npos);
}
