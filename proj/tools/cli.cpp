#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "sktgc/codec.hpp"
#include "sktgc/compress.hpp"
#include "sktgc/families.hpp"
#include "sktgc/listing.hpp"
#include "sktgc/search.hpp"
#include "sktgc/verifier.hpp"

namespace sktgc::cli {

namespace {

struct FamilyArgs {
  std::string family;
  int n = 0;
  unsigned m = 0;
  int n0 = 0;
  std::string base_path;
  int left = 0;
  int right = 0;
  int steps = 1;

  void add(CLI::App* app) {
    app->add_option("--family", family, "family id")->required();
    app->add_option("--n", n, "length parameter");
    app->add_option("--m", m, "alphabet size (mary)");
    app->add_option("--n0", n0, "bundled base case, 6 or 7 (1sktgc-general)");
    app->add_option("--base", base_path, "base case listing (1sktgc-general)");
    app->add_option("--l", left, "L of --base");
    app->add_option("--r", right, "R of --base");
    app->add_option("--steps", steps, "recursion steps (1sktgc-general)");
  }

  FamilyParams params() const {
    FamilyParams p;
    p.family = parse_family(family);
    p.n = n;
    p.m = m;
    p.steps = steps;
    if (p.family == Family::k1SkGeneral) {
      if (!base_path.empty()) {
        p.base = validate_base(load_listing(base_path), left, right);
      } else if (n0 != 0) {
        p.base = bundled_base(n0);
      } else {
        throw InvalidParameters("1sktgc-general needs --n0 or --base with --l and --r");
      }
    }
    return p;
  }
};

struct Io {
  std::istream& in;
  std::ostream& out;
};

std::string slurp(std::istream& is) { return {std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>()}; }

std::string read_input(const std::string& path, Io io, bool binary = false) {
  if (path.empty() || path == "-") return slurp(io.in);
  std::ifstream f(path, binary ? std::ios::binary : std::ios::in);
  if (!f) throw ParseError("cannot open '" + path + "'");
  return slurp(f);
}

void write_output(const std::string& path, const std::string& data, Io io) {
  if (path.empty() || path == "-") {
    io.out << data;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write '" + path + "'");
  f << data;
}

Codeword parse_word(const std::string& digits, std::size_t length) {
  Codeword w = Codeword::parse(digits, 2);
  if (w.length() != length)
    throw InvalidLength("word must have " + std::to_string(length) + " symbols, got " + std::to_string(w.length()));
  return w;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Io io{in, out};
  CLI::App app{"Skew-tolerant Gray codes: build, rank, verify, search, compress"};
  app.require_subcommand(1);
  int status = kExitOk;

  // generate
  FamilyArgs gen;
  std::string gen_out;
  auto* generate = app.add_subcommand("generate", "emit a code as a listing");
  gen.add(generate);
  generate->add_option("-o,--output", gen_out, "output path (default stdout)");
  generate->callback([&] {
    const FamilyParams p = gen.params();
    const std::uint64_t predicted = predicted_family_size(p);
    if (predicted > kMaxMaterializedWords)
      throw InvalidParameters("code has " + std::to_string(predicted) +
                              " words, more than 2^24; use encode/decode instead");
    write_output(gen_out, to_listing(build_family(p)), io);
  });

  // verify
  std::string ver_in;
  std::optional<int> ver_k;
  bool ver_complete = false, ver_json = false;
  unsigned ver_jobs = 1;
  auto* verify_cmd = app.add_subcommand("verify", "check a listing");
  verify_cmd->add_option("-i,--input", ver_in, "listing path (default stdin)");
  verify_cmd->add_option("--k", ver_k, "required skew tolerance");
  verify_cmd->add_flag("--complete", ver_complete, "require a complete code");
  verify_cmd->add_flag("--json", ver_json, "print JSON instead of key=value lines");
  verify_cmd->add_option("--jobs", ver_jobs, "worker threads");
  verify_cmd->callback([&] {
    const Code code = parse_listing(read_input(ver_in, io));
    VerifyOptions opt;
    opt.expected_k = ver_k;
    opt.require_complete = ver_complete;
    opt.jobs = ver_jobs;
    const VerificationReport r = verify(code, opt);
    out << (ver_json ? r.to_json() + "\n" : r.to_text());
    if (!r.passed()) status = kExitFailed;
  });

  // encode / decode
  std::string codec_family;
  int codec_n = 0;
  std::uint64_t codec_rank = 0;
  std::string codec_word;
  auto* encode = app.add_subcommand("encode", "rank to codeword");
  encode->add_option("--family", codec_family, "2sktgc-b, 2sktgc-c or 1sktgc-odd")->required();
  encode->add_option("--n", codec_n)->required();
  encode->add_option("--rank", codec_rank)->required();
  encode->callback([&] {
    const codec::Rank r{codec_rank};
    switch (parse_family(codec_family)) {
      case Family::k2SkB: out << codec::encode_2sk(r, codec_n).to_string() << '\n'; break;
      case Family::k2SkC: out << codec::encode_2sk_complete(r, codec_n).to_string() << '\n'; break;
      case Family::k1SkOdd: out << codec::encode_1sk(r, codec_n).to_string() << '\n'; break;
      default: throw InvalidParameters("encode supports 2sktgc-b, 2sktgc-c and 1sktgc-odd");
    }
  });
  auto* decode = app.add_subcommand("decode", "codeword to rank");
  decode->add_option("--family", codec_family, "2sktgc-b, 2sktgc-c or 1sktgc-odd")->required();
  decode->add_option("--n", codec_n)->required();
  decode->add_option("--word", codec_word, "digits, leftmost first")->required();
  decode->callback([&] {
    switch (parse_family(codec_family)) {
      case Family::k2SkB:
        out << codec::decode_2sk(parse_word(codec_word, static_cast<std::size_t>(codec_n)).symbols(), codec_n).value
            << '\n';
        break;
      case Family::k2SkC:
        out << codec::decode_2sk_complete(parse_word(codec_word, static_cast<std::size_t>(codec_n)).symbols(),
                                          codec_n)
                   .value
            << '\n';
        break;
      case Family::k1SkOdd:
        out << codec::decode_1sk(parse_word(codec_word, static_cast<std::size_t>(2 * codec_n + 1)).symbols(),
                                 codec_n)
                   .value
            << '\n';
        break;
      default: throw InvalidParameters("decode supports 2sktgc-b, 2sktgc-c and 1sktgc-odd");
    }
  });

  // search-base / search-complete
  int sb_n0 = 0, sb_l = 0, sb_r = 0, sc_n = 0;
  bool sc_cyclic = false, sc_no_symmetry = false;
  SearchOptions sopt;
  std::string search_out;
  auto* search_base_cmd = app.add_subcommand("search-base", "longest admissible base case");
  search_base_cmd->add_option("--n0", sb_n0)->required();
  search_base_cmd->add_option("--l", sb_l)->required();
  search_base_cmd->add_option("--r", sb_r)->required();
  auto* search_complete_cmd = app.add_subcommand("search-complete", "complete binary 1-SkTGC");
  search_complete_cmd->add_option("--n", sc_n)->required();
  search_complete_cmd->add_flag("--cyclic", sc_cyclic);
  search_complete_cmd->add_flag("--no-symmetry", sc_no_symmetry);
  for (auto* cmd : {search_base_cmd, search_complete_cmd}) {
    cmd->add_option("--budget", sopt.node_budget, "node budget");
    cmd->add_option("--jobs", sopt.jobs, "worker threads");
    cmd->add_option("-o,--output", search_out, "write the code found as a listing");
  }
  auto report = [&](const SearchResult& r) {
    out << r.summary() << '\n';
    if (r.best && !search_out.empty()) save_listing(search_out, *r.best);
  };
  search_base_cmd->callback([&] { report(search_base(sb_n0, sb_l, sb_r, sopt)); });
  search_complete_cmd->callback([&] {
    sopt.symmetry_pruning = !sc_no_symmetry;
    report(search_complete_1sktgc(sc_n, sc_cyclic, sopt));
  });

  // compress / decompress
  std::string z_in, z_out;
  auto* compress_cmd = app.add_subcommand("compress", "listing to SKTG stream");
  auto* decompress_cmd = app.add_subcommand("decompress", "SKTG stream to listing");
  for (auto* cmd : {compress_cmd, decompress_cmd}) {
    cmd->add_option("-i,--input", z_in, "input path (default stdin)");
    cmd->add_option("-o,--output", z_out, "output path (default stdout)");
  }
  compress_cmd->callback([&] {
    const auto bytes = serialize(compress(parse_listing(read_input(z_in, io))));
    write_output(z_out, std::string(bytes.begin(), bytes.end()), io);
  });
  decompress_cmd->callback([&] {
    const std::string raw = read_input(z_in, io, true);
    const std::vector<std::uint8_t> bytes(raw.begin(), raw.end());
    write_output(z_out, to_listing(decompress(parse_compressed(bytes))), io);
  });

  // graph
  std::string g_in;
  auto* graph = app.add_subcommand("graph", "induced transition graph in DOT");
  graph->add_option("-i,--input", g_in, "listing path (default stdin)");
  graph->callback([&] {
    const Code code = parse_listing(read_input(g_in, io));
    out << to_dot(induced_graph(transitions(code), code.length()));
  });

  // stats
  FamilyArgs st;
  auto* stats = app.add_subcommand("stats", "size, density, rate and jumps versus the closed form");
  st.add(stats);
  stats->callback([&] {
    const FamilyParams p = st.params();
    const std::uint64_t predicted = predicted_family_size(p);
    const std::size_t length = family_length(p);
    const unsigned m = family_alphabet(p);
    out << "family=" << family_id(p.family) << "\nlength=" << length << "\nm=" << m << "\npredicted=" << predicted
        << '\n';
    out.precision(12);
    if (predicted > kMaxMaterializedWords) {
      const RateMetrics rm = rate_metrics(predicted, m, length);
      out << "actual=not-materialized\npredicted_density=" << rm.density << "\npredicted_rate=" << rm.rate << '\n';
      return;
    }
    const Code code = build_family(p);
    const VerificationReport r = verify(code, {.expected_k = family_k(p.family)});
    out << "actual=" << code.size() << "\nsize=" << (code.size() == predicted ? "MATCH" : "MISMATCH")
        << "\ndensity=" << r.metrics.density << "\nrate=" << r.metrics.rate << "\nk_min=";
    if (r.k_min) out << *r.k_min; else out << "none";
    out << "\njumps=";
    bool first = true;
    for (auto [d, c] : r.jump_histogram) {
      out << (first ? "" : ",") << d << ':' << c;
      first = false;
    }
    out << "\nsize2_jumps=" << r.size2_jumps << '\n';
    if (code.size() != predicted) status = kExitFailed;
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const NotInCode& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return status;
}

}  // namespace sktgc::cli
