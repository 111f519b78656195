#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sktgc/binary.hpp"
#include "sktgc/codec.hpp"
#include "sktgc/compress.hpp"
#include "sktgc/families.hpp"
#include "sktgc/listing.hpp"
#include "sktgc/mary.hpp"
#include "sktgc/search.hpp"
#include "sktgc/verifier.hpp"

namespace py = pybind11;
using namespace sktgc;

namespace {

std::vector<Symbol> bits(const std::string& s) {
  const Codeword w = Codeword::parse(s, 2);
  return {w.symbols().begin(), w.symbols().end()};
}

Code build(const std::string& family, int n, unsigned m, int n0, int steps) {
  FamilyParams p;
  p.family = parse_family(family);
  p.n = n;
  p.m = m;
  p.steps = steps;
  if (p.family == Family::k1SkGeneral) p.base = bundled_base(n0);
  return build_family(p);
}

std::uint64_t predicted(const std::string& family, int n, unsigned m, int n0, int steps) {
  FamilyParams p;
  p.family = parse_family(family);
  p.n = n;
  p.m = m;
  p.steps = steps;
  if (p.family == Family::k1SkGeneral) p.base = bundled_base(n0);
  return predicted_family_size(p);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Skew-tolerant Gray codes";

  auto& error = py::register_exception<Error>(m, "Error");
  py::register_exception<NotInCode>(m, "NotInCode", error.ptr());

  py::class_<Code>(m, "Code")
      .def_property_readonly("size", &Code::size)
      .def_property_readonly("length", &Code::length)
      .def_property_readonly("alphabet", &Code::alphabet)
      .def_property_readonly("cyclic", &Code::cyclic)
      .def("word", &Code::word_string)
      .def("words", &Code::to_strings)
      .def("__len__", &Code::size)
      .def("__eq__", [](const Code& a, const Code& b) { return a == b; })
      .def_static(
          "from_words",
          [](const std::vector<std::string>& w, unsigned alphabet, bool cyclic) {
            return Code::from_strings(w, alphabet, cyclic);
          },
          py::arg("words"), py::arg("m") = 2, py::arg("cyclic") = false);

  m.def("build", &build, py::arg("family"), py::arg("n") = 0, py::arg("m") = 0, py::arg("n0") = 6,
        py::arg("steps") = 1, "Build a code by family id");
  m.def("predicted_size", &predicted, py::arg("family"), py::arg("n") = 0, py::arg("m") = 0, py::arg("n0") = 6,
        py::arg("steps") = 1);
  m.def("to_listing", &to_listing);
  m.def("parse_listing", [](const std::string& text) { return parse_listing(text); });

  m.def("encode_2sk", [](std::uint64_t r, int n) { return codec::encode_2sk({r}, n).to_string(); });
  m.def("decode_2sk", [](const std::string& w, int n) { return codec::decode_2sk(bits(w), n).value; });
  m.def("encode_2sk_complete", [](std::uint64_t r, int n) { return codec::encode_2sk_complete({r}, n).to_string(); });
  m.def("decode_2sk_complete", [](const std::string& w, int n) { return codec::decode_2sk_complete(bits(w), n).value; });
  m.def("encode_1sk", [](std::uint64_t r, int n) { return codec::encode_1sk({r}, n).to_string(); });
  m.def("decode_1sk", [](const std::string& w, int n) { return codec::decode_1sk(bits(w), n).value; });

  py::class_<VerificationReport>(m, "VerificationReport")
      .def_property_readonly("passed", &VerificationReport::passed)
      .def_readonly("k_min", &VerificationReport::k_min)
      .def_readonly("size2_jumps", &VerificationReport::size2_jumps)
      .def_readonly("jump_histogram", &VerificationReport::jump_histogram)
      .def_property_readonly("complete", [](const VerificationReport& r) { return r.complete.pass; })
      .def_property_readonly("density", [](const VerificationReport& r) { return r.metrics.density; })
      .def_property_readonly("rate", [](const VerificationReport& r) { return r.metrics.rate; })
      .def("to_text", &VerificationReport::to_text)
      .def("to_json", &VerificationReport::to_json);
  m.def(
      "verify",
      [](const Code& c, std::optional<int> k, bool require_complete) {
        return verify(c, {.expected_k = k, .require_complete = require_complete});
      },
      py::arg("code"), py::arg("k") = py::none(), py::arg("require_complete") = false);

  py::class_<SearchResult>(m, "SearchResult")
      .def_readonly("best", &SearchResult::best)
      .def_readonly("best_size", &SearchResult::best_size)
      .def_readonly("constant", &SearchResult::constant)
      .def_readonly("nodes", &SearchResult::nodes)
      .def_readonly("exhausted", &SearchResult::exhausted)
      .def("summary", &SearchResult::summary);
  m.def(
      "search_base",
      [](int n0, int l, int r, std::uint64_t budget) {
        SearchOptions o;
        o.node_budget = budget;
        py::gil_scoped_release release;
        return search_base(n0, l, r, o);
      },
      py::arg("n0"), py::arg("l"), py::arg("r"), py::arg("budget") = 1'000'000'000);
  m.def(
      "search_complete",
      [](int n, bool cyclic, std::uint64_t budget) {
        SearchOptions o;
        o.node_budget = budget;
        py::gil_scoped_release release;
        return search_complete_1sktgc(n, cyclic, o);
      },
      py::arg("n"), py::arg("cyclic") = false, py::arg("budget") = 1'000'000'000);

  m.def("compress", [](const Code& c) {
    const auto b = serialize(compress(c));
    return py::bytes(reinterpret_cast<const char*>(b.data()), b.size());
  });
  m.def("decompress", [](const py::bytes& data) {
    const std::string s = data;
    return decompress(parse_compressed(std::vector<std::uint8_t>(s.begin(), s.end())));
  });
}
