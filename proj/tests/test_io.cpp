// SPDX-License-Identifier: Apache-2.0
#include "pseudoarr/constructions.hpp"
#include "pseudoarr/io.hpp"

#include <doctest.h>

#include <string>

using namespace pseudoarr;

namespace {

std::size_t count(const std::string &hay, const std::string &needle)
{
  std::size_t n = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) {
    ++n;
  }
  return n;
}

const char *kSquare = R"({"format":"pseudoarr-arrangement","version":1,"curves":[
  {"id":"s","ring":[["0","0"],["1","0"],["1","1"],["0","1"]]}]})";

}  // namespace

TEST_CASE("arrangement files round-trip exactly")
{
  for (const Arrangement &arr : {alpha_triple(), alpha4(), sharp_4n6(4), chain(3)}) {
    const std::string text = serialize_arrangement(arr, R"({"generator":"test","n":3})");
    const ArrangementFile file = parse_arrangement(text);
    CHECK(serialize_arrangement(file) == text);
    REQUIRE(file.curves.size() == arr.n());
    for (std::size_t i = 0; i < arr.n(); ++i) {
      CHECK(file.curves[i].id() == arr.curve(i).id());
      CHECK(std::equal(file.curves[i].ring().begin(), file.curves[i].ring().end(), arr.curve(i).ring().begin(),
                       arr.curve(i).ring().end()));
    }
    CHECK(file.metadata == R"({"generator":"test","n":3})");
  }
}

TEST_CASE("strict parsing")
{
  CHECK(parse_arrangement(kSquare).curves.size() == 1);
  auto code_of = [](const std::string &text) {
    try {
      parse_arrangement(text);
    }
    catch (const Error &e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  std::string zero_den = kSquare;
  zero_den.replace(zero_den.find("[\"1\",\"0\"]"), 9, "[\"1/0\",\"0\"]");
  CHECK(code_of(zero_den) == ErrorCode::ParseError);
  std::string floaty = kSquare;
  floaty.replace(floaty.find("[\"1\",\"0\"]"), 9, "[1.5,\"0\"]");
  CHECK(code_of(floaty) == ErrorCode::ParseError);
  std::string decimal = kSquare;
  decimal.replace(decimal.find("[\"1\",\"0\"]"), 9, "[\"1.5\",\"0\"]");
  CHECK(code_of(decimal) == ErrorCode::ParseError);
  CHECK(code_of("{") == ErrorCode::ParseError);
  CHECK(code_of(R"({"format":"other","version":1,"curves":[]})") == ErrorCode::ParseError);
  CHECK(code_of(R"({"format":"pseudoarr-arrangement","version":2,"curves":[]})") == ErrorCode::ParseError);
  std::string clockwise = R"({"format":"pseudoarr-arrangement","version":1,"curves":[
    {"id":"s","ring":[["0","0"],["0","1"],["1","1"],["1","0"]]}]})";
  CHECK(code_of(clockwise) == ErrorCode::InvalidCurve);
  CHECK_THROWS_AS(read_text_file("/nonexistent/file.json"), Error);
}

TEST_CASE("analysis documents are deterministic")
{
  const Arrangement arr = sharp_4n6(5);
  const std::string a = analysis_document(AnalysisContext(arr), default_k_list(5));
  const std::string b = analysis_document(AnalysisContext(parse_arrangement(serialize_arrangement(arr)).curves.size() == 5
                                                              ? Arrangement::validate(parse_arrangement(serialize_arrangement(arr)).curves)
                                                              : arr),
                                          default_k_list(5));
  CHECK(a == b);
  CHECK(a.find("\"weight_vector\": [\n    14") != std::string::npos);
  CHECK(a.find("\"euler_relation\": true") != std::string::npos);
  CHECK(a.find("\"min_clearance\": \"") != std::string::npos);
}

TEST_CASE("svg rendering")
{
  const Arrangement a = alpha_triple();
  const std::string plain = render_svg(a);
  CHECK(count(plain, "<path class=\"curve\"") == 3);
  CHECK(count(plain, "<circle") == 0);
  const std::string marked = render_svg(a, RenderOptions{true, false, true, 400});
  CHECK(count(marked, "class=\"vertex w0\"") == 6);
  CHECK(count(marked, "<circle") == 6);
  const std::string faces = render_svg(venn_triple(), RenderOptions{false, true, false, 400});
  CHECK(count(faces, "<path class=\"face") == 8);
  CHECK(render_svg(a) == plain);
}
