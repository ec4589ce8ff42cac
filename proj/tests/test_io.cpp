// Copyright 2026 The hvskit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "generators.hpp"
#include "hvskit/json_io.hpp"

using namespace hvskit;
using namespace hvskit::io;
using exact::frac;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(HVSKIT_FIXTURES) + "/" + name);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// parse, serialize, parse again: the two serializations agree
template <class F>
void round_trip(const std::string& name, F from) {
  CAPTURE(name);
  auto first = to_json(from(parse_text(slurp(name))));
  auto second = to_json(from(parse_text(dump(first))));
  CHECK(dump(first) == dump(second));
}

std::string error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("fixtures round-trip") {
  round_trip("nonsplit.json", hvs_from_json);
  for (auto f : {"w11plus.json", "mixed_blocks.json"}) round_trip(f, blocks_from_json);
  for (auto f : {"fibred_w11_n2.json", "fibred_v21minus.json", "fibred_mixed.json"})
    round_trip(f, fibred_from_json);
  for (auto f : {"fractured_mixed.json", "fractured_positive_bnd.json"})
    round_trip(f, fractured_from_json);
  for (auto f : {"plumbing_cycle.json", "plumbing_genus2.json"}) round_trip(f, plumbing_from_json);
  for (auto f : {"scenario_trivial.json", "scenario_two_gap.json"}) round_trip(f, scenario_from_json);
}

TEST_CASE("generated fixtures are in canonical form") {
  for (auto f : {"fibred_w11_n2.json", "fibred_mixed.json"})
    CHECK(dump(to_json(fibred_from_json(parse_text(slurp(f))))) == slurp(f));
  CHECK(dump(to_json(fractured_from_json(parse_text(slurp("fractured_mixed.json"))))) ==
        slurp("fractured_mixed.json"));
}

TEST_CASE("random forms round-trip exactly") {
  std::mt19937_64 rng(113);
  for (int t = 0; t < 30; ++t) {
    auto fl = gen::random_fibred(rng);
    auto back = fibred_from_json(parse_text(dump(to_json(fl))));
    CHECK(back.h == fl.h);
    CHECK(back.b == fl.b);
    CHECK(back.Var == fl.Var);
    CHECK(back.n == fl.n);
    auto sp = spectrum_from_blocks(gen::random_circle_spec(rng));
    CHECK(spectrum_from_json(to_json(sp)) == sp);
  }
}

TEST_CASE("scalar encodings") {
  auto m = hvs_from_json(parse_text(R"({"epsilon": 1, "b": [["1"]], "h": [[1]], "V": [["0"]]})"));
  CHECK(m.b(0, 0) == Gaussian(1));
  auto g = to_json(GMatrix{{Gaussian(frac(1, 2), frac(-3, 4))}});
  CHECK(g[0][0] == "1/2-3/4*i");
  CHECK(spectrum_from_json(parse_text(R"([" 3/4", "1"])")).size() == 2);
}

TEST_CASE("errors carry a pointer to the field") {
  auto msg = error_of([] {
    hvs_from_json(parse_text(R"({"epsilon": -1, "b": [["0","1"],["-1","0"]],
      "h": [["1","0"],["0","x"]], "V": [["0","0"],["0","0"]]})"));
  });
  CHECK(msg.rfind("/h/1/1: ", 0) == 0);
  msg = error_of([] { hvs_from_json(parse_text(R"({"epsilon": -1, "b": [["0"]], "h": [["1"]]})")); });
  CHECK(msg.find("/V") != std::string::npos);
  msg = error_of([] { hvs_from_json(parse_text(R"({"epsilon": 2, "b": [[0]], "h": [[1]], "V": [[0]]})")); });
  CHECK(msg.rfind("/epsilon: ", 0) == 0);
  msg = error_of([] { parse_text("{not json"); });
  CHECK(msg.find("malformed JSON") != std::string::npos);
  msg = error_of([] { blocks_from_json(parse_text(R"({"epsilon": -1, "circle": [{"k": 0, "s": "1", "u": 1, "mult": 1}], "offcircle": []})")); });
  CHECK(msg.rfind("/circle/0", 0) == 0);
}

TEST_CASE("floats are rejected") {
  auto msg = error_of([] { spectrum_from_json(parse_text("[0.5]")); });
  CHECK(msg.rfind("/0: ", 0) == 0);
  CHECK_THROWS_AS(hvs_from_json(parse_text(R"({"epsilon": 1, "b": [[1.0]], "h": [[1]], "V": [[0]]})")), Error);
}

TEST_CASE("ragged and non-square matrices are rejected") {
  CHECK_THROWS_AS(hvs_from_json(parse_text(R"({"epsilon": 1, "b": [["1"], ["1", "2"]], "h": [[1]], "V": [[0]]})")), Error);
  CHECK_THROWS_AS(linking_from_json(parse_text(R"({"clk": [["0", "1"]]})")), Error);
}

TEST_CASE("canonical dump") {
  Json j = {{"b", {"1", "2"}}, {"a", 1}};
  CHECK(dump(j) == "{\n  \"a\": 1,\n  \"b\": [\"1\", \"2\"]\n}\n");
}
