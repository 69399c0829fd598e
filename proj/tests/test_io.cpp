//
// geninv - exact generalized inverses over Q(i) and GF(p)
//
// Copyright 2026 the geninv developers
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
//

#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "geninv/io.hpp"
#include "geninv/universe.hpp"

using namespace geninv;

TEST_CASE("matrix files round-trip exactly") {
  QiField qi;
  Rng     rng(97);
  for (int k = 0; k < 30; ++k) {
    auto m = random_qi_matrix(rng, qi, 3);
    auto j = io::matrix_to_json(m);
    auto back = io::matrix_from_json(j);
    REQUIRE(std::holds_alternative<QiMatrix>(back));
    CHECK(std::get<QiMatrix>(back) == m);
  }
  PrimeField f7(7);
  for (int k = 0; k < 30; ++k) {
    std::vector<std::int64_t> e;
    for (int i = 0; i < 4; ++i) {
      e.push_back(static_cast<std::int64_t>(rng.below(7)));
    }
    GfMatrix m(f7, 2, e);
    auto     back = io::matrix_from_json(io::matrix_to_json(m));
    REQUIRE(std::holds_alternative<GfMatrix>(back));
    CHECK(std::get<GfMatrix>(back) == m);
  }
}

TEST_CASE("malformed scalars name their row and column") {
  Json j = {{"ring", "Qi"},
            {"n", 2},
            {"entries", Json::array({Json::array({"1", "2"}),
                                     Json::array({"3", "oops"})})}};
  try {
    io::matrix_from_json(j);
    FAIL("expected a parse error");
  } catch (const Error& e) {
    const std::string msg = e.what();
    CHECK(msg.find("(2,2)") != std::string::npos);
    CHECK(msg.find("oops") != std::string::npos);
  }
}

TEST_CASE("schema violations are rejected") {
  CHECK_THROWS_AS(io::matrix_from_json(Json::array()), Error);
  CHECK_THROWS_AS(io::matrix_from_json(Json{{"ring", "Zp"}, {"n", 1}}),
                  Error);
  const Json one_zero = Json::array({Json::array({"0"})});
  // GF needs p, Qi must not have one
  CHECK_THROWS_AS(
      io::matrix_from_json(Json{
          {"ring", "GF"}, {"n", 1}, {"entries", one_zero}}),
      Error);
  CHECK_THROWS_AS(
      io::matrix_from_json(Json{
          {"ring", "Qi"}, {"p", 3}, {"n", 1}, {"entries", one_zero}}),
      Error);
  // p must be prime
  CHECK_THROWS_AS(
      io::matrix_from_json(Json{
          {"ring", "GF"}, {"p", 6}, {"n", 1}, {"entries", one_zero}}),
      Error);
  // ragged rows
  CHECK_THROWS_AS(
      io::matrix_from_json(Json{
          {"ring", "Qi"},
          {"n", 2},
          {"entries", Json::array({Json::array({"1", "2"}),
                                   Json::array({"3"})})}}),
      Error);
}

TEST_CASE("monoid files round-trip and validate") {
  auto cl   = closure(all_matrices(PrimeField(2), 2));
  auto j    = io::monoid_to_json(cl.monoid);
  auto back = io::monoid_from_json(j);
  CHECK(back.size() == cl.monoid.size());
  CHECK(back.one() == cl.monoid.one());
  CHECK(back.has_star());
  CHECK(back.star_table() == cl.monoid.star_table());
  CHECK(back.mul_table() == cl.monoid.mul_table());
  CHECK(back.labels() == cl.monoid.labels());

  // corrupting the table trips validation
  j["mul"][3][4] = (j["mul"][3][4].get<int>() + 1) % 16;
  CHECK_THROWS_AS(io::monoid_from_json(j), Error);
}

TEST_CASE("machine dump is stable") {
  Json j = {{"b", 1}, {"a", {{"y", 2}, {"x", 3}}}};
  CHECK(io::machine_dump(j) == io::machine_dump(j));
  // keys come out sorted, so field insertion order cannot leak
  CHECK(io::machine_dump(j).find("\"a\"") < io::machine_dump(j).find("\"b\""));
  CHECK(io::machine_dump(j).back() == '\n');
}

TEST_CASE("universe specs parse and reject junk") {
  auto g = parse_universe("gf:3:2");
  REQUIRE(std::holds_alternative<GfUniverse>(g));
  CHECK(std::get<GfUniverse>(g).p == 3);
  CHECK(std::get<GfUniverse>(g).n == 2);
  auto q = parse_universe("qi:3:random");
  REQUIRE(std::holds_alternative<QiUniverse>(q));
  CHECK(std::get<QiUniverse>(q).n == 3);
  auto t = parse_universe("table:some/file.json");
  REQUIRE(std::holds_alternative<TableUniverse>(t));
  CHECK(std::get<TableUniverse>(t).file == "some/file.json");

  CHECK_THROWS_AS(parse_universe("gf:3"), Error);
  CHECK_THROWS_AS(parse_universe("qi:3:exhaustive"), Error);
  CHECK_THROWS_AS(parse_universe("zmod:4:2"), Error);
  CHECK_THROWS_AS(parse_universe("table:"), Error);
}
