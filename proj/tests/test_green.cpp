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

#include "geninv/green.hpp"
#include "geninv/universe.hpp"

using namespace geninv;

namespace {
QiField qi;
}

TEST_CASE("green_leq on the worked examples") {
  SECTION("reflexivity canonicalizes to the identity witness") {
    for (auto d : {QiMatrix::from_ints(qi, 2, {1, 1, 0, 0}),
                   QiMatrix::identity(qi, 2),
                   QiMatrix::zero(qi, 2)}) {
      auto w = green_leq(d, d, GreenRel::L);
      REQUIRE(w.holds);
      CHECK(*w.x == QiMatrix::identity(qi, 2));
    }
  }
  SECTION("row spaces that do not contain each other") {
    auto a = QiMatrix::from_ints(qi, 2, {1, 0, 1, 0});
    auto b = QiMatrix::from_ints(qi, 2, {1, 1, 0, 0});
    CHECK_FALSE(green_leq(a, b, GreenRel::L).holds);
  }
  SECTION("scalar multiple rows with the canonical witness") {
    auto a = QiMatrix::from_ints(qi, 2, {1, 1, 0, 0});
    auto b = QiMatrix::from_ints(qi, 2, {2, 2, 0, 0});
    auto w = green_leq(a, b, GreenRel::L);
    REQUIRE(w.holds);
    auto expect = QiMatrix::zero(qi, 2);
    expect.at(0, 0) = GaussianRational{Rational(1, 2), Rational(0)};
    CHECK(*w.x == expect);
    CHECK(*w.x * b == a);
  }
}

TEST_CASE("witnesses reproduce the inputs exactly") {
  Rng rng(41);
  for (int k = 0; k < 60; ++k) {
    auto b = random_qi_matrix_mixed_rank(rng, qi, 3);
    auto x = random_qi_matrix(rng, qi, 3);
    auto a = x * b;  // a <=_L b by construction
    auto w = green_leq(a, b, GreenRel::L);
    REQUIRE(w.holds);
    CHECK(*w.x * b == a);

    auto c  = b * x;  // c <=_R b
    auto wr = green_leq(c, b, GreenRel::R);
    REQUIRE(wr.holds);
    CHECK(b * *wr.y == c);
  }
}

TEST_CASE("H is the conjunction of L and R") {
  Rng rng(43);
  for (int k = 0; k < 40; ++k) {
    auto a = random_qi_matrix_mixed_rank(rng, qi, 2);
    auto b = random_qi_matrix_mixed_rank(rng, qi, 2);
    auto h = green_leq(a, b, GreenRel::H);
    CHECK(h.holds
          == (green_leq(a, b, GreenRel::L).holds
              && green_leq(a, b, GreenRel::R).holds));
    if (h.holds) {
      CHECK(*h.x * b == a);
      CHECK(b * *h.y == a);
    }
  }
}

TEST_CASE("the preorder is reflexive and transitive") {
  Rng rng(47);
  for (int k = 0; k < 25; ++k) {
    auto b = random_qi_matrix_mixed_rank(rng, qi, 3);
    CHECK(green_leq(b, b, GreenRel::L).holds);
    CHECK(green_leq(b, b, GreenRel::R).holds);
    auto a = random_qi_matrix(rng, qi, 3) * b;        // a <=_L b
    auto c = random_qi_matrix(rng, qi, 3) * a;        // c <=_L a
    CHECK(green_leq(c, b, GreenRel::L).holds);        // transitivity
  }
}

TEST_CASE("green_leq rejects mismatched shapes") {
  auto a = QiMatrix::identity(qi, 2);
  auto b = QiMatrix::identity(qi, 3);
  CHECK_THROWS_AS(green_leq(a, b, GreenRel::L), Error);
}
