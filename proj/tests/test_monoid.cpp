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

#include "geninv/monoid.hpp"
#include "geninv/oracle.hpp"

using namespace geninv;

namespace {

//! The full multiplicative monoid of 2x2 matrices over GF(2), with
//! transpose as the involution.
ClosureResult m2gf2() {
  return closure(all_matrices(PrimeField(2), 2));
}

ElementId id_of(const ClosureResult& cl, const GfMatrix& m) {
  for (ElementId i = 0; i < cl.monoid.size(); ++i) {
    if (cl.elements[i] == m) {
      return i;
    }
  }
  FAIL("element not found in closure");
  return 0;
}

}  // namespace

TEST_CASE("loading validates the table") {
  SECTION("the two-element multiplicative monoid {1, 0}") {
    auto m = FiniteMonoid::validated(
        0, {{0, 1}, {1, 1}},
        std::vector<ElementId>{0, 1});  // star = identity map
    CHECK(m.size() == 2);
    CHECK(m.one() == 0);
    CHECK(m.has_star());
  }
  SECTION("a non-associative table is rejected with a triple") {
    // mul(1, mul(1,1)) = mul(1,0) = 1 but mul(mul(1,1),1) = mul(0,1) = 1;
    // break associativity elsewhere: use a 3-element table
    std::vector<std::vector<ElementId>> t = {
        {0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
    t[1][1] = 0;  // now (1*1)*1 = 0*1 = 1, but 1*(1*1) = 1*0 = 1 ... adjust
    t[2][1] = 1;
    try {
      FiniteMonoid::validated(0, t);
      FAIL("expected a validation error");
    } catch (const Error& e) {
      CHECK(std::string(e.what()).find("associative")
            != std::string::npos);
      CHECK(std::string(e.what()).find("triple") != std::string::npos);
    }
  }
  SECTION("a bad identity is rejected") {
    CHECK_THROWS_AS(FiniteMonoid::validated(1, {{0, 1}, {1, 1}}), Error);
  }
  SECTION("a star that is not an anti-automorphism is rejected") {
    // swap in the 2-element monoid breaks star(xy) = star(y) star(x)
    CHECK_THROWS_AS(FiniteMonoid::validated(
                        0, {{0, 1}, {1, 1}},
                        std::vector<ElementId>{1, 0}),
                    Error);
  }
}

TEST_CASE("closure of matrix generators") {
  SECTION("identity alone") {
    auto cl = closure({GfMatrix::identity(PrimeField(2), 2)});
    CHECK(cl.monoid.size() == 1);
  }
  SECTION("all sixteen 2x2 matrices over GF(2)") {
    auto cl = m2gf2();
    CHECK(cl.monoid.size() == 16);
    CHECK(cl.monoid.has_star());  // transpose-closed
    CHECK(cl.monoid.has_labels());
  }
  SECTION("a matrix of multiplicative order three over GF(3)") {
    PrimeField f3(3);
    auto       cl = closure({GfMatrix::from_ints(f3, 2, {1, 1, 0, 1})});
    CHECK(cl.monoid.size() == 3);  // I, M, M^2
  }
  SECTION("the size cap is enforced") {
    CHECK_THROWS_AS(closure(all_matrices(PrimeField(2), 2), 5), Error);
  }
}

TEST_CASE("exhaustive solution scans") {
  auto cl = m2gf2();
  SECTION("the Moore-Penrose inverse of the identity is the identity") {
    auto s = cl.monoid.solutions(SolveTag::mp, cl.monoid.one());
    REQUIRE(s.solutions.size() == 1);
    CHECK(s.solutions[0] == cl.monoid.one());
  }
  SECTION("[[1,1],[0,0]] has no Moore-Penrose inverse over GF(2)") {
    auto a = id_of(cl, GfMatrix::from_ints(PrimeField(2), 2, {1, 1, 0, 0}));
    CHECK(cl.monoid.solutions(SolveTag::mp, a).solutions.empty());
  }
  SECTION("the inverse of 1 along an idempotent d is d itself") {
    auto d = id_of(cl, GfMatrix::from_ints(PrimeField(2), 2, {1, 0, 0, 0}));
    auto s = cl.monoid.solutions(SolveTag::along, cl.monoid.one(), d);
    REQUIRE(s.solutions.size() == 1);
    CHECK(s.solutions[0] == d);
  }
  SECTION("a star-dependent tag needs a star") {
    auto m = FiniteMonoid::validated(0, {{0, 1}, {1, 1}});
    CHECK_THROWS_AS(m.solutions(SolveTag::mp, 0), Error);
  }
}

TEST_CASE("exhaustive Green scans") {
  auto cl = m2gf2();
  auto a  = id_of(cl, GfMatrix::from_ints(PrimeField(2), 2, {1, 0, 1, 0}));
  auto b  = id_of(cl, GfMatrix::from_ints(PrimeField(2), 2, {1, 1, 0, 0}));
  auto z  = id_of(cl, GfMatrix::zero(PrimeField(2), 2));
  for (ElementId x = 0; x < cl.monoid.size(); ++x) {
    CHECK(cl.monoid.green_le(x, x, GreenRel::L));  // reflexive
    CHECK(cl.monoid.green_le(z, x, GreenRel::L));  // zero below everything
  }
  CHECK_FALSE(cl.monoid.green_le(a, b, GreenRel::L));  // mirrors the Q case
}

TEST_CASE("along-inverse uniqueness and two-sidedness on every pair") {
  auto       cl = m2gf2();
  EnumOracle oracle(cl.monoid);
  for (ElementId a = 0; a < cl.monoid.size(); ++a) {
    for (ElementId d = 0; d < cl.monoid.size(); ++d) {
      auto s = cl.monoid.solutions(SolveTag::along, a, d);
      CHECK(s.solutions.size() <= 1);  // a^{||d} is unique when it exists
      const bool left  = !cl.monoid.solutions(SolveTag::left_along, a, d)
                              .solutions.empty();
      const bool right = !cl.monoid.solutions(SolveTag::right_along, a, d)
                              .solutions.empty();
      CHECK((left && right) == !s.solutions.empty());
      // every returned solution re-verifies its defining equations
      for (ElementId bb : s.solutions) {
        CHECK(cl.monoid.mul(cl.monoid.mul(bb, a), d) == d);
        CHECK(cl.monoid.mul(cl.monoid.mul(d, a), bb) == d);
        CHECK(cl.monoid.green_le(bb, d, GreenRel::H));
      }
      // the oracle tables agree with the raw scans
      CHECK(oracle.along_exists(a, d) == !s.solutions.empty());
      CHECK(oracle.left_along_exists(a, d) == left);
    }
  }
}

TEST_CASE("one-sided units are two-sided in a finite monoid") {
  auto cl  = m2gf2();
  auto one = cl.monoid.one();
  for (ElementId x = 0; x < cl.monoid.size(); ++x) {
    bool left_unit  = false;
    bool right_unit = false;
    for (ElementId y = 0; y < cl.monoid.size(); ++y) {
      left_unit  = left_unit || cl.monoid.mul(y, x) == one;
      right_unit = right_unit || cl.monoid.mul(x, y) == one;
    }
    CHECK(left_unit == right_unit);
  }
}

TEST_CASE("the literal right-along reading differs and stays quarantined") {
  auto cl = m2gf2();
  auto d  = id_of(cl, GfMatrix::from_ints(PrimeField(2), 2, {1, 0, 0, 0}));
  auto standard =
      cl.monoid.solutions(SolveTag::right_along, cl.monoid.one(), d, false);
  auto literal =
      cl.monoid.solutions(SolveTag::right_along, cl.monoid.one(), d, true);
  CHECK(standard.solutions != literal.solutions);
  // the standard reading keeps d a b = d
  for (ElementId b : standard.solutions) {
    CHECK(cl.monoid.mul(cl.monoid.mul(d, cl.monoid.one()), b) == d);
  }
}
