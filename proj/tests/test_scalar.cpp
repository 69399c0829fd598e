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

#include "geninv/scalar.hpp"
#include "geninv/universe.hpp"

using namespace geninv;

TEST_CASE("Gaussian rational arithmetic and conjugation") {
  QiField qi;
  auto    i  = GaussianRational{Rational(0), Rational(1)};
  auto    z  = qi.add(qi.from_int(3), i);  // 3 + i
  auto    zz = qi.mul(z, qi.conj(z));      // |z|^2 = 10
  CHECK(zz == qi.from_int(10));

  auto inv = qi.inv(z);
  REQUIRE(inv.has_value());
  CHECK(qi.mul(z, *inv) == qi.one());
  CHECK(qi.inv(qi.zero()) == std::nullopt);

  // conjugation is an involutive automorphism
  auto w = GaussianRational{Rational(2, 3), Rational(-5, 7)};
  CHECK(qi.conj(qi.conj(w)) == w);
  CHECK(qi.conj(qi.mul(z, w)) == qi.mul(qi.conj(z), qi.conj(w)));
}

TEST_CASE("Qi parsing accepts the documented forms") {
  QiField qi;
  CHECK(qi.parse("7") == qi.from_int(7));
  CHECK(qi.parse("-3/4") == GaussianRational{Rational(-3, 4), Rational(0)});
  CHECK(qi.parse("1/2+1/3 i")
        == GaussianRational{Rational(1, 2), Rational(1, 3)});
  CHECK(qi.parse("1/2-1/3 i")
        == GaussianRational{Rational(1, 2), Rational(-1, 3)});
  CHECK(qi.parse("2 i") == GaussianRational{Rational(0), Rational(2)});
  CHECK(qi.parse("-2/5 i") == GaussianRational{Rational(0), Rational(-2, 5)});
  CHECK(qi.parse("4/6") == GaussianRational{Rational(2, 3), Rational(0)});

  CHECK_THROWS_AS(qi.parse(""), Error);
  CHECK_THROWS_AS(qi.parse("1/0"), Error);
  CHECK_THROWS_AS(qi.parse("i"), Error);
  CHECK_THROWS_AS(qi.parse("1+2"), Error);
  CHECK_THROWS_AS(qi.parse("x"), Error);
}

TEST_CASE("Qi formatting round-trips through parse") {
  QiField qi;
  Rng     rng(11);
  for (int k = 0; k < 200; ++k) {
    auto s = random_qi_entry(rng);
    CHECK(qi.parse(qi.str(s)) == s);
  }
  CHECK(qi.str(GaussianRational{Rational(0), Rational(1, 2)}) == "0+1/2 i");
  CHECK(qi.str(GaussianRational{Rational(-1), Rational(-2, 3)})
        == "-1-2/3 i");
  CHECK(qi.str(qi.zero()) == "0");
}

TEST_CASE("prime field arithmetic") {
  PrimeField f5(5);
  CHECK(f5.mul(2, 3) == 1);  // 2 * 3 = 6 = 1 mod 5
  CHECK(f5.add(4, 3) == 2);
  CHECK(f5.sub(1, 3) == 3);
  CHECK(f5.neg(0) == 0);
  REQUIRE(f5.inv(2).has_value());
  CHECK(*f5.inv(2) == 3);
  CHECK(f5.inv(0) == std::nullopt);
  CHECK(f5.conj(4) == 4);

  // every nonzero residue has an inverse
  PrimeField f97(97);
  for (std::int64_t a = 1; a < 97; ++a) {
    auto inv = f97.inv(a);
    REQUIRE(inv.has_value());
    CHECK(f97.mul(a, *inv) == 1);
  }
}

TEST_CASE("prime field validates its modulus") {
  CHECK_THROWS_AS(PrimeField(1), Error);
  CHECK_THROWS_AS(PrimeField(4), Error);
  CHECK_THROWS_AS(PrimeField(91), Error);  // 7 * 13
  CHECK_NOTHROW(PrimeField(2));
  CHECK_NOTHROW(PrimeField(2147483647));   // 2^31 - 1
  CHECK((is_prime(3) && is_prime(101) && !is_prime(1001)));
}

TEST_CASE("prime field parsing reduces residues") {
  PrimeField f7(7);
  CHECK(f7.parse("12") == 5);
  CHECK(f7.parse("0") == 0);
  CHECK_THROWS_AS(f7.parse("-1"), Error);
  CHECK_THROWS_AS(f7.parse("1/2"), Error);
  CHECK_THROWS_AS(f7.parse(""), Error);
}
