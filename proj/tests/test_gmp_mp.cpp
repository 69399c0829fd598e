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

#include "geninv/gmp.hpp"
#include "geninv/universe.hpp"

using namespace geninv;

namespace {

QiField   qi;
QiCarrier c2(qi, 2);

QiMatrix half(long num, long den, long n2, long d2, long n3, long d3,
              long n4, long d4) {
  auto m = QiMatrix::zero(qi, 2);
  m.at(0, 0) = GaussianRational{Rational(num, den), Rational(0)};
  m.at(0, 1) = GaussianRational{Rational(n2, d2), Rational(0)};
  m.at(1, 0) = GaussianRational{Rational(n3, d3), Rational(0)};
  m.at(1, 1) = GaussianRational{Rational(n4, d4), Rational(0)};
  return m;
}

}  // namespace

TEST_CASE("Moore-Penrose inverse by the unit criterion") {
  SECTION("identity") {
    auto r = mp_inverse(c2, QiMatrix::identity(qi, 2));
    REQUIRE(r.exists());
    CHECK(*r.mp == QiMatrix::identity(qi, 2));
  }
  SECTION("worked rank-one example") {
    auto a = QiMatrix::from_ints(qi, 2, {1, 0, 1, 0});
    auto r = mp_inverse(c2, a);
    REQUIRE(r.exists());
    CHECK(*r.mp == half(1, 2, 1, 2, 0, 1, 0, 1));
    CHECK(*r.mp == *r.one_four * a * *r.one_three);
    // the factorization oracle agrees
    CHECK(*mp_via_rank_factorization(a) == *r.mp);
  }
  SECTION("no Moore-Penrose inverse over GF(2)") {
    PrimeField f2(2);
    GfCarrier  cg(f2, 2);
    auto       a = GfMatrix::from_ints(f2, 2, {1, 1, 0, 0});
    auto       r = mp_inverse(cg, a);
    CHECK(r.status == Status::not_exists);
    CHECK_FALSE(r.unit->invertible());
    CHECK(mp_via_rank_factorization(a) == std::nullopt);
    // and the exhaustive scan over all 16 candidates agrees
    bool any = false;
    for (const auto& x : all_matrices(f2, 2)) {
      const auto ax = a * x;
      const auto xa = x * a;
      any = any
            || (ax * a == a && xa * x == x && ax.star() == ax
                && xa.star() == xa);
    }
    CHECK_FALSE(any);
  }
  SECTION("Penrose equations and oracle agreement on random matrices") {
    Rng rng(71);
    for (int k = 0; k < 40; ++k) {
      auto a = random_qi_matrix_mixed_rank(rng, qi, 3);
      QiCarrier c3(qi, 3);
      auto      r = mp_inverse(c3, a);
      REQUIRE(r.exists());  // over Q(i) with conjugate transpose, always
      const auto ax = a * *r.mp;
      const auto xa = *r.mp * a;
      CHECK(ax * a == a);
      CHECK(xa * *r.mp == *r.mp);
      CHECK(ax.star() == ax);
      CHECK(xa.star() == xa);
      CHECK(*mp_via_rank_factorization(a) == *r.mp);
    }
  }
}

TEST_CASE("Moore-Penrose uniqueness against the exhaustive scan") {
  PrimeField f3(3);
  GfCarrier  cg(f3, 2);
  for (const auto& a : all_matrices(f3, 2)) {
    auto r = mp_inverse(cg, a);
    // the brute-force scan over all 81 candidates
    std::vector<GfMatrix> found;
    for (const auto& x : all_matrices(f3, 2)) {
      const auto ax = a * x;
      const auto xa = x * a;
      if (ax * a == a && xa * x == x && ax.star() == ax
          && xa.star() == xa) {
        found.push_back(x);
      }
    }
    CHECK(r.exists() == !found.empty());
    CHECK(found.size() <= 1);
    if (r.exists()) {
      CHECK(*r.mp == found[0]);
    }
  }
}

TEST_CASE("left and right g-MP checks") {
  SECTION("the unity is left g-MP invertible with trivial witnesses") {
    auto r = gmp_check(c2, QiMatrix::identity(qi, 2), Side::left);
    REQUIRE(r.exists());
    CHECK(*r.first == QiMatrix::identity(qi, 2));
    CHECK(*r.second == QiMatrix::identity(qi, 2));
  }
  SECTION("the worked idempotent example") {
    auto a = QiMatrix::from_ints(qi, 2, {1, 0, 1, 0});
    auto r = gmp_check(c2, a, Side::left);
    REQUIRE(r.exists());
    // a = a^2, so the canonical x is the identity
    CHECK(*r.first == QiMatrix::identity(qi, 2));
    // the returned y satisfies a = y a a* a exactly
    CHECK(*r.second * (a * a.star() * a) == a);
    // the stated witness pair x = 1, y = (1/2) 1 also validates
    auto half_id =
        QiMatrix::identity(qi, 2).scaled(GaussianRational{Rational(1, 2),
                                                          Rational(0)});
    CHECK(QiMatrix::identity(qi, 2) * (a * a) == a);
    CHECK(half_id * (a * a.star() * a) == a);
  }
  SECTION("the nilpotent is not left g-MP invertible") {
    auto r = gmp_check(c2, QiMatrix::from_ints(qi, 2, {0, 1, 0, 0}),
                       Side::left);
    CHECK(r.status == Status::not_exists);
  }
  SECTION("right side witnesses re-verify") {
    Rng rng(73);
    for (int k = 0; k < 30; ++k) {
      auto a = random_qi_matrix_mixed_rank(rng, qi, 2);
      auto r = gmp_check(c2, a, Side::right);
      if (r.exists()) {
        CHECK((a * a) * *r.first == a);
        CHECK((a * a.star() * a) * *r.second == a);
        CHECK((a * a.star() * a) * *r.witness == a);
      }
    }
  }
}

TEST_CASE("EP elements") {
  SECTION("units are EP") {
    CHECK(is_ep(c2, QiMatrix::from_ints(qi, 2, {2, 1, 1, 2})).is_ep);
  }
  SECTION("a symmetric idempotent is EP") {
    CHECK(is_ep(c2, QiMatrix::from_ints(qi, 2, {1, 0, 0, 0})).is_ep);
  }
  SECTION("the worked rank-one example is not EP") {
    auto r = is_ep(c2, QiMatrix::from_ints(qi, 2, {1, 0, 1, 0}));
    CHECK_FALSE(r.is_ep);
    CHECK(r.mp_exists);
    CHECK_FALSE(r.commutes);
  }
}

TEST_CASE("Moore-Penrose inverse through inverses along") {
  SECTION("identity") {
    auto r = mp_via_star_along(c2, QiMatrix::identity(qi, 2));
    CHECK(r.all_hold());
  }
  SECTION("worked example: a^{||a*} equals a^dagger") {
    auto a = QiMatrix::from_ints(qi, 2, {1, 0, 1, 0});
    auto r = mp_via_star_along(c2, a);
    REQUIRE(r.status == Status::exists);
    CHECK(r.all_hold());
    CHECK(*r.along_star_value == half(1, 2, 1, 2, 0, 1, 0, 1));
  }
  SECTION("diagonal case") {
    auto a = QiMatrix::from_ints(qi, 2, {2, 0, 0, 0});
    auto r = mp_via_star_along(c2, a);
    CHECK(r.all_hold());
    CHECK(*r.mp == half(1, 2, 0, 1, 0, 1, 0, 1));
  }
  SECTION("precondition: a must be Moore-Penrose invertible") {
    PrimeField f2(2);
    GfCarrier  cg(f2, 2);
    CHECK(mp_via_star_along(cg, GfMatrix::from_ints(f2, 2, {1, 1, 0, 0}))
              .status
          == Status::precondition_failed);
  }
}

TEST_CASE("group inverse through the rank factorization agrees") {
  Rng rng(79);
  QiCarrier c3(qi, 3);
  for (int k = 0; k < 40; ++k) {
    auto a  = random_qi_matrix_mixed_rank(rng, qi, 3);
    auto r  = group_inverse(c3, a);
    auto o  = group_via_rank_factorization(a);
    CHECK(r.exists() == o.has_value());
    if (r.exists()) {
      CHECK(*r.a_sharp == *o);
    }
  }
}

TEST_CASE("criterion invariance under the inner-inverse choice") {
  Rng rng(83);
  for (int k = 0; k < 25; ++k) {
    auto a = random_qi_matrix_mixed_rank(rng, qi, 2);
    const bool expected =
        mp_via_rank_factorization(a).has_value();
    // u = a a* + 1 - a g must flip invertibility for no choice of g
    for (int j = 0; j < 5; ++j) {
      auto s = random_qi_matrix(rng, qi, 2);
      auto t = random_qi_matrix(rng, qi, 2);
      auto g = inner_inverse_family(a, s, t);
      auto u = a * a.star() + QiMatrix::identity(qi, 2) - a * g;
      CHECK(try_invert(u).has_value() == expected);
    }
  }
}
