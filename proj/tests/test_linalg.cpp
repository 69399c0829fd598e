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

#include "geninv/linalg.hpp"
#include "geninv/monoid.hpp"
#include "geninv/universe.hpp"

using namespace geninv;

namespace {
QiField qi;
}

TEST_CASE("rref on the worked examples") {
  SECTION("identity") {
    auto r = rref(QiMatrix::identity(qi, 2));
    CHECK(r.R == QiMatrix::identity(qi, 2));
    CHECK(r.T == QiMatrix::identity(qi, 2));
    CHECK(r.rank == 2);
  }
  SECTION("rank one, hand-reduced") {
    // [[1,0],[1,0]]: subtract row 1 from row 2
    auto m = QiMatrix::from_ints(qi, 2, {1, 0, 1, 0});
    auto r = rref(m);
    CHECK(r.R == QiMatrix::from_ints(qi, 2, {1, 0, 0, 0}));
    CHECK(r.T == QiMatrix::from_ints(qi, 2, {1, 0, -1, 1}));
    CHECK(r.rank == 1);
    CHECK(r.pivots == std::vector<int>{0});
    CHECK(r.T * m == r.R);
  }
  SECTION("zero matrix") {
    auto r = rref(QiMatrix::zero(qi, 2));
    CHECK(r.rank == 0);
    CHECK(r.R.is_zero());
  }
}

TEST_CASE("rref properties on random input") {
  Rng rng(17);
  for (int k = 0; k < 30; ++k) {
    auto m = random_qi_matrix_mixed_rank(rng, qi, 3);
    auto r = rref(m);
    CHECK(r.T * m == r.R);
    CHECK(try_invert(r.T).has_value());
    CHECK(static_cast<int>(r.pivots.size()) == r.rank);
    // determinism: identical inputs, identical outputs
    auto r2 = rref(m);
    CHECK(r.R == r2.R);
    CHECK(r.T == r2.T);
  }
}

TEST_CASE("rank normal form reconstructs the input") {
  SECTION("examples") {
    auto f = rank_normal_form(QiMatrix::identity(qi, 2));
    CHECK(f.rank == 2);
    CHECK(f.P == QiMatrix::identity(qi, 2));
    CHECK(f.Q == QiMatrix::identity(qi, 2));

    auto m = QiMatrix::from_ints(qi, 2, {1, 0, 1, 0});
    auto g = rank_normal_form(m);
    CHECK(g.rank == 1);
    CHECK(g.P * rank_marker(qi, 2, g.rank) * g.Q == m);

    CHECK(rank_normal_form(QiMatrix::zero(qi, 2)).rank == 0);
  }
  SECTION("random") {
    Rng rng(23);
    for (int k = 0; k < 30; ++k) {
      auto m = random_qi_matrix_mixed_rank(rng, qi, 3);
      auto f = rank_normal_form(m);
      CHECK(f.P * f.Pinv == QiMatrix::identity(qi, 3));
      CHECK(f.Q * f.Qinv == QiMatrix::identity(qi, 3));
      CHECK(f.P * rank_marker(qi, 3, f.rank) * f.Q == m);
    }
  }
}

TEST_CASE("canonical inner inverse") {
  SECTION("a unit's only inner inverse is its inverse") {
    auto u = QiMatrix::from_ints(qi, 2, {2, 1, 1, 2});
    CHECK(inner_inverse(u) == *try_invert(u));
  }
  SECTION("defining identity") {
    auto m = QiMatrix::from_ints(qi, 2, {1, 0, 1, 0});
    auto g = inner_inverse(m);
    CHECK(m * g * m == m);
  }
  SECTION("zero") {
    CHECK(inner_inverse(QiMatrix::zero(qi, 2)).is_zero());
  }
  SECTION("random, both rings") {
    Rng rng(29);
    for (int k = 0; k < 30; ++k) {
      auto m = random_qi_matrix_mixed_rank(rng, qi, 3);
      auto g = inner_inverse(m);
      CHECK(m * g * m == m);
    }
    PrimeField f3(3);
    for (const auto& m : all_matrices(f3, 2)) {
      auto g = inner_inverse(m);
      CHECK(m * g * m == m);
    }
  }
}

TEST_CASE("parametric inner-inverse family") {
  PrimeField f3(3);
  auto       m = GfMatrix::from_ints(f3, 2, {1, 2, 2, 1});
  SECTION("s = t = 0 gives the canonical choice") {
    auto z = GfMatrix::zero(f3, 2);
    CHECK(inner_inverse_family(m, z, z) == inner_inverse(m));
  }
  SECTION("every member satisfies m x m = m") {
    Rng rng(31);
    for (int k = 0; k < 25; ++k) {
      std::vector<std::int64_t> e1, e2;
      for (int i = 0; i < 4; ++i) {
        e1.push_back(static_cast<std::int64_t>(rng.below(3)));
        e2.push_back(static_cast<std::int64_t>(rng.below(3)));
      }
      GfMatrix s(f3, 2, e1), t(f3, 2, e2);
      auto     x = inner_inverse_family(m, s, t);
      CHECK(m * x * m == m);
    }
  }
}

TEST_CASE("family members land in the exhaustively enumerated set") {
  PrimeField f2(2);
  auto       mats = all_matrices(f2, 2);
  auto       a    = GfMatrix::from_ints(f2, 2, {1, 1, 0, 0});
  // the oracle: enumerate all inner inverses of a by brute force
  std::vector<GfMatrix> inner_set;
  for (const auto& x : mats) {
    if (a * x * a == a) {
      inner_set.push_back(x);
    }
  }
  REQUIRE(!inner_set.empty());
  for (const auto& s : mats) {
    for (const auto& t : mats) {
      auto x  = inner_inverse_family(a, s, t);
      bool in = false;
      for (const auto& y : inner_set) {
        in = in || x == y;
      }
      CHECK(in);
    }
  }
}

TEST_CASE("try_invert") {
  SECTION("worked rational example") {
    auto m   = QiMatrix::from_ints(qi, 2, {2, 1, 1, 2});
    auto inv = try_invert(m);
    REQUIRE(inv.has_value());
    // det = 3, inverse = (1/3) [[2,-1],[-1,2]]
    auto expect = QiMatrix::from_ints(qi, 2, {2, -1, -1, 2})
                      .scaled(GaussianRational{Rational(1, 3), Rational(0)});
    CHECK(*inv == expect);
    CHECK(*inv * m == QiMatrix::identity(qi, 2));
    CHECK(m * *inv == QiMatrix::identity(qi, 2));
  }
  SECTION("rank deficient has no inverse") {
    CHECK(try_invert(QiMatrix::from_ints(qi, 2, {1, 1, 0, 0}))
          == std::nullopt);
  }
  SECTION("1x1 over GF(5): 2 * 3 = 6 = 1") {
    PrimeField f5(5);
    auto       m   = GfMatrix::from_ints(f5, 1, {2});
    auto       inv = try_invert(m);
    REQUIRE(inv.has_value());
    CHECK(*inv == GfMatrix::from_ints(f5, 1, {3}));
  }
  SECTION("succeeds exactly at full rank") {
    Rng rng(37);
    for (int k = 0; k < 30; ++k) {
      auto m = random_qi_matrix_mixed_rank(rng, qi, 3);
      CHECK(try_invert(m).has_value() == (rref(m).rank == 3));
    }
  }
}
