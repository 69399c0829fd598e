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
// Verification contexts.  A theorem check is written once against this
// surface and runs over three habitats:
//   EnumMatrixCtx - every n x n matrix over GF(p); existence questions are
//     answered by exhaustive table scans (the oracle side) while formulas
//     and unit criteria run on the matrices themselves (the criterion
//     side), so each sweep doubles as an oracle-agreement test.
//   TableCtx - a user-supplied finite monoid; scans only, monoid tier.
//   RandQiCtx - seeded random matrices over Q(i); existence questions are
//     answered by Green/rank routes, values cross-checked against
//     factorization routes, so the two sides stay independent here too.

#ifndef GENINV_VERIFY_CTX_HPP_
#define GENINV_VERIFY_CTX_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "along.hpp"
#include "carrier.hpp"
#include "gmp.hpp"
#include "monoid.hpp"
#include "oracle.hpp"
#include "universe.hpp"

namespace geninv {

//! Exhaustive universe of all n x n matrices over GF(p), with transpose as
//! the involution.  Elements are ids into the enumeration; ring operations
//! round-trip through the matrices.
class EnumMatrixCtx {
 public:
  using Elem                         = ElementId;
  static constexpr bool has_ring_v   = true;
  static constexpr bool enumerable_v = true;

  EnumMatrixCtx(const PrimeField& dom, int n, std::size_t cap)
      : dom_(dom),
        n_(n),
        carrier_(dom, n),
        elems_(all_matrices(dom, n, cap)),
        code_to_id_(elems_.size(), 0) {
    const ElementId k = static_cast<ElementId>(elems_.size());
    for (ElementId i = 0; i < k; ++i) {
      code_to_id_[encode(elems_[i])] = i;
    }
    std::vector<std::vector<ElementId>> mul(k, std::vector<ElementId>(k));
    for (ElementId i = 0; i < k; ++i) {
      for (ElementId j = 0; j < k; ++j) {
        mul[i][j] = code_to_id_[encode(elems_[i] * elems_[j])];
      }
    }
    std::vector<ElementId> star(k);
    for (ElementId i = 0; i < k; ++i) {
      star[i] = code_to_id_[encode(elems_[i].transpose())];
    }
    std::vector<std::string> labels;
    labels.reserve(k);
    for (const auto& m : elems_) {
      labels.push_back(m.str());
    }
    monoid_ = FiniteMonoid::trusted(code_to_id_[encode(
                                        GfMatrix::identity(dom_, n_))],
                                    std::move(mul), std::move(star),
                                    std::move(labels));
    oracle_.emplace(*monoid_);
  }

  std::uint64_t size() const {
    return elems_.size();
  }
  Elem element(std::uint64_t i) const {
    return static_cast<Elem>(i);
  }
  const GfMatrix& to_matrix(Elem e) const {
    return elems_[e];
  }
  Elem to_id(const GfMatrix& m) const {
    return code_to_id_[encode(m)];
  }
  const EnumOracle& oracle() const {
    return *oracle_;
  }
  const FiniteMonoid& monoid() const {
    return *monoid_;
  }
  const GfCarrier& matrix_carrier() const {
    return carrier_;
  }

  Elem mul(Elem a, Elem b) const {
    return monoid_->mul(a, b);
  }
  Elem one() const {
    return monoid_->one();
  }
  bool eq(Elem a, Elem b) const {
    return a == b;
  }
  bool has_star() const {
    return true;
  }
  Elem star(Elem a) const {
    return monoid_->star(a);
  }
  std::string show(Elem a) const {
    return monoid_->label(a);
  }

  // criterion-side Green decisions: row reduction on the matrices
  std::optional<Elem> le_l(Elem a, Elem b) const {
    auto w = le_l_witness(to_matrix(a), to_matrix(b));
    if (!w) {
      return std::nullopt;
    }
    return to_id(*w);
  }
  std::optional<Elem> le_r(Elem a, Elem b) const {
    auto w = le_r_witness(to_matrix(a), to_matrix(b));
    if (!w) {
      return std::nullopt;
    }
    return to_id(*w);
  }

  // oracle-side decisions: exhaustive scans over the table
  bool o_green_l(Elem a, Elem b) const {
    return oracle_->green_l(a, b);
  }
  bool o_green_r(Elem a, Elem b) const {
    return oracle_->green_r(a, b);
  }
  std::optional<Elem> o_le_l_witness(Elem a, Elem b) const {
    return oracle_->le_l_witness(a, b);
  }
  std::optional<Elem> o_le_r_witness(Elem a, Elem b) const {
    return oracle_->le_r_witness(a, b);
  }
  bool o_along_exists(Elem a, Elem d) const {
    return oracle_->along_exists(a, d);
  }
  std::optional<Elem> o_along(Elem a, Elem d) const {
    return oracle_->along(a, d);
  }
  bool o_lalong(Elem a, Elem d) const {
    return oracle_->left_along_exists(a, d);
  }
  bool o_ralong(Elem a, Elem d) const {
    return oracle_->right_along_exists(a, d);
  }
  std::optional<Elem> o_lalong_witness(Elem a, Elem d) const {
    return oracle_->left_along_witness(a, d);
  }
  std::optional<Elem> o_ralong_witness(Elem a, Elem d) const {
    return oracle_->right_along_witness(a, d);
  }
  std::vector<Elem> o_lalong_set(Elem a, Elem d, std::size_t cap) const {
    auto s = oracle_->left_along_set(a, d);
    if (s.size() > cap) {
      s.resize(cap);
    }
    return s;
  }
  std::vector<Elem> o_ralong_set(Elem a, Elem d, std::size_t cap) const {
    auto s = oracle_->right_along_set(a, d);
    if (s.size() > cap) {
      s.resize(cap);
    }
    return s;
  }
  bool o_mp_exists(Elem a) const {
    return oracle_->mp(a).has_value();
  }
  std::optional<Elem> o_mp(Elem a) const {
    return oracle_->mp(a);
  }
  bool o_group_exists(Elem a) const {
    return oracle_->group(a).has_value();
  }
  std::optional<Elem> o_group(Elem a) const {
    return oracle_->group(a);
  }
  bool o_gmp_left(Elem a) const {
    return oracle_->gmp_left(a);
  }
  bool o_gmp_right(Elem a) const {
    return oracle_->gmp_right(a);
  }

  //! All inner inverses when the universe is small, a spread otherwise.
  std::vector<Elem> inner_choices(Elem d, std::size_t max_extra,
                                  std::uint64_t /*seed*/) const {
    const auto& all = oracle_->inner_list(d);
    if (size() <= 128 || all.size() <= max_extra + 1) {
      return all;
    }
    std::vector<Elem> out;
    const std::size_t step = all.size() / (max_extra + 1);
    for (std::size_t i = 0; i < all.size(); i += step) {
      out.push_back(all[i]);
    }
    return out;
  }

  //! All x with x * target = a (scan), capped.
  std::vector<Elem> left_factors(Elem a, Elem target, std::size_t cap) const {
    std::vector<Elem> out;
    for (ElementId x = 0; x < size() && out.size() < cap; ++x) {
      if (mul(x, target) == a) {
        out.push_back(x);
      }
    }
    return out;
  }
  std::vector<Elem> right_factors(Elem a, Elem target, std::size_t cap) const {
    std::vector<Elem> out;
    for (ElementId y = 0; y < size() && out.size() < cap; ++y) {
      if (mul(target, y) == a) {
        out.push_back(y);
      }
    }
    return out;
  }

  // ring tier, through the matrices
  Elem r_add(Elem a, Elem b) const {
    return to_id(to_matrix(a) + to_matrix(b));
  }
  Elem r_sub(Elem a, Elem b) const {
    return to_id(to_matrix(a) - to_matrix(b));
  }
  std::optional<Elem> r_inv(Elem a) const {
    auto v = try_invert(to_matrix(a));
    if (!v) {
      return std::nullopt;
    }
    return to_id(*v);
  }
  Elem r_inner(Elem a) const {
    return to_id(inner_inverse(to_matrix(a)));
  }

 private:
  std::size_t encode(const GfMatrix& m) const {
    const std::int64_t p = dom_.modulus();
    std::size_t        c = 0;
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) {
        c = c * static_cast<std::size_t>(p)
            + static_cast<std::size_t>(m.at(i, j));
      }
    }
    return c;
  }

  PrimeField                  dom_;
  int                         n_;
  GfCarrier                   carrier_;
  std::vector<GfMatrix>       elems_;
  std::vector<ElementId>      code_to_id_;
  std::optional<FiniteMonoid> monoid_;
  std::optional<EnumOracle>   oracle_;
};

//! A user-supplied finite monoid.  Monoid tier only.
class TableCtx {
 public:
  using Elem                         = ElementId;
  static constexpr bool has_ring_v   = false;
  static constexpr bool enumerable_v = true;

  explicit TableCtx(const FiniteMonoid& m) : monoid_(&m), oracle_(m) {}

  std::uint64_t size() const {
    return monoid_->size();
  }
  Elem element(std::uint64_t i) const {
    return static_cast<Elem>(i);
  }
  const EnumOracle& oracle() const {
    return oracle_;
  }
  const FiniteMonoid& monoid() const {
    return *monoid_;
  }

  Elem mul(Elem a, Elem b) const {
    return monoid_->mul(a, b);
  }
  Elem one() const {
    return monoid_->one();
  }
  bool eq(Elem a, Elem b) const {
    return a == b;
  }
  bool has_star() const {
    return monoid_->has_star();
  }
  Elem star(Elem a) const {
    return monoid_->star(a);
  }
  std::string show(Elem a) const {
    return monoid_->describe(a);
  }

  std::optional<Elem> le_l(Elem a, Elem b) const {
    return monoid_->le_l_witness(a, b);
  }
  std::optional<Elem> le_r(Elem a, Elem b) const {
    return monoid_->le_r_witness(a, b);
  }

  bool o_green_l(Elem a, Elem b) const {
    return oracle_.green_l(a, b);
  }
  bool o_green_r(Elem a, Elem b) const {
    return oracle_.green_r(a, b);
  }
  std::optional<Elem> o_le_l_witness(Elem a, Elem b) const {
    return oracle_.le_l_witness(a, b);
  }
  std::optional<Elem> o_le_r_witness(Elem a, Elem b) const {
    return oracle_.le_r_witness(a, b);
  }
  bool o_along_exists(Elem a, Elem d) const {
    return oracle_.along_exists(a, d);
  }
  std::optional<Elem> o_along(Elem a, Elem d) const {
    return oracle_.along(a, d);
  }
  bool o_lalong(Elem a, Elem d) const {
    return oracle_.left_along_exists(a, d);
  }
  bool o_ralong(Elem a, Elem d) const {
    return oracle_.right_along_exists(a, d);
  }
  std::optional<Elem> o_lalong_witness(Elem a, Elem d) const {
    return oracle_.left_along_witness(a, d);
  }
  std::optional<Elem> o_ralong_witness(Elem a, Elem d) const {
    return oracle_.right_along_witness(a, d);
  }
  std::vector<Elem> o_lalong_set(Elem a, Elem d, std::size_t cap) const {
    auto s = oracle_.left_along_set(a, d);
    if (s.size() > cap) {
      s.resize(cap);
    }
    return s;
  }
  std::vector<Elem> o_ralong_set(Elem a, Elem d, std::size_t cap) const {
    auto s = oracle_.right_along_set(a, d);
    if (s.size() > cap) {
      s.resize(cap);
    }
    return s;
  }
  bool o_mp_exists(Elem a) const {
    return oracle_.mp(a).has_value();
  }
  std::optional<Elem> o_mp(Elem a) const {
    return oracle_.mp(a);
  }
  bool o_group_exists(Elem a) const {
    return oracle_.group(a).has_value();
  }
  std::optional<Elem> o_group(Elem a) const {
    return oracle_.group(a);
  }
  bool o_gmp_left(Elem a) const {
    return oracle_.gmp_left(a);
  }
  bool o_gmp_right(Elem a) const {
    return oracle_.gmp_right(a);
  }

  std::vector<Elem> inner_choices(Elem d, std::size_t max_extra,
                                  std::uint64_t /*seed*/) const {
    const auto& all = oracle_.inner_list(d);
    if (size() <= 128 || all.size() <= max_extra + 1) {
      return all;
    }
    std::vector<Elem> out;
    const std::size_t step = all.size() / (max_extra + 1);
    for (std::size_t i = 0; i < all.size(); i += step) {
      out.push_back(all[i]);
    }
    return out;
  }

  std::vector<Elem> left_factors(Elem a, Elem target, std::size_t cap) const {
    std::vector<Elem> out;
    for (ElementId x = 0; x < size() && out.size() < cap; ++x) {
      if (mul(x, target) == a) {
        out.push_back(x);
      }
    }
    return out;
  }
  std::vector<Elem> right_factors(Elem a, Elem target, std::size_t cap) const {
    std::vector<Elem> out;
    for (ElementId y = 0; y < size() && out.size() < cap; ++y) {
      if (mul(target, y) == a) {
        out.push_back(y);
      }
    }
    return out;
  }

 private:
  const FiniteMonoid* monoid_;
  EnumOracle          oracle_;
};

//! Seeded random matrices over Q(i).  Existence oracles use Green/rank
//! routes; values come from the factorization routes, keeping them
//! independent of the unit criteria being verified.
class RandQiCtx {
 public:
  using Elem                         = QiMatrix;
  static constexpr bool has_ring_v   = true;
  static constexpr bool enumerable_v = false;

  RandQiCtx(const QiField& dom, int n) : dom_(dom), n_(n), carrier_(dom, n) {}

  const QiField& domain() const {
    return dom_;
  }
  int dim() const {
    return n_;
  }
  const QiCarrier& matrix_carrier() const {
    return carrier_;
  }

  Elem mul(const Elem& a, const Elem& b) const {
    return a * b;
  }
  Elem one() const {
    return Elem::identity(dom_, n_);
  }
  bool eq(const Elem& a, const Elem& b) const {
    return a == b;
  }
  bool has_star() const {
    return true;
  }
  Elem star(const Elem& a) const {
    return a.star();
  }
  std::string show(const Elem& a) const {
    return a.str();
  }

  std::optional<Elem> le_l(const Elem& a, const Elem& b) const {
    return le_l_witness(a, b);
  }
  std::optional<Elem> le_r(const Elem& a, const Elem& b) const {
    return le_r_witness(a, b);
  }

  bool o_green_l(const Elem& a, const Elem& b) const {
    return le_l_witness(a, b).has_value();
  }
  bool o_green_r(const Elem& a, const Elem& b) const {
    return le_r_witness(a, b).has_value();
  }
  std::optional<Elem> o_le_l_witness(const Elem& a, const Elem& b) const {
    return le_l_witness(a, b);
  }
  std::optional<Elem> o_le_r_witness(const Elem& a, const Elem& b) const {
    return le_r_witness(a, b);
  }
  bool o_along_exists(const Elem& a, const Elem& d) const {
    const Elem dad = d * a * d;
    return le_l_witness(d, dad).has_value()
           && le_r_witness(d, dad).has_value();
  }
  std::optional<Elem> o_along(const Elem& a, const Elem& d) const {
    if (!o_along_exists(a, d)) {
      return std::nullopt;
    }
    auto r = inverse_along(carrier_, a, d);
    require(r.exists(), "Green route and unit route disagree on a^{||d}",
            ErrorKind::internal);
    return r.b;
  }
  bool o_lalong(const Elem& a, const Elem& d) const {
    return le_l_witness(d, d * a * d).has_value();
  }
  bool o_ralong(const Elem& a, const Elem& d) const {
    return le_r_witness(d, d * a * d).has_value();
  }
  std::optional<Elem> o_lalong_witness(const Elem& a, const Elem& d) const {
    auto r = one_sided_along(carrier_, a, d, Side::left);
    return r.b;
  }
  std::optional<Elem> o_ralong_witness(const Elem& a, const Elem& d) const {
    auto r = one_sided_along(carrier_, a, d, Side::right);
    return r.b;
  }
  std::vector<Elem> o_lalong_set(const Elem& a, const Elem& d,
                                 std::size_t /*cap*/) const {
    auto w = o_lalong_witness(a, d);
    return w ? std::vector<Elem>{*w} : std::vector<Elem>{};
  }
  std::vector<Elem> o_ralong_set(const Elem& a, const Elem& d,
                                 std::size_t /*cap*/) const {
    auto w = o_ralong_witness(a, d);
    return w ? std::vector<Elem>{*w} : std::vector<Elem>{};
  }
  bool o_mp_exists(const Elem& a) const {
    return mp_via_rank_factorization(a).has_value();
  }
  std::optional<Elem> o_mp(const Elem& a) const {
    return mp_via_rank_factorization(a);
  }
  bool o_group_exists(const Elem& a) const {
    return rank(a * a) == rank(a);
  }
  std::optional<Elem> o_group(const Elem& a) const {
    return group_via_rank_factorization(a);
  }
  bool o_gmp_left(const Elem& a) const {
    return le_l_witness(a, a * a).has_value()
           && le_l_witness(a, a * a.star() * a).has_value();
  }
  bool o_gmp_right(const Elem& a) const {
    return le_r_witness(a, a * a).has_value()
           && le_r_witness(a, a * a.star() * a).has_value();
  }

  //! Canonical inner inverse plus seeded members of the parametric family.
  std::vector<Elem> inner_choices(const Elem& d, std::size_t max_extra,
                                  std::uint64_t seed) const {
    std::vector<Elem> out{inner_inverse(d)};
    Rng               rng(seed);
    for (std::size_t i = 0; i < max_extra; ++i) {
      Elem s = random_qi_matrix(rng, dom_, n_);
      Elem t = random_qi_matrix(rng, dom_, n_);
      out.push_back(inner_inverse_family(d, s, t));
    }
    return out;
  }

  std::vector<Elem> left_factors(const Elem& a, const Elem& target,
                                 std::size_t /*cap*/) const {
    auto w = le_l_witness(a, target);
    return w ? std::vector<Elem>{*w} : std::vector<Elem>{};
  }
  std::vector<Elem> right_factors(const Elem& a, const Elem& target,
                                  std::size_t /*cap*/) const {
    auto w = le_r_witness(a, target);
    return w ? std::vector<Elem>{*w} : std::vector<Elem>{};
  }

  Elem r_add(const Elem& a, const Elem& b) const {
    return a + b;
  }
  Elem r_sub(const Elem& a, const Elem& b) const {
    return a - b;
  }
  std::optional<Elem> r_inv(const Elem& a) const {
    return try_invert(a);
  }
  Elem r_inner(const Elem& a) const {
    return inner_inverse(a);
  }

 private:
  QiField   dom_;
  int       n_;
  QiCarrier carrier_;
};

}  // namespace geninv

#endif  // GENINV_VERIFY_CTX_HPP_
