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
// Carriers are the two habitats the algorithms run in.  The monoid tier
// needs multiplication, equality, Green preorder witnesses and (sometimes)
// an involution; both carriers provide it.  The ring tier adds addition,
// the unity and exact inversion; only matrix carriers provide that, which
// is why the unit-criterion algorithms are gated on `is_ring`.

#ifndef GENINV_CARRIER_HPP_
#define GENINV_CARRIER_HPP_

#include <optional>
#include <string>

#include "green.hpp"
#include "linalg.hpp"
#include "matrix.hpp"
#include "monoid.hpp"

namespace geninv {

enum class Status { exists, not_exists, precondition_failed };

inline std::string status_name(Status s) {
  switch (s) {
    case Status::exists: return "exists";
    case Status::not_exists: return "not_exists";
    default: return "precondition_failed";
  }
}

enum class Side { left, right };

inline std::string side_name(Side s) {
  return s == Side::left ? "left" : "right";
}

//! Ring-tier carrier: n x n matrices over a field domain.
template <typename D>
struct MatrixCarrier {
  using Elem                    = SquareMatrix<D>;
  static constexpr bool is_ring = true;

  D   dom;
  int n;

  MatrixCarrier(D d, int dim) : dom(std::move(d)), n(dim) {}

  Elem one() const {
    return Elem::identity(dom, n);
  }
  Elem zero() const {
    return Elem::zero(dom, n);
  }
  Elem mul(const Elem& a, const Elem& b) const {
    return a * b;
  }
  Elem add(const Elem& a, const Elem& b) const {
    return a + b;
  }
  Elem sub(const Elem& a, const Elem& b) const {
    return a - b;
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
  std::optional<Elem> le_l(const Elem& a, const Elem& b) const {
    return le_l_witness(a, b);
  }
  std::optional<Elem> le_r(const Elem& a, const Elem& b) const {
    return le_r_witness(a, b);
  }
  std::optional<Elem> try_inv(const Elem& a) const {
    return try_invert(a);
  }
  Elem inner_inv(const Elem& a) const {
    return inner_inverse(a);
  }
  Elem inner_inv_family(const Elem& a, const Elem& s, const Elem& t) const {
    return inner_inverse_family(a, s, t);
  }
  std::string show(const Elem& a) const {
    return a.str();
  }
};

using QiCarrier = MatrixCarrier<QiField>;
using GfCarrier = MatrixCarrier<PrimeField>;

//! Monoid-tier carrier backed by a multiplication table; elements are ids.
struct TableCarrier {
  using Elem                    = ElementId;
  static constexpr bool is_ring = false;

  const FiniteMonoid* m;

  explicit TableCarrier(const FiniteMonoid& monoid) : m(&monoid) {}

  Elem one() const {
    return m->one();
  }
  Elem mul(Elem a, Elem b) const {
    return m->mul(a, b);
  }
  bool eq(Elem a, Elem b) const {
    return a == b;
  }
  bool has_star() const {
    return m->has_star();
  }
  Elem star(Elem a) const {
    return m->star(a);
  }
  std::optional<Elem> le_l(Elem a, Elem b) const {
    return m->le_l_witness(a, b);
  }
  std::optional<Elem> le_r(Elem a, Elem b) const {
    return m->le_r_witness(a, b);
  }
  std::string show(Elem a) const {
    return m->describe(a);
  }
};

}  // namespace geninv

#endif  // GENINV_CARRIER_HPP_
