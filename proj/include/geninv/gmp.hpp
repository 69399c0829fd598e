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
// Left/right g-MP invertibility and the Moore-Penrose inverse.  a is left
// g-MP invertible when Sa = Sa^2 = Saa*a, right g-MP invertible when
// aS = a^2S = aa*aS.  The Moore-Penrose inverse is computed by the unit
// criterion u = a a* + 1 - a a^(1): when u is invertible,
// (u^{-1} a)* is simultaneously a {1,3}- and {1,4}-inverse and
// a^dagger = (u^{-1} a)* a (u^{-1} a)*.

#ifndef GENINV_GMP_HPP_
#define GENINV_GMP_HPP_

#include <optional>
#include <string>
#include <utility>

#include "along.hpp"
#include "carrier.hpp"

namespace geninv {

//! Witness record for a g-MP inverse.  On the left side, x and y satisfy
//! a = x a^2 = y a a* a and the witness is b = y x a with b a a* a = a and
//! b in Sa; on the right, s and t satisfy a = a^2 s = a a* a t and the
//! witness is c = a s t.
template <typename C>
struct GmpResult {
  using Elem = typename C::Elem;

  Status              status;
  Side                side;
  std::optional<Elem> first;    // x (left) or s (right)
  std::optional<Elem> second;   // y (left) or t (right)
  std::optional<Elem> witness;  // b = y x a (left) or c = a s t (right)
  std::string         reason;

  bool exists() const {
    return status == Status::exists;
  }
};

template <typename C>
GmpResult<C> gmp_check(const C& c, const typename C::Elem& a, Side side) {
  using E = typename C::Elem;
  require(c.has_star(), "g-MP queries need an involution");

  const E a2  = c.mul(a, a);
  const E aas = c.mul(a, c.star(a));           // a a*
  const E aaa = c.mul(aas, a);                 // a a* a

  if (side == Side::left) {
    auto x = c.le_l(a, a2);
    auto y = c.le_l(a, aaa);
    if (!x || !y) {
      return {Status::not_exists, side, std::move(x), std::move(y),
              std::nullopt,
              !x ? "Sa = Sa^2 fails (a is not left regular)"
                 : "Sa = Saa*a fails"};
    }
    E b = c.mul(c.mul(*y, *x), a);
    require(c.eq(c.mul(*x, a2), a) && c.eq(c.mul(*y, aaa), a),
            "g-MP Green witnesses failed to re-verify", ErrorKind::internal);
    require(c.eq(c.mul(b, aaa), a) && c.le_l(b, a).has_value(),
            "g-MP witness b = y x a failed b a a* a = a with b in Sa",
            ErrorKind::internal);
    // both b and b a a* b are left inverses of a a* along a
    E b2 = c.mul(c.mul(b, aas), b);
    for (const E& w : {b, b2}) {
      require(c.eq(c.mul(c.mul(w, aas), a), a) && c.le_l(w, a).has_value(),
              "left inverse of a a* along a failed to re-verify",
              ErrorKind::internal);
    }
    return {Status::exists, side, std::move(x), std::move(y), std::move(b),
            ""};
  }

  const E saa = c.mul(c.star(a), a);           // a* a
  auto    s   = c.le_r(a, a2);
  auto    t   = c.le_r(a, aaa);
  if (!s || !t) {
    return {Status::not_exists, side, std::move(s), std::move(t),
            std::nullopt,
            !s ? "aS = a^2S fails (a is not right regular)"
               : "aS = aa*aS fails"};
  }
  E cw = c.mul(c.mul(a, *s), *t);
  require(c.eq(c.mul(a2, *s), a) && c.eq(c.mul(aaa, *t), a),
          "g-MP Green witnesses failed to re-verify", ErrorKind::internal);
  require(c.eq(c.mul(aaa, cw), a) && c.le_r(cw, a).has_value(),
          "g-MP witness c = a s t failed a a* a c = a with c in aS",
          ErrorKind::internal);
  // both c and c a* a c are right inverses of a* a along a
  E c2 = c.mul(c.mul(cw, saa), cw);
  for (const E& w : {cw, c2}) {
    require(c.eq(c.mul(c.mul(a, saa), w), a) && c.le_r(w, a).has_value(),
            "right inverse of a* a along a failed to re-verify",
            ErrorKind::internal);
  }
  return {Status::exists, side, std::move(s), std::move(t), std::move(cw),
          ""};
}

//! The Moore-Penrose result: the inverse itself, the {1,3}/{1,4} inverse
//! produced en route (one matrix serves as both), and the unit trace.
template <typename C>
struct MpResult {
  using Elem = typename C::Elem;

  Status                        status;
  std::optional<Elem>           mp;
  std::optional<Elem>           one_three;
  std::optional<Elem>           one_four;
  std::optional<UnitWitness<C>> unit;  // aa* + 1 - aa1
  std::string                   reason;

  bool exists() const {
    return status == Status::exists;
  }
};

template <typename C>
MpResult<C> mp_inverse(const C& c, const typename C::Elem& a) {
  static_assert(C::is_ring, "mp_inverse needs the ring tier");
  using E = typename C::Elem;
  require(c.has_star(), "mp_inverse needs an involution");

  const E g = c.inner_inv(a);
  auto    u = detail::make_unit(
      c, "aa* + 1 - aa1",
      c.add(c.mul(a, c.star(a)), c.sub(c.one(), c.mul(a, g))), g);
  if (!u.invertible()) {
    return {Status::not_exists, std::nullopt, std::nullopt, std::nullopt,
            std::move(u), "u = a a* + 1 - a a1 is not invertible"};
  }
  E x13 = c.star(c.mul(*u.u_inv, a));  // (u^{-1} a)*
  E mp  = c.mul(c.mul(x13, a), x13);
  const E ax = c.mul(a, mp);
  const E xa = c.mul(mp, a);
  require(c.eq(c.mul(ax, a), a) && c.eq(c.mul(xa, mp), mp)
              && c.eq(c.star(ax), ax) && c.eq(c.star(xa), xa),
          "Moore-Penrose inverse failed a Penrose equation",
          ErrorKind::internal);
  return {Status::exists, std::move(mp), x13, x13, std::move(u), ""};
}

//! Independent Moore-Penrose route through the rank factorization a = F G:
//! a^dagger = G* (G G*)^{-1} (F* F)^{-1} F*, with both small inverses taken
//! inside the rank-r corner.  Exists exactly when a is Moore-Penrose
//! invertible, and never touches the unit criterion, so the two routes can
//! check each other.
template <typename D>
std::optional<SquareMatrix<D>> mp_via_rank_factorization(
    const SquareMatrix<D>& a) {
  using E = SquareMatrix<D>;
  const D&  dom = a.domain();
  const int n   = a.dim();

  auto f  = rank_normal_form(a);
  E    er = rank_marker(dom, n, f.rank);
  E    id = E::identity(dom, n);
  E    F  = f.P * er;  // a = F * G with the factors embedded as n x n
  E    G  = er * f.Q;
  auto block_inv = [&](const E& x) -> std::optional<E> {
    auto m = try_invert(x + (id - er));
    if (!m) {
      return std::nullopt;
    }
    return er * *m * er;
  };
  auto bx = block_inv(G * G.star());
  auto by = block_inv(F.star() * F);
  if (!bx || !by) {
    return std::nullopt;
  }
  E mp = G.star() * *bx * *by * F.star();
  const E ax = a * mp;
  const E xa = mp * a;
  require(ax * a == a && xa * mp == mp && ax.star() == ax && xa.star() == xa,
          "rank-factorization route failed a Penrose equation",
          ErrorKind::internal);
  return mp;
}

//! Independent group-inverse route: with a = F G and the corner block G F
//! invertible, a^# = F (G F)^{-2} G.  Exists exactly when
//! rank(a^2) = rank(a).
template <typename D>
std::optional<SquareMatrix<D>> group_via_rank_factorization(
    const SquareMatrix<D>& a) {
  using E = SquareMatrix<D>;
  const D&  dom = a.domain();
  const int n   = a.dim();

  auto f  = rank_normal_form(a);
  E    er = rank_marker(dom, n, f.rank);
  E    id = E::identity(dom, n);
  E    F  = f.P * er;
  E    G  = er * f.Q;
  auto m  = try_invert(G * F + (id - er));
  if (!m) {
    return std::nullopt;
  }
  E bx = er * *m * er;
  E s  = F * bx * bx * G;
  require(a * s == s * a && a * s * a == a && s * a * s == s,
          "rank-factorization group route failed its defining equations",
          ErrorKind::internal);
  return s;
}

//! EP decision with its three independent routes, which must agree:
//! (a has a^dagger and a a^dagger = a^dagger a), (left g-MP and aS = a*S),
//! (right g-MP and aS = a*S).
template <typename C>
struct EpResult {
  bool is_ep;
  bool mp_exists;
  bool commutes;
  bool left_gmp;
  bool right_gmp;
  bool star_column_spaces_equal;  // aS = a*S
  MpResult<C> mp;
};

template <typename C>
EpResult<C> is_ep(const C& c, const typename C::Elem& a) {
  static_assert(C::is_ring, "is_ep needs the ring tier");
  auto mpr = mp_inverse(c, a);
  bool commutes = mpr.exists()
                  && c.eq(c.mul(a, *mpr.mp), c.mul(*mpr.mp, a));
  bool route1 = mpr.exists() && commutes;

  bool lg    = gmp_check(c, a, Side::left).exists();
  bool rg    = gmp_check(c, a, Side::right).exists();
  bool sameS = c.le_r(a, c.star(a)).has_value()
               && c.le_r(c.star(a), a).has_value();
  require(route1 == (lg && sameS) && route1 == (rg && sameS),
          "EP routes disagree", ErrorKind::internal);
  return {route1, mpr.exists(), commutes, lg, rg, sameS, std::move(mpr)};
}

//! Cross-check record tying the Moore-Penrose inverse to inverses along:
//! (a*)^{||a} = (a^dagger)*, a^{||a*} = a^dagger, and (a^dagger)* is a left
//! inverse of a* along a.  Every side is computed independently.
template <typename C>
struct MpStarAlongResult {
  using Elem = typename C::Elem;

  Status              status;
  bool                star_along_a   = false;  // (a*)^{||a} = (a^dagger)*
  bool                along_star     = false;  // a^{||a*} = a^dagger
  bool                left_inverse   = false;  // (a^dagger)* left-inv along a
  std::optional<Elem> mp;
  std::optional<Elem> star_along_value;  // (a*)^{||a}
  std::optional<Elem> along_star_value;  // a^{||a*}
  std::string         reason;

  bool all_hold() const {
    return star_along_a && along_star && left_inverse;
  }
};

template <typename C>
MpStarAlongResult<C> mp_via_star_along(const C& c, const typename C::Elem& a) {
  static_assert(C::is_ring, "mp_via_star_along needs the ring tier");
  using E = typename C::Elem;

  MpStarAlongResult<C> out{};
  auto mpr = mp_inverse(c, a);
  if (!mpr.exists()) {
    out.status = Status::precondition_failed;
    out.reason = "a is not Moore-Penrose invertible";
    return out;
  }
  out.mp = mpr.mp;
  const E mps = c.star(*mpr.mp);

  auto r1 = inverse_along(c, c.star(a), a);
  out.star_along_a = r1.exists() && c.eq(*r1.b, mps);
  if (r1.exists()) {
    out.star_along_value = r1.b;
  }
  auto r2 = inverse_along(c, a, c.star(a));
  out.along_star = r2.exists() && c.eq(*r2.b, *mpr.mp);
  if (r2.exists()) {
    out.along_star_value = r2.b;
  }
  out.left_inverse = c.eq(c.mul(c.mul(mps, c.star(a)), a), a)
                     && c.le_l(mps, a).has_value();
  out.status = Status::exists;
  if (!out.all_hold()) {
    out.reason = std::string("failed: ")
                 + (!out.star_along_a ? "(a*)^{||a} = (a^dagger)*; " : "")
                 + (!out.along_star ? "a^{||a*} = a^dagger; " : "")
                 + (!out.left_inverse ? "(a^dagger)* left inverse along a;"
                                      : "");
  }
  return out;
}

}  // namespace geninv

#endif  // GENINV_GMP_HPP_
