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
// Green's preorders over matrix carriers.  a <=_L b means a = x b for some
// x (row space containment); a <=_R b means a = b y (column space
// containment); <=_H is both.  Decisions are exact and each positive answer
// carries a witness that reproduces a when substituted.

#ifndef GENINV_GREEN_HPP_
#define GENINV_GREEN_HPP_

#include <optional>
#include <string>
#include <utility>

#include "linalg.hpp"
#include "matrix.hpp"

namespace geninv {

enum class GreenRel { L, R, H };

inline std::string green_rel_name(GreenRel r) {
  switch (r) {
    case GreenRel::L: return "L";
    case GreenRel::R: return "R";
    default: return "H";
  }
}

template <typename D>
struct GreenWitness {
  GreenRel                       relation;
  bool                           holds;
  std::optional<SquareMatrix<D>> x;  // a = x * b, for L and H
  std::optional<SquareMatrix<D>> y;  // a = b * y, for R and H
};

namespace detail {

//! Solves a = x b when the rows of a lie in the row space of b.  The
//! canonical witness is C * T where T row-reduces b and C picks the
//! coefficient of a at each pivot column of rref(b); columns of C beyond
//! rank(b) are zero.  When a == b the witness is canonicalized to the
//! identity.
template <typename D>
std::optional<SquareMatrix<D>> solve_left_factor(const SquareMatrix<D>& a,
                                                 const SquareMatrix<D>& b) {
  a.check_compatible(b);
  const D&  dom = a.domain();
  const int n   = a.dim();
  if (a == b) {
    return SquareMatrix<D>::identity(dom, n);
  }
  RrefResult<D>   rb = rref(b);
  SquareMatrix<D> C  = SquareMatrix<D>::zero(dom, n);
  for (int i = 0; i < n; ++i) {
    // coefficients of row i of a against the nonzero rows of rref(b)
    for (int k = 0; k < rb.rank; ++k) {
      C.at(i, k) = a.at(i, rb.pivots[k]);
    }
    for (int j = 0; j < n; ++j) {
      auto acc = dom.zero();
      for (int k = 0; k < rb.rank; ++k) {
        acc = dom.add(acc, dom.mul(C.at(i, k), rb.R.at(k, j)));
      }
      if (!dom.eq(acc, a.at(i, j))) {
        return std::nullopt;  // row i of a is outside the row space of b
      }
    }
  }
  return C * rb.T;
}

}  // namespace detail

//! Witness x with a = x b, when a <=_L b.
template <typename D>
std::optional<SquareMatrix<D>> le_l_witness(const SquareMatrix<D>& a,
                                            const SquareMatrix<D>& b) {
  return detail::solve_left_factor(a, b);
}

//! Witness y with a = b y, when a <=_R b.  Solved through transposition.
template <typename D>
std::optional<SquareMatrix<D>> le_r_witness(const SquareMatrix<D>& a,
                                            const SquareMatrix<D>& b) {
  auto xt = detail::solve_left_factor(a.transpose(), b.transpose());
  if (!xt) {
    return std::nullopt;
  }
  return xt->transpose();
}

template <typename D>
GreenWitness<D> green_leq(const SquareMatrix<D>& a, const SquareMatrix<D>& b,
                          GreenRel rel) {
  GreenWitness<D> w{rel, false, std::nullopt, std::nullopt};
  if (rel == GreenRel::L || rel == GreenRel::H) {
    w.x = le_l_witness(a, b);
  }
  if (rel == GreenRel::R || rel == GreenRel::H) {
    w.y = le_r_witness(a, b);
  }
  switch (rel) {
    case GreenRel::L: w.holds = w.x.has_value(); break;
    case GreenRel::R: w.holds = w.y.has_value(); break;
    case GreenRel::H: w.holds = w.x.has_value() && w.y.has_value(); break;
  }
  return w;
}

}  // namespace geninv

#endif  // GENINV_GREEN_HPP_
