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
// Exact row reduction, rank normal form, canonical inner inverses and
// two-sided inversion.  Everything here is deterministic: pivots are chosen
// leftmost-column, topmost-row, pivots are scaled to 1 and eliminated above
// and below, so witnesses are reproducible across runs and platforms.

#ifndef GENINV_LINALG_HPP_
#define GENINV_LINALG_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "error.hpp"
#include "matrix.hpp"

namespace geninv {

//! Reduced row echelon form R of M together with the invertible transform T
//! recording the row operations, so that T * M = R exactly.
template <typename D>
struct RrefResult {
  SquareMatrix<D>  R;
  SquareMatrix<D>  T;
  int              rank;
  std::vector<int> pivots;
};

template <typename D>
RrefResult<D> rref(const SquareMatrix<D>& M) {
  const D&        dom = M.domain();
  const int       n   = M.dim();
  SquareMatrix<D> R   = M;
  SquareMatrix<D> T   = SquareMatrix<D>::identity(dom, n);
  std::vector<int> pivots;

  int row = 0;
  for (int col = 0; col < n && row < n; ++col) {
    int pivot = -1;
    for (int i = row; i < n; ++i) {
      if (!dom.is_zero(R.at(i, col))) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) {
      continue;
    }
    if (pivot != row) {
      for (int j = 0; j < n; ++j) {
        std::swap(R.at(pivot, j), R.at(row, j));
        std::swap(T.at(pivot, j), T.at(row, j));
      }
    }
    auto inv = dom.inv(R.at(row, col));
    // pivot entry is nonzero by selection
    const auto scale = *inv;
    for (int j = 0; j < n; ++j) {
      R.at(row, j) = dom.mul(scale, R.at(row, j));
      T.at(row, j) = dom.mul(scale, T.at(row, j));
    }
    for (int i = 0; i < n; ++i) {
      if (i == row || dom.is_zero(R.at(i, col))) {
        continue;
      }
      const auto factor = R.at(i, col);
      for (int j = 0; j < n; ++j) {
        R.at(i, j) = dom.sub(R.at(i, j), dom.mul(factor, R.at(row, j)));
        T.at(i, j) = dom.sub(T.at(i, j), dom.mul(factor, T.at(row, j)));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(R), std::move(T), row, std::move(pivots)};
}

template <typename D>
int rank(const SquareMatrix<D>& M) {
  return rref(M).rank;
}

//! Two-sided inverse, or nothing when M is rank deficient.  Over a field,
//! square matrices are left invertible iff right invertible iff invertible,
//! so this single routine serves every one-sided question at this tier.
template <typename D>
std::optional<SquareMatrix<D>> try_invert(const SquareMatrix<D>& M) {
  RrefResult<D> rr = rref(M);
  if (rr.rank < M.dim()) {
    return std::nullopt;
  }
  return rr.T;
}

//! The diagonal 0/1 marker E_r with r leading ones.
template <typename D>
SquareMatrix<D> rank_marker(const D& dom, int n, int r) {
  SquareMatrix<D> e = SquareMatrix<D>::zero(dom, n);
  for (int i = 0; i < r; ++i) {
    e.at(i, i) = dom.one();
  }
  return e;
}

//! Factorization M = P * E_r * Q with P, Q invertible, E_r the rank marker.
template <typename D>
struct RankNormalForm {
  SquareMatrix<D> P;
  SquareMatrix<D> Pinv;
  SquareMatrix<D> Q;
  SquareMatrix<D> Qinv;
  int             rank;
};

template <typename D>
RankNormalForm<D> rank_normal_form(const SquareMatrix<D>& M) {
  const D&      dom = M.domain();
  const int     n   = M.dim();
  RrefResult<D> rr  = rref(M);

  // Q: the nonzero rows of R on top, completed by unit rows at the
  // non-pivot columns.  Q is invertible and E_r * Q = R, so M = T^{-1} E_r Q.
  SquareMatrix<D> Q = SquareMatrix<D>::zero(dom, n);
  for (int i = 0; i < rr.rank; ++i) {
    for (int j = 0; j < n; ++j) {
      Q.at(i, j) = rr.R.at(i, j);
    }
  }
  int row = rr.rank;
  std::vector<bool> is_pivot(n, false);
  for (int c : rr.pivots) {
    is_pivot[c] = true;
  }
  for (int j = 0; j < n; ++j) {
    if (!is_pivot[j]) {
      Q.at(row++, j) = dom.one();
    }
  }

  auto Qinv = try_invert(Q);
  auto Pinv = rr.T;
  auto P    = try_invert(Pinv);
  require(Qinv.has_value() && P.has_value(),
          "rank normal form factors must be invertible", ErrorKind::internal);
  return {std::move(*P), std::move(Pinv), std::move(Q), std::move(*Qinv),
          rr.rank};
}

//! Canonical inner inverse g = Qinv * E_r * Pinv, so that M * g * M = M.
//! For an invertible M this is exactly M^{-1}; for 0 it is 0.
template <typename D>
SquareMatrix<D> inner_inverse(const SquareMatrix<D>& M) {
  RankNormalForm<D> f = rank_normal_form(M);
  return f.Qinv * rank_marker(M.domain(), M.dim(), f.rank) * f.Pinv;
}

//! A member g + (1 - g M) s + t (1 - M g) of the inner-inverse family; every
//! choice of s, t yields a valid inner inverse of M.
template <typename D>
SquareMatrix<D> inner_inverse_family(const SquareMatrix<D>& M,
                                     const SquareMatrix<D>& s,
                                     const SquareMatrix<D>& t) {
  M.check_compatible(s);
  M.check_compatible(t);
  SquareMatrix<D> g  = inner_inverse(M);
  SquareMatrix<D> id = SquareMatrix<D>::identity(M.domain(), M.dim());
  return g + (id - g * M) * s + t * (id - M * g);
}

}  // namespace geninv

#endif  // GENINV_LINALG_HPP_
