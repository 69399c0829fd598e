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

#ifndef GENINV_MATRIX_HPP_
#define GENINV_MATRIX_HPP_

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "scalar.hpp"

namespace geninv {

//! An immutable-by-convention n x n matrix over a scalar domain D (QiField
//! or PrimeField).  These are the ring-tier carrier elements: they support
//! multiplication, addition, the involution star() (conjugate transpose over
//! Q(i), transpose over GF(p)) and exact equality.
template <typename D>
class SquareMatrix {
 public:
  using Domain = D;
  using Scalar = typename D::Scalar;

  SquareMatrix(D dom, int n, std::vector<Scalar> entries)
      : dom_(std::move(dom)), n_(n), e_(std::move(entries)) {
    require(n_ >= 1, "matrix dimension must be positive");
    require(static_cast<int>(e_.size()) == n_ * n_,
            "entry count does not match dimension");
    for (const Scalar& s : e_) {
      require(dom_.in_domain(s), "entry is not a canonical domain element");
    }
  }

  static SquareMatrix zero(const D& dom, int n) {
    return SquareMatrix(dom, n,
                        std::vector<Scalar>(static_cast<std::size_t>(n) * n,
                                            dom.zero()));
  }

  static SquareMatrix identity(const D& dom, int n) {
    SquareMatrix m = zero(dom, n);
    for (int i = 0; i < n; ++i) {
      m.at(i, i) = dom.one();
    }
    return m;
  }

  //! Builds a matrix from integer literals, mapped through the domain.
  static SquareMatrix from_ints(const D& dom, int n,
                                std::initializer_list<long> vals) {
    require(static_cast<int>(vals.size()) == n * n,
            "literal count does not match dimension");
    std::vector<Scalar> e;
    e.reserve(vals.size());
    for (long v : vals) {
      e.push_back(dom.from_int(v));
    }
    return SquareMatrix(dom, n, std::move(e));
  }

  const D& domain() const {
    return dom_;
  }
  int dim() const {
    return n_;
  }

  const Scalar& at(int i, int j) const {
    return e_[static_cast<std::size_t>(i) * n_ + j];
  }
  Scalar& at(int i, int j) {
    return e_[static_cast<std::size_t>(i) * n_ + j];
  }

  bool is_zero() const {
    for (const auto& s : e_) {
      if (!dom_.is_zero(s)) {
        return false;
      }
    }
    return true;
  }

  SquareMatrix transpose() const {
    SquareMatrix r = *this;
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) {
        r.at(i, j) = at(j, i);
      }
    }
    return r;
  }

  //! The involution: entrywise conjugation composed with transposition.
  SquareMatrix star() const {
    SquareMatrix r = *this;
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) {
        r.at(i, j) = dom_.conj(at(j, i));
      }
    }
    return r;
  }

  SquareMatrix scaled(const Scalar& c) const {
    SquareMatrix r = *this;
    for (auto& s : r.e_) {
      s = dom_.mul(c, s);
    }
    return r;
  }

  friend SquareMatrix operator+(const SquareMatrix& a, const SquareMatrix& b) {
    a.check_compatible(b);
    SquareMatrix r = a;
    for (std::size_t k = 0; k < r.e_.size(); ++k) {
      r.e_[k] = a.dom_.add(a.e_[k], b.e_[k]);
    }
    return r;
  }

  friend SquareMatrix operator-(const SquareMatrix& a, const SquareMatrix& b) {
    a.check_compatible(b);
    SquareMatrix r = a;
    for (std::size_t k = 0; k < r.e_.size(); ++k) {
      r.e_[k] = a.dom_.sub(a.e_[k], b.e_[k]);
    }
    return r;
  }

  friend SquareMatrix operator-(const SquareMatrix& a) {
    SquareMatrix r = a;
    for (auto& s : r.e_) {
      s = a.dom_.neg(s);
    }
    return r;
  }

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    a.check_compatible(b);
    const D&     dom = a.dom_;
    const int    n   = a.n_;
    SquareMatrix r   = zero(dom, n);
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < n; ++k) {
        const Scalar& aik = a.at(i, k);
        if (dom.is_zero(aik)) {
          continue;
        }
        for (int j = 0; j < n; ++j) {
          r.at(i, j) = dom.add(r.at(i, j), dom.mul(aik, b.at(k, j)));
        }
      }
    }
    return r;
  }

  friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
    if (a.n_ != b.n_ || !a.dom_.same(b.dom_)) {
      return false;
    }
    for (std::size_t k = 0; k < a.e_.size(); ++k) {
      if (!a.dom_.eq(a.e_[k], b.e_[k])) {
        return false;
      }
    }
    return true;
  }

  friend bool operator!=(const SquareMatrix& a, const SquareMatrix& b) {
    return !(a == b);
  }

  //! Compact one-line rendering, e.g. [[1/2,1/2],[0,0]].
  std::string str() const {
    std::string s = "[";
    for (int i = 0; i < n_; ++i) {
      s += i == 0 ? "[" : ",[";
      for (int j = 0; j < n_; ++j) {
        if (j > 0) {
          s += ",";
        }
        s += dom_.str(at(i, j));
      }
      s += "]";
    }
    return s + "]";
  }

  void check_compatible(const SquareMatrix& other) const {
    require(n_ == other.n_,
            "dimension mismatch: " + std::to_string(n_) + " vs "
                + std::to_string(other.n_));
    require(dom_.same(other.dom_), "scalar domain mismatch");
  }

 private:
  D                   dom_;
  int                 n_;
  std::vector<Scalar> e_;
};

using QiMatrix = SquareMatrix<QiField>;
using GfMatrix = SquareMatrix<PrimeField>;

}  // namespace geninv

#endif  // GENINV_MATRIX_HPP_
