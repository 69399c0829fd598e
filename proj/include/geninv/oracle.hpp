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
// Precomputed brute-force tables over a finite monoid.  Everything here is
// derived from the multiplication table alone by exhaustive scanning, never
// from rank or unit criteria, which is what makes it a legitimate
// independent arbiter for the criterion-based code paths.  All tables are
// built eagerly, so queries afterwards are pure reads and safe to share
// across worker threads.

#ifndef GENINV_ORACLE_HPP_
#define GENINV_ORACLE_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "error.hpp"
#include "monoid.hpp"

namespace geninv {

class EnumOracle {
 public:
  explicit EnumOracle(const FiniteMonoid& m) : m_(&m), k_(m.size()) {
    build();
  }

  const FiniteMonoid& monoid() const {
    return *m_;
  }

  bool green_l(ElementId a, ElementId b) const {
    return green_l_[idx(a, b)];
  }
  bool green_r(ElementId a, ElementId b) const {
    return green_r_[idx(a, b)];
  }
  bool green_h(ElementId a, ElementId b) const {
    return green_l(a, b) && green_r(a, b);
  }

  std::optional<ElementId> le_l_witness(ElementId a, ElementId b) const {
    return m_->le_l_witness(a, b);
  }
  std::optional<ElementId> le_r_witness(ElementId a, ElementId b) const {
    return m_->le_r_witness(a, b);
  }

  std::optional<ElementId> along(ElementId a, ElementId d) const {
    return unpack(along_[idx(a, d)]);
  }
  bool along_exists(ElementId a, ElementId d) const {
    return along_[idx(a, d)] >= 0;
  }
  bool left_along_exists(ElementId a, ElementId d) const {
    return lalong_[idx(a, d)] >= 0;
  }
  bool right_along_exists(ElementId a, ElementId d) const {
    return ralong_[idx(a, d)] >= 0;
  }
  std::optional<ElementId> left_along_witness(ElementId a, ElementId d) const {
    return unpack(lalong_[idx(a, d)]);
  }
  std::optional<ElementId> right_along_witness(ElementId a,
                                               ElementId d) const {
    return unpack(ralong_[idx(a, d)]);
  }

  std::optional<ElementId> mp(ElementId a) const {
    return unpack(mp_[a]);
  }
  std::optional<ElementId> group(ElementId a) const {
    return unpack(group_[a]);
  }
  bool gmp_left(ElementId a) const {
    return gmp_left_[a];
  }
  bool gmp_right(ElementId a) const {
    return gmp_right_[a];
  }

  const std::vector<ElementId>& inner_list(ElementId a) const {
    return inner_[a];
  }

  //! All solutions of a one-sided along query, for witness-set membership
  //! tests.
  std::vector<ElementId> left_along_set(ElementId a, ElementId d) const {
    std::vector<ElementId> out;
    for (ElementId b = 0; b < k_; ++b) {
      if (m_->mul(m_->mul(b, a), d) == d && green_l(b, d)) {
        out.push_back(b);
      }
    }
    return out;
  }
  std::vector<ElementId> right_along_set(ElementId a, ElementId d) const {
    std::vector<ElementId> out;
    for (ElementId b = 0; b < k_; ++b) {
      if (m_->mul(m_->mul(d, a), b) == d && green_r(b, d)) {
        out.push_back(b);
      }
    }
    return out;
  }

 private:
  std::size_t idx(ElementId a, ElementId b) const {
    return static_cast<std::size_t>(a) * k_ + b;
  }

  static std::optional<ElementId> unpack(std::int32_t v) {
    if (v < 0) {
      return std::nullopt;
    }
    return static_cast<ElementId>(v);
  }

  void build() {
    const std::size_t kk = static_cast<std::size_t>(k_) * k_;
    green_l_.assign(kk, false);
    green_r_.assign(kk, false);
    for (ElementId b = 0; b < k_; ++b) {
      for (ElementId x = 0; x < k_; ++x) {
        green_l_[idx(m_->mul(x, b), b)] = true;
        green_r_[idx(m_->mul(b, x), b)] = true;
      }
    }

    along_.assign(kk, -1);
    lalong_.assign(kk, -1);
    ralong_.assign(kk, -1);
    for (ElementId a = 0; a < k_; ++a) {
      for (ElementId d = 0; d < k_; ++d) {
        const ElementId ad  = m_->mul(a, d);
        const ElementId da  = m_->mul(d, a);
        std::int32_t    two = -1;
        for (ElementId b = 0; b < k_; ++b) {
          const bool bad = m_->mul(b, ad) == d;
          const bool dab = m_->mul(da, b) == d;
          if (bad && lalong_[idx(a, d)] < 0 && green_l(b, d)) {
            lalong_[idx(a, d)] = static_cast<std::int32_t>(b);
          }
          if (dab && ralong_[idx(a, d)] < 0 && green_r(b, d)) {
            ralong_[idx(a, d)] = static_cast<std::int32_t>(b);
          }
          if (bad && dab && green_l(b, d) && green_r(b, d)) {
            require(two < 0, "two distinct inverses along one element",
                    ErrorKind::internal);
            two = static_cast<std::int32_t>(b);
          }
        }
        along_[idx(a, d)] = two;
      }
    }

    inner_.resize(k_);
    mp_.assign(k_, -1);
    group_.assign(k_, -1);
    gmp_left_.assign(k_, false);
    gmp_right_.assign(k_, false);
    const bool star = m_->has_star();
    for (ElementId a = 0; a < k_; ++a) {
      for (ElementId x = 0; x < k_; ++x) {
        const ElementId ax = m_->mul(a, x);
        const ElementId xa = m_->mul(x, a);
        if (m_->mul(ax, a) != a) {
          continue;
        }
        inner_[a].push_back(x);
        const bool outer = m_->mul(xa, x) == x;
        if (outer && ax == xa && group_[a] < 0) {
          group_[a] = static_cast<std::int32_t>(x);
        }
        if (star && outer && m_->star(ax) == ax && m_->star(xa) == xa) {
          require(mp_[a] < 0, "two distinct Moore-Penrose inverses",
                  ErrorKind::internal);
          mp_[a] = static_cast<std::int32_t>(x);
        }
      }
      if (star) {
        const ElementId a2  = m_->mul(a, a);
        const ElementId aaa = m_->mul(m_->mul(a, m_->star(a)), a);
        gmp_left_[a]  = green_l(a, a2) && green_l(a, aaa);
        gmp_right_[a] = green_r(a, a2) && green_r(a, aaa);
      }
    }
  }

  const FiniteMonoid*       m_;
  ElementId                 k_;
  std::vector<bool>         green_l_, green_r_;
  std::vector<std::int32_t> along_, lalong_, ralong_;
  std::vector<std::int32_t> mp_, group_;
  std::vector<bool>         gmp_left_, gmp_right_;
  std::vector<std::vector<ElementId>> inner_;
};

}  // namespace geninv

#endif  // GENINV_ORACLE_HPP_
