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
// Table-represented finite monoids, optionally with an involution, and the
// exhaustive brute-force scans that serve as the independent truth source
// for every criterion implemented elsewhere in the library.

#ifndef GENINV_MONOID_HPP_
#define GENINV_MONOID_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "error.hpp"
#include "green.hpp"
#include "matrix.hpp"

namespace geninv {

using ElementId = std::uint32_t;

//! What an exhaustive solve should look for.
enum class SolveTag {
  inner,        // x with a x a = a
  one3,         // x with a x a = a and (a x)* = a x
  one4,         // x with a x a = a and (x a)* = x a
  mp,           // all four Penrose equations
  group,        // inner + outer + commuting
  along,        // b with b a d = d = d a b and b <=_H d
  left_along,   // b with b a d = d and b <=_L d
  right_along,  // b with d a b = d and b <=_R d
};

inline std::string solve_tag_name(SolveTag t) {
  switch (t) {
    case SolveTag::inner: return "inner";
    case SolveTag::one3: return "one3";
    case SolveTag::one4: return "one4";
    case SolveTag::mp: return "mp";
    case SolveTag::group: return "group";
    case SolveTag::along: return "along";
    case SolveTag::left_along: return "left-along";
    default: return "right-along";
  }
}

inline std::optional<SolveTag> solve_tag_from_name(const std::string& s) {
  for (SolveTag t : {SolveTag::inner, SolveTag::one3, SolveTag::one4,
                     SolveTag::mp, SolveTag::group, SolveTag::along,
                     SolveTag::left_along, SolveTag::right_along}) {
    if (solve_tag_name(t) == s) {
      return t;
    }
  }
  return std::nullopt;
}

//! The complete, order-sorted solution set of one exhaustive query.
struct SolutionSet {
  SolveTag                tag;
  std::vector<ElementId>  subjects;
  std::vector<ElementId>  solutions;
};

//! A finite monoid given by its k x k multiplication table.  Validation is
//! exhaustive: associativity over all k^3 triples, two-sided identity, and
//! the involution laws when a star table is present.  Tables built by
//! `closure` inherit associativity from matrix multiplication and skip the
//! cubic check.
class FiniteMonoid {
 public:
  static FiniteMonoid validated(ElementId identity,
                                std::vector<std::vector<ElementId>> mul,
                                std::optional<std::vector<ElementId>> star
                                = std::nullopt,
                                std::optional<std::vector<std::string>> labels
                                = std::nullopt) {
    FiniteMonoid m = trusted(identity, std::move(mul), std::move(star),
                             std::move(labels));
    const ElementId k = m.size();
    for (ElementId a = 0; a < k; ++a) {
      for (ElementId b = 0; b < k; ++b) {
        for (ElementId c = 0; c < k; ++c) {
          if (m.mul(a, m.mul(b, c)) != m.mul(m.mul(a, b), c)) {
            throw Error("multiplication table is not associative: triple ("
                        + std::to_string(a) + ", " + std::to_string(b) + ", "
                        + std::to_string(c) + ")");
          }
        }
      }
    }
    return m;
  }

  //! Builds without the associativity sweep; identity and star laws are
  //! still checked.
  static FiniteMonoid trusted(ElementId identity,
                              std::vector<std::vector<ElementId>> mul,
                              std::optional<std::vector<ElementId>> star
                              = std::nullopt,
                              std::optional<std::vector<std::string>> labels
                              = std::nullopt) {
    FiniteMonoid m;
    const std::size_t k = mul.size();
    require(k >= 1, "monoid must have at least one element");
    m.k_ = static_cast<ElementId>(k);
    m.mul_.reserve(k * k);
    for (const auto& row : mul) {
      require(row.size() == k, "multiplication table is not square");
      for (ElementId v : row) {
        require(v < k, "table entry " + std::to_string(v) + " out of range");
        m.mul_.push_back(v);
      }
    }
    require(identity < k, "identity id out of range");
    m.id_ = identity;
    for (ElementId x = 0; x < m.k_; ++x) {
      if (m.mul(m.id_, x) != x || m.mul(x, m.id_) != x) {
        throw Error("element " + std::to_string(identity)
                    + " is not a two-sided identity (fails at "
                    + std::to_string(x) + ")");
      }
    }
    if (star) {
      require(star->size() == k, "star table size mismatch");
      for (ElementId v : *star) {
        require(v < k, "star entry out of range");
      }
      for (ElementId x = 0; x < m.k_; ++x) {
        if ((*star)[(*star)[x]] != x) {
          throw Error("star is not an involution at element "
                      + std::to_string(x));
        }
      }
      for (ElementId x = 0; x < m.k_; ++x) {
        for (ElementId y = 0; y < m.k_; ++y) {
          if ((*star)[m.mul(x, y)] != m.mul((*star)[y], (*star)[x])) {
            throw Error("star is not an anti-automorphism: pair ("
                        + std::to_string(x) + ", " + std::to_string(y) + ")");
          }
        }
      }
      m.star_ = std::move(*star);
    }
    if (labels) {
      require(labels->size() == k, "label count mismatch");
      m.labels_ = std::move(*labels);
    }
    return m;
  }

  ElementId size() const {
    return k_;
  }
  ElementId one() const {
    return id_;
  }
  ElementId mul(ElementId a, ElementId b) const {
    return mul_[static_cast<std::size_t>(a) * k_ + b];
  }
  bool has_star() const {
    return !star_.empty();
  }
  ElementId star(ElementId a) const {
    require(has_star(), "monoid has no involution");
    return star_[a];
  }
  bool has_labels() const {
    return !labels_.empty();
  }
  const std::string& label(ElementId a) const {
    return labels_[a];
  }
  std::string describe(ElementId a) const {
    return has_labels() ? labels_[a] + " (#" + std::to_string(a) + ")"
                        : "#" + std::to_string(a);
  }

  const std::vector<ElementId>&   mul_table() const {
    return mul_;
  }
  const std::vector<ElementId>&   star_table() const {
    return star_;
  }
  const std::vector<std::string>& labels() const {
    return labels_;
  }

  // ---- exhaustive scans (the brute-force oracle) ----

  //! a <=_L b: scan for x with x b = a.
  std::optional<ElementId> le_l_witness(ElementId a, ElementId b) const {
    for (ElementId x = 0; x < k_; ++x) {
      if (mul(x, b) == a) {
        return x;
      }
    }
    return std::nullopt;
  }

  //! a <=_R b: scan for y with b y = a.
  std::optional<ElementId> le_r_witness(ElementId a, ElementId b) const {
    for (ElementId y = 0; y < k_; ++y) {
      if (mul(b, y) == a) {
        return y;
      }
    }
    return std::nullopt;
  }

  bool green_le(ElementId a, ElementId b, GreenRel rel) const {
    switch (rel) {
      case GreenRel::L: return le_l_witness(a, b).has_value();
      case GreenRel::R: return le_r_witness(a, b).has_value();
      default:
        return le_l_witness(a, b).has_value()
               && le_r_witness(a, b).has_value();
    }
  }

  //! The complete solution set of a defining-equation query, by scanning
  //! all k candidates.  `literal_right_along` switches the right-along
  //! equation from d a b = d to the reading d a b = b; it exists for
  //! exploration only and nothing in the library depends on it.
  SolutionSet solutions(SolveTag tag, ElementId a,
                        std::optional<ElementId> d = std::nullopt,
                        bool literal_right_along   = false) const {
    const bool needs_star = tag == SolveTag::one3 || tag == SolveTag::one4
                            || tag == SolveTag::mp;
    require(!needs_star || has_star(),
            "query '" + solve_tag_name(tag)
                + "' needs an involution, but the monoid has none");
    const bool needs_d = tag == SolveTag::along || tag == SolveTag::left_along
                         || tag == SolveTag::right_along;
    require(!needs_d || d.has_value(),
            "query '" + solve_tag_name(tag) + "' needs a second subject d");

    SolutionSet out{tag, {a}, {}};
    if (needs_d) {
      out.subjects.push_back(*d);
    }
    for (ElementId x = 0; x < k_; ++x) {
      bool ok = false;
      switch (tag) {
        case SolveTag::inner:
          ok = mul(mul(a, x), a) == a;
          break;
        case SolveTag::one3:
          ok = mul(mul(a, x), a) == a && star(mul(a, x)) == mul(a, x);
          break;
        case SolveTag::one4:
          ok = mul(mul(a, x), a) == a && star(mul(x, a)) == mul(x, a);
          break;
        case SolveTag::mp:
          ok = mul(mul(a, x), a) == a && mul(mul(x, a), x) == x
               && star(mul(a, x)) == mul(a, x)
               && star(mul(x, a)) == mul(x, a);
          break;
        case SolveTag::group:
          ok = mul(mul(a, x), a) == a && mul(mul(x, a), x) == x
               && mul(a, x) == mul(x, a);
          break;
        case SolveTag::along:
          ok = mul(mul(x, a), *d) == *d && mul(mul(*d, a), x) == *d
               && green_le(x, *d, GreenRel::H);
          break;
        case SolveTag::left_along:
          ok = mul(mul(x, a), *d) == *d && green_le(x, *d, GreenRel::L);
          break;
        case SolveTag::right_along:
          ok = (literal_right_along ? mul(mul(*d, a), x) == x
                                    : mul(mul(*d, a), x) == *d)
               && green_le(x, *d, GreenRel::R);
          break;
      }
      if (ok) {
        out.solutions.push_back(x);
      }
    }
    return out;
  }

  std::vector<ElementId> inner_inverses(ElementId a) const {
    return solutions(SolveTag::inner, a).solutions;
  }

 private:
  FiniteMonoid() = default;

  ElementId                k_ = 0;
  ElementId                id_ = 0;
  std::vector<ElementId>   mul_;
  std::vector<ElementId>   star_;
  std::vector<std::string> labels_;
};

//! Multiplicative closure of a set of matrices over GF(p), with labels back
//! to the generating matrices.  The identity is always adjoined and gets id
//! 0; generators and products follow in discovery order, so the result is
//! deterministic.  The star table is the transpose permutation when the
//! closure is transpose-closed, otherwise absent.
struct ClosureResult {
  FiniteMonoid             monoid;
  std::vector<GfMatrix>    elements;
};

inline ClosureResult closure(const std::vector<GfMatrix>& generators,
                             std::size_t cap = 100000) {
  require(!generators.empty(), "closure needs at least one generator");
  const PrimeField dom = generators.front().domain();
  const int        n   = generators.front().dim();
  for (const auto& g : generators) {
    generators.front().check_compatible(g);
  }

  std::vector<GfMatrix>                    elems;
  std::unordered_map<std::string, ElementId> index;
  auto add = [&](const GfMatrix& m) -> std::optional<ElementId> {
    std::string key = m.str();
    auto        it  = index.find(key);
    if (it != index.end()) {
      return std::nullopt;
    }
    require(elems.size() < cap,
            "closure exceeded the configured size cap of "
                + std::to_string(cap));
    ElementId id = static_cast<ElementId>(elems.size());
    index.emplace(std::move(key), id);
    elems.push_back(m);
    return id;
  };

  add(GfMatrix::identity(dom, n));
  for (const auto& g : generators) {
    add(g);
  }
  // breadth-first closure under products
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = 0; j < elems.size(); ++j) {
      add(elems[i] * elems[j]);
      if (i != j) {
        add(elems[j] * elems[i]);
      }
    }
  }

  const ElementId k = static_cast<ElementId>(elems.size());
  std::vector<std::vector<ElementId>> mul(k, std::vector<ElementId>(k));
  for (ElementId i = 0; i < k; ++i) {
    for (ElementId j = 0; j < k; ++j) {
      mul[i][j] = index.at((elems[i] * elems[j]).str());
    }
  }
  std::optional<std::vector<ElementId>> star_table;
  {
    std::vector<ElementId> st(k);
    bool                   closed = true;
    for (ElementId i = 0; i < k && closed; ++i) {
      auto it = index.find(elems[i].transpose().str());
      if (it == index.end()) {
        closed = false;
      } else {
        st[i] = it->second;
      }
    }
    if (closed) {
      star_table = std::move(st);
    }
  }
  std::vector<std::string> labels;
  labels.reserve(k);
  for (const auto& m : elems) {
    labels.push_back(m.str());
  }
  FiniteMonoid m = FiniteMonoid::trusted(0, std::move(mul),
                                         std::move(star_table),
                                         std::move(labels));
  return {std::move(m), std::move(elems)};
}

//! All n x n matrices over GF(p) in row-major base-p enumeration order.
inline std::vector<GfMatrix> all_matrices(const PrimeField& dom, int n,
                                          std::size_t cap = 6561) {
  const std::int64_t p     = dom.modulus();
  const int          cells = n * n;
  double             total = 1;
  for (int i = 0; i < cells; ++i) {
    total *= static_cast<double>(p);
  }
  require(total <= static_cast<double>(cap),
          "exhaustive universe of " + std::to_string(n) + "x"
              + std::to_string(n) + " matrices over GF(" + std::to_string(p)
              + ") is above the cap of " + std::to_string(cap)
              + " elements (set GENINV_CAP to override)");
  std::size_t           count = static_cast<std::size_t>(total);
  std::vector<GfMatrix> out;
  out.reserve(count);
  std::vector<std::int64_t> digits(cells, 0);
  for (std::size_t c = 0; c < count; ++c) {
    std::vector<std::int64_t> entries(digits.begin(), digits.end());
    out.emplace_back(dom, n, std::move(entries));
    for (int i = cells - 1; i >= 0; --i) {
      if (++digits[i] < p) {
        break;
      }
      digits[i] = 0;
    }
  }
  return out;
}

}  // namespace geninv

#endif  // GENINV_MONOID_HPP_
