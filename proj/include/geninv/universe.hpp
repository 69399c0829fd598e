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
// Universes for verification sweeps: exhaustive matrix universes gf:p:n,
// seeded random matrix universes qi:n:random, and table universes
// table:FILE.  Random generation is fully deterministic per seed: the
// engine is std::mt19937_64 and all draws go through rejection sampling,
// never through implementation-defined distributions.

#ifndef GENINV_UNIVERSE_HPP_
#define GENINV_UNIVERSE_HPP_

#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "error.hpp"
#include "linalg.hpp"
#include "matrix.hpp"

namespace geninv {

//! Enumeration caps; GENINV_CAP replaces all three when set.
struct Caps {
  std::size_t enum_universe = 6561;    // elements of an exhaustive gf:p:n
  std::size_t table_queries = 10000;   // elements of a table universe
  std::size_t closure       = 100000;  // elements produced by closure()

  static Caps from_env() {
    Caps c;
    if (const char* s = std::getenv("GENINV_CAP")) {
      char*              end = nullptr;
      unsigned long long v   = std::strtoull(s, &end, 10);
      require(end != s && *end == '\0' && v > 0,
              "GENINV_CAP must be a positive integer, got '" + std::string(s)
                  + "'");
      c.enum_universe = static_cast<std::size_t>(v);
      c.table_queries = static_cast<std::size_t>(v);
      c.closure       = static_cast<std::size_t>(v);
    }
    return c;
  }
};

//! Deterministic random source.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() {
    return eng_();
  }

  //! Uniform in [0, n) by rejection, so results do not depend on any
  //! library's distribution internals.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t       v;
    do {
      v = eng_();
    } while (v >= limit);
    return v % n;
  }

  std::int64_t int_in(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(
                    below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::mt19937_64 eng_;
};

//! Per-tuple sub-seed, stable no matter how a sweep is partitioned.
inline std::uint64_t tuple_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t x = seed ^ (0x9e3779b97f4a7c15ULL * (index + 1));
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

//! Numerator uniform in [-9, 9], denominator uniform in [1, 9]; small
//! operands keep exact bit-sizes tame over long computations.
inline Rational random_rational(Rng& rng) {
  return Rational(rng.int_in(-9, 9)) / Rational(rng.int_in(1, 9));
}

//! An entry is zero with probability 3/10; otherwise the real part is a
//! random rational and the imaginary part is zero half the time, so real
//! matrices and genuinely complex ones both show up.
inline GaussianRational random_qi_entry(Rng& rng) {
  if (rng.below(10) < 3) {
    return {};
  }
  GaussianRational s{random_rational(rng), Rational(0)};
  if (rng.below(2) == 1) {
    s.im = random_rational(rng);
  }
  return s;
}

inline QiMatrix random_qi_matrix(Rng& rng, const QiField& dom, int n) {
  std::vector<GaussianRational> e;
  e.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n * n; ++i) {
    e.push_back(random_qi_entry(rng));
  }
  return QiMatrix(dom, n, std::move(e));
}

inline QiMatrix random_invertible_qi_matrix(Rng& rng, const QiField& dom,
                                            int n) {
  for (;;) {
    QiMatrix m = random_qi_matrix(rng, dom, n);
    if (rref(m).rank == n) {
      return m;
    }
  }
}

//! A matrix of exact rank r, built as U E_r V with U, V invertible.
inline QiMatrix random_qi_matrix_of_rank(Rng& rng, const QiField& dom, int n,
                                         int r) {
  if (r == 0) {
    return QiMatrix::zero(dom, n);
  }
  QiMatrix u = random_invertible_qi_matrix(rng, dom, n);
  QiMatrix v = random_invertible_qi_matrix(rng, dom, n);
  return u * rank_marker(dom, n, r) * v;
}

//! Rank drawn uniformly from {0, ..., n}: rank-deficient inputs are the
//! interesting ones for everything in this library.
inline QiMatrix random_qi_matrix_mixed_rank(Rng& rng, const QiField& dom,
                                            int n) {
  int r = static_cast<int>(rng.below(static_cast<std::uint64_t>(n) + 1));
  return random_qi_matrix_of_rank(rng, dom, n, r);
}

//! A random idempotent U E_r U^{-1}.
inline QiMatrix random_qi_idempotent(Rng& rng, const QiField& dom, int n) {
  int      r = static_cast<int>(rng.below(static_cast<std::uint64_t>(n) + 1));
  QiMatrix u = random_invertible_qi_matrix(rng, dom, n);
  auto     uinv = try_invert(u);
  return u * rank_marker(dom, n, r) * *uinv;
}

// ---- universe specifications ----

struct GfUniverse {
  std::int64_t p;
  int          n;
};

struct QiUniverse {
  int n;
};

struct TableUniverse {
  std::string file;
};

using UniverseSpec = std::variant<GfUniverse, QiUniverse, TableUniverse>;

//! Parses `gf:p:n`, `qi:n:random`, or `table:FILE`.
inline UniverseSpec parse_universe(const std::string& spec) {
  auto fail = [&]() -> Error {
    return Error("bad universe '" + spec
                 + "' (expected gf:p:n, qi:n:random, or table:FILE)");
  };
  auto as_int = [&](const std::string& s) -> long {
    char* end = nullptr;
    long  v   = std::strtol(s.c_str(), &end, 10);
    if (end == s.c_str() || *end != '\0') {
      throw fail();
    }
    return v;
  };
  std::size_t c1 = spec.find(':');
  if (c1 == std::string::npos) {
    throw fail();
  }
  std::string kind = spec.substr(0, c1);
  std::string rest = spec.substr(c1 + 1);
  if (kind == "table") {
    if (rest.empty()) {
      throw fail();
    }
    return TableUniverse{rest};
  }
  if (kind == "gf") {
    std::size_t c2 = rest.find(':');
    if (c2 == std::string::npos) {
      throw fail();
    }
    long p = as_int(rest.substr(0, c2));
    long n = as_int(rest.substr(c2 + 1));
    require(n >= 1 && n <= 16, "universe dimension must be in [1, 16]");
    return GfUniverse{p, static_cast<int>(n)};
  }
  if (kind == "qi") {
    std::size_t c2 = rest.find(':');
    if (c2 == std::string::npos || rest.substr(c2 + 1) != "random") {
      throw fail();
    }
    long n = as_int(rest.substr(0, c2));
    require(n >= 1 && n <= 16, "universe dimension must be in [1, 16]");
    return QiUniverse{static_cast<int>(n)};
  }
  throw fail();
}

}  // namespace geninv

#endif  // GENINV_UNIVERSE_HPP_
