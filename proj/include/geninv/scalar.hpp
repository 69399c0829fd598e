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
// The two exact ground arithmetics: Gaussian rationals Q(i) and the prime
// fields GF(p).  All higher layers route scalar arithmetic through a domain
// object so a matrix over GF(p) carries its modulus exactly once.

#ifndef GENINV_SCALAR_HPP_
#define GENINV_SCALAR_HPP_

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "error.hpp"

namespace geninv {

using Rational = boost::multiprecision::cpp_rational;
using BigInt   = boost::multiprecision::cpp_int;

//! A Gaussian rational re + im*i.  cpp_rational keeps both parts in lowest
//! terms with positive denominator, so equality is plain memberwise
//! comparison.
struct GaussianRational {
  Rational re;
  Rational im;

  friend bool operator==(const GaussianRational&,
                         const GaussianRational&) = default;
};

namespace detail {

//! Renders a rational as `n` or `n/d` (never `n/1`).
inline std::string rational_str(const Rational& q) {
  BigInt num = numerator(q);
  BigInt den = denominator(q);
  std::string s = num.str();
  if (den != 1) {
    s += "/" + den.str();
  }
  return s;
}

//! Parses `[+-]?digits(/digits)?` exactly; rejects everything else.
inline std::optional<Rational> parse_rational(std::string_view s) {
  if (s.empty()) {
    return std::nullopt;
  }
  std::size_t pos  = 0;
  bool        neg  = false;
  if (s[pos] == '+' || s[pos] == '-') {
    neg = s[pos] == '-';
    ++pos;
  }
  std::size_t num_begin = pos;
  while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
    ++pos;
  }
  if (pos == num_begin) {
    return std::nullopt;
  }
  BigInt num(std::string(s.substr(num_begin, pos - num_begin)));
  BigInt den = 1;
  if (pos < s.size()) {
    if (s[pos] != '/') {
      return std::nullopt;
    }
    ++pos;
    std::size_t den_begin = pos;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
      ++pos;
    }
    if (pos == den_begin || pos != s.size()) {
      return std::nullopt;
    }
    den = BigInt(std::string(s.substr(den_begin)));
    if (den == 0) {
      return std::nullopt;
    }
  }
  Rational q = Rational(num) / Rational(den);
  return neg ? -q : q;
}

}  // namespace detail

//! The field Q(i) with complex conjugation as the scalar involution.
class QiField {
 public:
  using Scalar = GaussianRational;

  Scalar zero() const {
    return {};
  }
  Scalar one() const {
    return {Rational(1), Rational(0)};
  }
  Scalar from_int(long v) const {
    return {Rational(v), Rational(0)};
  }

  Scalar add(const Scalar& a, const Scalar& b) const {
    return {a.re + b.re, a.im + b.im};
  }
  Scalar sub(const Scalar& a, const Scalar& b) const {
    return {a.re - b.re, a.im - b.im};
  }
  Scalar mul(const Scalar& a, const Scalar& b) const {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  Scalar neg(const Scalar& a) const {
    return {-a.re, -a.im};
  }
  Scalar conj(const Scalar& a) const {
    return {a.re, -a.im};
  }
  std::optional<Scalar> inv(const Scalar& a) const {
    Rational n = a.re * a.re + a.im * a.im;
    if (n == 0) {
      return std::nullopt;
    }
    return Scalar{a.re / n, -a.im / n};
  }

  bool is_zero(const Scalar& a) const {
    return a.re == 0 && a.im == 0;
  }
  bool eq(const Scalar& a, const Scalar& b) const {
    return a == b;
  }
  bool in_domain(const Scalar&) const {
    return true;  // cpp_rational keeps itself canonical
  }
  bool same(const QiField&) const {
    return true;
  }

  std::string name() const {
    return "Qi";
  }

  //! Canonical text form: `a/b`, or `a/b+c/d i` / `a/b-c/d i` when the
  //! imaginary part is nonzero (real part always printed, `/1` omitted).
  std::string str(const Scalar& a) const {
    if (a.im == 0) {
      return detail::rational_str(a.re);
    }
    std::string s = detail::rational_str(a.re);
    if (a.im > 0) {
      s += "+" + detail::rational_str(a.im);
    } else {
      s += "-" + detail::rational_str(-a.im);
    }
    return s + " i";
  }

  //! Accepts `a/b`, `-a/b`, `a/b+c/d i`, `a/b-c/d i`, `c/d i`, integers
  //! without `/1`; interior spaces are ignored.
  Scalar parse(std::string_view text) const {
    std::string s;
    s.reserve(text.size());
    for (char c : text) {
      if (c != ' ' && c != '\t') {
        s += c;
      }
    }
    require(!s.empty(), "empty scalar");
    if (s.back() != 'i') {
      auto re = detail::parse_rational(s);
      require(re.has_value(), "malformed rational '" + std::string(text) + "'");
      return {*re, Rational(0)};
    }
    s.pop_back();  // strip the trailing i
    require(!s.empty(), "malformed scalar '" + std::string(text)
                            + "': bare 'i' needs a coefficient");
    // Split at the last top-level sign that is not the leading sign and not
    // part of a fraction.
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
      if (s[k] == '+' || s[k] == '-') {
        split = k;
        break;
      }
    }
    if (split == std::string::npos) {
      auto im = detail::parse_rational(s);
      require(im.has_value(), "malformed scalar '" + std::string(text) + "'");
      return {Rational(0), *im};
    }
    auto re = detail::parse_rational(s.substr(0, split));
    auto im = detail::parse_rational(s.substr(split));
    require(re.has_value() && im.has_value(),
            "malformed scalar '" + std::string(text) + "'");
    return {*re, *im};
  }
};

//! Deterministic primality test by trial division; moduli are capped well
//! below the point where this matters.
inline bool is_prime(std::int64_t p) {
  if (p < 2) {
    return false;
  }
  if (p % 2 == 0) {
    return p == 2;
  }
  for (std::int64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) {
      return false;
    }
  }
  return true;
}

//! The prime field GF(p).  Residues are stored canonically in [0, p); the
//! involution is the identity (matrices over GF(p) use plain transpose).
class PrimeField {
 public:
  using Scalar = std::int64_t;

  static constexpr std::int64_t kMaxModulus = (1LL << 31) - 1;

  explicit PrimeField(std::int64_t p) : p_(p) {
    require(p >= 2 && p <= kMaxModulus,
            "GF modulus must be in [2, 2^31), got " + std::to_string(p));
    require(is_prime(p), "GF modulus " + std::to_string(p) + " is not prime");
  }

  std::int64_t modulus() const {
    return p_;
  }

  Scalar zero() const {
    return 0;
  }
  Scalar one() const {
    return 1 % p_;
  }
  Scalar from_int(long v) const {
    Scalar r = static_cast<Scalar>(v % p_);
    return r < 0 ? r + p_ : r;
  }

  Scalar add(Scalar a, Scalar b) const {
    Scalar r = a + b;
    return r >= p_ ? r - p_ : r;
  }
  Scalar sub(Scalar a, Scalar b) const {
    Scalar r = a - b;
    return r < 0 ? r + p_ : r;
  }
  Scalar mul(Scalar a, Scalar b) const {
    return static_cast<Scalar>(static_cast<__int128>(a) * b % p_);
  }
  Scalar neg(Scalar a) const {
    return a == 0 ? 0 : p_ - a;
  }
  Scalar conj(Scalar a) const {
    return a;
  }
  std::optional<Scalar> inv(Scalar a) const {
    if (a == 0) {
      return std::nullopt;
    }
    // extended Euclid
    std::int64_t t = 0, nt = 1, r = p_, nr = a;
    while (nr != 0) {
      std::int64_t q = r / nr;
      std::int64_t tmp = t - q * nt;
      t  = nt;
      nt = tmp;
      tmp = r - q * nr;
      r  = nr;
      nr = tmp;
    }
    return t < 0 ? t + p_ : t;
  }

  bool is_zero(Scalar a) const {
    return a == 0;
  }
  bool eq(Scalar a, Scalar b) const {
    return a == b;
  }
  bool in_domain(Scalar a) const {
    return a >= 0 && a < p_;
  }
  bool same(const PrimeField& o) const {
    return p_ == o.p_;
  }

  std::string name() const {
    return "GF(" + std::to_string(p_) + ")";
  }

  std::string str(Scalar a) const {
    return std::to_string(a);
  }

  //! Accepts a nonnegative decimal residue and reduces it mod p.
  Scalar parse(std::string_view text) const {
    require(!text.empty(), "empty scalar");
    for (char c : text) {
      require(c >= '0' && c <= '9',
              "malformed GF(" + std::to_string(p_) + ") residue '"
                  + std::string(text) + "'");
    }
    BigInt v{std::string(text)};
    return static_cast<Scalar>(v % p_);
  }

 private:
  std::int64_t p_;
};

}  // namespace geninv

#endif  // GENINV_SCALAR_HPP_
