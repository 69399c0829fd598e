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

#ifndef GENINV_ERROR_HPP_
#define GENINV_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace geninv {

//! Kind of failure carried by an Error.
//!
//! `input` covers malformed files, bad flags, violated operation
//! preconditions and exceeded enumeration caps; `internal` marks a broken
//! library invariant (a proved identity failed to re-verify) and should
//! never be seen in normal use.
enum class ErrorKind { input, internal };

class Error : public std::runtime_error {
 public:
  explicit Error(std::string msg, ErrorKind kind = ErrorKind::input)
      : std::runtime_error(std::move(msg)), kind_(kind) {}

  ErrorKind kind() const noexcept {
    return kind_;
  }

 private:
  ErrorKind kind_;
};

inline void require(bool cond, const std::string& msg,
                    ErrorKind kind = ErrorKind::input) {
  if (!cond) {
    throw Error(msg, kind);
  }
}

}  // namespace geninv

#endif  // GENINV_ERROR_HPP_
