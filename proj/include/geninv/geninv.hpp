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

#ifndef GENINV_GENINV_HPP_
#define GENINV_GENINV_HPP_

#include "along.hpp"     // IWYU pragma: export
#include "carrier.hpp"   // IWYU pragma: export
#include "error.hpp"     // IWYU pragma: export
#include "gmp.hpp"       // IWYU pragma: export
#include "green.hpp"     // IWYU pragma: export
#include "io.hpp"        // IWYU pragma: export
#include "linalg.hpp"    // IWYU pragma: export
#include "matrix.hpp"    // IWYU pragma: export
#include "monoid.hpp"    // IWYU pragma: export
#include "oracle.hpp"    // IWYU pragma: export
#include "registry.hpp"  // IWYU pragma: export
#include "scalar.hpp"    // IWYU pragma: export
#include "universe.hpp"  // IWYU pragma: export
#include "verify.hpp"    // IWYU pragma: export

#endif  // GENINV_GENINV_HPP_
