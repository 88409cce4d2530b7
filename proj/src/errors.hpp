// Copyright 2026 The leorelay Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef LEORELAY_ERRORS_HPP_
#define LEORELAY_ERRORS_HPP_

#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace leorelay {

// Failure categories. The C API maps these one-to-one onto lr_status codes.
enum class Errc {
  domain = 1,        // input outside the mathematical domain of an operation
  precondition = 2,  // scenario violates a stated precondition (e.g. caps disjoint)
  numerical = 3,     // numerical breakdown (negative discriminant, ...)
  degenerate = 4,    // geometric degeneracy (no bracketed root, ...)
  argument = 5,      // malformed argument (grid size, probability threshold, ...)
  internal = 6,      // internal invariant violated
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Builds the message from streamable parts: fail(Errc::domain, "chord ", x, " < 0").
template <typename... Parts>
[[noreturn]] void fail(Errc code, Parts&&... parts) {
  std::ostringstream os;
  os.precision(17);
  (os << ... << std::forward<Parts>(parts));
  throw Error(code, os.str());
}

}  // namespace leorelay

#endif  // LEORELAY_ERRORS_HPP_
