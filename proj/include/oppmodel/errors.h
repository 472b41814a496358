// Copyright 2026 The oppmodel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef OPPMODEL_ERRORS_H_
#define OPPMODEL_ERRORS_H_

#include <stdexcept>
#include <string>

namespace oppmodel {

// Raised when an internal invariant (normalization, totality) is broken.
// Distinct from bad input, which surfaces as std::invalid_argument or
// LogFormatError.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

#define OPPMODEL_CHECK(cond, msg)                                      \
  do {                                                                 \
    if (!(cond)) {                                                     \
      throw ::oppmodel::InvariantError(std::string(__FILE__) + ":" +   \
                                       std::to_string(__LINE__) + " " + \
                                       #cond + ": " + (msg));          \
    }                                                                  \
  } while (0)

}  // namespace oppmodel

#endif  // OPPMODEL_ERRORS_H_
