// Copyright 2026 The qindep Authors
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

#ifndef QINDEP_ERRORS_H
#define QINDEP_ERRORS_H

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qindep {

/// Malformed or inconsistent user input (bad circuit text, wrong state length, ...).
class InputError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A configured size guard was exceeded (qubit budget, dense matrix limit).
class ResourceError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// An internal invariant was violated. Indicates a bug, not bad input.
class InvariantError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

/// Circuit text error carrying the 1-based line it was found on.
class ParseError : public InputError {
   public:
    ParseError(std::size_t line, const std::string &message)
        : InputError("line " + std::to_string(line) + ": " + message), line_(line), detail_(message) {
    }

    std::size_t line() const noexcept {
        return line_;
    }
    const std::string &detail() const noexcept {
        return detail_;
    }

   private:
    std::size_t line_;
    std::string detail_;
};

}  // namespace qindep

#endif
