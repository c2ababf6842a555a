/**************************************************************************
 * Copyright 2026 The cwsense Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cwsense {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A parameter is outside the domain of the requested operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// The requested instance exceeds a desk-scale enumeration or size cap.
class BudgetError : public Error {
public:
    using Error::Error;
};

/// Malformed input file. `line()` is 1-based, 0 when not line specific.
class FormatError : public Error {
public:
    FormatError(const std::string& what, std::size_t line = 0)
        : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Structurally valid input whose combinatorial claims do not hold.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// A construction produced an object violating its own guarantee.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace cwsense
