/*
   Copyright 2026 The qborel Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef QBOREL_ERRORS_HPP
#define QBOREL_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qborel {

/// Base of every exception thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainError : Error {
    using Error::Error;
};

/// A rational function has a pole at the requested evaluation point.
struct EvaluationPole : Error {
    using Error::Error;
};

/// Operands live in different algebras, or an algebra is used with a scalar
/// field it does not support.
struct AlgebraMismatch : Error {
    using Error::Error;
};

struct TruncationError : Error {
    using Error::Error;
};

/// A class in ker(eps)/M could not be written in the chosen basis. Usually
/// means the truncation used to build M is too small.
struct ReductionFailure : Error {
    using Error::Error;
};

struct InvalidDescriptor : Error {
    using Error::Error;
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

struct UnknownSuite : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(std::size_t pos, const std::string& msg)
        : Error("parse error at offset " + std::to_string(pos) + ": " + msg), position(pos) {}
    std::size_t position;
};

}  // namespace qborel

#endif  // QBOREL_ERRORS_HPP
