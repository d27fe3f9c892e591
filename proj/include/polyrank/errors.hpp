/*
   Copyright 2026 The polyrank authors

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

#ifndef POLYRANK_ERRORS_HPP
#define POLYRANK_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polyrank {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Values from different coefficient domains were combined.
class DomainMismatch : public Error {
   public:
    using Error::Error;
};

/// Matrix shapes are incompatible with the requested operation.
class DimensionMismatch : public Error {
   public:
    using Error::Error;
};

class DivisionByZero : public Error {
   public:
    using Error::Error;
};

/// A monic polynomial was required.
class NotMonic : public Error {
   public:
    using Error::Error;
};

class DegreeTooSmall : public Error {
   public:
    using Error::Error;
};

/// The operation is undefined over fields of characteristic 2.
class CharacteristicTwo : public Error {
   public:
    using Error::Error;
};

class NotCoprime : public Error {
   public:
    using Error::Error;
};

class NotPairwiseCoprime : public Error {
   public:
    using Error::Error;
};

/// The supplied factors do not multiply to the characteristic polynomial.
class NotCharPolyFactorization : public Error {
   public:
    using Error::Error;
};

class BothZero : public Error {
   public:
    using Error::Error;
};

/// Field selection string does not name the rationals or a prime < 2^31.
class BadField : public Error {
   public:
    using Error::Error;
};

class ConfigError : public Error {
   public:
    using Error::Error;
};

/// Malformed textual input; carries a 1-based line and token position when known.
class ParseError : public Error {
   public:
    explicit ParseError(const std::string& message, std::size_t line = 0, std::size_t column = 0)
        : Error(decorate(message, line, column)), line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

   private:
    static std::string decorate(const std::string& message, std::size_t line, std::size_t column) {
        if (line == 0) return message;
        std::string out = message + " (line " + std::to_string(line);
        if (column != 0) out += ", column " + std::to_string(column);
        out += ")";
        return out;
    }

    std::size_t line_;
    std::size_t column_;
};

}  // namespace polyrank

#endif  // POLYRANK_ERRORS_HPP
