/*
   Copyright 2026 The skewpoly authors

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

#pragma once

#include <stdexcept>
#include <string>

namespace skewpoly {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Operands belong to different domains or rings.
class DomainMismatch : public Error {
public:
    explicit DomainMismatch(const std::string& msg) : Error(msg) {}
};

/// Division by zero in a scalar domain.
class DivisionByZero : public Error {
public:
    explicit DivisionByZero(const std::string& msg) : Error(msg) {}
};

/// Inversion of a nonzero element that is not a unit (polynomial coefficient domains).
class NonUnit : public Error {
public:
    explicit NonUnit(const std::string& msg) : Error(msg) {}
};

/// Malformed textual or JSON input.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

/// Structural rule violated (arity mismatch, bad modulus, non-commuting maps, ...).
class InvalidConstruction : public Error {
public:
    explicit InvalidConstruction(const std::string& msg) : Error(msg) {}
};

/// Operation requires ring properties the given ring does not have
/// (division-ring coefficients, automorphism twists, encodable coefficient domain, ...).
class UnsupportedRing : public Error {
public:
    explicit UnsupportedRing(const std::string& msg) : Error(msg) {}
};

/// A bounded search ran out of budget before reaching a decision.
class SearchExhausted : public Error {
public:
    explicit SearchExhausted(const std::string& msg) : Error(msg) {}
};

/// An ideal required to be proper contains the identity.
class NotProper : public Error {
public:
    explicit NotProper(const std::string& msg) : Error(msg) {}
};

/// A quotient expected to be finite dimensional is not.
class InfiniteDimension : public Error {
public:
    explicit InfiniteDimension(const std::string& msg) : Error(msg) {}
};

} // namespace skewpoly
