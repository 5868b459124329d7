/*
   Copyright 2026 The otcohom Authors

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
#include <string_view>

namespace otcohom {

enum class ErrorKind {
  NonSeparableRoots,
  WrongSignature,
  PrecisionExhausted,
  NotInvertible,
  NonIntegralElement,
  ReduciblePolynomial,
  IrreducibilityUnverified,
  InvalidPolynomial,
  NotTotallyPositive,
  NotAUnit,
  NotALattice,
  WrongRank,
  NotUnimodular,
  IndexOutOfRange,
  BackendUnavailable,
  AmbiguousCharacters,
  MalformedSpec,
  MissingInverseClass,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries one of the kinds above so that
// callers (the CLI in particular) can map it onto an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonSeparableRoots: return "NonSeparableRoots";
    case ErrorKind::WrongSignature: return "WrongSignature";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::NonIntegralElement: return "NonIntegralElement";
    case ErrorKind::ReduciblePolynomial: return "ReduciblePolynomial";
    case ErrorKind::IrreducibilityUnverified: return "IrreducibilityUnverified";
    case ErrorKind::InvalidPolynomial: return "InvalidPolynomial";
    case ErrorKind::NotTotallyPositive: return "NotTotallyPositive";
    case ErrorKind::NotAUnit: return "NotAUnit";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::WrongRank: return "WrongRank";
    case ErrorKind::NotUnimodular: return "NotUnimodular";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::BackendUnavailable: return "BackendUnavailable";
    case ErrorKind::AmbiguousCharacters: return "AmbiguousCharacters";
    case ErrorKind::MalformedSpec: return "MalformedSpec";
    case ErrorKind::MissingInverseClass: return "MissingInverseClass";
  }
  return "Unknown";
}

}  // namespace otcohom
