// Copyright 2026 The ulrich Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ULRICH_ERRORS_HPP
#define ULRICH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ulrich {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad arguments: mismatched variable counts, negative binomial order, etc.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Input outside the (n, a, r) range where the non-existence theorem applies.
class OutOfTheoremScope : public Error {
 public:
  using Error::Error;
};

/// A polynomial expected to be symmetric is not.
class SymmetryError : public Error {
 public:
  using Error::Error;
};

/// Some term of a polynomial is missing a variable it was expected to contain.
class DivisibilityError : public Error {
 public:
  using Error::Error;
};

/// A verified identity or positivity claim failed; `witness` names the input.
class VerificationFailure : public Error {
 public:
  VerificationFailure(const std::string& what, std::string witness)
      : Error(what), witness_(std::move(witness)) {}
  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string witness_;
};

/// The certifier reached a state that would contradict a proven lemma.
class InternalContradiction : public Error {
 public:
  using Error::Error;
};

}  // namespace ulrich

#endif  // ULRICH_ERRORS_HPP
