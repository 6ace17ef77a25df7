// Copyright 2026 The peckseq Authors
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

#ifndef PECKSEQ_ERRORS_HPP_
#define PECKSEQ_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace peckseq {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad user input or violated precondition. CLI exit code 4.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// Argument outside the domain of a real function (log of a negative, ...).
class DomainError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

// An enclosure is too wide to decide a floor, a sign or a printed digit.
// Callers raise precision and retry.
class AmbiguousRounding : public Error {
 public:
  using Error::Error;
};

// Precision escalation hit the configured cap. CLI exit code 3.
class PrecisionExhausted : public Error {
 public:
  using Error::Error;
};

// A continued fraction could not be certified to the requested depth.
// The certified prefix is kept.
class CertificationFailed : public PrecisionExhausted {
 public:
  CertificationFailed(const std::string& what, std::vector<mpz_class> prefix)
      : PrecisionExhausted(what), prefix_(std::move(prefix)) {}

  const std::vector<mpz_class>& prefix() const { return prefix_; }
  std::size_t depth_achieved() const { return prefix_.size(); }

 private:
  std::vector<mpz_class> prefix_;
};

// A certified Littlewood product exceeded its certified bound. CLI exit code 2.
class BoundViolated : public Error {
 public:
  using Error::Error;
};

// An explicit psi value was requested above the digit budget.
class DigitBudgetExceeded : public Error {
 public:
  using Error::Error;
};

// Unit search exhausted its window.
class NotFound : public Error {
 public:
  explicit NotFound(long k_max)
      : Error("no unit found with k <= " + std::to_string(k_max)),
        k_max_(k_max) {}
  long k_max() const { return k_max_; }

 private:
  long k_max_;
};

}  // namespace peckseq

#endif  // PECKSEQ_ERRORS_HPP_
