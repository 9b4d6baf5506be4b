// Copyright 2026 The pacsets Authors.
//
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

#ifndef PACSETS_ERRORS_H_
#define PACSETS_ERRORS_H_

#include <stdexcept>
#include <string>

namespace pacsets {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller handed in parameters outside an operation's domain.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// The data-generating model is broken, e.g. an empty target set.
class ModelViolation : public Error {
 public:
  using Error::Error;
};

// A learner could not produce an output on this sample. Retryable failures
// are sampling anomalies that more data is expected to resolve.
class LearnerFailure : public Error {
 public:
  LearnerFailure(const std::string& what, bool retryable)
      : Error(what), retryable_(retryable) {}

  bool retryable() const { return retryable_; }

 private:
  bool retryable_;
};

}  // namespace pacsets

#endif  // PACSETS_ERRORS_H_
