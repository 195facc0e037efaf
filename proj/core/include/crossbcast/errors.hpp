// Copyright 2026 The crossbcast Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace crossbcast {

/// Base class for all library errors. The CLI maps subclasses to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (network files, assignments, configs).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Two pairwise distances are equal within the distinctness tolerance.
class TiedWeights : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// The exhaustive oracle was asked for an instance above its size cap.
class TooLarge : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class SourceNotAtIntersection : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// sweep() was handed an assignment that does not deliver to every node.
class InfeasibleInput : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class DisconnectedGrid : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class EmptySegment : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class InfeasibleN : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

}  // namespace crossbcast
