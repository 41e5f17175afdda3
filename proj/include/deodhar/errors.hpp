// Copyright 2026 The deodhar-kl Authors.
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

namespace deodhar {

/// Unsupported family/rank, unknown generator label, malformed input.
class ConfigurationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input violates an operation's documented precondition (non-reduced word,
/// mask length mismatch, hypotheses of a construction not met).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The operation is well-defined in general but not for this kind of input
/// (non-Deodhar element for a mask formula, exceptional type for strings).
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace deodhar
