// Copyright 2026 The fsgraph developers
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fsg {

/** Invalid graph construction or malformed query arguments. */
class GraphError : public std::runtime_error {
 public:
  explicit GraphError(const std::string& message)
      : std::runtime_error(message) {}
};

/** The requested exact analysis exceeds the configured state-space cap. */
class CapError : public std::runtime_error {
 public:
  explicit CapError(const std::string& message)
      : std::runtime_error(message) {}
};

/** A swap sequence failed validation at a specific move. */
class SequenceError : public std::runtime_error {
 public:
  SequenceError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " (move index " +
                           std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/**
 * An internal choice that the exchange algorithm guarantees to exist was
 * unavailable. Raised only when preconditions were met yet a counting
 * argument failed to produce a witness; indicates a bug, never expected
 * on valid inputs.
 */
class InvariantError : public std::logic_error {
 public:
  explicit InvariantError(const std::string& message)
      : std::logic_error(message) {}
};

}  // namespace fsg
