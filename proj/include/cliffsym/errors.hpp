// Copyright 2026 The cliffsym developers
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

namespace cliffsym {

/// Thrown when a dense operator cannot be recognized as a (tensor)
/// Weyl-Heisenberg element up to a global phase; for conjugates this signals
/// that the conjugating operator lies outside the normalizer.
struct NotInGroupError : std::runtime_error {
  explicit NotInGroupError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when an enumeration or closure would exceed its size guard.
/// Guards fail loudly instead of truncating.
struct GuardExceededError : std::runtime_error {
  explicit GuardExceededError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cliffsym
