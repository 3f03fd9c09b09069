// Copyright 2026 The lqwalk Authors
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

namespace lqw {

/// Caller broke a precondition (bad index, mismatched grids, ...).
class ContractError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/// User-facing configuration is invalid (empty marked set, placement does
/// not fit on the grid, bad sweep range, ...).
class ConfigError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A derived object could not be built from its inputs.
class ConstructionError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Refusal to allocate a dense object beyond the configured guard.
class SizeLimitError : public std::length_error {
  public:
    using std::length_error::length_error;
};

} // namespace lqw
