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

// Umbrella header. io.hpp and reproduce.hpp additionally need nlohmann/json.
#pragma once

#include "errors.hpp"
#include "grid_state.hpp"
#include "parallel.hpp"
#include "placements.hpp"
#include "search_runner.hpp"
#include "stationary.hpp"
#include "walk_operators.hpp"
#include "weight_tuner.hpp"
