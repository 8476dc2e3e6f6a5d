/*
 * Copyright 2026 The pdcchsim Authors
 *
 * SPDX-License-Identifier: Apache-2.0
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace pdcch {

/// Raised when a configuration violates a model invariant (bad geometry,
/// probabilities not summing to one, out-of-range candidate counts, ...).
class config_error : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a scenario or request file cannot be read as structured text.
/// The message carries the file, line and key context when known.
class parse_error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

} // namespace pdcch
