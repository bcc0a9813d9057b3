// SPDX-License-Identifier: Apache-2.0
//
// srmac — sparse regression codes over MIMO multiple-access channels
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <stdexcept>
#include <string>

namespace srmac {

/// Invalid user input: malformed config files, out-of-range parameters.
/// CLI exit code 1.
struct config_error : std::runtime_error {
  explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A numerical procedure failed to converge or hit an invalid regime
/// (bracket failure, divergent integral). CLI exit code 2.
struct numerical_error : std::runtime_error {
  explicit numerical_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Exhaustive-enumeration oracle invoked above its size caps. CLI exit code 3.
struct oracle_cap_error : std::runtime_error {
  explicit oracle_cap_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace srmac
