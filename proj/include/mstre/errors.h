// mstre/errors.h

// Copyright 2026  The mstrenet authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MSTRE_ERRORS_H_
#define MSTRE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace mstre {

// Error taxonomy mirrors the CLI exit codes: config 3, data 4, numeric 5.

/// Invalid configuration (bad topology, bad hyperparameters, bad run config).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid or inconsistent input data (audio, text, files, shapes).
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Numeric failure (degenerate matrices, graphs admitting no path, non-finite
/// values where finite ones are required).
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace mstre

#endif  // MSTRE_ERRORS_H_
