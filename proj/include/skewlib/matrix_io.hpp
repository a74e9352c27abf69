// Copyright 2026 The skewlib Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Matrices as JSON: an array of rows, each entry an [re, im] pair. Plain
 * numbers are accepted as real entries on input.
 */

#pragma once

#include <string>

#include <json.hpp>

#include "skewlib/linalg.hpp"

namespace skew {

nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);
ComplexMatrix read_matrix_file(const std::string& path);

}  // namespace skew
