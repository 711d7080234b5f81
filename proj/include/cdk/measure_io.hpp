/*
 * Copyright 2026 The cdk authors
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

#include <string>

#include "cdk/measure.hpp"

namespace cdk {

/// Reads a measure file: a JSON object with exactly the keys "points" and
/// "weights", each a list of rational text forms ("p" or "p/q"). Decimal
/// and numeric literals are rejected; invariant violations raise
/// InvalidMeasure, everything else ParseError.
Measure parse_measure(const std::string& path);

/// Same, from an in-memory JSON document.
Measure parse_measure_text(const std::string& jsonText);

}  // namespace cdk
