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

#include "cdk/measure_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace cdk {

namespace {

std::vector<Rational> rational_list(const nlohmann::json& node, const std::string& key) {
    if (!node.contains(key)) throw ParseError("measure file: missing key \"" + key + "\"");
    const nlohmann::json& list = node.at(key);
    if (!list.is_array()) throw ParseError("measure file: \"" + key + "\" must be a list");
    std::vector<Rational> out;
    out.reserve(list.size());
    for (const nlohmann::json& item : list) {
        if (!item.is_string()) {
            throw ParseError("measure file: entries of \"" + key +
                             "\" must be rational text forms, not numeric literals");
        }
        out.push_back(Rational::parse(item.get<std::string>()));
    }
    return out;
}

}  // namespace

Measure parse_measure_text(const std::string& jsonText) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(jsonText);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("measure file: invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || doc.size() != 2) {
        throw ParseError("measure file: expected an object with exactly \"points\" and \"weights\"");
    }
    std::vector<Rational> points = rational_list(doc, "points");
    std::vector<Rational> weights = rational_list(doc, "weights");
    return Measure(std::move(points), std::move(weights));
}

Measure parse_measure(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("measure file: cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_measure_text(buf.str());
}

}  // namespace cdk
