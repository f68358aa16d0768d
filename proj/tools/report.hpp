/*
   Copyright 2026 The qgalois Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef QGALOIS_TOOLS_REPORT_HPP
#define QGALOIS_TOOLS_REPORT_HPP

#include <string>

#include "json.hpp"

namespace qg::report {

using Json = nlohmann::ordered_json;

// One line per leaf: "<json pointer> <json value>". Empty arrays and objects are leaves.
std::string to_lines(const Json& doc);
Json from_lines(const std::string& text);

// Checks doc against the subset of JSON Schema used by report.schema.json:
// type, required, properties, additionalProperties, items, enum, oneOf and local $ref.
// Returns an empty string when valid, else the first violation.
std::string validate(const Json& doc, const Json& schema);

}  // namespace qg::report

#endif
