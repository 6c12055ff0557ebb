/*
 * Copyright 2026 The ulrc Authors
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

#ifndef ULRC_IO_HPP
#define ULRC_IO_HPP

#include <json.hpp>

#include "ulrc/bounds.hpp"
#include "ulrc/construction.hpp"

namespace ulrc::io {

using nlohmann::json;

json parse_json(const std::string& text);  // ParseError on malformed input

// tower: {"p":5,"a":1,"t":6,"g":[digits...],"h":[encodings...]}
json tower_to_json(const FieldTower& tower);
FieldTower tower_from_json(const json& j);

// requirement / profile: {"delta":2,"n":[2,3,4]}
json requirement_to_json(const LocalityRequirement& req);
LocalityRequirement requirement_from_json(const json& j);
LocalityProfile profile_from_json(const json& j);

// construction parameters: {"p":5,"a":1,"t":6,"delta":2,"m":[1,1,1],"k":4}
json params_to_json(const LrcParams& params);
LrcParams params_from_json(const json& j);

// code descriptor: tower, layout, and point encodings; symbol points and
// the generator matrix are recomputed on load
json code_to_json(const LrcCode& code);
LrcCode code_from_json(const json& j);

json bound_report_to_json(const BoundReport& report);
std::string bound_report_table(const BoundReport& report);

// codeword files: one decimal encoding per line, `*` for an erased symbol
std::string codeword_to_text(const std::vector<std::optional<Elt>>& symbols);
std::vector<std::optional<Elt>> codeword_from_text(const FieldTower& tower,
                                                   const std::string& text,
                                                   std::size_t expected);
std::string message_to_text(const std::vector<Elt>& symbols);
std::vector<Elt> message_from_text(const FieldTower& tower, const std::string& text,
                                   std::size_t expected);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace ulrc::io

#endif
