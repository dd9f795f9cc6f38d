// Copyright 2026 The barne-kit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#ifndef BARNE_REPORT_SERIALIZE_HPP_
#define BARNE_REPORT_SERIALIZE_HPP_

#include <iosfwd>
#include <nlohmann/json_fwd.hpp>
#include <string>

#include "barne/endorsement/classify.hpp"

namespace barne::report {

// Columns: f, g, barne_h, barne_e, barne_0, region_h, region_e, region_0.
void write_csv(std::ostream& out, const endorsement::SimplexMap& map);
std::string to_csv(const endorsement::SimplexMap& map);

nlohmann::json to_json(const endorsement::PointVerdict& v);
// Params echo, grid and per-strategy summaries.
nlohmann::json to_json(const endorsement::SimplexMap& map);
// Inverse of to_json; the params are re-validated. Throws ConfigError.
endorsement::SimplexMap simplex_map_from_json(const nlohmann::json& j);

}  // namespace barne::report

#endif  // BARNE_REPORT_SERIALIZE_HPP_
