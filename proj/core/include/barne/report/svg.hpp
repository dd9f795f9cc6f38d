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
#ifndef BARNE_REPORT_SVG_HPP_
#define BARNE_REPORT_SVG_HPP_

#include <string>

#include "barne/endorsement/classify.hpp"

namespace barne::report {

inline constexpr const char* kGeneratorComment = "<!-- generator: barne-kit 0.1.0 -->";

// Triangle plot of the (f, g) simplex with one hatched layer per strategy
// (sigma_h at 45 degrees, sigma_e at 90, sigma_0 at 135) and axis ticks at
// 0, n-Q, Q and n. Deterministic apart from the generator comment line.
std::string render_svg(const endorsement::SimplexMap& map);

}  // namespace barne::report

#endif  // BARNE_REPORT_SVG_HPP_
