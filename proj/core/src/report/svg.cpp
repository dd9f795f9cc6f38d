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
#include "barne/report/svg.hpp"

#include <set>
#include <sstream>

namespace barne::report {

using endorsement::Strategy;

namespace {

constexpr double kSize = 480.0;  // plot square in pixels
constexpr double kMargin = 60.0;

struct Layer {
  Strategy strategy;
  const char* id;
  const char* label;
  const char* color;
  int angle;
};

constexpr Layer kLayers[] = {
    {Strategy::kHonest, "hatch-h", "sigma_h", "#1f5fa8", 45},
    {Strategy::kBlind, "hatch-e", "sigma_e", "#b2321f", 90},
    {Strategy::kIdle, "hatch-0", "sigma_0", "#2e7d32", 135},
};

}  // namespace

std::string render_svg(const endorsement::SimplexMap& map) {
  const int n = map.params.n;
  const int q = map.params.quorum;
  const double cell = kSize / (n + 1);
  auto x_of = [&](double f) { return kMargin + f * cell; };
  auto y_of = [&](double g) { return kMargin + kSize - g * cell; };

  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  const double w = kSize + 2 * kMargin + 140.0;
  const double h = kSize + 2 * kMargin;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << kGeneratorComment << "\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
     << "\" viewBox=\"0 0 " << w << ' ' << h << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
     << "<defs>\n";
  for (const Layer& l : kLayers) {
    os << "  <pattern id=\"" << l.id << "\" patternUnits=\"userSpaceOnUse\" width=\"8\" "
       << "height=\"8\" patternTransform=\"rotate(" << l.angle << ")\">"
       << "<line x1=\"0\" y1=\"0\" x2=\"0\" y2=\"8\" stroke=\"" << l.color
       << "\" stroke-width=\"2\"/></pattern>\n";
  }
  os << "</defs>\n";

  os << "<text x=\"" << kMargin << "\" y=\"" << kMargin / 2 << "\">"
     << endorsement::to_string(map.params.amendments) << ", n=" << n << ", Q=" << q
     << "</text>\n";

  // Simplex outline: f + g <= n.
  os << "<polygon points=\"" << x_of(0) << ',' << y_of(0) << ' ' << x_of(n + 1) << ','
     << y_of(0) << ' ' << x_of(0) << ',' << y_of(n + 1)
     << "\" fill=\"none\" stroke=\"#000\" stroke-width=\"1\"/>\n";

  for (const Layer& l : kLayers) {
    os << "<path id=\"region-" << l.label << "\" fill=\"url(#" << l.id
       << ")\" stroke=\"none\" d=\"";
    for (const auto& [f, g] : map.region(l.strategy))
      os << 'M' << x_of(f) << ' ' << y_of(g + 1) << "h" << cell << "v" << cell << "h" << -cell
         << 'z';
    os << "\"/>\n";
  }

  // Axes and ticks.
  os << "<line x1=\"" << x_of(0) << "\" y1=\"" << y_of(0) << "\" x2=\"" << x_of(n + 1)
     << "\" y2=\"" << y_of(0) << "\" stroke=\"#000\"/>\n"
     << "<line x1=\"" << x_of(0) << "\" y1=\"" << y_of(0) << "\" x2=\"" << x_of(0)
     << "\" y2=\"" << y_of(n + 1) << "\" stroke=\"#000\"/>\n";
  std::set<int> ticks = {0, n - q, q, n};
  for (int t : ticks) {
    const std::string label = t == 0 ? "0" : t == n ? "n" : t == q ? "Q" : "n-Q";
    os << "<line x1=\"" << x_of(t) << "\" y1=\"" << y_of(0) << "\" x2=\"" << x_of(t)
       << "\" y2=\"" << y_of(0) + 5 << "\" stroke=\"#000\"/>"
       << "<text x=\"" << x_of(t) << "\" y=\"" << y_of(0) + 18
       << "\" text-anchor=\"middle\">" << label << " (" << t << ")</text>\n";
    os << "<line x1=\"" << x_of(0) - 5 << "\" y1=\"" << y_of(t) << "\" x2=\"" << x_of(0)
       << "\" y2=\"" << y_of(t) << "\" stroke=\"#000\"/>"
       << "<text x=\"" << x_of(0) - 8 << "\" y=\"" << y_of(t) + 4
       << "\" text-anchor=\"end\">" << label << "</text>\n";
  }
  os << "<text x=\"" << x_of((n + 1) / 2.0) << "\" y=\"" << y_of(0) + 40
     << "\" text-anchor=\"middle\">f (Byzantine)</text>\n"
     << "<text x=\"" << kMargin / 3 << "\" y=\"" << y_of((n + 1) / 2.0)
     << "\" transform=\"rotate(-90 " << kMargin / 3 << ' ' << y_of((n + 1) / 2.0)
     << ")\" text-anchor=\"middle\">g (rational)</text>\n";

  double ly = kMargin;
  for (const Layer& l : kLayers) {
    os << "<rect x=\"" << kMargin + kSize + 30 << "\" y=\"" << ly << "\" width=\"20\" "
       << "height=\"20\" fill=\"url(#" << l.id << ")\" stroke=\"#000\"/>"
       << "<text x=\"" << kMargin + kSize + 56 << "\" y=\"" << ly + 15 << "\">" << l.label
       << "</text>\n";
    ly += 30;
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace barne::report
