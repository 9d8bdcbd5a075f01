// Copyright 2026 The WikiTIG Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Scores a few generated infobox tables against references and prints the
// report, then checks whether the first system beats a weaker one.

#include <iostream>
#include <string>
#include <vector>

#include "wikitig.hpp"

int main() {
  const std::vector<std::string> references{
      "Alternative names | Fish supper <> Course | Main dish <> Place of origin | England",
      "Highest point <> Elevation | 8,848.86 m <> Listing | Seven Summits",
      "Location | Yosemite National Park <> Type | Lake",
  };
  const std::vector<std::string> strong{
      "Alternative names | Fish supper <> Course | Main dish <> Place of origin | Scotland",
      "Highest point <> Elevation | 8,848.86 m <> Elevation | 8,848.86 m",
      "Location | Yosemite National Park <> Type | Lake",
  };
  const std::vector<std::string> weak{
      "Course | Dessert",
      "Elevation | 8,000 m | approx",
      "Type | River",
  };

  try {
    const auto a = wikitig::EvaluateStrings(strong, references);
    const auto b = wikitig::EvaluateStrings(weak, references);
    const auto report = wikitig::ReportToJson(a, {{"system", "strong"}});
    std::cout << report.dump(2) << '\n';

    for (const auto& m : wikitig::CompareReports(report, wikitig::ReportToJson(b), 2000, 7)) {
      std::cout << m.metric << ": ";
      if (m.result) {
        std::cout << "p = " << m.result->p_value << '\n';
      } else {
        std::cout << "too few paired documents\n";
      }
    }
  } catch (const wikitig::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
