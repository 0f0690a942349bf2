// Copyright 2026 The pseudoturan Authors
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

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "pseudoturan/acceptance.hpp"

// Runs every acceptance criterion and prints one line per criterion.
// Optional arguments restrict the run to the listed criterion ids.
int main(int argc, char** argv) {
  std::vector<int> only;
  for (int i = 1; i < argc; ++i) only.push_back(std::stoi(argv[i]));
  const auto results = pseudoturan::run_acceptance(only, 1);
  bool all = true;
  for (const auto& r : results) {
    std::cout << pseudoturan::summary_line(r) << std::endl;
    all = all && r.pass;
  }
  std::cout << (all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL") << std::endl;
  return all ? EXIT_SUCCESS : EXIT_FAILURE;
}
