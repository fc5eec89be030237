// Copyright 2026 The lexboot Authors.
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

#ifndef LEXBOOT_TESTS_PROPERTIES_H_
#define LEXBOOT_TESTS_PROPERTIES_H_

#include <cstddef>
#include <string>
#include <vector>

namespace lexboot::testing {

// Outcome of one randomized property. `detail` names the first failing
// case.
struct PropertyResult {
  std::string name;
  std::size_t cases = 0;
  bool ok = true;
  std::string detail;
};

// Each check draws `cases` inputs from a fixed-seed generator.
PropertyResult CheckMonotoneChain(std::size_t cases = 100);
PropertyResult CheckOrderIndependence(std::size_t cases = 100);
PropertyResult CheckPassOneIndependence(std::size_t cases = 100);
PropertyResult CheckEvidenceGate(std::size_t cases = 100);
PropertyResult CheckSimilaritySymmetry(std::size_t cases = 100);
PropertyResult CheckSerializationRoundTrip(std::size_t cases = 100);
PropertyResult CheckLemmatizerIdempotence(std::size_t cases = 1000);
PropertyResult CheckCorpusRoundTrip(std::size_t cases = 100);
PropertyResult CheckRetokenization(std::size_t cases = 100);

std::vector<PropertyResult> CheckAllProperties();

}  // namespace lexboot::testing

#endif  // LEXBOOT_TESTS_PROPERTIES_H_
