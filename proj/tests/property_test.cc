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

#include "properties.h"

#include <gtest/gtest.h>

namespace lexboot::testing {
namespace {

void Expect(const PropertyResult &r) {
  EXPECT_TRUE(r.ok) << r.name << ": " << r.detail;
  EXPECT_GE(r.cases, 100u);
}

TEST(PropertyTest, MonotoneChain) { Expect(CheckMonotoneChain()); }
TEST(PropertyTest, OrderIndependence) { Expect(CheckOrderIndependence()); }
TEST(PropertyTest, PassOneIndependence) { Expect(CheckPassOneIndependence()); }
TEST(PropertyTest, EvidenceGate) { Expect(CheckEvidenceGate()); }
TEST(PropertyTest, SimilaritySymmetry) { Expect(CheckSimilaritySymmetry()); }
TEST(PropertyTest, SerializationRoundTrip) { Expect(CheckSerializationRoundTrip()); }
TEST(PropertyTest, LemmatizerIdempotence) { Expect(CheckLemmatizerIdempotence()); }
TEST(PropertyTest, CorpusRoundTrip) { Expect(CheckCorpusRoundTrip()); }
TEST(PropertyTest, Retokenization) { Expect(CheckRetokenization()); }

}  // namespace
}  // namespace lexboot::testing
