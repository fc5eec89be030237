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

#ifndef LEXBOOT_TESTS_FIXTURES_H_
#define LEXBOOT_TESTS_FIXTURES_H_

#include <fstream>
#include <sstream>
#include <string>

#include "lexboot/corpus.h"

namespace lexboot::testing {

inline std::string DataPath(const std::string &name) {
  return std::string(LEXBOOT_TEST_DATA_DIR) + "/" + name;
}

inline std::string ReadFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline Corpus SampleCorpus() { return LoadCorpusFile(DataPath("samples.tsv")); }
inline Corpus ChainCorpus() { return LoadCorpusFile(DataPath("chain.tsv")); }

}  // namespace lexboot::testing

#endif  // LEXBOOT_TESTS_FIXTURES_H_
