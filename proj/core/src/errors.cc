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

#include "lexboot/errors.h"

namespace lexboot {

MalformedLine::MalformedLine(std::size_t line, const std::string &detail)
    : Error("line " + std::to_string(line) + ": malformed line: " + detail),
      line_(line) {}

BadPos::BadPos(std::size_t line, const std::string &code)
    : Error("line " + std::to_string(line) + ": bad part of speech '" + code +
            "'"),
      line_(line) {}

DuplicateSense::DuplicateSense(std::size_t line, const std::string &sense)
    : Error("line " + std::to_string(line) + ": duplicate sense " + sense),
      line_(line) {}

NoSuchSite::NoSuchSite(std::size_t site)
    : Error("no ambiguity site " + std::to_string(site)) {}

NoSuchCandidate::NoSuchCandidate(std::size_t site, std::size_t candidate)
    : Error("ambiguity site " + std::to_string(site) + " has no candidate " +
            std::to_string(candidate)) {}

BadPassStamp::BadPassStamp(std::size_t expected, std::size_t actual)
    : Error("triple stamped with pass " + std::to_string(actual) +
            ", expected pass " + std::to_string(expected)) {}

ParseError::ParseError(std::size_t line, const std::string &detail)
    : Error("line " + std::to_string(line) + ": " + detail), line_(line) {}

UnknownSense::UnknownSense(const std::string &selector)
    : Error("unknown sense '" + selector + "'") {}

}  // namespace lexboot
