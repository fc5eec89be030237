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

#ifndef LEXBOOT_ERRORS_H_
#define LEXBOOT_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lexboot {

// Base class for every error raised by the library. Data errors (bad input
// files, corrupt dumps) and contract errors (bad site ids, bad pass stamps)
// both derive from it so callers can catch one type at the boundary.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string &what) : std::runtime_error(what) {}
};

// Dictionary line with the wrong number of fields or an empty required field.
class MalformedLine : public Error {
 public:
  MalformedLine(std::size_t line, const std::string &detail);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Dictionary line whose part-of-speech code is not one of n, v, vi, vt.
class BadPos : public Error {
 public:
  BadPos(std::size_t line, const std::string &code);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class DuplicateSense : public Error {
 public:
  DuplicateSense(std::size_t line, const std::string &sense);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class NoSuchSite : public Error {
 public:
  explicit NoSuchSite(std::size_t site);
};

class NoSuchCandidate : public Error {
 public:
  NoSuchCandidate(std::size_t site, std::size_t candidate);
};

// A triple handed to merge() carries a pass number other than the one the
// merge produces.
class BadPassStamp : public Error {
 public:
  BadPassStamp(std::size_t expected, std::size_t actual);
};

// Malformed LKB dump line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string &detail);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class UnknownSense : public Error {
 public:
  explicit UnknownSense(const std::string &selector);
};

}  // namespace lexboot

#endif  // LEXBOOT_ERRORS_H_
