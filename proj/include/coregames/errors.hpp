// Copyright 2026 The coregames Authors
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

#ifndef COREGAMES_ERRORS_HPP
#define COREGAMES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace coregames {

// Base of all library errors.  `code()` is a stable machine-readable tag
// used by the CLI's error objects.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

// Blocks overlap, contain the empty set, or do not cover the player set.
class PartitionError : public Error {
 public:
  explicit PartitionError(const std::string& message)
      : Error("partition", message) {}
};

// Invalid simple game (empty winning family, empty winning coalition, or a
// winning coalition outside the algebra).
class GameError : public Error {
 public:
  explicit GameError(const std::string& message) : Error("game", message) {}
};

// A preference contains (x,y) together with (y,x), or a reflexive pair.
class AsymmetryError : public Error {
 public:
  explicit AsymmetryError(const std::string& message)
      : Error("asymmetry", message) {}
};

// Invalid collection of winning sets in the extended framework.
class FamilyError : public Error {
 public:
  explicit FamilyError(const std::string& message)
      : Error("family", message) {}
};

// An exhaustive search or enumeration was requested beyond its guard.
class ScaleError : public Error {
 public:
  explicit ScaleError(const std::string& message) : Error("scale", message) {}
};

// A constructive operation was called outside its stated precondition.
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& message)
      : Error("precondition", message) {}
};

// Malformed input at the I/O boundary (bad indices, unknown labels, bad JSON).
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& message)
      : Error("validation", message) {}
  ValidationError(const std::string& message, std::string path)
      : Error("validation", message), path_(std::move(path)) {}

  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

}  // namespace coregames

#endif  // COREGAMES_ERRORS_HPP
