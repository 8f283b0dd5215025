// Copyright 2026 The rsasm Authors
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

#ifndef RSASM_ERROR_H_
#define RSASM_ERROR_H_

#include <stdexcept>
#include <string>

namespace rsasm {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A symbol is unknown or applied with the wrong number of arguments.
class SignatureError : public Error {
 public:
  using Error::Error;
};

// Term evaluation failed (unbound variable, ill-typed builtin argument, ...).
class EvalError : public Error {
 public:
  using Error::Error;
};

// Two states cannot be compared (different standard base sets).
class StateError : public Error {
 public:
  using Error::Error;
};

// A renaming is not a bijection on the standard base set.
class IsoError : public Error {
 public:
  using Error::Error;
};

// A tree operation was applied outside its domain.
class TreeError : public Error {
 public:
  using Error::Error;
};

// A tree does not have the shape of a signature or rule encoding.
class ReflectError : public Error {
 public:
  using Error::Error;
};

// A rule cannot be executed (non-Boolean branch condition, unknown operator).
class RuleError : public Error {
 public:
  using Error::Error;
};

// Syntax or static-check error in program text.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " +
              msg),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace rsasm

#endif  // RSASM_ERROR_H_
