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

#ifndef BARNE_GAME_ERRORS_HPP_
#define BARNE_GAME_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace barne {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exhaustive enumeration would exceed the configured evaluation budget.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(double required, double budget);
  double required() const { return required_; }
  double budget() const { return budget_; }

 private:
  double required_;
  double budget_;
};

class InvalidAssignment : public Error {
 public:
  using Error::Error;
};

class SymmetryRequired : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace barne

#endif  // BARNE_GAME_ERRORS_HPP_
