//  Copyright 2026 The mucofix Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#ifndef MUCOFIX_ERRORS_HPP_
#define MUCOFIX_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace mucofix {

// Malformed input: bad element ids, unknown names, unparsable documents.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A size limit (explicit lattice cap, scan cap, universe cap) was exceeded.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A solver precondition failed: F or G is not order preserving.
class NotMonotone : public std::runtime_error {
 public:
  NotMonotone(std::string which, std::string lower, std::string upper)
      : std::runtime_error("NotMonotone: " + which + " maps " + lower +
                           " <= " + upper + " to an unordered pair"),
        which_(std::move(which)),
        lower_(std::move(lower)),
        upper_(std::move(upper)) {}

  const std::string& which() const { return which_; }
  const std::string& lower() const { return lower_; }
  const std::string& upper() const { return upper_; }

 private:
  std::string which_;
  std::string lower_;
  std::string upper_;
};

// An iteration did not stabilize within its step budget.
class NonTermination : public std::runtime_error {
 public:
  explicit NonTermination(std::size_t budget)
      : std::runtime_error("NonTermination: no fixpoint within " +
                           std::to_string(budget) + " steps"),
        budget_(budget) {}
  std::size_t budget() const { return budget_; }

 private:
  std::size_t budget_;
};

// A direct evaluation (as opposed to a fixpoint iteration) ran out of steps.
class StepBudgetExceeded : public std::runtime_error {
 public:
  explicit StepBudgetExceeded(std::size_t budget)
      : std::runtime_error("StepBudgetExceeded: no result within " +
                           std::to_string(budget) + " steps"),
        budget_(budget) {}
  std::size_t budget() const { return budget_; }

 private:
  std::size_t budget_;
};

}  // namespace mucofix

#endif  // MUCOFIX_ERRORS_HPP_
