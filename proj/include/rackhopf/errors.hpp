#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace rackhopf {

// Exception families map onto CLI exit codes:
//   InvalidInput -> 2, BudgetExceeded -> 3, AssertionFailure -> 1.

class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class AssertionFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// rack
class NotBijective : public InvalidInput {
 public:
  explicit NotBijective(int row)
      : InvalidInput("row " + std::to_string(row) + " of the rack table is not a bijection"), row(row) {}
  int row;
};

class NotSelfDistributive : public InvalidInput {
 public:
  NotSelfDistributive(int x, int y, int z)
      : InvalidInput("self-distributivity fails at (" + std::to_string(x) + "," + std::to_string(y) +
                     "," + std::to_string(z) + ")"),
        x(x), y(y), z(z) {}
  int x, y, z;
};

class SeedNotInGroup : public InvalidInput {
 public:
  SeedNotInGroup() : InvalidInput("seed permutation is not an element of the group") {}
};

class ClosureBudgetExceeded : public BudgetExceeded {
 public:
  explicit ClosureBudgetExceeded(std::size_t cap)
      : BudgetExceeded("group closure exceeded " + std::to_string(cap) + " elements") {}
};

// cocycle
class ZeroEntry : public InvalidInput {
 public:
  ZeroEntry(int x, int y)
      : InvalidInput("cocycle entry (" + std::to_string(x) + "," + std::to_string(y) + ") is zero"),
        x(x), y(y) {}
  int x, y;
};

class CocycleLawFails : public InvalidInput {
 public:
  CocycleLawFails(int x, int y, int z)
      : InvalidInput("cocycle law fails at (" + std::to_string(x) + "," + std::to_string(y) + "," +
                     std::to_string(z) + ")"),
        x(x), y(y), z(z) {}
  int x, y, z;
};

class WrongRackForChi : public InvalidInput {
 public:
  WrongRackForChi() : InvalidInput("the chi cocycle needs the transposition rack of S_n") {}
};

// braided / freealg
class DegreeBudgetExceeded : public BudgetExceeded {
 public:
  using BudgetExceeded::BudgetExceeded;
};

class ResourceBudgetExceeded : public BudgetExceeded {
 public:
  using BudgetExceeded::BudgetExceeded;
};

// quadrel
class NotInRprime : public InvalidInput {
 public:
  NotInRprime() : InvalidInput("class is not in R'; it carries no quadratic relation") {}
};

// deform
class IndexMismatch : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class NonzeroCheckFailed : public AssertionFailure {
 public:
  explicit NonzeroCheckFailed(std::string params)
      : AssertionFailure("deformed ideal is the whole algebra at " + params), params(std::move(params)) {}
  std::string params;
};

class ConditionViolated : public AssertionFailure {
 public:
  explicit ConditionViolated(std::vector<std::pair<int, int>> offending)
      : AssertionFailure("g_C coincides with some g_x for " + std::to_string(offending.size()) +
                         " (class, element) pairs"),
        offending(std::move(offending)) {}
  std::vector<std::pair<int, int>> offending;
};

class NormalizationViolated : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

// grouprealize
class NotModuleAlgebra : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

}  // namespace rackhopf
