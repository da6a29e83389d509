#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cycmod {

// Enumeration or scan would exceed the configured budget. `required` is the
// size the caller would need to raise the budget to.
class BudgetExceeded : public std::runtime_error {
public:
  BudgetExceeded(std::uint64_t required, std::uint64_t budget)
      : std::runtime_error("budget exceeded: required " + std::to_string(required) +
                           " > budget " + std::to_string(budget)),
        required(required), budget(budget) {}

  std::uint64_t required;
  std::uint64_t budget;
};

class NotDecompositionIdeal : public std::runtime_error {
public:
  explicit NotDecompositionIdeal(const std::string& what) : std::runtime_error(what) {}
};

class NotFundamental : public std::runtime_error {
public:
  explicit NotFundamental(const std::string& what) : std::runtime_error(what) {}
};

class NotCMorphism : public std::runtime_error {
public:
  explicit NotCMorphism(const std::string& what) : std::runtime_error(what) {}
};

class NotDirected : public std::runtime_error {
public:
  explicit NotDirected(const std::string& what) : std::runtime_error(what) {}
};

// Schema violation while deserializing; `where` is a JSON-pointer-ish path.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& where, const std::string& what)
      : std::runtime_error(where + ": " + what) {}
};

} // namespace cycmod
