#pragma once

#include <stdexcept>
#include <string>

namespace spinlie {

// Exit-code taxonomy used by the CLI: 1 input, 2 invariant violation, 3 budget.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionError : InputError {
  using InputError::InputError;
};

// Two independent computation routes disagreed; always a bug or a broken premise.
struct InconsistencyError : std::logic_error {
  using std::logic_error::logic_error;
};

struct BudgetError : std::runtime_error {
  std::size_t partial_dim = 0;
  explicit BudgetError(const std::string& what, std::size_t partial = 0)
      : std::runtime_error(what), partial_dim(partial) {}
};

}  // namespace spinlie
