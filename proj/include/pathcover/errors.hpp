#pragma once

#include <stdexcept>
#include <string>

namespace pathcover {

/// Input violates an operation's precondition. The message names the
/// violated condition.
class PreconditionError : public std::invalid_argument {
public:
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

/// An engine produced a state its own invariants rule out. Never silently
/// recovered from: it indicates a bug or a gap in the underlying argument.
class InternalError : public std::logic_error {
public:
  InternalError(const std::string& what, std::string state_dump = {})
      : std::logic_error(what), state_(std::move(state_dump)) {}
  const std::string& state() const noexcept { return state_; }

private:
  std::string state_;
};

/// An exact search hit its node or time cap before reaching an answer.
class BudgetExceeded : public std::runtime_error {
public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pathcover
