#pragma once

#include <stdexcept>
#include <string>

namespace bcds {

/// Malformed or out-of-range input (bad ids, budgets, file syntax).
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// The input graph is not connected. Solvers assume connectivity.
class DisconnectedError : public InputError {
 public:
  explicit DisconnectedError(const std::string& what) : InputError(what) {}
};

/// A quota that no feasible solution can reach.
class InfeasibleError : public std::runtime_error {
 public:
  explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

/// An exact or enumerative routine refused an instance above its size cap.
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bcds
