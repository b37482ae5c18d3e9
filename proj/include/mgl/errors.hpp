// Exception types shared by all modules. Validation problems derive from
// std::invalid_argument, numerical failures from std::runtime_error.
#pragma once

#include <stdexcept>
#include <string>

namespace mgl {

class ValidationError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class ComputationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// The coefficient table does not reach the degree required by a tail bound.
class TableTooShallow : public ComputationError {
public:
  TableTooShallow(const std::string& what, int required_degree)
      : ComputationError(what), required_degree(required_degree) {}
  int required_degree;
};

class PrecisionExhausted : public ComputationError {
public:
  using ComputationError::ComputationError;
};

class ScanInconclusive : public ComputationError {
public:
  using ComputationError::ComputationError;
};

class ClusterUnresolved : public ComputationError {
public:
  ClusterUnresolved(const std::string& what, double lo, double hi)
      : ComputationError(what), lo(lo), hi(hi) {}
  double lo;
  double hi;
};

class OverlapUnresolvable : public ComputationError {
public:
  using ComputationError::ComputationError;
};

}  // namespace mgl
