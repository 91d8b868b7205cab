#pragma once

#include <stdexcept>
#include <string>

namespace triperiod {

// Evaluation requested at (or the integrator ran into) a point where the
// kernel is genuinely singular.
class singularity_error : public std::runtime_error {
 public:
  explicit singularity_error(const std::string& what) : std::runtime_error(what) {}
};

// A caller-supplied callable failed a sampled contract check (functional
// identity, monotonicity, orthonormality, ...).
class contract_error : public std::runtime_error {
 public:
  explicit contract_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace triperiod
