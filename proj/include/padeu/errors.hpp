#pragma once
#include <stdexcept>
#include <string>

namespace padeu {

// Violated caller contract (bad mode, bad degrees, pole on a sample, ...).
struct precondition_error : std::runtime_error {
  explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

// A construction or verification pipeline could not complete (budget
// exhausted, fit did not converge, certificate stage failed hard).
struct pipeline_error : std::runtime_error {
  explicit pipeline_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed textual/JSON input.
struct parse_error : std::runtime_error {
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace padeu
