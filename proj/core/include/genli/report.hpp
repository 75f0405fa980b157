#pragma once

#include <string>
#include <utility>
#include <vector>

#include "genli/real.hpp"

namespace genli {

// Outcome of one inequality / identity / asymptotic check.
struct BoundReport {
  std::string name;
  std::vector<std::pair<std::string, std::string>> inputs;
  Real lhs;    // value, or lower bound for sandwich checks
  Real rhs;    // bound, or upper bound for sandwich checks
  Real slack;  // >= 0 iff the stated relation holds
  bool pass = false;
  std::string note;
};

}  // namespace genli
