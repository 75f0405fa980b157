#pragma once

#include <cstdlib>
#include <filesystem>
#include <string>

#include <doctest.h>

#include "genli/real.hpp"

namespace genli::test {

inline std::filesystem::path data_dir() {
  const char* env = std::getenv("GENLI_DATA_DIR");
  return env ? std::filesystem::path(env) : std::filesystem::path("data");
}

inline bool near(const Real& a, const Real& b, const Real& tol) { return abs(a - b) <= tol; }
inline bool near(const Real& a, const std::string& b, const std::string& tol) {
  return near(a, Real(b), Real(tol));
}
inline bool near(const Real& a, double b, double tol) { return near(a, Real(b), Real(tol)); }

// doctest-friendly message: |a-b| when a check fails
inline std::string diff_str(const Real& a, const Real& b) { return abs(a - b).str(3); }

}  // namespace genli::test
