#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "genli/real.hpp"

namespace genli {

// Ascending ordinates T_k of nontrivial zeros rho = 1/2 + i T_k.
struct ZeroTable {
  std::vector<double> ordinates;
  std::string source_digest;   // sha256 of the source file
  double ordinate_eps = 3e-9;  // documented accuracy of the source data

  long count() const { return static_cast<long>(ordinates.size()); }
  double t_max() const { return ordinates.empty() ? 0.0 : ordinates.back(); }
  // sum of 1/T^2 over the table; feeds the ordinate-perturbation error model
  double sum_inv_sq() const;
};

class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, long line) : std::runtime_error(what), line_number(line) {}
  long line_number;
};

// Plain text, one decimal ordinate per line; '#' comments and blank lines are
// skipped.  strict=true rejects non-monotonic input with a parse_error;
// strict=false keeps the values so validate_zeros can report the violations.
ZeroTable load_zeros(const std::filesystem::path& path, long max_count, bool strict = true);

// Smooth zero-counting main term N(T) = (T/2pi) ln(T/2pi) - T/2pi.
Real count_main(const Real& T);
double count_main_d(double T);

struct ZeroValidation {
  struct Violation {
    long index;  // 1-based zero index, 0 for table-level problems
    std::string what;
  };
  std::vector<Violation> violations;
  bool pass = true;
};

// Checks monotonicity, |k - N(T_k)| <= 5 ln T_k + 10, and the first ordinate.
ZeroValidation validate_zeros(const ZeroTable& table);

std::string sha256_file(const std::filesystem::path& path);

struct ZeroManifest {
  std::string path;
  std::string sha256;
  long count = 0;
};

std::optional<ZeroManifest> read_zero_manifest(const std::filesystem::path& path);

}  // namespace genli
