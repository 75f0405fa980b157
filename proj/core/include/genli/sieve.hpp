#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "genli/real.hpp"

namespace genli {

// One prime power m = p^k; Lambda(m) = ln p.  Integers that are not prime
// powers never appear in the table.
struct VmEntry {
  std::uint64_t m;
  std::uint32_t p;
  std::uint32_t k;
};

struct VonMangoldtTable {
  std::uint64_t limit = 0;
  std::vector<VmEntry> entries;  // ascending m
  std::string built_by;

  // Lambda(m) in double precision; 0 when m is not a prime power.
  double lambda(std::uint64_t m) const;
  // Chebyshev psi(limit) = sum of Lambda(m), double accumulation.
  double chebyshev_psi() const;
};

// Segmented sieve of Eratosthenes up to M; collects primes and their powers.
// Throws resource_error when the table would exceed the memory budget.
VonMangoldtTable sieve_von_mangoldt(std::uint64_t M,
                                    std::uint64_t memory_budget_bytes = 2ull << 30);

// Flat cache: magic "GLIV1", M as u64 LE, then Lambda(m) for m = 1..M as
// f64 LE.  ExtReal Lambda values are recomputed as ln p after a read.
void write_sieve_cache(const VonMangoldtTable& table, const std::filesystem::path& path);
VonMangoldtTable read_sieve_cache(const std::filesystem::path& path);

struct ComplexReal {
  Real re, im;
};

struct LogZetaValue {
  ComplexReal value;  // re = ln|zeta|, im = continuously summed argument
  Real tail;          // 2 M^{1-c} / ((c-1) ln M)
  long terms = 0;
};

// ln zeta(c+it) from the absolutely convergent prime-power series,
// c >= 1 + delta.  Deterministic chunked compensated summation.
LogZetaValue log_zeta_line(const Real& c, const Real& t, const VonMangoldtTable& table,
                           double delta = 0.05, std::uint64_t min_m = 1000);

struct ZetaLogDeriv {
  Real value;
  Real tail;
  long terms = 0;
};

// zeta'(c)/zeta(c) = -sum_{m<=M} Lambda(m) m^{-c}, plus the same tail bound.
ZetaLogDeriv zeta_log_deriv(const Real& c, const VonMangoldtTable& table, double delta = 0.05);

}  // namespace genli
