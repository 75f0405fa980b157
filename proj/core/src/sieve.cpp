#include "genli/sieve.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>

namespace genli {

namespace {

std::vector<std::uint32_t> small_primes(std::uint32_t limit) {
  std::vector<bool> comp(limit + 1, false);
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 2; i <= limit; ++i) {
    if (comp[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = static_cast<std::uint64_t>(i) * i; j <= limit; j += i) comp[j] = true;
  }
  return out;
}

}  // namespace

double VonMangoldtTable::lambda(std::uint64_t m) const {
  auto it = std::lower_bound(entries.begin(), entries.end(), m,
                             [](const VmEntry& e, std::uint64_t v) { return e.m < v; });
  if (it == entries.end() || it->m != m) return 0.0;
  return std::log(static_cast<double>(it->p));
}

double VonMangoldtTable::chebyshev_psi() const {
  double s = 0;
  for (const VmEntry& e : entries) s += std::log(static_cast<double>(e.p));
  return s;
}

VonMangoldtTable sieve_von_mangoldt(std::uint64_t M, std::uint64_t memory_budget_bytes) {
  if (M < 2) throw domain_error("sieve_von_mangoldt: requires M >= 2");
  double est_entries = 1.3 * static_cast<double>(M) / std::max(2.0, std::log(static_cast<double>(M)));
  if (est_entries * sizeof(VmEntry) > static_cast<double>(memory_budget_bytes))
    throw resource_error("sieve_von_mangoldt: table for M=" + std::to_string(M) +
                         " exceeds memory budget");

  VonMangoldtTable table;
  table.limit = M;
  table.built_by = "segmented-eratosthenes-v1";
  auto root = static_cast<std::uint32_t>(std::sqrt(static_cast<double>(M)));
  while (static_cast<std::uint64_t>(root + 1) * (root + 1) <= M) ++root;
  std::vector<std::uint32_t> base = small_primes(std::max<std::uint32_t>(root, 3));

  // primes via odd-only segments
  constexpr std::uint64_t kSegment = 1u << 21;
  std::vector<bool> seg;
  if (M >= 2) table.entries.push_back({2, 2, 1});
  for (std::uint64_t lo = 3; lo <= M; lo += 2 * kSegment) {
    std::uint64_t hi = std::min(M, lo + 2 * kSegment - 2);  // odds in [lo, hi]
    std::uint64_t n = (hi - lo) / 2 + 1;
    seg.assign(n, false);
    for (std::uint32_t p : base) {
      if (p == 2) continue;
      std::uint64_t pp = static_cast<std::uint64_t>(p) * p;
      if (pp > hi) break;
      std::uint64_t start = std::max<std::uint64_t>(pp, ((lo + p - 1) / p) * p);
      if (start % 2 == 0) start += p;
      for (std::uint64_t j = start; j <= hi; j += 2 * p) seg[(j - lo) / 2] = true;
    }
    for (std::uint64_t i = 0; i < n; ++i) {
      if (!seg[i]) {
        std::uint64_t m = lo + 2 * i;
        table.entries.push_back({m, static_cast<std::uint32_t>(m), 1});
      }
    }
  }

  // higher prime powers p^k <= M, p <= sqrt(M)
  std::vector<VmEntry> powers;
  for (std::uint32_t p : base) {
    std::uint64_t q = static_cast<std::uint64_t>(p) * p;
    std::uint32_t k = 2;
    while (q <= M) {
      powers.push_back({q, p, k});
      if (q > M / p) break;
      q *= p;
      ++k;
    }
  }
  std::sort(powers.begin(), powers.end(), [](const VmEntry& a, const VmEntry& b) { return a.m < b.m; });
  std::vector<VmEntry> merged;
  merged.reserve(table.entries.size() + powers.size());
  std::merge(table.entries.begin(), table.entries.end(), powers.begin(), powers.end(),
             std::back_inserter(merged),
             [](const VmEntry& a, const VmEntry& b) { return a.m < b.m; });
  table.entries = std::move(merged);

  // build check: psi(M) must sit inside the classical band M +- 3 sqrt(M) ln^2 M
  if (M >= 10000) {
    double psi = table.chebyshev_psi();
    double lnM = std::log(static_cast<double>(M));
    double band = 3.0 * std::sqrt(static_cast<double>(M)) * lnM * lnM;
    if (std::abs(psi - static_cast<double>(M)) > band)
      throw std::logic_error("sieve_von_mangoldt: chebyshev psi outside sanity band");
  }
  return table;
}

namespace {

void put_u64_le(std::ofstream& os, std::uint64_t v) {
  char buf[8];
  for (int i = 0; i < 8; ++i) buf[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  os.write(buf, 8);
}

std::uint64_t get_u64_le(std::istream& is) {
  unsigned char buf[8];
  is.read(reinterpret_cast<char*>(buf), 8);
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(buf[i]) << (8 * i);
  return v;
}

}  // namespace

void write_sieve_cache(const VonMangoldtTable& table, const std::filesystem::path& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw resource_error("write_sieve_cache: cannot open " + path.string());
  os.write("GLIV1", 5);
  put_u64_le(os, table.limit);
  std::size_t idx = 0;
  for (std::uint64_t m = 1; m <= table.limit; ++m) {
    double lam = 0.0;
    if (idx < table.entries.size() && table.entries[idx].m == m)
      lam = std::log(static_cast<double>(table.entries[idx++].p));
    put_u64_le(os, std::bit_cast<std::uint64_t>(lam));
  }
  if (!os) throw resource_error("write_sieve_cache: write failed for " + path.string());
}

VonMangoldtTable read_sieve_cache(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw resource_error("read_sieve_cache: cannot open " + path.string());
  char magic[5];
  is.read(magic, 5);
  if (!is || std::memcmp(magic, "GLIV1", 5) != 0)
    throw resource_error("read_sieve_cache: bad magic in " + path.string());
  VonMangoldtTable table;
  table.limit = get_u64_le(is);
  table.built_by = "cache:" + path.filename().string();
  for (std::uint64_t m = 1; m <= table.limit; ++m) {
    double lam = std::bit_cast<double>(get_u64_le(is));
    if (!is) throw resource_error("read_sieve_cache: truncated file " + path.string());
    if (lam == 0.0) continue;
    auto p = static_cast<std::uint64_t>(std::llround(std::exp(lam)));
    std::uint64_t q = p;
    std::uint32_t k = 1;
    while (q < m) {
      q *= p;
      ++k;
    }
    if (q != m || p > 0xffffffffull)
      throw resource_error("read_sieve_cache: inconsistent entry at m=" + std::to_string(m));
    table.entries.push_back({m, static_cast<std::uint32_t>(p), k});
  }
  return table;
}

LogZetaValue log_zeta_line(const Real& c, const Real& t, const VonMangoldtTable& table,
                           double delta, std::uint64_t min_m) {
  if (!(c.to_double() >= 1.0 + delta))
    throw domain_error("log_zeta_line: requires c >= 1 + delta (series too slow below)");
  if (table.limit < min_m)
    throw domain_error("log_zeta_line: table limit below configured minimum");
  SumAccumulator re_acc, im_acc;
  const bool on_axis = t.is_zero();
  for (const VmEntry& e : table.entries) {
    Real lnm = log(Real(static_cast<double>(e.m)));
    Real mag = exp(-(c * lnm)) / Real(static_cast<long>(e.k));
    if (on_axis) {
      re_acc.feed(std::move(mag));
    } else {
      Real s, co;
      sin_cos(s, co, t * lnm);
      re_acc.feed(mag * co);
      im_acc.feed(-(mag * s));
    }
  }
  Real lnM = log(Real(static_cast<double>(table.limit)));
  Real tail = Real(2) * exp((Real(1) - c) * lnM) / ((c - Real(1)) * lnM);
  return {{re_acc.total(), on_axis ? Real(0) : im_acc.total()}, tail, re_acc.terms()};
}

ZetaLogDeriv zeta_log_deriv(const Real& c, const VonMangoldtTable& table, double delta) {
  if (!(c.to_double() >= 1.0 + delta))
    throw domain_error("zeta_log_deriv: requires c >= 1 + delta");
  SumAccumulator acc;
  for (const VmEntry& e : table.entries) {
    Real lnp = log(Real(static_cast<double>(e.p)));
    Real lnm = lnp * Real(static_cast<long>(e.k));
    acc.feed(-(lnp * exp(-(c * lnm))));
  }
  // Lambda has mean density 1, so unlike the ln-zeta series there is no
  // 1/ln M gain: tail <= ~M^{1-c}/(c-1), kept with the same safety factor 2.
  Real lnM = log(Real(static_cast<double>(table.limit)));
  Real tail = Real(2) * exp((Real(1) - c) * lnM) / (c - Real(1));
  return {acc.total(), tail, acc.terms()};
}

}  // namespace genli
