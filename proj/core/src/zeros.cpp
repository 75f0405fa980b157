#include "genli/zeros.hpp"

#include <openssl/evp.h>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>

#include <nlohmann/json.hpp>

namespace genli {

double ZeroTable::sum_inv_sq() const {
  double s = 0, comp = 0;
  for (double t : ordinates) {
    double term = 1.0 / (t * t);
    double y = term - comp;
    double nxt = s + y;
    comp = (nxt - s) - y;
    s = nxt;
  }
  return s;
}

ZeroTable load_zeros(const std::filesystem::path& path, long max_count, bool strict) {
  if (max_count <= 0) throw domain_error("load_zeros: max_count must be positive");
  std::ifstream is(path);
  if (!is) throw parse_error("load_zeros: cannot open " + path.string(), 0);
  ZeroTable table;
  table.ordinates.reserve(std::min<long>(max_count, 1 << 20));
  std::string line;
  long lineno = 0;
  double prev = 0;
  while (static_cast<long>(table.ordinates.size()) < max_count && std::getline(is, line)) {
    ++lineno;
    size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    size_t e = line.find_last_not_of(" \t\r") + 1;
    double t = 0;
    auto [p, ec] = std::from_chars(line.data() + b, line.data() + e, t);
    if (ec != std::errc() || p != line.data() + e)
      throw parse_error("load_zeros: non-numeric line " + std::to_string(lineno), lineno);
    if (strict && t <= prev)
      throw parse_error("load_zeros: ordinates not strictly increasing at line " +
                            std::to_string(lineno),
                        lineno);
    table.ordinates.push_back(t);
    prev = t;
  }
  if (table.ordinates.empty()) throw parse_error("load_zeros: empty table from " + path.string(), 0);
  table.source_digest = sha256_file(path);
  return table;
}

Real count_main(const Real& T) {
  if (!(T > Real(1))) throw domain_error("count_main: requires T > 1");
  Real x = T / (Real(2) * const_pi());
  return x * (log(x) - Real(1));
}

double count_main_d(double T) {
  double x = T / (2 * 3.14159265358979323846);
  return x * (std::log(x) - 1);
}

ZeroValidation validate_zeros(const ZeroTable& table) {
  ZeroValidation v;
  if (table.ordinates.empty()) {
    v.violations.push_back({0, "empty table"});
    v.pass = false;
    return v;
  }
  if (std::abs(table.ordinates.front() - 14.134725) > 1e-3)
    v.violations.push_back({1, "first ordinate not near 14.134725"});
  for (long k = 1; k < table.count(); ++k)
    if (table.ordinates[k] <= table.ordinates[k - 1])
      v.violations.push_back({k + 1, "not strictly increasing"});
  for (long k = 0; k < table.count(); ++k) {
    double t = table.ordinates[k];
    double bound = 5 * std::log(t) + 10;
    if (std::abs((k + 1) - count_main_d(t)) > bound)
      v.violations.push_back({k + 1, "count inconsistent with N(T) main term"});
  }
  v.pass = v.violations.empty();
  return v;
}

std::string sha256_file(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw parse_error("sha256_file: cannot open " + path.string(), 0);
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
  char buf[1 << 16];
  while (is) {
    is.read(buf, sizeof(buf));
    EVP_DigestUpdate(ctx, buf, static_cast<size_t>(is.gcount()));
  }
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx, md, &len);
  EVP_MD_CTX_free(ctx);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 0xf];
  }
  return out;
}

std::optional<ZeroManifest> read_zero_manifest(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) return std::nullopt;
  nlohmann::json j;
  try {
    is >> j;
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  }
  ZeroManifest m;
  m.path = j.value("path", "");
  m.sha256 = j.value("sha256", "");
  m.count = j.value("count", 0L);
  return m;
}

}  // namespace genli
