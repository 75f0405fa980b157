#include "genli/real.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <vector>

namespace genli {

namespace {
// Process-wide default plus a per-thread override: routines that plan their
// own precision (PrecisionGuard) only affect their own thread.
std::atomic<long> g_default_digits{60};
thread_local long tl_digits = 0;  // 0 = use the process default

mpfr_prec_t bits_for(long digits) {
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 16;
}
}  // namespace

long working_digits() {
  long d = tl_digits;
  return d > 0 ? d : g_default_digits.load(std::memory_order_relaxed);
}

void set_working_digits(long digits) {
  if (digits < 16) throw domain_error("working precision must be at least 16 digits");
  tl_digits = digits;
}

void set_default_digits(long digits) {
  if (digits < 16) throw domain_error("working precision must be at least 16 digits");
  g_default_digits.store(digits, std::memory_order_relaxed);
  tl_digits = 0;
}

mpfr_prec_t working_prec_bits() { return bits_for(working_digits()); }

Real::Real(std::string_view decimal) : Real() {
  std::string buf(decimal);
  if (mpfr_set_str(v_, buf.c_str(), 10, MPFR_RNDN) != 0)
    throw domain_error("Real: cannot parse decimal string '" + buf + "'");
}

std::string Real::str(long digits) const {
  char* s = nullptr;
  if (mpfr_asprintf(&s, "%.*Rg", static_cast<int>(digits), v_) < 0)
    throw std::runtime_error("mpfr_asprintf failed");
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

Real working_eps() {
  Real r(1);
  mpfr_ui_pow_ui(r.ptr(), 10, static_cast<unsigned long>(working_digits() - 1), MPFR_RNDN);
  mpfr_ui_div(r.ptr(), 1, r.ptr(), MPFR_RNDN);
  return r;
}

Real comp_sum(std::span<const Real> terms) {
  if (terms.empty()) return Real(0);
  std::vector<mpfr_ptr> ptrs;
  ptrs.reserve(terms.size());
  for (const Real& t : terms) ptrs.push_back(const_cast<mpfr_ptr>(t.ptr()));
  Real r;
  mpfr_sum(r.ptr(), ptrs.data(), ptrs.size(), MPFR_RNDN);
  return r;
}

namespace {
constexpr size_t kChunk = 4096;
}

SumAccumulator::SumAccumulator() { chunk_.reserve(kChunk); }

void SumAccumulator::feed(const Real& term) {
  chunk_.push_back(term);
  ++count_;
  if (chunk_.size() == kChunk) flush();
}

void SumAccumulator::feed(Real&& term) {
  chunk_.push_back(std::move(term));
  ++count_;
  if (chunk_.size() == kChunk) flush();
}

void SumAccumulator::flush() {
  if (chunk_.empty()) return;
  partials_.push_back(comp_sum(chunk_));
  chunk_.clear();
}

Real SumAccumulator::total() const {
  std::vector<Real> all = partials_;
  if (!chunk_.empty()) all.push_back(comp_sum(chunk_));
  return comp_sum(all);
}

}  // namespace genli
