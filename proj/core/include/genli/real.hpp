#pragma once

#include <mpfr.h>

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace genli {

// Extended-precision real scalar backed by MPFR.  The working precision is a
// process-global number of decimal digits P (default 60, minimum 16); every
// freshly constructed Real and every operation result carries ceil(P*log2(10))
// + 16 guard bits, so each operation is correctly rounded and loses well under
// the contractual 2 digits.

long working_digits();
void set_working_digits(long digits);   // this thread
void set_default_digits(long digits);   // process default (set before spawning workers)
mpfr_prec_t working_prec_bits();

// Scoped precision switch, used by routines that plan their own precision.
struct PrecisionGuard {
  explicit PrecisionGuard(long digits) : saved_(working_digits()) { set_working_digits(digits); }
  ~PrecisionGuard() { set_working_digits(saved_); }
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  long saved_;
};

class Real {
 public:
  Real() { mpfr_init2(v_, working_prec_bits()); mpfr_set_zero(v_, 1); }
  Real(double x) : Real() { mpfr_set_d(v_, x, MPFR_RNDN); }
  Real(long x) : Real() { mpfr_set_si(v_, x, MPFR_RNDN); }
  Real(int x) : Real() { mpfr_set_si(v_, x, MPFR_RNDN); }
  Real(unsigned long x) : Real() { mpfr_set_ui(v_, x, MPFR_RNDN); }
  explicit Real(std::string_view decimal);

  Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real(Real&& o) noexcept { mpfr_init2(v_, MPFR_PREC_MIN); mpfr_swap(v_, o.v_); }
  Real& operator=(const Real& o) {
    if (this != &o) { mpfr_set_prec(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  mpfr_ptr ptr() { return v_; }
  mpfr_srcptr ptr() const { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
  // Shortest decimal string carrying `digits` significant digits.
  std::string str(long digits = working_digits()) const;

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  Real& operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }

  friend Real operator+(const Real& a, const Real& b) { Real r; mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
  friend Real operator-(const Real& a, const Real& b) { Real r; mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
  friend Real operator*(const Real& a, const Real& b) { Real r; mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
  friend Real operator/(const Real& a, const Real& b) { Real r; mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
  friend Real operator-(const Real& a) { Real r; mpfr_neg(r.v_, a.v_, MPFR_RNDN); return r; }

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
  friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }

 private:
  mpfr_t v_;
};

inline Real operator+(const Real& a, double b) { return a + Real(b); }
inline Real operator+(double a, const Real& b) { return Real(a) + b; }
inline Real operator-(const Real& a, double b) { return a - Real(b); }
inline Real operator-(double a, const Real& b) { return Real(a) - b; }
inline Real operator*(const Real& a, double b) { return a * Real(b); }
inline Real operator*(double a, const Real& b) { return Real(a) * b; }
inline Real operator/(const Real& a, double b) { return a / Real(b); }
inline Real operator/(double a, const Real& b) { return Real(a) / b; }

#define GENLI_UNARY(name, mpfr_fn)                       \
  inline Real name(const Real& x) {                      \
    Real r;                                              \
    mpfr_fn(r.ptr(), x.ptr(), MPFR_RNDN);                \
    return r;                                            \
  }
GENLI_UNARY(abs, mpfr_abs)
GENLI_UNARY(sqrt, mpfr_sqrt)
GENLI_UNARY(exp, mpfr_exp)
GENLI_UNARY(log, mpfr_log)
GENLI_UNARY(log1p, mpfr_log1p)
GENLI_UNARY(expm1, mpfr_expm1)
GENLI_UNARY(sin, mpfr_sin)
GENLI_UNARY(cos, mpfr_cos)
GENLI_UNARY(tan, mpfr_tan)
GENLI_UNARY(atan, mpfr_atan)
GENLI_UNARY(asinh, mpfr_asinh)
GENLI_UNARY(sinh, mpfr_sinh)
GENLI_UNARY(cosh, mpfr_cosh)
GENLI_UNARY(tanh, mpfr_tanh)
#undef GENLI_UNARY

inline Real floor(const Real& x) {
  Real r;
  mpfr_rint(r.ptr(), x.ptr(), MPFR_RNDD);
  return r;
}

inline Real pow(const Real& x, const Real& y) {
  Real r;
  mpfr_pow(r.ptr(), x.ptr(), y.ptr(), MPFR_RNDN);
  return r;
}
inline Real pow(const Real& x, long n) {
  Real r;
  mpfr_pow_si(r.ptr(), x.ptr(), n, MPFR_RNDN);
  return r;
}
inline Real atan2(const Real& y, const Real& x) {
  Real r;
  mpfr_atan2(r.ptr(), y.ptr(), x.ptr(), MPFR_RNDN);
  return r;
}
inline void sin_cos(Real& s, Real& c, const Real& x) { mpfr_sin_cos(s.ptr(), c.ptr(), x.ptr(), MPFR_RNDN); }

inline Real const_pi() { Real r; mpfr_const_pi(r.ptr(), MPFR_RNDN); return r; }
inline Real const_euler() { Real r; mpfr_const_euler(r.ptr(), MPFR_RNDN); return r; }
inline Real const_ln2() { Real r; mpfr_const_log2(r.ptr(), MPFR_RNDN); return r; }

inline Real max(const Real& a, const Real& b) { return a < b ? b : a; }
inline Real min(const Real& a, const Real& b) { return a < b ? a : b; }

// Unit in the last place of the working precision relative to magnitude 1:
// 10^{-(P-1)}.  Used as a convergence floor by iterative routines.
Real working_eps();

// Compensated total of an ordered sequence.  Internally a single correctly
// rounded multi-word accumulation (mpfr_sum), so the result is deterministic
// and independent of chunking; the error is at most 1/2 ulp at the working
// precision.
Real comp_sum(std::span<const Real> terms);

// Accumulator form used by the long series loops: terms are buffered and
// combined chunk-by-chunk in feed order (chunk size fixed at 4096), each chunk
// and the final combine correctly rounded.  Deterministic for a fixed feed
// order, including under the parallel drivers, which always feed partials in
// index order.
class SumAccumulator {
 public:
  SumAccumulator();
  void feed(const Real& term);
  void feed(Real&& term);
  Real total() const;
  long terms() const { return count_; }

 private:
  void flush();
  std::vector<Real> chunk_;
  std::vector<Real> partials_;
  long count_ = 0;
};

class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Requested accuracy could not be reached; carries the best estimate so far.
class accuracy_error : public std::runtime_error {
 public:
  accuracy_error(const std::string& what, Real best, Real err)
      : std::runtime_error(what), best_estimate(std::move(best)), err_estimate(std::move(err)) {}
  Real best_estimate;
  Real err_estimate;
};

class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace genli
