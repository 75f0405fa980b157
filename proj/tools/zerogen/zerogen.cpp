// Standalone generator for tables of Riemann zeta zero ordinates.
//
// Evaluates the Hardy Z function with Euler-Maclaurin below the crossover
// height and the Riemann-Siegel formula (main sum + C0 + C1 remainder terms)
// above it, then brackets sign changes between externally supplied anchor
// ordinates (one verified zero every `block` indices, e.g. from mpmath's
// zetazero) and bisects each bracket.  The anchor file makes miscounts
// impossible: every block must contain exactly block-1 interior zeros or the
// scan is retried with a finer grid.
//
// Usage: zerogen <anchors.txt> <out.txt> [threads]
//   anchors.txt: lines "index ordinate", ascending, with index 0 = scan start
//   out.txt:     one ordinate per line, 12 significant digits

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>
#include <atomic>
#include <thread>
#include <vector>

#include "rs_coeffs.h"

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 6.28318530717958647692;
constexpr double kCrossover = 10000.0;  // EM below, RS above

// theta(t) = arg Gamma(1/4 + it/2) - (t/2) ln pi, asymptotic expansion
double theta(double t) {
  double lt = std::log(t / kTwoPi);
  double t2 = t * t;
  return 0.5 * t * lt - 0.5 * t - kPi / 8 + 1.0 / (48 * t) + 7.0 / (5760 * t * t2) +
         31.0 / (80640 * t2 * t2 * t);
}

double clenshaw(const double* c, int n, double p) {
  // Chebyshev series on [0,1]
  double x = 2 * (2 * p - 1);
  double b0 = 0, b1 = 0;
  for (int j = n - 1; j >= 1; --j) {
    double tmp = c[j] + x * b0 - b1;
    b1 = b0;
    b0 = tmp;
  }
  return c[0] + 0.5 * x * b0 - b1;
}

// Z(t) by Riemann-Siegel, main sum plus two remainder terms.
// Absolute error ~ (t/2pi)^(-9/4), below 1e-8 for t >= 3000.
double z_rs(double t) {
  double a = std::sqrt(t / kTwoPi);
  int nu = static_cast<int>(a);
  double p = a - nu;
  double th = theta(t);
  double s = 0;
  for (int n = 1; n <= nu; ++n) {
    s += std::cos(th - t * std::log(static_cast<double>(n))) / std::sqrt(static_cast<double>(n));
  }
  double c0 = clenshaw(kC0, sizeof(kC0) / sizeof(double), p);
  double c1 = clenshaw(kC1, sizeof(kC1) / sizeof(double), p);
  double rem = (nu % 2 == 0 ? -1.0 : 1.0) / std::sqrt(a) * (c0 + c1 / a);
  return 2 * s + rem;
}

// Z(t) via Euler-Maclaurin evaluation of zeta(1/2+it); error well below 1e-11
// for t <= kCrossover with N ~ t/2 terms.
double z_em(double t) {
  using cplx = std::complex<double>;
  static const double bern[] = {1.0 / 6,       -1.0 / 30,     1.0 / 42,      -1.0 / 30,
                                5.0 / 66,      -691.0 / 2730, 7.0 / 6,       -3617.0 / 510,
                                43867.0 / 798, -174611.0 / 330};
  int N = std::max(32, static_cast<int>(t / 2) + 8);
  cplx s(0.5, t);
  cplx sum = 0;
  for (int n = 1; n < N; ++n) {
    double ln = std::log(static_cast<double>(n));
    sum += std::polar(std::exp(-0.5 * ln), -t * ln);
  }
  double lnN = std::log(static_cast<double>(N));
  cplx Nms = std::polar(std::exp(-0.5 * lnN), -t * lnN);  // N^{-s}
  sum += Nms * static_cast<double>(N) / (s - 1.0);        // N^{1-s}/(s-1)
  sum += 0.5 * Nms;
  // correction terms B_{2k}/(2k)! * (s)(s+1)...(s+2k-2) * N^{-s-2k+1}
  cplx fact = s * Nms / static_cast<double>(N);  // k=1 numerator product
  double kfac = 2;                               // (2k)!
  for (int k = 1; k <= 10; ++k) {
    if (k > 1) {
      fact *= (s + cplx(2 * k - 3)) * (s + cplx(2 * k - 2)) / (static_cast<double>(N) * N);
      kfac *= (2 * k - 1) * (2 * k);
    }
    sum += bern[k - 1] / kfac * fact;
  }
  cplx z = std::polar(1.0, theta(t)) * sum;
  return z.real();
}

double hardy_z(double t) { return t < kCrossover ? z_em(t) : z_rs(t); }

double bisect_zero(double lo, double hi, double zlo) {
  for (int i = 0; i < 64 && hi - lo > 1e-12; ++i) {
    double mid = 0.5 * (lo + hi);
    double zm = hardy_z(mid);
    if ((zm < 0) == (zlo < 0)) {
      lo = mid;
      zlo = zm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Scan (lo, hi) for sign changes of Z; expect `expected` zeros, refining the
// grid until the count is reached.  Returns false if it never is.
bool scan_block(double lo, double hi, long expected, std::vector<double>& out) {
  double avg_gap = kTwoPi / std::log(hi / kTwoPi);
  for (int attempt = 0; attempt < 6; ++attempt) {
    double step = avg_gap / (10 << attempt);
    long nsteps = static_cast<long>((hi - lo) / step) + 1;
    step = (hi - lo) / nsteps;
    out.clear();
    double t0 = lo, z0 = hardy_z(t0);
    for (long i = 1; i <= nsteps; ++i) {
      double t1 = lo + (hi - lo) * static_cast<double>(i) / nsteps;
      double z1 = hardy_z(t1);
      if ((z0 < 0) != (z1 < 0)) out.push_back(bisect_zero(t0, t1, z0));
      t0 = t1;
      z0 = z1;
    }
    if (static_cast<long>(out.size()) == expected) return true;
    if (static_cast<long>(out.size()) > expected) return false;  // anchor data wrong
  }
  return false;
}

struct Anchor {
  long index;
  double t;
};

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::fprintf(stderr, "usage: zerogen <anchors.txt> <out.txt> [threads]\n");
    return 1;
  }
  std::vector<Anchor> anchors;
  {
    std::FILE* f = std::fopen(argv[1], "r");
    if (!f) {
      std::perror(argv[1]);
      return 1;
    }
    long idx;
    double t;
    while (std::fscanf(f, "%ld %lf", &idx, &t) == 2) anchors.push_back({idx, t});
    std::fclose(f);
  }
  if (anchors.size() < 2 || anchors.front().index != 0) {
    std::fprintf(stderr, "anchor file must start at index 0\n");
    return 1;
  }
  int nthreads = argc > 3 ? std::atoi(argv[3]) : 2;
  size_t nblocks = anchors.size() - 1;
  std::vector<std::vector<double>> blocks(nblocks);
  std::vector<int> status(nblocks, 0);
  std::atomic<size_t> next{0};
  auto work = [&]() {
    size_t j;
    while ((j = next.fetch_add(1)) < nblocks) {
      const double eps = 1e-5;
      long expected = anchors[j + 1].index - anchors[j].index - 1;
      double lo = anchors[j].t + (anchors[j].index == 0 ? 0.0 : eps);
      status[j] = scan_block(lo, anchors[j + 1].t - eps, expected, blocks[j]) ? 1 : -1;
    }
  };
  std::vector<std::thread> pool;
  for (int i = 0; i < nthreads; ++i) pool.emplace_back(work);
  for (auto& th : pool) th.join();

  for (size_t j = 0; j < nblocks; ++j) {
    if (status[j] != 1) {
      std::fprintf(stderr, "block %zu [%.3f, %.3f]: zero count mismatch (got %zu, want %ld)\n", j,
                   anchors[j].t, anchors[j + 1].t, blocks[j].size(),
                   anchors[j + 1].index - anchors[j].index - 1);
      return 2;
    }
  }
  std::FILE* out = std::fopen(argv[2], "w");
  if (!out) {
    std::perror(argv[2]);
    return 1;
  }
  for (size_t j = 0; j < nblocks; ++j) {
    for (double t : blocks[j]) std::fprintf(out, "%.12g\n", t);
    std::fprintf(out, "%.12g\n", anchors[j + 1].t);  // anchor zero closes the block
  }
  std::fclose(out);
  std::fprintf(stdout, "wrote %ld ordinates\n", anchors.back().index);
  return 0;
}
