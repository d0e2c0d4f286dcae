#pragma once

#include <cstdint>

#include "gle/scalar.hpp"

namespace gle {

/// Deterministic splitmix64 generator. The property suites must reproduce
/// byte-identically across platforms, so no std:: distributions.
class Rng {
 public:
  explicit Rng(uint64_t seed = 0x9e3779b97f4a7c15ull) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n).
  uint64_t below(uint64_t n) { return next() % n; }

  // Small integer in [-m, m].
  long small_int(long m) { return long(below(uint64_t(2 * m + 1))) - m; }

  Rat rat(long m = 5) {
    long num = small_int(m);
    long den = long(below(uint64_t(m))) + 1;
    Rat r(num, den);
    r.canonicalize();
    return r;
  }

  /// Sparse random polynomial with small integer coefficients.
  Poly poly(int max_terms = 3, int max_deg = 2, long coeff_range = 3) {
    Poly p;
    int nt = 1 + int(below(uint64_t(max_terms)));
    for (int t = 0; t < nt; ++t) {
      Mono m;
      for (int v = 0; v < kNumVars; ++v) m.set_exp(v, int(below(uint64_t(max_deg + 1))));
      long c = small_int(coeff_range);
      if (c != 0) p.add_term(m, Rat(c));
    }
    return p;
  }

  Scalar scalar(int max_terms = 3, int max_deg = 2) {
    return Scalar(poly(max_terms, max_deg));
  }

  double unit_double() { return double(next() >> 11) * (1.0 / 9007199254740992.0); }

 private:
  uint64_t state_;
};

}  // namespace gle
