#pragma once

#include <bit>
#include <cstdint>

#include "ga/error.hpp"

namespace ga {

// Diagonal metric: the first p basis 1-forms square to +1, the next q to -1.
struct Signature {
  int p = 0, q = 0;

  Signature() = default;
  Signature(int p_, int q_) : p(p_), q(q_) {
    if (p < 0 || q < 0 || p + q > 8) fail(ErrorCode::BadIndex, "signature out of supported range");
  }

  int dim() const { return p + q; }
  std::size_t blade_count() const { return std::size_t{1} << dim(); }
  int metric_sign(int mu) const {
    if (mu < 0 || mu >= dim()) fail(ErrorCode::BadIndex, "basis index out of range");
    return mu < p ? +1 : -1;
  }
  bool operator==(const Signature&) const = default;
};

// Basis blade as a bitmask over e^0..e^{d-1}; bit mu set iff e^mu present.
using Blade = std::uint16_t;

inline int grade_of(Blade b) { return std::popcount(b); }

// Sign of sorting the concatenation of two ascending index lists: counts the
// pairs (i in a, j in b) with i > j.
inline int reorder_sign(Blade a, Blade b) {
  int swaps = 0;
  a >>= 1;
  while (a) {
    swaps += std::popcount(Blade(a & b));
    a >>= 1;
  }
  return (swaps & 1) ? -1 : +1;
}

struct BladeProduct {
  Blade blade;
  int sign;
};

// Geometric product of basis blades: reorder sign times the metric signs of
// the annihilated shared indices.
inline BladeProduct blade_geometric(Blade a, Blade b, const Signature& sig) {
  int s = reorder_sign(a, b);
  Blade shared = a & b;
  while (shared) {
    int mu = std::countr_zero(shared);
    s *= sig.metric_sign(mu);
    shared = Blade(shared & (shared - 1));
  }
  return {Blade(a ^ b), s};
}

inline int blade_metric_square(Blade a, const Signature& sig) {
  int s = 1;
  while (a) {
    int mu = std::countr_zero(a);
    s *= sig.metric_sign(mu);
    a = Blade(a & (a - 1));
  }
  return s;
}

inline int reversion_sign(int grade) { return (grade / 2) % 2 == 0 ? +1 : -1; }
inline int involution_sign(int grade) { return grade % 2 == 0 ? +1 : -1; }
inline int conjugation_sign(int grade) { return reversion_sign(grade) * involution_sign(grade); }

}  // namespace ga
