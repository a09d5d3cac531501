#pragma once

// Test-only oracles, kept independent of the library's own product kernels:
// blade products by explicit bubble-sort transposition counting, and the
// extended metric by literal determinant expansion.

#include <utility>
#include <vector>

#include "ga/multivector.hpp"

namespace ga::oracle {

// Multiplies two ascending index sequences by bubble sort, cancelling equal
// neighbours with their metric signs. Returns (sign, surviving indices).
inline std::pair<int, std::vector<int>> blade_product_bubble(std::vector<int> a,
                                                             const std::vector<int>& b,
                                                             const Signature& sig) {
  for (int idx : b) a.push_back(idx);
  int sign = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
      if (a[i] > a[i + 1]) {
        std::swap(a[i], a[i + 1]);
        sign = -sign;
        changed = true;
      } else if (a[i] == a[i + 1]) {
        sign *= sig.metric_sign(a[i]);
        a.erase(a.begin() + long(i), a.begin() + long(i) + 2);
        changed = true;
        break;
      }
    }
  }
  return {sign, a};
}

inline std::vector<int> blade_indices(Blade b) {
  std::vector<int> idx;
  for (int mu = 0; mu < 16; ++mu)
    if (b & (1u << mu)) idx.push_back(mu);
  return idx;
}

inline Blade indices_to_blade(const std::vector<int>& idx) {
  Blade b = 0;
  for (int mu : idx) b = Blade(b | (1u << mu));
  return b;
}

// Determinant by Laplace expansion along the first row.
inline Rational determinant(const std::vector<std::vector<Rational>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Rational det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<Rational>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Rational> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    Rational term = m[0][j] * determinant(minor);
    det += (j % 2 == 0) ? term : Rational(-term);
  }
  return det;
}

// g(u1^...^uk, v1^...^vk) = det(g(ui, vj)) for grade-1 factors.
inline Rational metric_determinant(const std::vector<Multivector<Rational>>& u,
                                   const std::vector<Multivector<Rational>>& v) {
  std::vector<std::vector<Rational>> m(u.size(), std::vector<Rational>(v.size()));
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) m[i][j] = extended_metric(u[i], v[j]);
  return determinant(m);
}

}  // namespace ga::oracle
