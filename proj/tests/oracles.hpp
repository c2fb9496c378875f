#pragma once

// Independent reference computations for the unit and acceptance tests.
// None of these call into the library.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

// Euler's pentagonal recurrence.
inline std::vector<long long> partition_counts(int n) {
  std::vector<long long> p(n + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    long long s = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > m) break;
      const long long sign = (k % 2) ? 1 : -1;
      s += sign * p[m - g1];
      if (g2 <= m) s += sign * p[m - g2];
    }
    p[m] = s;
  }
  return p;
}

// Ordered pairs of partitions with total size n.
inline long long bipartition_count(int n) {
  const auto p = partition_counts(n);
  long long s = 0;
  for (int i = 0; i <= n; ++i) s += p[i] * p[n - i];
  return s;
}

// Unordered pairs {a, b} with |a|+|b| = n, counting a = b twice.
inline long long d_index_count(int n) {
  const auto p = partition_counts(n);
  long long ordered = bipartition_count(n);
  long long diag = n % 2 == 0 ? p[n / 2] : 0;
  return (ordered - diag) / 2 + 2 * diag;
}

inline std::vector<long long> convolve(const std::vector<long long>& a, const std::vector<long long>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<long long> r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

// Multiplicity of the root -1, by repeated synthetic division.
inline unsigned minus_one_multiplicity(std::vector<mpq_class> p) {
  unsigned m = 0;
  while (p.size() > 1) {
    const std::size_t n = p.size() - 1;
    std::vector<mpq_class> q(n);
    q[n - 1] = p[n];
    for (std::size_t i = n - 1; i > 0; --i) q[i - 1] = p[i] - q[i];
    if (p[0] - q[0] != 0) break;
    p = std::move(q);
    ++m;
  }
  return m;
}

// Sets of naturals as bitmasks over 0..bits-1.
inline std::vector<unsigned> bits_to_set(std::uint32_t mask) {
  std::vector<unsigned> v;
  for (unsigned i = 0; i < 32; ++i)
    if (mask >> i & 1u) v.push_back(i);
  return v;
}

// Rank offset written as [(m-1)^2 / 2] / 2, with [.] the integer part.
inline long integer_part_offset(long m) {
  const long sq = (m - 1) * (m - 1);
  return (sq / 2) / 2;
}

struct PairKey {
  std::vector<unsigned> x, y;
  int spin;  // 0 none, +1, -1
  auto operator<=>(const PairKey&) const = default;
};

// All symbols (X, Y) of the given defect and rank with entries below `bound`,
// filtered by mode: 0 -> 0 not in Y (and unordered for defect 0), 1 -> not
// both rows containing 0.
inline std::set<PairKey> brute_symbols(unsigned n, unsigned defect, unsigned bound, int mode) {
  std::set<PairKey> out;
  const std::uint32_t lim = 1u << bound;
  for (std::uint32_t mx = 0; mx < lim; ++mx)
    for (std::uint32_t my = 0; my < lim; ++my) {
      const int cx = __builtin_popcount(mx), cy = __builtin_popcount(my);
      if (cx != cy + static_cast<int>(defect)) continue;
      auto x = bits_to_set(mx), y = bits_to_set(my);
      long s = 0;
      for (unsigned v : x) s += v;
      for (unsigned v : y) s += v;
      if (s - integer_part_offset(cx + cy) != static_cast<long>(n)) continue;
      const bool x0 = mx & 1u, y0 = my & 1u;
      if (x0 && y0) continue;
      if (defect == 0) {
        if (y < x) continue;
        if (x == y) {
          out.insert({x, y, 1});
          out.insert({x, y, -1});
        } else {
          out.insert({x, y, 0});
        }
      } else {
        if (mode == 0 && y0) continue;
        out.insert({x, y, 0});
      }
    }
  return out;
}

// Fraction-free determinant (Bareiss).
inline mpz_class determinant(std::vector<std::vector<mpz_class>> a) {
  const std::size_t n = a.size();
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

// det(u I - m) at an integer point.
inline mpz_class char_value(const std::vector<std::vector<long>>& m, long u) {
  std::vector<std::vector<mpz_class>> a(m.size(), std::vector<mpz_class>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) a[i][j] = (i == j ? u : 0) - m[i][j];
  return determinant(a);
}

inline mpz_class factorial(unsigned n) {
  mpz_class f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

// n! / prod of hook lengths.
inline mpz_class hook_dimension(std::vector<unsigned> lam) {
  std::sort(lam.rbegin(), lam.rend());
  unsigned n = 0;
  for (unsigned v : lam) n += v;
  mpz_class prod = 1;
  for (std::size_t i = 0; i < lam.size(); ++i)
    for (unsigned j = 0; j < lam[i]; ++j) {
      unsigned leg = 0;
      for (std::size_t r = i + 1; r < lam.size(); ++r)
        if (lam[r] > j) ++leg;
      prod *= lam[i] - j - 1 + leg + 1;
    }
  return factorial(n) / prod;
}

inline std::vector<std::vector<unsigned>> partitions(unsigned n, unsigned max_part) {
  if (n == 0) return {{}};
  std::vector<std::vector<unsigned>> out;
  for (unsigned first = std::min(n, max_part); first >= 1; --first)
    for (auto rest : partitions(n - first, first)) {
      rest.insert(rest.begin(), first);
      out.push_back(std::move(rest));
    }
  return out;
}

}  // namespace oracle
