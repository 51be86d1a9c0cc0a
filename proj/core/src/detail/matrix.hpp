#pragma once

#include <cycres/bigint.hpp>

#include <cassert>
#include <vector>

namespace cycres::detail {

// Dense square matrix over Z (or over Z/p^K with reduced entries).
struct SquareMat {
  int n = 0;
  std::vector<BigInt> a;

  explicit SquareMat(int size) : n(size), a(std::size_t(size) * size, BigInt(0)) {}
  BigInt& at(int i, int j) { return a[std::size_t(i) * n + j]; }
  const BigInt& at(int i, int j) const { return a[std::size_t(i) * n + j]; }
};

// Fraction-free Bareiss elimination; destroys m.  Exact over Z.
inline BigInt bareiss_det(SquareMat m) {
  const int n = m.n;
  if (n == 0) return 1;
  int sign = 1;
  BigInt prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (m.at(i, k) != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return 0;
      for (int j = k; j < n; ++j) swap(m.at(k, j), m.at(piv, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        BigInt t = m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j);
        m.at(i, j) = checked_divexact(t, prev);
      }
      m.at(i, k) = 0;
    }
    prev = m.at(k, k);
  }
  BigInt d = m.at(n - 1, n - 1);
  return sign < 0 ? BigInt(-d) : d;
}

// Characteristic polynomial det(tI - M), ascending coefficients, monic of
// degree n.  Faddeev-LeVerrier; the divisions by k are exact over Z.
inline std::vector<BigInt> fl_charpoly(const SquareMat& m) {
  const int n = m.n;
  std::vector<BigInt> c(std::size_t(n) + 1, BigInt(0));
  c[n] = 1;
  if (n == 0) return c;

  auto trace = [&](const SquareMat& x) {
    BigInt t = 0;
    for (int i = 0; i < n; ++i) t += x.at(i, i);
    return t;
  };
  auto mul = [&](const SquareMat& x, const SquareMat& y) {
    SquareMat r(n);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        const BigInt& xik = x.at(i, k);
        if (xik == 0) continue;
        for (int j = 0; j < n; ++j) r.at(i, j) += xik * y.at(k, j);
      }
    return r;
  };

  SquareMat acc = m;
  c[n - 1] = -trace(acc);
  for (int k = 2; k <= n; ++k) {
    for (int i = 0; i < n; ++i) acc.at(i, i) += c[n - k + 1];
    acc = mul(m, acc);
    BigInt t = -trace(acc);
    c[n - k] = checked_divexact(t, BigInt(k));
  }
  return c;
}

}  // namespace cycres::detail
