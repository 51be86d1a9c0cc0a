#pragma once

#include <cycres/bigint.hpp>

#include "matrix.hpp"

#include <cassert>
#include <vector>

namespace cycres::detail {

// Optional modulus: reduce() is a no-op when unset, so the same polynomial
// kernels serve exact-integer and Z/p^K computations.
struct OptMod {
  const BigInt* m = nullptr;

  void reduce(BigInt& x) const {
    if (m) mpz_mod(x.get_mpz_t(), x.get_mpz_t(), m->get_mpz_t());
  }
};

// Residues mod a monic F of degree d are coefficient vectors of length d.
// F is given ascending with F.back() == 1 implied (the vector holds only
// the d lower coefficients).
struct MonicMod {
  std::vector<BigInt> low;  // F minus its leading monomial, length d
  OptMod om;

  int deg() const { return static_cast<int>(low.size()); }

  // res <- res * g mod F
  std::vector<BigInt> mul(const std::vector<BigInt>& a,
                          const std::vector<BigInt>& b) const {
    const int d = deg();
    std::vector<BigInt> prod(std::size_t(2 * d - 1), BigInt(0));
    for (int i = 0; i < d; ++i) {
      if (a[i] == 0) continue;
      for (int j = 0; j < d; ++j) {
        if (b[j] == 0) continue;
        prod[i + j] += a[i] * b[j];
      }
    }
    for (auto& c : prod) om.reduce(c);
    reduce_in_place(prod);
    prod.resize(d);
    return prod;
  }

  // Reduce a coefficient vector of any length mod F (monic, subtraction only).
  void reduce_in_place(std::vector<BigInt>& v) const {
    const int d = deg();
    for (int i = static_cast<int>(v.size()) - 1; i >= d; --i) {
      if (v[i] == 0) continue;
      BigInt c = v[i];
      v[i] = 0;
      for (int j = 0; j < d; ++j) {
        v[i - d + j] -= c * low[j];
        om.reduce(v[i - d + j]);
      }
    }
    if (static_cast<int>(v.size()) < d) v.resize(d);
  }

  // x^n mod F by binary exponentiation.
  std::vector<BigInt> pow_x(unsigned long n) const {
    const int d = deg();
    assert(d >= 1);
    std::vector<BigInt> x(std::size_t(d), BigInt(0));
    if (d == 1) {
      x[0] = -low[0];
      om.reduce(x[0]);
    } else {
      x[1] = 1;
    }
    if (n == 1) return x;

    std::vector<BigInt> acc;
    bool started = false;
    for (int bit = 63; bit >= 0; --bit) {
      if (!started) {
        if ((n >> bit) & 1) {
          acc = x;
          started = true;
        }
        continue;
      }
      acc = mul(acc, acc);
      if ((n >> bit) & 1) acc = mul(acc, x);
    }
    return acc;
  }

  // Matrix of multiplication by r on the basis 1, x, ..., x^{d-1}.
  SquareMat mult_matrix(const std::vector<BigInt>& r) const {
    const int d = deg();
    SquareMat m(d);
    std::vector<BigInt> col = r;
    for (int j = 0;; ++j) {
      for (int i = 0; i < d; ++i) m.at(i, j) = col[i];
      if (j + 1 >= d) break;
      // col <- x * col mod F
      col.insert(col.begin(), BigInt(0));
      reduce_in_place(col);
    }
    return m;
  }
};

}  // namespace cycres::detail
