#include <cycres/poly_algebra.hpp>

#include <cycres/errors.hpp>

#include "detail/matrix.hpp"
#include "detail/modring.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <mutex>

namespace cycres {

unsigned long p_content(const IntPolynomial& f, unsigned long p) {
  if (f.is_zero()) throw ZeroPolynomialError();
  BigInt bp(p);
  unsigned long mu = ~0ul;
  for (const auto& c : f.coeffs()) {
    if (c == 0) continue;
    mu = std::min(mu, big_valuation(c, bp));
    if (mu == 0) break;
  }
  return mu;
}

namespace {

// Pseudo-remainder: lc(B)^(deg A - deg B + 1) * A  mod  B.
IntPolynomial prem(const IntPolynomial& A, const IntPolynomial& B) {
  const BigInt& lb = B.leading();
  long e = A.degree() - B.degree() + 1;
  IntPolynomial R = A;
  while (!R.is_zero() && R.degree() >= B.degree()) {
    std::size_t k = R.degree() - B.degree();
    IntPolynomial t = B.shifted_up(k) * R.leading();
    R = R * lb - t;
    --e;
  }
  assert(e >= 0);
  for (; e > 0; --e) R = R * lb;
  return R;
}

IntPolynomial divide_content(const IntPolynomial& f, const BigInt& c) {
  std::vector<BigInt> out;
  out.reserve(f.coeffs().size());
  for (const auto& x : f.coeffs()) out.push_back(checked_divexact(x, c));
  return IntPolynomial(std::move(out));
}

}  // namespace

// Subresultant PRS (fraction-free).  Convention fixed by
// Res(f,g) = lc(f)^deg g * prod_{f(a)=0} g(a).
BigInt resultant(const IntPolynomial& f, const IntPolynomial& g) {
  if (f.is_zero() || g.is_zero()) throw ZeroPolynomialError();
  if (f.degree() < g.degree()) {
    BigInt r = resultant(g, f);
    if ((f.degree() & 1) && (g.degree() & 1)) r = -r;
    return r;
  }
  if (g.degree() == 0) return big_pow(g.leading(), f.degree());

  BigInt ca = content(f), cb = content(g);
  IntPolynomial A = divide_content(f, ca);
  IntPolynomial B = divide_content(g, cb);
  BigInt t = big_pow(ca, B.degree()) * big_pow(cb, A.degree());
  int sign = 1;
  BigInt gg = 1, h = 1;

  while (true) {
    long delta = A.degree() - B.degree();
    if ((A.degree() & 1) && (B.degree() & 1)) sign = -sign;
    IntPolynomial R = prem(A, B);
    A = B;
    BigInt denom = gg * big_pow(h, delta);
    B = R.is_zero() ? IntPolynomial{} : divide_content(R, denom);
    if (B.is_zero()) {
      // common nonconstant factor
      return 0;
    }
    gg = A.leading();
    if (delta > 0) h = checked_divexact(big_pow(gg, delta), big_pow(h, delta - 1));
    if (B.degree() <= 0) break;
  }

  BigInt res = checked_divexact(big_pow(B.leading(), A.degree()),
                                big_pow(h, A.degree() - 1));
  res *= t;
  return sign < 0 ? BigInt(-res) : res;
}

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<unsigned long> prime_factors(unsigned long m) {
  std::vector<unsigned long> out;
  for (unsigned long d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      out.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) out.push_back(m);
  return out;
}

unsigned long euler_phi(unsigned long m) {
  unsigned long r = m;
  for (unsigned long q : prime_factors(m)) r -= r / q;
  return r;
}

IntPolynomial cyclotomic(unsigned long m) {
  if (m == 0) throw HypothesisError("cyclotomic index must be >= 1");
  static std::map<unsigned long, IntPolynomial> cache;
  static std::mutex mtx;
  {
    std::lock_guard<std::mutex> lk(mtx);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
  }
  IntPolynomial f = IntPolynomial::power_minus_one(m);
  for (unsigned long d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    auto q = try_exact_divide(f, cyclotomic(d));
    if (!q) throw InvariantViolation("cyclotomic recursion: division not exact");
    f = std::move(*q);
  }
  std::lock_guard<std::mutex> lk(mtx);
  cache.emplace(m, f);
  return f;
}

namespace {

// Decimal-digit estimate for the monicized root-power computation; used by
// the runaway-input guard.
std::uint64_t estimated_result_digits(const IntPolynomial& f, unsigned long n) {
  std::size_t maxbits = 1;
  for (const auto& c : f.coeffs())
    if (c != 0) maxbits = std::max(maxbits, mpz_sizeinbase(c.get_mpz_t(), 2));
  unsigned long d = std::max(f.degree(), 1);
  unsigned __int128 bits =
      (unsigned __int128)n * d * (maxbits + 2) + (unsigned __int128)n * d;
  unsigned __int128 digits = bits / 3;
  if (digits > ~std::uint64_t(0)) return ~std::uint64_t(0);
  return static_cast<std::uint64_t>(digits);
}

void check_budget(const IntPolynomial& f, unsigned long n, std::uint64_t budget,
                  const char* what) {
  if (estimated_result_digits(f, n) > budget)
    throw PrecisionError(std::string(what) +
                         ": estimated result size exceeds the digit budget");
}

// Monic F with roots lc(f) * (roots of f):  F_i = c_i * lc^(d-1-i).
std::vector<BigInt> monicize_low(const IntPolynomial& f) {
  const int d = f.degree();
  const BigInt& a0 = f.leading();
  std::vector<BigInt> low{std::vector<BigInt>(static_cast<std::size_t>(d))};
  BigInt scale = 1;
  for (int i = d - 1; i >= 0; --i) {
    low[i] = f.coeff(i) * scale;
    scale *= a0;
  }
  return low;
}

}  // namespace

IntPolynomial power_transform(const IntPolynomial& f, unsigned long m,
                              std::uint64_t digit_budget) {
  if (f.is_zero()) throw ZeroPolynomialError();
  if (m == 0) throw HypothesisError("power_transform requires m >= 1");
  const int d = f.degree();
  const BigInt& a0 = f.leading();
  if (d == 0) return IntPolynomial::constant(big_pow(a0, m));
  if (m == 1) return f;
  check_budget(f, m, digit_budget, "power_transform");

  detail::MonicMod ring{monicize_low(f), {}};
  std::vector<BigInt> r = ring.pow_x(m);
  detail::SquareMat mat = ring.mult_matrix(r);
  std::vector<BigInt> cp = detail::fl_charpoly(mat);

  // char poly has roots (lc * a_i)^m; rescale back to a_i^m
  std::vector<BigInt> out(cp.size());
  for (int j = 0; j <= d; ++j) {
    long e = (long)m * (1 + j - d);
    if (e >= 0)
      out[j] = cp[j] * big_pow(a0, e);
    else
      out[j] = checked_divexact(cp[j], big_pow(a0, -e));
  }
  return IntPolynomial(std::move(out));
}

BigInt cyclic_resultant(const IntPolynomial& f, unsigned long n,
                        std::uint64_t digit_budget) {
  if (f.is_zero()) throw ZeroPolynomialError();
  if (n == 0) throw HypothesisError("cyclic_resultant requires n >= 1");
  const int d = f.degree();
  const BigInt& a0 = f.leading();
  if (d == 0) {
    check_budget(f, n, digit_budget, "cyclic_resultant");
    return big_pow(a0, n);
  }
  check_budget(f, n, digit_budget, "cyclic_resultant");

  // Res(t^n-1, f) = (-1)^((n+1) d) lc^(n(1-d)) det(lc^n I - M), with M the
  // multiplication-by-x^n matrix on Z[x]/(monicized f).  Same growth profile
  // as the Graeffe chain, collapsed into one root-power step.
  detail::MonicMod ring{monicize_low(f), {}};
  std::vector<BigInt> r = ring.pow_x(n);
  detail::SquareMat mat = ring.mult_matrix(r);
  BigInt an = big_pow(a0, n);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) mat.at(i, j) = (i == j ? an - mat.at(i, j) : BigInt(-mat.at(i, j)));
  BigInt det = detail::bareiss_det(std::move(mat));
  BigInt res = checked_divexact(det, big_pow(a0, (unsigned long)n * (d - 1)));
  bool negate = ((n + 1) * (unsigned long)d) & 1;
  return negate ? BigInt(-res) : res;
}

unsigned long cyclotomic_multiplicity(const IntPolynomial& f, unsigned long m) {
  if (f.is_zero()) throw ZeroPolynomialError();
  IntPolynomial phi = cyclotomic(m);
  unsigned long k = 0;
  IntPolynomial g = f;
  while (true) {
    auto q = try_exact_divide(g, phi);
    if (!q) return k;
    g = std::move(*q);
    ++k;
  }
}

}  // namespace cycres
