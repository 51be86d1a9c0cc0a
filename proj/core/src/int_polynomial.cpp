#include <cycres/int_polynomial.hpp>

#include <cycres/errors.hpp>

#include <algorithm>
#include <cassert>
#include <sstream>

namespace cycres {

namespace {
const BigInt kZero = 0;
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  canonicalize();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  canonicalize();
}

void IntPolynomial::canonicalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::constant(BigInt value) {
  IntPolynomial f;
  if (value != 0) f.coeffs_.push_back(std::move(value));
  return f;
}

IntPolynomial IntPolynomial::monomial(BigInt coeff, std::size_t degree) {
  IntPolynomial f;
  if (coeff != 0) {
    f.coeffs_.assign(degree + 1, BigInt(0));
    f.coeffs_.back() = std::move(coeff);
  }
  return f;
}

IntPolynomial IntPolynomial::power_minus_one(unsigned long n) {
  IntPolynomial f;
  f.coeffs_.assign(n + 1, BigInt(0));
  f.coeffs_.front() = -1;
  f.coeffs_.back() = 1;
  return f;
}

const BigInt& IntPolynomial::leading() const {
  if (is_zero()) throw ZeroPolynomialError();
  return coeffs_.back();
}

const BigInt& IntPolynomial::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : kZero;
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> out(std::max(a.coeffs_.size(), b.coeffs_.size()), BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] = a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> out(std::max(a.coeffs_.size(), b.coeffs_.size()), BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] = a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] -= b.coeffs_[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const BigInt& c) const {
  if (c == 0) return {};
  IntPolynomial r = *this;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

IntPolynomial IntPolynomial::shifted_up(std::size_t k) const {
  if (is_zero()) return {};
  IntPolynomial r;
  r.coeffs_.assign(k, BigInt(0));
  r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return r;
}

IntPolynomial IntPolynomial::reversed() const {
  std::vector<BigInt> out(coeffs_.rbegin(), coeffs_.rend());
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::shifted_argument(const BigInt& a) const {
  // Taylor shift: repeated synthetic division by (t - (-a)) collects the
  // coefficients of f(t + a) from lowest to highest.
  std::vector<BigInt> work = coeffs_;
  std::vector<BigInt> out(coeffs_.size(), BigInt(0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    BigInt rem = 0;
    for (std::size_t i = work.size(); i-- > k;) {
      work[i] += rem;
      rem = work[i] * a;
    }
    out[k] = work[k];
  }
  return IntPolynomial(std::move(out));
}

std::size_t IntPolynomial::order_at_zero() const {
  if (is_zero()) throw ZeroPolynomialError();
  std::size_t k = 0;
  while (coeffs_[k] == 0) ++k;
  return k;
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? "-" : "+");
    }
    BigInt abs_c = abs(c);
    if (i == 0 || abs_c != 1) os << abs_c.get_str();
    if (i >= 1) {
      os << "t";
      if (i >= 2) os << "^" << i;
    }
  }
  return os.str();
}

std::optional<IntPolynomial> try_exact_divide(const IntPolynomial& num,
                                              const IntPolynomial& den) {
  if (den.is_zero()) throw ZeroPolynomialError();
  if (num.is_zero()) return IntPolynomial{};
  if (num.degree() < den.degree()) return std::nullopt;

  std::vector<BigInt> rem = num.coeffs();
  const auto& d = den.coeffs();
  std::size_t qn = rem.size() - d.size() + 1;
  std::vector<BigInt> quo(qn, BigInt(0));
  BigInt q, r;
  for (std::size_t k = qn; k-- > 0;) {
    const BigInt& top = rem[k + d.size() - 1];
    if (top == 0) continue;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(),
                den.leading().get_mpz_t());
    if (r != 0) return std::nullopt;
    quo[k] = q;
    for (std::size_t i = 0; i < d.size(); ++i) rem[k + i] -= q * d[i];
  }
  for (const auto& c : rem)
    if (c != 0) return std::nullopt;
  return IntPolynomial(std::move(quo));
}

BigInt content(const IntPolynomial& f) {
  BigInt g = 0;
  for (const auto& c : f.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

}  // namespace cycres
