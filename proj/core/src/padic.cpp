#include <cycres/padic.hpp>

#include <cycres/errors.hpp>

#include <algorithm>
#include <cassert>
#include <sstream>

namespace cycres {

namespace {
BigInt prime_power(unsigned long p, long e) {
  assert(e >= 0);
  return big_pow(p, static_cast<unsigned long>(e));
}
}  // namespace

PadicScalar PadicScalar::zero(unsigned long p, long abs_prec) {
  PadicScalar x;
  x.p_ = p;
  x.zero_ = true;
  x.zero_prec_ = abs_prec;
  return x;
}

PadicScalar PadicScalar::exact_zero(unsigned long p) { return zero(p, kExactZeroPrec); }

PadicScalar PadicScalar::from_unit(BigInt unit, long val, unsigned long p, int prec) {
  if (prec <= 0) return zero(p, val);
  PadicScalar x;
  x.p_ = p;
  x.zero_ = false;
  x.val_ = val;
  x.prec_ = prec;
  x.unit_ = mod_reduce(std::move(unit), prime_power(p, prec));
  x.normalize();
  return x;
}

void PadicScalar::normalize() {
  if (zero_) return;
  if (unit_ == 0) {
    zero_ = true;
    zero_prec_ = val_ + prec_;
    return;
  }
  unsigned long w = big_valuation(unit_, BigInt(p_));
  if (w > 0) {
    // leading digits were zero: rescale and shrink the window
    if (static_cast<long>(w) >= prec_) {
      zero_ = true;
      zero_prec_ = val_ + prec_;
      return;
    }
    unit_ = checked_divexact(unit_, prime_power(p_, w));
    val_ += w;
    prec_ -= static_cast<int>(w);
  }
}

PadicScalar PadicScalar::from_integer(const BigInt& n, unsigned long p, int prec) {
  if (n == 0) return exact_zero(p);
  BigInt rest;
  unsigned long v = big_remove(n, BigInt(p), rest);
  return from_unit(std::move(rest), static_cast<long>(v), p, prec);
}

PadicScalar PadicScalar::from_rational(const BigInt& num, const BigInt& den,
                                       unsigned long p, int prec) {
  if (den == 0) throw DomainError("p-adic value from rational: zero denominator");
  if (num == 0) return exact_zero(p);
  BigInt nu, du;
  long v = static_cast<long>(big_remove(num, BigInt(p), nu)) -
           static_cast<long>(big_remove(den, BigInt(p), du));
  BigInt m = prime_power(p, prec);
  BigInt u = mod_reduce(nu, m) * invert_mod(mod_reduce(du, m), m);
  return from_unit(std::move(u), v, p, prec);
}

PadicScalar PadicScalar::one(unsigned long p, int prec) {
  return from_unit(1, 0, p, prec);
}

long PadicScalar::valuation() const {
  if (zero_) throw InvariantViolation("valuation of a zero-to-precision value");
  return val_;
}

const BigInt& PadicScalar::unit() const {
  if (zero_) throw InvariantViolation("unit of a zero-to-precision value");
  return unit_;
}

int PadicScalar::precision() const {
  if (zero_) throw InvariantViolation("relative precision of a zero-to-precision value");
  return prec_;
}

long PadicScalar::abs_precision() const { return zero_ ? zero_prec_ : val_ + prec_; }

PadicScalar PadicScalar::operator-() const {
  if (zero_) return *this;
  PadicScalar r = *this;
  r.unit_ = prime_power(p_, prec_) - unit_;
  // unit was prime to p, so no renormalization can trigger
  return r;
}

PadicScalar operator+(const PadicScalar& x, const PadicScalar& y) {
  assert(x.p_ == y.p_);
  long abs = std::min(x.abs_precision(), y.abs_precision());
  if (x.zero_ && y.zero_) return PadicScalar::zero(x.p_, abs);
  if (x.zero_ || y.zero_) {
    const PadicScalar& v = x.zero_ ? y : x;
    return v.truncated_abs(abs);
  }
  long v0 = std::min(x.val_, y.val_);
  if (abs <= v0) return PadicScalar::zero(x.p_, abs);
  BigInt m = big_pow(x.p_, static_cast<unsigned long>(abs - v0));
  BigInt s = x.unit_ * big_pow(x.p_, static_cast<unsigned long>(x.val_ - v0)) +
             y.unit_ * big_pow(x.p_, static_cast<unsigned long>(y.val_ - v0));
  s = mod_reduce(s, m);
  return PadicScalar::from_unit(std::move(s), v0, x.p_, static_cast<int>(abs - v0));
}

PadicScalar operator-(const PadicScalar& x, const PadicScalar& y) { return x + (-y); }

PadicScalar operator*(const PadicScalar& x, const PadicScalar& y) {
  assert(x.p_ == y.p_);
  if (x.zero_ && y.zero_) {
    long bound = (x.zero_prec_ >= kExactZeroPrec || y.zero_prec_ >= kExactZeroPrec)
                     ? kExactZeroPrec
                     : x.zero_prec_ + y.zero_prec_;
    return PadicScalar::zero(x.p_, bound);
  }
  if (x.zero_ || y.zero_) {
    const PadicScalar& z = x.zero_ ? x : y;
    const PadicScalar& v = x.zero_ ? y : x;
    long bound = z.zero_prec_ >= kExactZeroPrec ? kExactZeroPrec : z.zero_prec_ + v.val_;
    return PadicScalar::zero(x.p_, bound);
  }
  int prec = std::min(x.prec_, y.prec_);
  BigInt u = mod_reduce(x.unit_ * y.unit_, big_pow(x.p_, prec));
  return PadicScalar::from_unit(std::move(u), x.val_ + y.val_, x.p_, prec);
}

PadicScalar operator/(const PadicScalar& x, const PadicScalar& y) {
  assert(x.p_ == y.p_);
  if (y.zero_) throw DivisionByZeroToPrecision(y.zero_prec_);
  if (x.zero_) {
    long bound = x.zero_prec_ >= kExactZeroPrec ? kExactZeroPrec : x.zero_prec_ - y.val_;
    return PadicScalar::zero(x.p_, bound);
  }
  int prec = std::min(x.prec_, y.prec_);
  BigInt m = big_pow(x.p_, prec);
  BigInt u = mod_reduce(x.unit_ * invert_mod(mod_reduce(y.unit_, m), m), m);
  return PadicScalar::from_unit(std::move(u), x.val_ - y.val_, x.p_, prec);
}

BigInt PadicScalar::residue(int k) const {
  if (k < 0) throw PrecisionError("residue: negative digit count");
  if (abs_precision() < k)
    throw PrecisionError("residue: more digits requested than are known");
  if (zero_) return 0;
  if (val_ < 0) throw PrecisionError("residue: value has negative valuation");
  BigInt m = prime_power(p_, k);
  if (val_ >= k) return 0;
  return mod_reduce(unit_ * prime_power(p_, val_), m);
}

std::vector<unsigned long> PadicScalar::digit_list(int k) const {
  BigInt r = residue(k);
  std::vector<unsigned long> out(static_cast<std::size_t>(k));
  BigInt q;
  for (int i = 0; i < k; ++i) {
    out[i] = mpz_fdiv_q_ui(q.get_mpz_t(), r.get_mpz_t(), p_);
    r = q;
  }
  return out;
}

bool PadicScalar::agrees_with(const PadicScalar& other, int digits) const {
  assert(p_ == other.p_);
  if (abs_precision() < digits || other.abs_precision() < digits) return false;
  PadicScalar d = *this - other;
  if (d.is_zero()) return d.abs_precision() >= digits;
  return d.val_ >= digits;
}

PadicScalar PadicScalar::shifted(long e) const {
  PadicScalar r = *this;
  if (r.zero_) {
    if (r.zero_prec_ < kExactZeroPrec) r.zero_prec_ += e;
  } else {
    r.val_ += e;
  }
  return r;
}

PadicScalar PadicScalar::truncated_abs(long a) const {
  if (abs_precision() <= a) return *this;
  if (zero_) return zero(p_, a);
  if (a <= val_) return zero(p_, a);
  PadicScalar r = *this;
  r.prec_ = static_cast<int>(a - val_);
  r.unit_ = mod_reduce(r.unit_, prime_power(p_, r.prec_));
  r.normalize();
  return r;
}

std::string PadicScalar::to_string() const {
  std::ostringstream os;
  if (zero_) {
    os << "O(" << p_ << "^";
    if (zero_prec_ >= kExactZeroPrec)
      os << "inf";
    else
      os << zero_prec_;
    os << ")";
    return os.str();
  }
  os << unit_.get_str();
  if (val_ != 0) os << "*" << p_ << "^" << val_;
  os << " + O(" << p_ << "^" << (val_ + prec_) << ")";
  return os.str();
}

PadicScalar teichmuller(const PadicScalar& x) {
  if (x.is_zero() || x.valuation() != 0)
    throw DomainError("teichmuller: input must have valuation 0");
  unsigned long p = x.prime();
  int prec = x.precision();
  if (p == 2) return PadicScalar::one(p, prec);

  BigInt m = big_pow(p, static_cast<unsigned long>(prec));
  BigInt y = mod_reduce(x.unit(), m);
  for (int i = 0; i <= prec + 1; ++i) {
    BigInt next;
    mpz_powm_ui(next.get_mpz_t(), y.get_mpz_t(), p, m.get_mpz_t());
    if (next == y) break;
    y = next;
  }
  BigInt check;
  mpz_powm_ui(check.get_mpz_t(), y.get_mpz_t(), p, m.get_mpz_t());
  if (check != y) throw InvariantViolation("teichmuller iteration did not stabilize");
  return PadicScalar::from_unit(std::move(y), 0, p, prec);
}

PadicScalar padic_log(const PadicScalar& x) {
  unsigned long p = x.prime();
  if (x.is_zero()) throw DomainError("padic_log: argument is zero to precision");
  PadicScalar u = x - PadicScalar::one(p, x.precision());
  if (u.is_zero()) return PadicScalar::zero(p, u.abs_precision());
  if (x.valuation() != 0 || u.valuation() < 1)
    throw DomainError("padic_log requires x = 1 mod p");

  long w = u.valuation();
  long target = u.abs_precision();
  // smallest M with every dropped term (M+1)w - v_p(M+1) >= target
  unsigned long M = 1;
  auto log_p_floor = [&](unsigned long n) {
    unsigned long r = 0, q = n;
    while (q >= p) {
      q /= p;
      ++r;
    }
    return r;
  };
  while (static_cast<long>((M + 1) * w) - static_cast<long>(log_p_floor(M + 1)) <
         target)
    ++M;

  unsigned long guard = log_p_floor(M) + 1;
  BigInt big_m = big_pow(p, static_cast<unsigned long>(target) + guard);
  BigInt small_m = big_pow(p, static_cast<unsigned long>(target));
  BigInt u_int =
      mod_reduce(u.unit() * big_pow(p, static_cast<unsigned long>(w)), big_m);

  BigInt sum = 0, power = 1, bp(p);
  for (unsigned long k = 1; k <= M; ++k) {
    power = mod_reduce(power * u_int, big_m);
    // term = power / k, split as p-part and unit part of k
    BigInt kk(static_cast<unsigned long>(k)), k_unit;
    unsigned long kv = big_remove(kk, bp, k_unit);
    BigInt t = checked_divexact(power, big_pow(p, kv));
    t = mod_reduce(t * invert_mod(k_unit, small_m), small_m);
    if (k % 2 == 1)
      sum += t;
    else
      sum -= t;
    sum = mod_reduce(sum, small_m);
  }
  if (sum == 0) return PadicScalar::zero(p, target);
  BigInt rest;
  unsigned long v = big_remove(sum, bp, rest);
  return PadicScalar::from_unit(std::move(rest), static_cast<long>(v), p,
                                static_cast<int>(target - static_cast<long>(v)));
}

RenderedDigits digits_render(const PadicScalar& x, int n_digits) {
  RenderedDigits out;
  if (x.is_zero()) {
    if (x.abs_precision() < n_digits)
      throw PrecisionError("digits_render: more digits requested than are known");
    out.decimal = "0";
    out.digits.assign(static_cast<std::size_t>(n_digits), 0);
    return out;
  }
  out.decimal = x.residue(n_digits).get_str();
  out.digits = x.digit_list(n_digits);
  return out;
}

}  // namespace cycres
