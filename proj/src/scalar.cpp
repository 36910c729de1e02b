#include "cdf/scalar.hpp"

namespace cdf {

namespace {

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Extended gcd inverse of a mod m, or -1 when gcd(a, m) != 1.
long mod_inverse(long a, long m) {
  long t = 0, new_t = 1, r = m, new_r = ((a % m) + m) % m;
  while (new_r != 0) {
    long q = r / new_r;
    long tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) return -1;
  return ((t % m) + m) % m;
}

}  // namespace

Ring Ring::prime_field(long p) {
  if (!is_prime(p)) throw ContextError("prime_field: modulus " + std::to_string(p) + " is not prime");
  return Ring(RingKind::PrimeField, p);
}

Ring Ring::integers_mod(long m) {
  if (m < 2) throw ContextError("integers_mod: modulus must be >= 2");
  return Ring(RingKind::IntegersMod, m);
}

std::string Ring::to_string() const {
  switch (kind_) {
    case RingKind::Rationals:
      return "Q";
    case RingKind::PrimeField:
      return "F" + std::to_string(modulus_);
    case RingKind::IntegersMod:
      return "Z" + std::to_string(modulus_);
  }
  return "?";
}

Scalar::Scalar(const Ring& r, long v) : ring_(r), q_(v) {
  if (r.kind() != RingKind::Rationals) {
    long m = r.modulus();
    q_ = ((v % m) + m) % m;
  }
}

Scalar::Scalar(const Ring& r, const mpq_class& q) : ring_(r), q_(q) {
  q_.canonicalize();
  if (r.kind() != RingKind::Rationals) {
    // Interpret num/den in Z/m.
    long m = r.modulus();
    mpz_class num = q_.get_num() % m, den = q_.get_den() % m;
    long n = ((num.get_si() % m) + m) % m;
    long d = ((den.get_si() % m) + m) % m;
    long dinv = mod_inverse(d, m);
    if (dinv < 0) throw UnitError("denominator not invertible mod " + std::to_string(m));
    q_ = (n * dinv) % m;
  }
}

Scalar Scalar::fraction(const Ring& r, long num, long den) {
  if (den == 0) throw ContextError("fraction with zero denominator");
  return Scalar(r, mpq_class(num, den));
}

bool Scalar::is_zero() const { return q_ == 0; }

bool Scalar::is_one() const { return q_ == 1; }

void Scalar::check_same(const Scalar& o) const {
  if (!(ring_ == o.ring_)) throw ContextError("scalar ring mismatch: " + ring_.to_string() + " vs " + o.ring_.to_string());
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  Scalar r(*this);
  r.q_ += o.q_;
  if (ring_.kind() != RingKind::Rationals) r.q_ = mpq_class(mpz_class(r.q_.get_num() % ring_.modulus()));
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  Scalar r(*this);
  r.q_ *= o.q_;
  if (ring_.kind() != RingKind::Rationals) r.q_ = mpq_class(mpz_class(r.q_.get_num() % ring_.modulus()));
  return r;
}

Scalar Scalar::operator-() const {
  Scalar r(*this);
  r.q_ = -r.q_;
  if (ring_.kind() != RingKind::Rationals && r.q_ != 0) r.q_ += ring_.modulus();
  return r;
}

bool Scalar::operator==(const Scalar& o) const {
  if (!(ring_ == o.ring_)) return false;
  return q_ == o.q_;
}

bool Scalar::is_unit() const {
  if (is_zero()) return false;
  if (ring_.is_field()) return true;
  return mod_inverse(q_.get_num().get_si(), ring_.modulus()) >= 0;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw UnitError("inverse of zero");
  Scalar r(*this);
  if (ring_.kind() == RingKind::Rationals) {
    r.q_ = 1 / q_;
    return r;
  }
  long inv = mod_inverse(q_.get_num().get_si(), ring_.modulus());
  if (inv < 0) throw UnitError(to_string() + " is not a unit in " + ring_.to_string());
  r.q_ = inv;
  return r;
}

Scalar Scalar::reduce_mod_two() const {
  if (ring_.kind() == RingKind::Rationals) return Scalar(ring_, 0);
  long m = ring_.modulus();
  if (m % 2 == 1) return Scalar(ring_, 0);  // 2 is a unit
  return Scalar(ring_, q_.get_num().get_si() % 2);
}

const mpq_class& Scalar::rational() const {
  if (ring_.kind() != RingKind::Rationals) throw ContextError("rational() on modular scalar");
  return q_;
}

long Scalar::residue() const {
  if (ring_.kind() == RingKind::Rationals) throw ContextError("residue() on rational scalar");
  return q_.get_num().get_si();
}

std::string Scalar::to_string() const { return q_.get_str(); }

}  // namespace cdf
