#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "cdf/error.hpp"

namespace cdf {

enum class RingKind : uint8_t { Rationals, PrimeField, IntegersMod };

/// A base coefficient ring: the rationals, a prime field F_p, or Z/m.
/// Cheap value type; equality is structural.
class Ring {
 public:
  static Ring rationals() { return Ring(RingKind::Rationals, 0); }
  static Ring prime_field(long p);
  static Ring integers_mod(long m);

  RingKind kind() const { return kind_; }
  long modulus() const { return modulus_; }
  /// Characteristic: 0, p, or m.
  long characteristic() const { return modulus_; }
  bool is_field() const { return kind_ != RingKind::IntegersMod; }

  bool operator==(const Ring& o) const = default;

  std::string to_string() const;

 private:
  Ring(RingKind k, long m) : kind_(k), modulus_(m) {}
  RingKind kind_;
  long modulus_;
};

/// An exact element of a base ring.  Rationals are GMP-backed; modular
/// values are kept reduced to [0, m).
class Scalar {
 public:
  Scalar() : ring_(Ring::rationals()), q_(0) {}
  Scalar(const Ring& r, long v);
  Scalar(const Ring& r, const mpq_class& q);
  static Scalar zero(const Ring& r) { return Scalar(r, 0); }
  static Scalar one(const Ring& r) { return Scalar(r, 1); }
  /// num/den, den must be invertible in modular rings.
  static Scalar fraction(const Ring& r, long num, long den);

  const Ring& ring() const { return ring_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator-() const;
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Multiplicative inverse; raises UnitError when not a unit.
  Scalar inverse() const;
  bool is_unit() const;

  /// Canonical representative modulo 2: used for coefficients of basis keys
  /// that carry the relation 2*key = 0.  Over rings where 2 is a unit this
  /// is zero; in characteristic 2 it is the identity; over Z/m with m even
  /// it reduces the residue to its parity.
  Scalar reduce_mod_two() const;

  /// Exact rational value (rationals only).
  const mpq_class& rational() const;
  /// Reduced residue (modular rings only).
  long residue() const;

  std::string to_string() const;

 private:
  void check_same(const Scalar& o) const;
  Ring ring_;
  mpq_class q_;  // rationals: the value; modular: reduced residue as integer
};

}  // namespace cdf
