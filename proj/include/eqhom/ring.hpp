#pragma once

#include <gmpxx.h>

#include "eqhom/errors.hpp"

#include <string>
#include <string_view>

namespace eqhom {

using Integer = mpz_class;
using Rational = mpq_class;

/// Coefficient ring: the integers, the rationals, or a prime field F_p.
///
/// Every scalar is carried as a Rational. Over Z it must be integral; over
/// F_p it is kept as a representative in [0, p). Arithmetic helpers return
/// canonical values so equality of canonical scalars is ring equality.
class Ring {
 public:
  enum class Kind { Integers, Rationals, PrimeField };

  static Ring integers() { return Ring(Kind::Integers, 0); }
  static Ring rationals() { return Ring(Kind::Rationals, 0); }
  static Ring prime_field(unsigned long p);
  /// Parses "Z", "Q" or "Fp:<p>".
  static Ring parse(std::string_view text);

  Kind kind() const { return kind_; }
  unsigned long characteristic() const { return p_; }
  bool is_field() const { return kind_ != Kind::Integers; }
  std::string name() const;

  Rational canonical(const Rational& x) const;
  Rational add(const Rational& a, const Rational& b) const { return canonical(a + b); }
  Rational sub(const Rational& a, const Rational& b) const { return canonical(a - b); }
  Rational mul(const Rational& a, const Rational& b) const { return canonical(a * b); }
  bool is_unit(const Rational& x) const;
  /// Multiplicative inverse; throws if x is not a unit.
  Rational inverse(const Rational& x) const;

  bool operator==(const Ring& other) const = default;

 private:
  Ring(Kind kind, unsigned long p) : kind_(kind), p_(p) {}
  Kind kind_;
  unsigned long p_;
};

}  // namespace eqhom
