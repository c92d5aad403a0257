#include "eqhom/ring.hpp"

#include <charconv>

namespace eqhom {

namespace {

bool is_prime(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

}  // namespace

Ring Ring::prime_field(unsigned long p) {
  if (!is_prime(p)) throw InputError("ring: F_p needs a prime p, got " + std::to_string(p));
  return Ring(Kind::PrimeField, p);
}

Ring Ring::parse(std::string_view text) {
  if (text == "Z") return integers();
  if (text == "Q") return rationals();
  if (text.starts_with("Fp:")) {
    auto digits = text.substr(3);
    unsigned long p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc() && ptr == digits.data() + digits.size()) return prime_field(p);
  }
  throw InputError("ring: expected Z, Q or Fp:<prime>, got '" + std::string(text) + "'");
}

std::string Ring::name() const {
  switch (kind_) {
    case Kind::Integers: return "Z";
    case Kind::Rationals: return "Q";
    case Kind::PrimeField: return "Fp:" + std::to_string(p_);
  }
  return "?";
}

Rational Ring::canonical(const Rational& x) const {
  switch (kind_) {
    case Kind::Integers:
      if (x.get_den() != 1) throw InputError("ring Z: non-integral value " + x.get_str());
      return x;
    case Kind::Rationals: {
      Rational y = x;
      y.canonicalize();
      return y;
    }
    case Kind::PrimeField: {
      Integer p = p_;
      Integer num = x.get_num() % p;
      if (num < 0) num += p;
      Integer den = x.get_den() % p;
      if (den == 0) throw InputError("ring " + name() + ": denominator divisible by p");
      if (den != 1) {
        Integer inv;
        mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
        num = (num * inv) % p;
      }
      return Rational(num);
    }
  }
  return x;
}

bool Ring::is_unit(const Rational& x) const {
  if (kind_ == Kind::Integers) return x == 1 || x == -1;
  return canonical(x) != 0;
}

Rational Ring::inverse(const Rational& x) const {
  if (!is_unit(x)) throw std::domain_error("ring " + name() + ": " + x.get_str() + " is not a unit");
  if (kind_ == Kind::PrimeField) {
    Integer p = p_, inv, v = canonical(x).get_num();
    mpz_invert(inv.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
    return Rational(inv);
  }
  Rational y = 1 / x;
  y.canonicalize();
  return y;
}

}  // namespace eqhom
