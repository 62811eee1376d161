#include "dchase/field.hpp"

#include <stdexcept>

#include "dchase/error.hpp"

namespace dchase {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ambient_mismatch: return "ambient-mismatch";
    case ErrorKind::dimension_mismatch: return "dimension-mismatch";
    case ErrorKind::not_induced: return "not-induced";
    case ErrorKind::not_complex: return "not-complex";
    case ErrorKind::hypothesis_failure: return "hypothesis-failure";
    case ErrorKind::region_missing: return "region-missing";
    case ErrorKind::shape: return "shape";
    case ErrorKind::parse: return "parse";
    case ErrorKind::theorem_violation: return "theorem-violation";
  }
  return "unknown";
}

bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::int64_t p) {
  if (p >= (std::int64_t{1} << 31) || !is_prime(p))
    throw Error(ErrorKind::parse, "field modulus " + std::to_string(p) + " is not a prime below 2^31");
  return Field(p);
}

Field Field::rationals() { return Field(0); }

Scalar Field::zero() const { return is_prime_field() ? Scalar(std::int64_t{0}) : Scalar(mpq_class(0)); }

Scalar Field::one() const { return is_prime_field() ? Scalar(std::int64_t{1}) : Scalar(mpq_class(1)); }

Scalar Field::from_int(std::int64_t v) const {
  if (is_prime_field()) {
    std::int64_t r = v % modulus_;
    if (r < 0) r += modulus_;
    return Scalar(r);
  }
  return Scalar(mpq_class(mpz_class(std::to_string(v))));
}

Scalar Field::from_fraction(const mpz_class& num, const mpz_class& den) const {
  if (den == 0) throw Error(ErrorKind::parse, "zero denominator");
  if (is_prime_field()) {
    mpz_class m(std::to_string(modulus_));
    mpz_class n = num % m, d = den % m;
    if (n < 0) n += m;
    if (d < 0) d += m;
    if (d == 0) throw Error(ErrorKind::parse, "denominator vanishes mod " + std::to_string(modulus_));
    Scalar sn(static_cast<std::int64_t>(n.get_si()));
    Scalar sd(static_cast<std::int64_t>(d.get_si()));
    return mul(sn, inv(sd));
  }
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(std::move(q));
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (is_prime_field()) {
    std::int64_t s = a.residue() + b.residue();
    return Scalar(s >= modulus_ ? s - modulus_ : s);
  }
  return Scalar(mpq_class(a.rational() + b.rational()));
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (is_prime_field()) {
    std::int64_t s = a.residue() - b.residue();
    return Scalar(s < 0 ? s + modulus_ : s);
  }
  return Scalar(mpq_class(a.rational() - b.rational()));
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (is_prime_field()) return Scalar((a.residue() * b.residue()) % modulus_);
  return Scalar(mpq_class(a.rational() * b.rational()));
}

Scalar Field::neg(const Scalar& a) const {
  if (is_prime_field()) return Scalar(a.residue() == 0 ? 0 : modulus_ - a.residue());
  return Scalar(mpq_class(-a.rational()));
}

Scalar Field::inv(const Scalar& a) const {
  if (is_zero(a)) throw std::domain_error("inverse of zero");
  if (is_prime_field()) {
    // extended Euclid on (a, p)
    std::int64_t t = 0, new_t = 1, r = modulus_, new_r = a.residue();
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      t = t - q * new_t;
      std::swap(t, new_t);
      r = r - q * new_r;
      std::swap(r, new_r);
    }
    return Scalar(t < 0 ? t + modulus_ : t);
  }
  return Scalar(mpq_class(1 / a.rational()));
}

bool Field::is_zero(const Scalar& a) const {
  return is_prime_field() ? a.residue() == 0 : sgn(a.rational()) == 0;
}

bool Field::is_one(const Scalar& a) const {
  return is_prime_field() ? a.residue() == 1 : a.rational() == 1;
}

std::string Field::format(const Scalar& a) const {
  if (is_prime_field()) return std::to_string(a.residue());
  return a.rational().get_str();
}

std::string Field::name() const { return is_prime_field() ? "F_" + std::to_string(modulus_) : "Q"; }

}  // namespace dchase
