#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace dchase {

// An element of F_p (stored as a reduced int64) or of Q (normalized mpq).
// Scalars carry no modulus; all arithmetic goes through the owning Field.
class Scalar {
 public:
  Scalar() : value_(std::int64_t{0}) {}
  explicit Scalar(std::int64_t residue) : value_(residue) {}
  explicit Scalar(mpq_class q) : value_(std::move(q)) {}

  bool is_rational() const { return std::holds_alternative<mpq_class>(value_); }
  std::int64_t residue() const { return std::get<std::int64_t>(value_); }
  const mpq_class& rational() const { return std::get<mpq_class>(value_); }

  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  std::variant<std::int64_t, mpq_class> value_;
};

// Coefficient field: F_p for a prime p < 2^31, or the rationals.
class Field {
 public:
  // Throws Error(parse) when p is not a prime in [2, 2^31).
  static Field prime(std::int64_t p);
  static Field rationals();

  bool is_prime_field() const { return modulus_ != 0; }
  bool is_rationals() const { return modulus_ == 0; }
  // 0 for Q.
  std::int64_t characteristic() const { return modulus_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t v) const;
  // Q only: num/den with den != 0.
  Scalar from_fraction(const mpz_class& num, const mpz_class& den) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  // Throws std::domain_error on zero.
  Scalar inv(const Scalar& a) const;
  bool is_zero(const Scalar& a) const;
  bool is_one(const Scalar& a) const;

  // Integers for F_p, "num/den" (or "num" when den == 1) for Q.
  std::string format(const Scalar& a) const;
  // Human name: "F_5" or "Q".
  std::string name() const;

  friend bool operator==(const Field& a, const Field& b) { return a.modulus_ == b.modulus_; }

 private:
  explicit Field(std::int64_t modulus) : modulus_(modulus) {}
  std::int64_t modulus_;
};

bool is_prime(std::int64_t n);

}  // namespace dchase
