#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace hopfkit {

class Scalar;

/// The ground field: either the rationals or a prime field F_p.
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field{}; }
  /// Throws ValidationError unless p is a prime below 2^62.
  static Field prime(std::uint64_t p);

  bool is_rational() const { return p_ == 0; }
  /// 0 for the rationals.
  std::uint64_t characteristic() const { return p_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long v) const;
  Scalar from_rational(const mpq_class& q) const;
  /// Accepts "n", "-n" and "a/b". Throws ValidationError on malformed text or b = 0.
  Scalar parse(std::string_view text) const;

  /// "Q" or "Fp:<p>".
  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  friend class Scalar;
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

/// An exact field element. Rationals are kept canonical by GMP; residues lie in [0, p).
class Scalar {
 public:
  /// Rational zero.
  Scalar() = default;

  Field field() const;
  bool is_zero() const { return p_ == 0 ? sgn(q_) == 0 : r_ == 0; }
  bool is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1; }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  /// this += a * b without allocating a temporary for the product of residues.
  void add_product(const Scalar& a, const Scalar& b);

  Scalar operator-() const;
  /// Throws std::domain_error on zero.
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Canonical text: "n" or "a/b" in lowest terms; residues print as their representative.
  std::string str() const;

 private:
  friend class Field;
  void check_same_field(const Scalar& o) const;

  mpq_class q_;
  std::uint64_t r_ = 0;
  std::uint64_t p_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace hopfkit
