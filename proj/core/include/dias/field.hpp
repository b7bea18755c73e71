#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace dias {

/// The base field: either the rationals or GF(p) for a prime p < 2^32.
class FieldSpec {
 public:
  static FieldSpec rational() { return FieldSpec{}; }
  /// Throws InvalidField unless p is a prime below 2^32.
  static FieldSpec prime(std::uint64_t p);

  bool is_rational() const { return p_ == 0; }
  bool is_prime() const { return p_ != 0; }
  /// 0 for the rationals.
  std::uint64_t modulus() const { return p_; }

  /// "Q" or "GF(p)".
  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  std::uint64_t p_ = 0;
};

bool is_prime(std::uint64_t n);

/// An exact field element. Rationals are kept as reduced fractions with a
/// positive denominator; residues are kept in [0, p).
class Scalar {
 public:
  /// Zero of the rationals.
  Scalar() = default;

  static Scalar zero(const FieldSpec& f) { return Scalar(f); }
  static Scalar one(const FieldSpec& f) { return from_int(f, 1); }
  static Scalar from_int(const FieldSpec& f, long value);
  static Scalar from_rational(const FieldSpec& f, const mpq_class& q);

  /// Accepts "-3", "3/2", "0.125" and "-1.5e0"-free decimals. Over GF(p) a
  /// fraction a/b means a * b^{-1}. Throws ArithmeticError on bad input or
  /// a denominator that vanishes in the field.
  static Scalar parse(const FieldSpec& f, std::string_view text);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Canonical text: "a", "a/b" or the residue in [0, p).
  std::string to_string() const;

  /// Numerator/denominator view; for GF(p) the residue over 1.
  const mpq_class& rational_value() const { return q_; }
  std::uint64_t residue() const { return r_; }

  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  /// this -= a * b, the inner step of every elimination.
  void sub_mul(const Scalar& a, const Scalar& b);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  explicit Scalar(const FieldSpec& f) : field_(f) {}
  void check_same(const Scalar& o) const;

  FieldSpec field_;
  mpq_class q_;          // rational fields
  std::uint64_t r_ = 0;  // prime fields
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);
std::ostream& operator<<(std::ostream& os, const FieldSpec& f);

}  // namespace dias
