#ifndef KIRWAN_SCALAR_HPP
#define KIRWAN_SCALAR_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>

namespace kirwan {

using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" into a canonical rational. Throws SchemaError.
Rational parse_rational(const std::string& text);
std::string rational_string(const Rational& q);

/// Writes n = m^2 * f with f squarefree (sign kept in f). Trial division up
/// to a fixed bound; a cofactor beyond the bound is tested for being a
/// perfect square only.
std::pair<mpz_class, mpz_class> squarefree_decomposition(const mpz_class& n);

bool is_rational_square(const Rational& q);

/// Element a + b*sqrt(d) of Q or of a quadratic extension Q(sqrt d), d
/// squarefree and != 1. Rational values carry d == 0.
///
/// Binary operations on two irrational operands require the same d and
/// throw FieldExtensionError otherwise.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : a_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(int value) : a_(value) {}   // NOLINT(google-explicit-constructor)
  Scalar(Rational value) : a_(std::move(value)) { a_.canonicalize(); }  // NOLINT
  Scalar(Rational a, Rational b, const mpz_class& d);

  static Scalar parse(const std::string& text) { return Scalar(parse_rational(text)); }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const mpz_class& d() const { return d_; }

  bool is_rational() const { return b_ == 0; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_one() const { return a_ == 1 && b_ == 0; }

  Scalar conjugate() const;
  /// Field norm a^2 - d b^2 (the square for rational values).
  Rational norm() const;
  Scalar inverse() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
  friend bool operator==(const Scalar& lhs, const Scalar& rhs);
  friend bool operator!=(const Scalar& lhs, const Scalar& rhs) { return !(lhs == rhs); }

  std::string to_string() const;

 private:
  static mpz_class common_field(const Scalar& x, const Scalar& y);

  Rational a_;
  Rational b_;
  mpz_class d_;
};

/// Total order used only for deterministic tie-breaks: by a, then b.
bool lex_less(const Scalar& x, const Scalar& y);

bool is_zero(const Scalar& x);
inline Scalar field_zero(const Scalar*) { return Scalar(0); }
inline Scalar field_one(const Scalar*) { return Scalar(1); }

/// Square root inside the field of x, if one exists.
std::optional<Scalar> sqrt_in_field(const Scalar& x);

/// Square root of x, adjoining sqrt(squarefree part) when x is a rational
/// non-square. Throws FieldExtensionError when x is irrational and not a
/// square in its own field (that would need a nested extension).
Scalar sqrt_adjoin(const Scalar& x);

std::ostream& operator<<(std::ostream& os, const Scalar& x);

}  // namespace kirwan

#endif
