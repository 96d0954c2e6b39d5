#ifndef KIRWAN_RATFUNC_HPP
#define KIRWAN_RATFUNC_HPP

#include <string>
#include <utility>
#include <vector>

#include "kirwan/scalar.hpp"

namespace kirwan {

/// Dense univariate polynomial over Q in the family parameter t.
class UPoly {
 public:
  UPoly() = default;
  UPoly(int c) : UPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  UPoly(const Rational& c);             // NOLINT(google-explicit-constructor)
  explicit UPoly(std::vector<Rational> coeffs);

  static UPoly monomial(const Rational& c, int power);
  static UPoly t() { return monomial(1, 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int power) const;
  Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }
  /// Lowest power with a nonzero coefficient (t-adic valuation); -1 for zero.
  int valuation() const;

  Rational eval(const Rational& t) const;

  UPoly operator-() const;
  UPoly& operator+=(const UPoly& other);
  UPoly& operator-=(const UPoly& other);
  friend UPoly operator+(UPoly lhs, const UPoly& rhs) { return lhs += rhs; }
  friend UPoly operator-(UPoly lhs, const UPoly& rhs) { return lhs -= rhs; }
  friend UPoly operator*(const UPoly& lhs, const UPoly& rhs);
  friend bool operator==(const UPoly& lhs, const UPoly& rhs) { return lhs.coeffs_ == rhs.coeffs_; }
  friend bool operator!=(const UPoly& lhs, const UPoly& rhs) { return !(lhs == rhs); }

  /// Euclidean division; throws on a zero divisor.
  std::pair<UPoly, UPoly> divmod(const UPoly& divisor) const;
  UPoly monic() const;

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

UPoly gcd(UPoly a, UPoly b);

/// Element of Q(t), kept as num/den with gcd 1 and monic denominator.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(int c) : num_(c), den_(1) {}              // NOLINT(google-explicit-constructor)
  RatFunc(const Rational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(UPoly num) : num_(std::move(num)), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(UPoly num, UPoly den);

  const UPoly& num() const { return num_; }
  const UPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  RatFunc inverse() const;
  Rational eval(const Rational& t) const;

  RatFunc operator-() const { return RatFunc(-num_, den_); }
  friend RatFunc operator+(const RatFunc& x, const RatFunc& y);
  friend RatFunc operator-(const RatFunc& x, const RatFunc& y);
  friend RatFunc operator*(const RatFunc& x, const RatFunc& y);
  friend RatFunc operator/(const RatFunc& x, const RatFunc& y) { return x * y.inverse(); }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
  friend bool operator==(const RatFunc& x, const RatFunc& y) { return x.num_ == y.num_ && x.den_ == y.den_; }
  friend bool operator!=(const RatFunc& x, const RatFunc& y) { return !(x == y); }

  std::string to_string() const;

 private:
  void normalize();
  UPoly num_;
  UPoly den_;
};

inline bool is_zero(const UPoly& p) { return p.is_zero(); }
inline bool is_zero(const RatFunc& f) { return f.is_zero(); }

}  // namespace kirwan

#endif
