#include "kirwan/ratfunc.hpp"

#include <sstream>

#include "kirwan/errors.hpp"

namespace kirwan {

UPoly::UPoly(const Rational& c) {
  if (c != 0) coeffs_.push_back(c);
}

UPoly::UPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UPoly UPoly::monomial(const Rational& c, int power) {
  std::vector<Rational> coeffs(static_cast<std::size_t>(power) + 1, Rational(0));
  coeffs.back() = c;
  return UPoly(std::move(coeffs));
}

void UPoly::trim() {
  for (auto& c : coeffs_) c.canonicalize();
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UPoly::coeff(int power) const {
  if (power < 0 || power > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(power)];
}

int UPoly::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return static_cast<int>(i);
  }
  return -1;
}

Rational UPoly::eval(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UPoly& UPoly::operator+=(const UPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& other) { return *this += -other; }

UPoly operator*(const UPoly& lhs, const UPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return UPoly();
  std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return UPoly(std::move(out));
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& divisor) const {
  if (divisor.is_zero()) throw PreconditionError("polynomial division by zero");
  UPoly quotient;
  UPoly rest = *this;
  const Rational lead = divisor.leading();
  while (!rest.is_zero() && rest.degree() >= divisor.degree()) {
    UPoly term = monomial(rest.leading() / lead, rest.degree() - divisor.degree());
    quotient += term;
    rest -= term * divisor;
  }
  return {quotient, rest};
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  UPoly r = *this;
  Rational lead = leading();
  for (auto& c : r.coeffs_) c /= lead;
  return r;
}

std::string UPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Rational mag = abs(c);
    os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i > 0) os << (i == 0 || mag != 1 ? "*" : "") << var;
    if (i > 1) os << "^" << i;
    first = false;
  }
  return os.str();
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

RatFunc::RatFunc(UPoly num, UPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw PreconditionError("rational function with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = UPoly(1);
    return;
  }
  UPoly g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_.divmod(g).first;
    den_ = den_.divmod(g).first;
  }
  Rational lead = den_.leading();
  if (lead != 1) {
    num_ = num_ * UPoly(Rational(1) / lead);
    den_ = den_ * UPoly(Rational(1) / lead);
  }
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw PreconditionError("division by zero in Q(t)");
  return RatFunc(den_, num_);
}

Rational RatFunc::eval(const Rational& t) const {
  Rational d = den_.eval(t);
  if (d == 0) throw PreconditionError("rational function has a pole at t = " + t.get_str());
  return num_.eval(t) / d;
}

RatFunc operator+(const RatFunc& x, const RatFunc& y) {
  if (x.den_ == y.den_) return RatFunc(x.num_ + y.num_, x.den_);
  return RatFunc(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
}

RatFunc operator-(const RatFunc& x, const RatFunc& y) { return x + (-y); }

RatFunc operator*(const RatFunc& x, const RatFunc& y) {
  if (x.is_zero() || y.is_zero()) return RatFunc();
  return RatFunc(x.num_ * y.num_, x.den_ * y.den_);
}

std::string RatFunc::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace kirwan
