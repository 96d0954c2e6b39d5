#include "kirwan/scalar.hpp"

#include <ostream>
#include <sstream>

#include "kirwan/errors.hpp"

namespace kirwan {

namespace {

constexpr unsigned long kTrialBound = 100000;

bool is_square(const mpz_class& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

mpz_class isqrt(const mpz_class& n) {
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw SchemaError("empty rational");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  bool seen_slash = false;
  bool digit_before = false;
  bool digit_after = false;
  for (std::size_t i = start; i < text.size(); ++i) {
    char c = text[i];
    if (c == '/') {
      if (seen_slash) throw SchemaError("bad rational: " + text);
      seen_slash = true;
    } else if (c >= '0' && c <= '9') {
      (seen_slash ? digit_after : digit_before) = true;
    } else {
      throw SchemaError("bad rational: " + text);
    }
  }
  if (!digit_before || (seen_slash && !digit_after)) throw SchemaError("bad rational: " + text);
  std::string body = text[0] == '+' ? text.substr(1) : text;
  Rational q;
  q.set_str(body, 10);
  if (q.get_den() == 0) throw SchemaError("zero denominator: " + text);
  q.canonicalize();
  return q;
}

std::string rational_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

std::pair<mpz_class, mpz_class> squarefree_decomposition(const mpz_class& n) {
  if (n == 0) return {0, 0};
  mpz_class rest = abs(n);
  mpz_class square_root = 1;
  mpz_class free = n < 0 ? -1 : 1;
  for (unsigned long p = 2; p <= kTrialBound && p * p <= rest; ++p) {
    mpz_class pp = p;
    int exponent = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
      rest /= pp;
      ++exponent;
    }
    for (int i = 0; i + 1 < exponent; i += 2) square_root *= pp;
    if (exponent % 2 == 1) free *= pp;
  }
  if (is_square(rest)) {
    square_root *= isqrt(rest);
  } else {
    free *= rest;
  }
  return {square_root, free};
}

bool is_rational_square(const Rational& q) {
  return q >= 0 && is_square(q.get_num()) && is_square(q.get_den());
}

Scalar::Scalar(Rational a, Rational b, const mpz_class& d) : a_(std::move(a)), b_(std::move(b)) {
  a_.canonicalize();
  b_.canonicalize();
  if (b_ == 0) return;
  if (d == 0) throw PreconditionError("radicand 0 with nonzero irrational part");
  auto [root, free] = squarefree_decomposition(d);
  if (free == 1) {
    a_ += b_ * Rational(root);
    b_ = 0;
    return;
  }
  b_ *= Rational(root);
  d_ = free;
}

mpz_class Scalar::common_field(const Scalar& x, const Scalar& y) {
  if (x.is_rational()) return y.d_;
  if (y.is_rational()) return x.d_;
  if (x.d_ != y.d_) {
    throw FieldExtensionError("incompatible quadratic extensions sqrt(" + x.d_.get_str() + ") and sqrt(" +
                              y.d_.get_str() + ")");
  }
  return x.d_;
}

Scalar Scalar::conjugate() const {
  Scalar r = *this;
  r.b_ = -r.b_;
  return r;
}

Rational Scalar::norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }

Scalar Scalar::inverse() const {
  if (is_zero()) throw PreconditionError("division by zero");
  Rational n = norm();
  Scalar r;
  r.a_ = a_ / n;
  r.b_ = -b_ / n;
  r.d_ = r.b_ == 0 ? mpz_class(0) : d_;
  return r;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  mpz_class d = common_field(*this, other);
  a_ += other.a_;
  b_ += other.b_;
  d_ = b_ == 0 ? mpz_class(0) : d;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  mpz_class d = common_field(*this, other);
  a_ -= other.a_;
  b_ -= other.b_;
  d_ = b_ == 0 ? mpz_class(0) : d;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  mpz_class d = common_field(*this, other);
  Rational a = a_ * other.a_ + b_ * other.b_ * Rational(d);
  Rational b = a_ * other.b_ + b_ * other.a_;
  a_ = a;
  b_ = b;
  d_ = b_ == 0 ? mpz_class(0) : d;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) { return *this *= other.inverse(); }

bool operator==(const Scalar& lhs, const Scalar& rhs) {
  if (lhs.a_ != rhs.a_ || lhs.b_ != rhs.b_) return false;
  return lhs.b_ == 0 || lhs.d_ == rhs.d_;
}

std::string Scalar::to_string() const {
  if (is_rational()) return rational_string(a_);
  std::ostringstream os;
  if (a_ != 0) os << rational_string(a_) << (b_ > 0 ? "+" : "");
  os << rational_string(b_) << "*sqrt(" << d_.get_str() << ")";
  return os.str();
}

bool lex_less(const Scalar& x, const Scalar& y) {
  if (x.a() != y.a()) return x.a() < y.a();
  if (x.b() != y.b()) return x.b() < y.b();
  return x.d() < y.d();
}

bool is_zero(const Scalar& x) { return x.is_zero(); }

std::optional<Scalar> sqrt_in_field(const Scalar& x) {
  if (x.is_zero()) return Scalar(0);
  if (x.is_rational()) {
    if (is_rational_square(x.a())) {
      mpz_class num, den;
      mpz_sqrt(num.get_mpz_t(), x.a().get_num_mpz_t());
      mpz_sqrt(den.get_mpz_t(), x.a().get_den_mpz_t());
      return Scalar(Rational(num, den));
    }
    return std::nullopt;
  }
  // (p + q sqrt d)^2 = x needs the norm to be a rational square n and
  // p^2 = (a +- n) / 2.
  Rational n2 = x.norm();
  if (!is_rational_square(n2)) return std::nullopt;
  Rational n = sqrt_in_field(Scalar(n2))->a();
  for (const Rational& candidate : {Rational((x.a() + n) / 2), Rational((x.a() - n) / 2)}) {
    if (candidate == 0 || !is_rational_square(candidate)) continue;
    Rational p = sqrt_in_field(Scalar(candidate))->a();
    Rational q = x.b() / (2 * p);
    Scalar root(p, q, x.d());
    if (root * root == x) return root;
  }
  // p == 0: x = q^2 d is rational, handled above.
  return std::nullopt;
}

Scalar sqrt_adjoin(const Scalar& x) {
  if (auto root = sqrt_in_field(x)) return *root;
  if (!x.is_rational()) {
    throw FieldExtensionError("square root of " + x.to_string() + " needs a nested quadratic extension");
  }
  // x = num/den = num*den / den^2
  const Rational& q = x.a();
  mpz_class product = q.get_num() * q.get_den();
  return Scalar(Rational(0), Rational(1, q.get_den()), product);
}

std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << x.to_string(); }

}  // namespace kirwan
