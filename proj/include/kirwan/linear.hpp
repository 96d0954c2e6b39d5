#ifndef KIRWAN_LINEAR_HPP
#define KIRWAN_LINEAR_HPP

#include <array>
#include <string>
#include <vector>

#include "kirwan/matrix.hpp"
#include "kirwan/scalar.hpp"

namespace kirwan {

enum class Space { V, Dual };

/// Coordinate triple in V (basis e0,e1,e2) or in V* (basis z0,z1,z2).
/// The field F is Scalar for points and UPoly for families in t.
template <typename F, Space S>
struct Tri {
  std::array<F, 3> c{F(0), F(0), F(0)};

  Tri() = default;
  Tri(F a, F b, F d) : c{std::move(a), std::move(b), std::move(d)} {}

  static Tri basis(int i) {
    Tri t;
    t.c[static_cast<std::size_t>(i)] = F(1);
    return t;
  }

  F& operator[](std::size_t i) { return c[i]; }
  const F& operator[](std::size_t i) const { return c[i]; }

  bool is_zero() const { return kirwan::is_zero(c[0]) && kirwan::is_zero(c[1]) && kirwan::is_zero(c[2]); }

  Tri operator-() const { return Tri(-c[0], -c[1], -c[2]); }
  friend Tri operator+(const Tri& a, const Tri& b) { return Tri(a[0] + b[0], a[1] + b[1], a[2] + b[2]); }
  friend Tri operator-(const Tri& a, const Tri& b) { return Tri(a[0] - b[0], a[1] - b[1], a[2] - b[2]); }
  friend Tri operator*(const F& s, const Tri& a) { return Tri(s * a[0], s * a[1], s * a[2]); }
  friend bool operator==(const Tri& a, const Tri& b) { return a.c == b.c; }
  friend bool operator!=(const Tri& a, const Tri& b) { return !(a == b); }
};

using VecV = Tri<Scalar, Space::V>;
using CovecV = Tri<Scalar, Space::Dual>;
/// Element of the second exterior power of V, stored through V* coordinates.
using Bivector = CovecV;

template <typename F, Space S>
Tri<F, S> cross(const Tri<F, S>& a, const Tri<F, S>& b) {
  return Tri<F, S>(a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]);
}

/// v ^ w in covector coordinates: (v ^ w)(u) = det[u|v|w].
template <typename F>
Tri<F, Space::Dual> wedge(const Tri<F, Space::V>& v, const Tri<F, Space::V>& w) {
  auto x = cross(v, w);
  return Tri<F, Space::Dual>(x[0], x[1], x[2]);
}

/// a ^ b for covectors: z1^z2 = e0, z2^z0 = e1, z0^z1 = e2.
template <typename F>
Tri<F, Space::V> covector_wedge(const Tri<F, Space::Dual>& a, const Tri<F, Space::Dual>& b) {
  auto x = cross(a, b);
  return Tri<F, Space::V>(x[0], x[1], x[2]);
}

template <typename F>
F pair(const Tri<F, Space::V>& v, const Tri<F, Space::Dual>& a) {
  return v[0] * a[0] + v[1] * a[1] + v[2] * a[2];
}
template <typename F>
F pair(const Tri<F, Space::Dual>& a, const Tri<F, Space::V>& v) {
  return pair(v, a);
}

template <typename F, Space S>
F det3(const Tri<F, S>& u, const Tri<F, S>& v, const Tri<F, S>& w) {
  auto x = cross(v, w);
  return u[0] * x[0] + u[1] * x[1] + u[2] * x[2];
}

/// Scales so the first nonzero coordinate is 1. Zero stays zero.
template <Space S>
Tri<Scalar, S> normalized(const Tri<Scalar, S>& t) {
  for (std::size_t i = 0; i < 3; ++i) {
    if (!t[i].is_zero()) return t[i].inverse() * t;
  }
  return t;
}

template <Space S>
bool proportional(const Tri<Scalar, S>& a, const Tri<Scalar, S>& b) {
  return cross(a, b).is_zero();
}

template <Space S>
std::string to_string(const Tri<Scalar, S>& t) {
  return "[" + t[0].to_string() + ", " + t[1].to_string() + ", " + t[2].to_string() + "]";
}

/// Which projective plane a quadratic form cuts a conic in.
/// OnDual: element of S^2 V, conic in P(V*), variables e0,e1,e2.
/// OnV: element of S^2 V*, conic in P(V), variables z0,z1,z2.
enum class Ambient { OnDual, OnV };

inline Ambient flipped(Ambient a) { return a == Ambient::OnDual ? Ambient::OnV : Ambient::OnDual; }
inline const char* ambient_name(Ambient a) { return a == Ambient::OnDual ? "OnDual" : "OnV"; }

template <typename F>
struct QuadForm {
  Matrix<F> m{3, 3};
  Ambient ambient = Ambient::OnDual;

  QuadForm() = default;
  QuadForm(Matrix<F> mat, Ambient amb) : m(std::move(mat)), ambient(amb) {}

  bool is_zero() const { return m.is_zero(); }
  const F& operator()(std::size_t i, std::size_t j) const { return m(i, j); }

  friend QuadForm operator+(const QuadForm& a, const QuadForm& b) {
    if (a.ambient != b.ambient) throw PreconditionError("adding quadratic forms on different spaces");
    return QuadForm(a.m + b.m, a.ambient);
  }
  friend QuadForm operator-(const QuadForm& a, const QuadForm& b) {
    if (a.ambient != b.ambient) throw PreconditionError("subtracting quadratic forms on different spaces");
    return QuadForm(a.m - b.m, a.ambient);
  }
  friend QuadForm operator*(const F& s, const QuadForm& a) { return QuadForm(s * a.m, a.ambient); }
  friend bool operator==(const QuadForm& a, const QuadForm& b) { return a.ambient == b.ambient && a.m == b.m; }
  friend bool operator!=(const QuadForm& a, const QuadForm& b) { return !(a == b); }
};

using QuadraticForm = QuadForm<Scalar>;

template <Space S>
constexpr Ambient ambient_of() {
  return S == Space::V ? Ambient::OnDual : Ambient::OnV;
}

/// Symmetric product a.b with matrix (ab^T + ba^T)/2.
template <typename F, Space S>
QuadForm<F> sym_product(const Tri<F, S>& a, const Tri<F, S>& b) {
  Matrix<F> m(3, 3);
  const F half = F(Rational(1, 2));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m(i, j) = half * (a[i] * b[j] + b[i] * a[j]);
  return QuadForm<F>(std::move(m), ambient_of<S>());
}

/// Value u^T M u. The point u lives in the dual of the form's variables.
template <typename F, Space S>
F evaluate(const QuadForm<F>& q, const Tri<F, S>& u) {
  if (ambient_of<S>() == q.ambient) throw PreconditionError("evaluating a form at a point of the wrong space");
  F acc(0);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) acc += u[i] * q.m(i, j) * u[j];
  return acc;
}

template <typename F>
F determinant(const QuadForm<F>& q) {
  const auto& m = q.m;
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

/// Classical adjugate; the result lives on the other space.
template <typename F>
QuadForm<F> adjugate(const QuadForm<F>& q) {
  const auto& m = q.m;
  Matrix<F> a(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      std::size_t r0 = (j + 1) % 3, r1 = (j + 2) % 3;
      std::size_t c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      // cyclic index choice keeps the cofactor sign positive
      a(i, j) = m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0);
    }
  return QuadForm<F>(std::move(a), flipped(q.ambient));
}

std::size_t rank(const QuadraticForm& q);

/// Renders a form as a polynomial in e or z variables.
std::string to_string(const QuadraticForm& q);

enum class ConicKind { Zero, DoubleLine, LinePair, Smooth };
const char* conic_kind_name(ConicKind k);

/// Rank classification of a conic. For rank 1 and 2 the form equals
/// scale * factors[0] * factors[1] (the two factors coincide for a double
/// line). Factors are coordinate triples in the variables of the form and are
/// normalized projectively.
struct ConicClass {
  ConicKind kind = ConicKind::Zero;
  Ambient ambient = Ambient::OnDual;
  std::vector<std::array<Scalar, 3>> factors;
  Scalar scale;
};

ConicClass classify_form(const QuadraticForm& q);

/// Form built from a product of two linear factors (the inverse of factoring).
QuadraticForm product_form(const std::array<Scalar, 3>& a, const std::array<Scalar, 3>& b, Ambient ambient);

}  // namespace kirwan

#endif
