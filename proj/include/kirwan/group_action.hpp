#ifndef KIRWAN_GROUP_ACTION_HPP
#define KIRWAN_GROUP_ACTION_HPP

#include <optional>
#include <string>
#include <vector>

#include "kirwan/pencil.hpp"

namespace kirwan {

/// 2x2 matrix [[a, b], [c, d]].
template <typename F>
struct Mat2 {
  F a{0}, b{0}, c{0}, d{0};
  F det() const { return a * d - b * c; }
  friend Mat2 operator*(const Mat2& g, const Mat2& h) {
    return {g.a * h.a + g.b * h.c, g.a * h.b + g.b * h.d, g.c * h.a + g.d * h.c, g.c * h.b + g.d * h.d};
  }
  friend bool operator==(const Mat2& g, const Mat2& h) { return g.a == h.a && g.b == h.b && g.c == h.c && g.d == h.d; }
};

/// Element of SL2 over the scalar field.
class GroupElement {
 public:
  GroupElement() : m_{Scalar(1), Scalar(0), Scalar(0), Scalar(1)} {}
  /// Throws PreconditionError unless ad - bc = 1.
  GroupElement(Scalar a, Scalar b, Scalar c, Scalar d);
  static GroupElement identity() { return GroupElement(); }

  const Mat2<Scalar>& matrix() const { return m_; }
  const Scalar& a() const { return m_.a; }
  const Scalar& b() const { return m_.b; }
  const Scalar& c() const { return m_.c; }
  const Scalar& d() const { return m_.d; }
  GroupElement inverse() const { return GroupElement(m_.d, -m_.b, -m_.c, m_.a); }

  friend GroupElement operator*(const GroupElement& g, const GroupElement& h);
  friend bool operator==(const GroupElement& g, const GroupElement& h) { return g.m_ == h.m_; }

 private:
  Mat2<Scalar> m_;
};

/// Matrix C with phi(Ag) = phi(A) C (phi as a row vector):
/// [[a^2, 2ab, b^2], [ac, ad + bc, bd], [c^2, 2cd, d^2]].
template <typename F>
Matrix<F> sym2(const Mat2<F>& g) {
  const F two(2);
  return Matrix<F>{{g.a * g.a, two * g.a * g.b, g.b * g.b},
                   {g.a * g.c, g.a * g.d + g.b * g.c, g.b * g.d},
                   {g.c * g.c, two * g.c * g.d, g.d * g.d}};
}
inline ScalarMatrix sym2(const GroupElement& g) { return sym2(g.matrix()); }

/// Matrix acting on the pairwise wedges:
/// [[a^2, ab, b^2], [2ac, ad + bc, 2bd], [c^2, cd, d^2]].
template <typename F>
Matrix<F> wedge_action_matrix(const Mat2<F>& g) {
  const F two(2);
  return Matrix<F>{{g.a * g.a, g.a * g.b, g.b * g.b},
                   {two * g.a * g.c, g.a * g.d + g.b * g.c, two * g.b * g.d},
                   {g.c * g.c, g.c * g.d, g.d * g.d}};
}

/// Row vector of triples times a 3x3 matrix.
template <typename F, Space S>
std::array<Tri<F, S>, 3> times(const std::array<Tri<F, S>, 3>& v, const Matrix<F>& m) {
  std::array<Tri<F, S>, 3> out;
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t i = 0; i < 3; ++i) out[j] = out[j] + m(i, j) * v[i];
  return out;
}

/// Right action A g on the column index.
template <typename F>
PencilT<F> act_pencil(const PencilT<F>& p, const Mat2<F>& g) {
  return PencilT<F>(g.a * p.x + g.c * p.xp, g.b * p.x + g.d * p.xp, g.a * p.y + g.c * p.yp, g.b * p.y + g.d * p.yp);
}
/// Left action g A on the row index.
template <typename F>
PencilT<F> act_pencil_left(const Mat2<F>& g, const PencilT<F>& p) {
  return PencilT<F>(g.a * p.x + g.b * p.y, g.a * p.xp + g.b * p.yp, g.c * p.x + g.d * p.y, g.c * p.xp + g.d * p.yp);
}
template <typename F>
PhiT<F> act_phi(const PhiT<F>& phi, const Mat2<F>& g) {
  return times(phi, sym2(g));
}
template <typename F>
PsiT<F> act_psi(const PsiT<F>& psi, const Mat2<F>& g) {
  return times(psi, wedge_action_matrix(g));
}

inline PencilMatrix act_pencil(const PencilMatrix& p, const GroupElement& g) { return act_pencil(p, g.matrix()); }
inline Phi act_phi(const Phi& phi, const GroupElement& g) { return act_phi(phi, g.matrix()); }
inline Psi act_psi(const Psi& psi, const GroupElement& g) { return act_psi(psi, g.matrix()); }

/// Projective equality of triples of triples (one common scalar).
template <Space S>
bool projectively_equal(const std::array<Tri<Scalar, S>, 3>& a, const std::array<Tri<Scalar, S>, 3>& b) {
  std::optional<Scalar> ratio;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t k = 0; k < 3; ++k) {
      const Scalar& x = a[i][k];
      const Scalar& y = b[i][k];
      if (x.is_zero() != y.is_zero()) return false;
      if (x.is_zero()) continue;
      Scalar r = y / x;
      if (ratio && *ratio != r) return false;
      ratio = r;
    }
  return true;
}

/// Scales so the first nonzero coordinate (row-major) is 1.
template <Space S>
std::array<Tri<Scalar, S>, 3> normalized(const std::array<Tri<Scalar, S>, 3>& v) {
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t k = 0; k < 3; ++k) {
      if (!v[i][k].is_zero()) {
        Scalar inv = v[i][k].inverse();
        return {inv * v[0], inv * v[1], inv * v[2]};
      }
    }
  return v;
}

enum class CanonicalKind { Null, Square, Product, Generic };
const char* canonical_kind_name(CanonicalKind k);

struct CanonicalClass {
  CanonicalKind kind = CanonicalKind::Generic;
  std::optional<GroupElement> witness;
  Phi reduced;
};

/// Reduction of phi to one of the normal forms [xi,0,0], [0,omega,eta] (or
/// [0,omega,0]), [xi,0,eta] by a group element; throws FieldExtensionError if
/// the roots need a nested extension.
CanonicalClass canonical_reduce(const Phi& phi);

enum class Stability { Stable, ProperlySemistable, Unstable };
const char* stability_name(Stability s);

/// Weights of diag(s, 1/s) on the nonzero coordinates of ([A], phi) in the
/// product of the two Pluecker spaces.
std::vector<int> weight_spectrum(const PencilMatrix& base, const Phi& phi);
/// Verdict of the diagonal torus: one-signed spectrum destabilizes, two signs
/// mean stable, otherwise semistable.
Stability torus_verdict(const std::vector<int>& spectrum);

}  // namespace kirwan

#endif
