#ifndef KIRWAN_PENCIL_HPP
#define KIRWAN_PENCIL_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "kirwan/linear.hpp"
#include "kirwan/ratfunc.hpp"

namespace kirwan {

/// 2x2 matrix of vectors in V with rows (x, x') and (y, y').
template <typename F>
struct PencilT {
  using Vec = Tri<F, Space::V>;
  Vec x, xp, y, yp;

  PencilT() = default;
  PencilT(Vec a, Vec ap, Vec b, Vec bp) : x(std::move(a)), xp(std::move(ap)), y(std::move(b)), yp(std::move(bp)) {}

  const Vec& at(int r, int c) const { return r == 0 ? (c == 0 ? x : xp) : (c == 0 ? y : yp); }
  Vec& at(int r, int c) { return r == 0 ? (c == 0 ? x : xp) : (c == 0 ? y : yp); }

  friend bool operator==(const PencilT& a, const PencilT& b) {
    return a.x == b.x && a.xp == b.xp && a.y == b.y && a.yp == b.yp;
  }
};

using PencilMatrix = PencilT<Scalar>;

/// Triple (xi, omega, eta) of bivectors; the first blow-up coordinates.
template <typename F>
using PhiT = std::array<Tri<F, Space::Dual>, 3>;
/// Triple (xi^omega, xi^eta, omega^eta) in V; the second blow-up coordinates.
template <typename F>
using PsiT = std::array<Tri<F, Space::V>, 3>;

using Phi = PhiT<Scalar>;
using Psi = PsiT<Scalar>;

template <typename F>
QuadForm<F> det_pencil(const PencilT<F>& a) {
  return sym_product(a.x, a.yp) - sym_product(a.xp, a.y);
}

template <typename F>
PhiT<F> pluecker_phi(const PencilT<F>& a) {
  return {wedge(a.x, a.y), wedge(a.x, a.yp) + wedge(a.xp, a.y), wedge(a.xp, a.yp)};
}

template <typename F>
PsiT<F> pairwise_wedges(const PhiT<F>& phi) {
  return {covector_wedge(phi[0], phi[1]), covector_wedge(phi[0], phi[2]), covector_wedge(phi[1], phi[2])};
}

/// disc = omega.omega - 4 xi.eta, a form on V (ambient OnV).
template <typename F>
QuadForm<F> disc_form(const PhiT<F>& phi) {
  return sym_product(phi[1], phi[1]) - F(4) * sym_product(phi[0], phi[2]);
}

/// The 2x4 matrix A ^ [[xi,omega,eta,0],[0,xi,omega,eta]] of scalars; zero on
/// valid first blow-up coordinates.
template <typename F>
std::array<std::array<F, 4>, 2> pluecker_relation(const PencilT<F>& a, const PhiT<F>& phi) {
  std::array<std::array<F, 4>, 2> out;
  for (int r = 0; r < 2; ++r) {
    const auto& u = a.at(r, 0);
    const auto& up = a.at(r, 1);
    out[r] = {pair(u, phi[0]), pair(u, phi[1]) + pair(up, phi[0]), pair(u, phi[2]) + pair(up, phi[1]),
              pair(up, phi[2])};
  }
  return out;
}

template <typename F, Space S>
bool is_zero(const std::array<Tri<F, S>, 3>& v) {
  return v[0].is_zero() && v[1].is_zero() && v[2].is_zero();
}

struct PlueckerPoint {
  QuadraticForm q;
  Phi phi;
};

/// The 2x6 matrix of the two rows in k^2 (x) V.
ScalarMatrix row_matrix(const PencilMatrix& a);
bool rows_independent(const PencilMatrix& a);
/// Equality as points of the Grassmannian (same row span).
bool same_span(const PencilMatrix& a, const PencilMatrix& b);

PlueckerPoint pluecker(const PencilMatrix& a);

/// 2x4 matrix of covectors; column j is (beta1_j, beta2_j).
template <typename F>
struct CovecMatrix {
  std::array<std::array<Tri<F, Space::Dual>, 4>, 2> entry;
  Tri<F, Space::Dual>& operator()(int r, int c) { return entry[r][c]; }
  const Tri<F, Space::Dual>& operator()(int r, int c) const { return entry[r][c]; }
};

using CovecMatrix2x4 = CovecMatrix<Scalar>;

/// Columns as vectors of the 6-space (beta1, beta2), one per row of the result.
template <typename F>
Matrix<F> column_span(const CovecMatrix<F>& b) {
  Matrix<F> m(4, 6);
  for (int c = 0; c < 4; ++c)
    for (std::size_t k = 0; k < 3; ++k) {
      m(c, k) = b(0, c)[k];
      m(c, 3 + k) = b(1, c)[k];
    }
  return m;
}

/// The 4 x 6 matrix of the composite k^2 (x) V -> k^4 applied to the rows of
/// the pencil must vanish: beta1(x) + beta2(x') for each row and column.
template <typename F>
Matrix<F> row_pairing(const PencilT<F>& a, const CovecMatrix<F>& b) {
  Matrix<F> m(2, 4);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 4; ++c) m(r, c) = pair(a.at(r, 0), b(0, c)) + pair(a.at(r, 1), b(1, c));
  return m;
}

/// Second map of the Beilinson resolution: columns span the annihilator of the
/// rows under beta1(x) + beta2(x'), in reduced echelon form.
template <typename F>
CovecMatrix<F> beilinson_B(const PencilT<F>& a) {
  Matrix<F> rows(2, 6);
  for (int r = 0; r < 2; ++r)
    for (std::size_t k = 0; k < 3; ++k) {
      rows(r, k) = a.at(r, 0)[k];
      rows(r, 3 + k) = a.at(r, 1)[k];
    }
  if (rows.rank() != 2) throw PreconditionError("pencil rows are linearly dependent");
  Matrix<F> kernel = rows.nullspace().transpose().rref();
  CovecMatrix<F> b;
  for (int c = 0; c < 4; ++c)
    for (std::size_t k = 0; k < 3; ++k) {
      b(0, c)[k] = kernel(c, k);
      b(1, c)[k] = kernel(c, 3 + k);
    }
  return b;
}

/// Two 2x4 covector matrices have the same column span.
template <typename F>
bool same_column_span(const CovecMatrix<F>& a, const CovecMatrix<F>& b) {
  Matrix<F> ma = column_span(a), mb = column_span(b);
  if (ma.rank() != 4 || mb.rank() != 4) return false;
  Matrix<F> both(8, 6);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 6; ++c) {
      both(r, c) = ma(r, c);
      both(r + 4, c) = mb(r, c);
    }
  return both.rank() == 4;
}

bool is_in_ZG(const PencilMatrix& a);

/// Projective roots (s:t) shared by a list of binary quadratics a s^2 + b st + c t^2,
/// normalized to (r:1) or (1:0), in deterministic order. A square root is adjoined
/// when a single quadratic has irrational roots. Throws if every quadratic vanishes.
std::vector<std::array<Scalar, 2>> common_binary_roots(const std::vector<std::array<Scalar, 3>>& quadratics);

/// Coefficients of the vector-valued quadratic a S^2 + b ST + c T^2 split per
/// coordinate.
template <Space S>
std::vector<std::array<Scalar, 3>> coordinate_quadratics(const Tri<Scalar, S>& a, const Tri<Scalar, S>& b,
                                                         const Tri<Scalar, S>& c) {
  std::vector<std::array<Scalar, 3>> out;
  for (std::size_t k = 0; k < 3; ++k) out.push_back({a[k], b[k], c[k]});
  return out;
}

struct SingularityReport {
  bool locally_free = false;
  /// Triangular form [[x,0],[z,y]] reached by row and column operations.
  VecV x, y, z;
  std::vector<VecV> singular_points;
  std::vector<VecV> s_equivalence_pair;
};

SingularityReport sheaf_singularities(const PencilMatrix& a);

}  // namespace kirwan

#endif
