#ifndef KIRWAN_TEST_SUPPORT_HPP
#define KIRWAN_TEST_SUPPORT_HPP

#include <random>

#include "kirwan/group_action.hpp"
#include "kirwan/strata.hpp"
#include "kirwan/linear.hpp"

namespace testing_support {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20260418);
  return gen;
}

/// Small rational p/q with |p| <= bound, 1 <= q <= 3.
inline kirwan::Rational random_rational(int bound = 5) {
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, 3);
  kirwan::Rational r(num(rng()), den(rng()));
  r.canonicalize();
  return r;
}

inline kirwan::Scalar random_scalar(int bound = 5) { return kirwan::Scalar(random_rational(bound)); }

inline kirwan::VecV random_vec(int bound = 5) {
  return kirwan::VecV(random_scalar(bound), random_scalar(bound), random_scalar(bound));
}

inline kirwan::CovecV random_covec(int bound = 5) {
  return kirwan::CovecV(random_scalar(bound), random_scalar(bound), random_scalar(bound));
}

inline kirwan::PencilMatrix random_pencil(int bound = 5) {
  while (true) {
    kirwan::PencilMatrix a(random_vec(bound), random_vec(bound), random_vec(bound), random_vec(bound));
    if (kirwan::rows_independent(a)) return a;
  }
}

inline kirwan::GroupElement random_group_element(int bound = 4) {
  while (true) {
    kirwan::Scalar a = random_scalar(bound), b = random_scalar(bound), c = random_scalar(bound);
    if (a.is_zero()) continue;
    return kirwan::GroupElement(a, b, c, (kirwan::Scalar(1) + b * c) / a);
  }
}

/// X-tilde points drawn from every stratum shape: generic, reducible det,
/// degenerate det, and exceptional points with each discriminant type,
/// moved by a random group element.
inline kirwan::XTildePoint random_xtilde_point(int shape) {
  using namespace kirwan;
  const VecV zero;
  while (true) {
    VecV x = random_vec(), y = random_vec(), z = random_vec(), u = random_vec(), w = random_vec();
    PencilMatrix base;
    Phi phi;
    switch (shape % 9) {
      case 0:
        base = random_pencil();
        break;
      case 1:
        base = PencilMatrix(x, zero, zero, y);
        break;
      case 2:
        base = PencilMatrix(x, zero, z, y);
        break;
      case 3:
        base = PencilMatrix(x, zero, y, zero);
        break;
      case 4:
        base = PencilMatrix(x, zero, zero, x);
        phi = {wedge(x, u), wedge(x, w), wedge(x, z)};
        break;
      case 5:
        base = PencilMatrix(x, zero, zero, x);
        phi = {wedge(x, u), CovecV(), wedge(x, w)};
        break;
      case 6:
        base = PencilMatrix(x, zero, zero, x);
        phi = {CovecV(), wedge(x, u), wedge(x, w)};
        break;
      case 7:
        base = PencilMatrix(x, zero, zero, x);
        phi = {wedge(x, u), CovecV(), CovecV()};
        break;
      default:
        base = PencilMatrix(x, zero, zero, x);
        phi = {CovecV(), wedge(x, u), CovecV()};
        break;
    }
    if (!rows_independent(base)) continue;
    if (is_zero(phi)) phi = pluecker_phi(base);
    if (is_zero(phi)) continue;
    XTildePoint p = make_xtilde_point(base, phi);
    return act(p, random_group_element());
  }
}

/// A valid second blow-up point over p; over the closure of GZ_R the
/// exceptional direction psi is chosen at random among the admissible ones.
inline kirwan::YPoint random_y_point(const kirwan::XTildePoint& p) {
  using namespace kirwan;
  if (!is_zero(pairwise_wedges(p.phi))) return lift_to_Y(p);
  std::size_t i = 0;
  while (p.phi[i].is_zero()) ++i;
  const CovecV& kappa = p.phi[i];
  std::size_t k = 0;
  while (kappa[k].is_zero()) ++k;
  Scalar a = p.phi[0][k] / kappa[k], b = p.phi[1][k] / kappa[k], c = p.phi[2][k] / kappa[k];
  ScalarMatrix row(1, 3);
  for (std::size_t j = 0; j < 3; ++j) row(0, j) = kappa[j];
  ScalarMatrix ker = row.nullspace();
  while (true) {
    // psi_j = sum of kernel vectors with coefficients m_j, subject to
    // c m_1 - b m_2 + a m_3 = 0
    std::array<std::array<Scalar, 2>, 3> m;
    for (auto& mj : m) mj = {random_scalar(), random_scalar()};
    ScalarMatrix cond{{c, -b, a}};
    ScalarMatrix sol = cond.nullspace();
    Psi psi;
    for (std::size_t j = 0; j < 3; ++j) {
      Scalar s0(0), s1(0);
      for (std::size_t col = 0; col < sol.cols(); ++col) {
        s0 += sol(j, col) * m[col][0];
        s1 += sol(j, col) * m[col][1];
      }
      for (std::size_t r = 0; r < 3; ++r) psi[j][r] = s0 * ker(r, 0) + s1 * ker(r, 1);
    }
    if (is_zero(psi)) continue;
    return make_y_point(p, psi);
  }
}

}  // namespace testing_support

#endif
