#include "kirwan/conic_geometry.hpp"

namespace kirwan {

namespace {

/// Solves x ^ u = kappa for u in the span of the complement basis vectors.
std::array<Scalar, 2> wedge_quotient(const VecV& x, const CovecV& kappa, const std::array<std::size_t, 2>& basis) {
  ScalarMatrix sys(3, 3);
  for (std::size_t j = 0; j < 2; ++j) {
    CovecV col = wedge(x, VecV::basis(static_cast<int>(basis[j])));
    for (std::size_t k = 0; k < 3; ++k) sys(k, j) = col[k];
  }
  for (std::size_t k = 0; k < 3; ++k) sys(k, 2) = kappa[k];
  std::vector<std::size_t> pivots;
  ScalarMatrix red = sys.rref(&pivots);
  if (pivots.size() != 2 || pivots[1] != 1) throw PreconditionError("phi does not lie in x ^ V");
  return {red(0, 2), red(1, 2)};
}

}  // namespace

QuadraticForm jumping_conic(const PencilMatrix& a) {
  if (!rows_independent(a)) throw PreconditionError("pencil rows are linearly dependent");
  return det_pencil(a);
}

QuadraticForm dual_conic(const XTildePoint& p) {
  QuadraticForm disc = disc_form(p.phi);
  if (disc.is_zero()) throw PreconditionError("point is unstable: the discriminant form vanishes");
  return disc;
}

CompleteConic complete_conic(const XTildePoint& p) {
  if (stability_xtilde(p) == Stability::Unstable) throw PreconditionError("point is unstable");
  CompleteConic out;
  out.primal = det_pencil(p.base);
  ConicClass cls = classify_form(out.primal);
  if (cls.kind != ConicKind::DoubleLine) {
    out.dual = dual_conic(p);
    return out;
  }

  Enrichment e;
  const auto& f = cls.factors[0];
  e.line = VecV(f[0], f[1], f[2]);
  std::size_t pivot = 0;
  while (e.line[pivot].is_zero()) ++pivot;
  e.complement = pivot == 0 ? std::array<std::size_t, 2>{1, 2}
                            : pivot == 1 ? std::array<std::size_t, 2>{0, 2} : std::array<std::size_t, 2>{0, 1};
  auto u = wedge_quotient(e.line, p.phi[0], e.complement);
  auto w = wedge_quotient(e.line, p.phi[1], e.complement);
  auto v = wedge_quotient(e.line, p.phi[2], e.complement);
  // zeta = s f_a + t f_b with f_a(e_a) = 1, f_a(e_b) = 0 and zeta(line) = 0
  e.residual = {w[0] * w[0] - Scalar(4) * u[0] * v[0],
                Scalar(2) * w[0] * w[1] - Scalar(4) * (u[0] * v[1] + u[1] * v[0]),
                w[1] * w[1] - Scalar(4) * u[1] * v[1]};
  auto roots = common_binary_roots({e.residual});
  for (const auto& r : roots) {
    CovecV zeta;
    zeta[e.complement[0]] = r[0];
    zeta[e.complement[1]] = r[1];
    zeta[pivot] = -(r[0] * e.line[e.complement[0]] + r[1] * e.line[e.complement[1]]) / e.line[pivot];
    e.points.push_back(normalized(zeta));
  }
  if (e.points.size() == 1) e.points.push_back(e.points[0]);
  e.double_point = e.points[0] == e.points[1];
  out.enrichment = e;
  return out;
}

}  // namespace kirwan
