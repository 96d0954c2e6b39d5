#include "kirwan/strata.hpp"

namespace kirwan {

namespace {

bool columns_dependent(const VecV& a, const VecV& b) { return cross(a, b).is_zero(); }

bool semistable(const XTildePoint& p) {
  return !det_pencil(p.base).is_zero() && !disc_form(p.phi).is_zero();
}

}  // namespace

XTildePoint make_xtilde_point(const PencilMatrix& base, const Phi& phi) {
  if (!rows_independent(base)) throw PreconditionError("pencil rows are linearly dependent");
  if (is_zero(phi)) throw PreconditionError("first blow-up coordinates must not all vanish");
  Phi base_phi = pluecker_phi(base);
  if (!is_zero(base_phi) && !projectively_equal(base_phi, phi)) {
    throw PreconditionError("phi is not proportional to the wedges of the base pencil");
  }
  for (const auto& row : pluecker_relation(base, phi))
    for (const auto& v : row) {
      if (!v.is_zero()) throw PreconditionError("phi violates the Pluecker relation with the base pencil");
    }
  return XTildePoint{base, normalized(phi)};
}

YPoint make_y_point(const XTildePoint& p, const Psi& psi) {
  if (is_zero(psi)) throw PreconditionError("second blow-up coordinates must not all vanish");
  Psi w = pairwise_wedges(p.phi);
  if (!is_zero(w)) {
    if (!projectively_equal(w, psi)) throw PreconditionError("psi is not proportional to the pairwise wedges of phi");
  } else {
    // phi = (a, b, c) kappa: psi must lie in kappa's kernel and satisfy
    // c psi1 - b psi2 + a psi3 = 0
    std::size_t i = 0;
    while (p.phi[i].is_zero()) ++i;
    const CovecV& kappa = p.phi[i];
    std::size_t k = 0;
    while (kappa[k].is_zero()) ++k;
    Scalar a = p.phi[0][k] / kappa[k], b = p.phi[1][k] / kappa[k], c = p.phi[2][k] / kappa[k];
    for (const auto& v : psi) {
      if (!pair(v, kappa).is_zero()) throw PreconditionError("psi does not lie in the kernel of phi");
    }
    if (!(c * psi[0] - b * psi[1] + a * psi[2]).is_zero()) {
      throw PreconditionError("psi is not a limit of pairwise wedges over phi");
    }
  }
  return YPoint{p, normalized(psi)};
}

XTildePoint lift_to_xtilde(const PencilMatrix& a) {
  if (is_in_ZG(a)) throw PreconditionError("pencil lies in Z_G; lift a family through it instead");
  return make_xtilde_point(a, pluecker_phi(a));
}

StratumFlags strata(const XTildePoint& p) {
  StratumFlags f;
  QuadraticForm det = det_pencil(p.base);
  QuadraticForm disc = disc_form(p.phi);
  f.det_class = classify_form(det);
  f.disc_class = classify_form(disc);
  f.in_EG = is_zero(pluecker_phi(p.base));
  f.in_GZR_closure = is_zero(pairwise_wedges(p.phi));
  const bool ss = !det.is_zero() && !disc.is_zero();
  f.in_GZR = f.in_GZR_closure && ss;
  const PencilMatrix& a = p.base;
  const bool diagonal = columns_dependent(a.x, a.y) && columns_dependent(a.xp, a.yp);
  f.in_ZR = diagonal && p.phi[0].is_zero() && p.phi[2].is_zero() && f.in_GZR;
  Stability s = stability_xtilde(p);
  if (f.in_EG) {
    f.in_H0_tilde = s == Stability::Unstable;
    f.in_H1_tilde = s != Stability::Stable;
  } else {
    f.in_H0_tilde = det.is_zero();
    f.in_H1_tilde = f.det_class.kind != ConicKind::Smooth;
  }
  return f;
}

Stability stability_grassmannian(const PencilMatrix& a) {
  QuadraticForm det = det_pencil(a);
  if (det.is_zero()) return Stability::Unstable;
  return rank(det) == 3 ? Stability::Stable : Stability::ProperlySemistable;
}

Stability stability_xtilde(const XTildePoint& p) {
  if (!semistable(p)) return Stability::Unstable;
  if (is_zero(pluecker_phi(p.base))) {
    return rank(disc_form(p.phi)) == 2 ? Stability::Stable : Stability::ProperlySemistable;
  }
  return rank(det_pencil(p.base)) == 3 ? Stability::Stable : Stability::ProperlySemistable;
}

YPoint lift_to_Y(const XTildePoint& p) {
  Psi w = pairwise_wedges(p.phi);
  if (is_zero(w)) throw PreconditionError("point lies in the closure of GZ_R; lift a family through it instead");
  return YPoint{p, normalized(w)};
}

Stability stability_Y(const YPoint& y) {
  if (stability_xtilde(y.xpoint) == Stability::Stable) return Stability::Stable;
  if (strata(y.xpoint).in_GZR) return Stability::Stable;
  return Stability::Unstable;
}

bool in_ER(const YPoint& y) { return is_zero(pairwise_wedges(y.xpoint.phi)); }

XTildePoint act(const XTildePoint& p, const GroupElement& g) {
  return XTildePoint{act_pencil(p.base, g), normalized(act_phi(p.phi, g))};
}

YPoint act(const YPoint& y, const GroupElement& g) { return YPoint{act(y.xpoint, g), normalized(act_psi(y.psi, g))}; }

bool projectively_equal(const XTildePoint& a, const XTildePoint& b) {
  return same_span(a.base, b.base) && projectively_equal(a.phi, b.phi);
}

bool projectively_equal(const YPoint& a, const YPoint& b) {
  return projectively_equal(a.xpoint, b.xpoint) && projectively_equal(a.psi, b.psi);
}

}  // namespace kirwan
