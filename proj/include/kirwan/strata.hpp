#ifndef KIRWAN_STRATA_HPP
#define KIRWAN_STRATA_HPP

#include "kirwan/group_action.hpp"

namespace kirwan {

/// Point of the first blow-up: a Grassmannian point with coordinates
/// [xi, omega, eta] in the exceptional direction.
struct XTildePoint {
  PencilMatrix base;
  Phi phi;
};

/// Point of the second blow-up: adds psi = [xi^omega, xi^eta, omega^eta].
struct YPoint {
  XTildePoint xpoint;
  Psi psi;
};

/// Checks the defining conditions and normalizes phi. Throws PreconditionError.
XTildePoint make_xtilde_point(const PencilMatrix& base, const Phi& phi);
/// Checks psi against phi and normalizes it. Throws PreconditionError.
YPoint make_y_point(const XTildePoint& p, const Psi& psi);

struct StratumFlags {
  bool in_EG = false;
  bool in_ZR = false;
  bool in_GZR = false;
  bool in_GZR_closure = false;
  /// Proper transforms of the unstable and non-stable loci; on the exceptional
  /// divisor these are the non-semistable and non-stable points.
  bool in_H0_tilde = false;
  bool in_H1_tilde = false;
  ConicClass det_class;
  ConicClass disc_class;
};

XTildePoint lift_to_xtilde(const PencilMatrix& a);
StratumFlags strata(const XTildePoint& p);

/// Stability of the pencil in the Grassmannian quotient.
Stability stability_grassmannian(const PencilMatrix& a);
Stability stability_xtilde(const XTildePoint& p);

YPoint lift_to_Y(const XTildePoint& p);
Stability stability_Y(const YPoint& y);
/// The point lies on the exceptional divisor of the second blow-up.
bool in_ER(const YPoint& y);

XTildePoint act(const XTildePoint& p, const GroupElement& g);
YPoint act(const YPoint& y, const GroupElement& g);

bool projectively_equal(const XTildePoint& a, const XTildePoint& b);
bool projectively_equal(const YPoint& a, const YPoint& b);

}  // namespace kirwan

#endif
