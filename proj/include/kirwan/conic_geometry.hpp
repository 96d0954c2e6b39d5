#ifndef KIRWAN_CONIC_GEOMETRY_HPP
#define KIRWAN_CONIC_GEOMETRY_HPP

#include <optional>
#include <vector>

#include "kirwan/strata.hpp"

namespace kirwan {

/// det of the pencil; the conic of jumping lines in P(V*).
QuadraticForm jumping_conic(const PencilMatrix& a);

/// omega.omega - 4 xi.eta, a conic in P(V). Throws on unstable points.
QuadraticForm dual_conic(const XTildePoint& p);

/// Marked data on a double line {x = 0} of P(V*).
struct Enrichment {
  /// The vector x spanning the double line.
  VecV line;
  /// Two covectors, equal for a double point; both annihilate line.
  std::vector<CovecV> points;
  bool double_point = false;
  /// Coefficients (a, b, c) of w^2 - 4uv in the complement coordinates.
  std::array<Scalar, 3> residual;
  /// Indices of the complement coordinates (the pivot of line omitted).
  std::array<std::size_t, 2> complement;
};

struct CompleteConic {
  QuadraticForm primal;
  std::optional<QuadraticForm> dual;
  std::optional<Enrichment> enrichment;
};

/// Primal det with either its dual conic or, over a double line, the marked
/// points cut by the residual form. Throws on unstable points.
CompleteConic complete_conic(const XTildePoint& p);

}  // namespace kirwan

#endif
