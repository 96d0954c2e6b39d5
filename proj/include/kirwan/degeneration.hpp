#ifndef KIRWAN_DEGENERATION_HPP
#define KIRWAN_DEGENERATION_HPP

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "kirwan/strata.hpp"
#include "kirwan/symbolic.hpp"
#include "kirwan/trees.hpp"

namespace kirwan {

/// One-parameter family A(t) degenerating at t = 0. Entries must be
/// polynomial in t.
using PencilFamily = PencilT<RatFunc>;

using FamilyVec = Tri<RatFunc, Space::V>;

/// Constant vector plus t-polynomial multiples, e.g. family_vec({{0, e0}, {1, e2}}) = e0 + t e2.
FamilyVec family_vec(const std::vector<std::pair<int, VecV>>& terms);
/// The fibre A(c).
PencilMatrix fibre(const PencilFamily& f, const Rational& c);
/// Substitutes t -> c t.
PencilFamily reparametrize(const PencilFamily& f, const Rational& c);
/// Constant right SL2 action on every fibre.
PencilFamily act_family(const PencilFamily& f, const GroupElement& g);
/// Constant left GL2 action.
PencilFamily act_family_left(const Mat2<Scalar>& m, const PencilFamily& f);

/// Throws PreconditionError unless the entries are polynomial and the generic
/// member is stable (det of rank 3 over Q(t)).
void check_family(const PencilFamily& f);

YPoint limit_lift(const PencilFamily& f);

enum class DegenerationType { Type0, Type1, Type2, Type3, NotSemistable };
const char* degeneration_type_name(DegenerationType t);

DegenerationType classify_family(const PencilFamily& f);

struct ExceptionalConic {
  /// Quadratic polynomial in u0, u1, u2; the gluing line is u0 = 0.
  SymPoly equation;
  /// Restriction to u0 = 0 scaled to a monic leading term.
  SymPoly line_restriction;
  /// Intersection with the gluing line, as [0, u1, u2].
  std::vector<std::array<Scalar, 3>> marked_points;
};

/// The exceptional conic from phi(t), already divided by its t-power and with
/// the limit point at e0: disc in z, dehomogenized at z0 = 1, lowest part in
/// (t, z1, z2) renamed to (u0, u1, u2). Coefficients may carry parameters.
ExceptionalConic exceptional_conic_from_phi(const std::array<Tri<SymPoly, Space::Dual>, 3>& phi);

/// The conic of the charge 2 leaf for a Type1 family, in coordinates where
/// the double point of the limit conic is e0.
ExceptionalConic exceptional_conic_type1(const PencilFamily& f);

struct RootDatum {
  std::vector<VecV> blown_up;
  /// Limit jumping conic for a stable limit.
  std::optional<QuadraticForm> conic;
};

struct StableLeafDatum {
  ExceptionalConic conic;
};

/// Charge one plane with its point q off the gluing line {coordinate = 0}.
struct ChargeOneLeafDatum {
  std::array<Scalar, 3> point;
  std::size_t gluing_coordinate = 0;
};

struct IntermediatePlaneDatum {
  std::vector<std::array<Scalar, 3>> blown_up;
};

using ComponentDatum = std::variant<RootDatum, StableLeafDatum, ChargeOneLeafDatum, IntermediatePlaneDatum>;

struct TreeBundleDescriptor {
  DegenerationType type = DegenerationType::Type0;
  WeightedTree tree;
  /// One datum per tree vertex.
  std::vector<ComponentDatum> components;
  std::vector<std::string> notes;
};

TreeBundleDescriptor tree_bundle_descriptor(const PencilFamily& f);

}  // namespace kirwan

#endif
