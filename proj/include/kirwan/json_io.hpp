#ifndef KIRWAN_JSON_IO_HPP
#define KIRWAN_JSON_IO_HPP

#include <nlohmann/json.hpp>

#include "kirwan/conic_geometry.hpp"
#include "kirwan/degeneration.hpp"

namespace kirwan::json_io {

using nlohmann::json;

/// Scalars are "p/q" strings when rational and {"a", "b", "d"} otherwise.
json to_json(const Scalar& x);
Scalar scalar_from_json(const json& j);

template <Space S>
json to_json(const Tri<Scalar, S>& v) {
  return json::array({to_json(v[0]), to_json(v[1]), to_json(v[2])});
}
json to_json(const std::array<Scalar, 3>& v);

/// Accepts [s, s, s] or a linear expression such as "e0 - 2*e2".
VecV vec_from_json(const json& j);
/// Accepts [s, s, s] or a linear expression in z0, z1, z2.
CovecV covec_from_json(const json& j);

/// [[x, x'], [y, y']].
json to_json(const PencilMatrix& a);
PencilMatrix pencil_from_json(const json& j);

/// Entries are expressions in e0, e1, e2 with polynomial coefficients in t,
/// e.g. "e0 + t^2*e1".
PencilFamily family_from_json(const json& j);
json to_json(const PencilFamily& f);

json to_json(const Phi& phi);
Phi phi_from_json(const json& j);
json to_json(const Psi& psi);

json to_json(const QuadraticForm& q);
json to_json(const ConicClass& c);
json to_json(const XTildePoint& p);
json to_json(const YPoint& y);
json to_json(const StratumFlags& f);
json to_json(const SingularityReport& r);
json to_json(const CompleteConic& c);
json to_json(const GroupElement& g);
json to_json(const WeightedTree& t);
json to_json(const ExceptionalConic& c);
json to_json(const TreeBundleDescriptor& d);

/// True when some scalar in the document carries a square root.
bool uses_field_extension(const json& j);

}  // namespace kirwan::json_io

#endif
