#include "kirwan/json_io.hpp"

#include "kirwan/errors.hpp"

namespace kirwan::json_io {

namespace {

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::exception&) {
      throw SchemaError("not a rational number: " + j.dump());
    }
  }
  throw SchemaError("expected an integer or a \"p/q\" string, got " + j.dump());
}

struct LinearTerm {
  std::size_t index;
  int t_power;
  Rational coeff;
};

/// Splits an expression linear in prefix0..prefix2 into its terms; t may
/// appear only when allow_t is set.
std::vector<LinearTerm> linear_terms(const std::string& text, char prefix, bool allow_t) {
  SymPoly p = SymPoly::parse(text);
  std::vector<LinearTerm> out;
  for (const auto& [m, coef] : p.terms()) {
    std::optional<std::size_t> index;
    int t_power = 0;
    for (const auto& [name, power] : m) {
      if (name == "t" && allow_t) {
        t_power = power;
      } else if (name.size() == 2 && name[0] == prefix && name[1] >= '0' && name[1] <= '2' && power == 1 && !index) {
        index = static_cast<std::size_t>(name[1] - '0');
      } else {
        throw SchemaError("unexpected factor " + name + " in \"" + text + "\"");
      }
    }
    if (!index) throw SchemaError("term without a basis vector in \"" + text + "\"");
    out.push_back({*index, t_power, coef});
  }
  return out;
}

template <Space S>
Tri<Scalar, S> tri_from_json(const json& j, char prefix) {
  Tri<Scalar, S> out;
  if (j.is_string()) {
    for (const auto& term : linear_terms(j.get<std::string>(), prefix, false)) out[term.index] += Scalar(term.coeff);
    return out;
  }
  if (!j.is_array() || j.size() != 3) throw SchemaError("expected three coordinates, got " + j.dump());
  for (std::size_t i = 0; i < 3; ++i) out[i] = scalar_from_json(j[i]);
  return out;
}

void require_pair_of_pairs(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 || !j[1].is_array() ||
      j[1].size() != 2) {
    throw SchemaError(std::string(what) + " must be [[x, x'], [y, y']]");
  }
}

template <Space S>
json triple_to_json(const std::array<Tri<Scalar, S>, 3>& v) {
  return json::array({to_json(v[0]), to_json(v[1]), to_json(v[2])});
}

/// "e0 + t^2*e1" style rendering of a polynomial family vector.
std::string family_entry_string(const FamilyVec& v) {
  SymPoly out;
  for (std::size_t i = 0; i < 3; ++i) {
    const RatFunc& f = v[i];
    if (!f.is_polynomial()) throw PreconditionError("family entry is not polynomial in t");
    const Rational scale = Rational(1) / f.den().coeff(0);
    const auto& coeffs = f.num().coeffs();
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      if (coeffs[k] == 0) continue;
      Monomial m{{"e" + std::to_string(i), 1}};
      if (k > 0) m["t"] = static_cast<int>(k);
      out += SymPoly(m, coeffs[k] * scale);
    }
  }
  return out.to_string();
}

const char* component_kind(const ComponentDatum& c) {
  switch (c.index()) {
    case 0: return "root";
    case 1: return "stable_leaf";
    case 2: return "charge_one_leaf";
    default: return "intermediate_plane";
  }
}

}  // namespace

json to_json(const Scalar& x) {
  if (x.is_rational()) return rational_string(x.a());
  return json{{"a", rational_string(x.a())}, {"b", rational_string(x.b())}, {"d", x.d().get_str()}};
}

Scalar scalar_from_json(const json& j) {
  if (j.is_object()) {
    if (!j.contains("a") || !j.contains("b") || !j.contains("d")) {
      throw SchemaError("irrational scalar needs keys a, b, d");
    }
    const Rational d = rational_from_json(j["d"]);
    if (d.get_den() != 1) throw SchemaError("d must be an integer");
    return Scalar(rational_from_json(j["a"]), rational_from_json(j["b"]), d.get_num());
  }
  return Scalar(rational_from_json(j));
}

json to_json(const std::array<Scalar, 3>& v) { return json::array({to_json(v[0]), to_json(v[1]), to_json(v[2])}); }

VecV vec_from_json(const json& j) { return tri_from_json<Space::V>(j, 'e'); }
CovecV covec_from_json(const json& j) { return tri_from_json<Space::Dual>(j, 'z'); }

json to_json(const PencilMatrix& a) {
  return json::array({json::array({to_json(a.x), to_json(a.xp)}), json::array({to_json(a.y), to_json(a.yp)})});
}

PencilMatrix pencil_from_json(const json& j) {
  require_pair_of_pairs(j, "pencil");
  return PencilMatrix(vec_from_json(j[0][0]), vec_from_json(j[0][1]), vec_from_json(j[1][0]),
                      vec_from_json(j[1][1]));
}

PencilFamily family_from_json(const json& j) {
  require_pair_of_pairs(j, "family");
  auto entry = [](const json& e) {
    if (!e.is_string()) throw SchemaError("family entries are strings such as \"e0 + t*e1\"");
    std::vector<std::pair<int, VecV>> terms;
    for (const auto& term : linear_terms(e.get<std::string>(), 'e', true)) {
      terms.push_back({term.t_power, Scalar(term.coeff) * VecV::basis(static_cast<int>(term.index))});
    }
    return family_vec(terms);
  };
  return PencilFamily(entry(j[0][0]), entry(j[0][1]), entry(j[1][0]), entry(j[1][1]));
}

json to_json(const PencilFamily& f) {
  return json::array({json::array({family_entry_string(f.x), family_entry_string(f.xp)}),
                      json::array({family_entry_string(f.y), family_entry_string(f.yp)})});
}

json to_json(const Phi& phi) { return triple_to_json(phi); }

Phi phi_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3) throw SchemaError("phi must be [xi, omega, eta]");
  return Phi{covec_from_json(j[0]), covec_from_json(j[1]), covec_from_json(j[2])};
}

json to_json(const Psi& psi) { return triple_to_json(psi); }

json to_json(const QuadraticForm& q) {
  json rows = json::array();
  for (std::size_t i = 0; i < 3; ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < 3; ++k) row.push_back(to_json(q(i, k)));
    rows.push_back(row);
  }
  return json{{"ambient", ambient_name(q.ambient)}, {"matrix", rows}, {"polynomial", to_string(q)}};
}

json to_json(const ConicClass& c) {
  json factors = json::array();
  for (const auto& f : c.factors) factors.push_back(to_json(f));
  return json{{"kind", conic_kind_name(c.kind)}, {"factors", factors}};
}

json to_json(const XTildePoint& p) { return json{{"base", to_json(p.base)}, {"phi", to_json(p.phi)}}; }

json to_json(const YPoint& y) {
  json out = to_json(y.xpoint);
  out["psi"] = to_json(y.psi);
  return out;
}

json to_json(const StratumFlags& f) {
  return json{{"in_EG", f.in_EG},
              {"in_ZR", f.in_ZR},
              {"in_GZR", f.in_GZR},
              {"in_GZR_closure", f.in_GZR_closure},
              {"in_H0_tilde", f.in_H0_tilde},
              {"in_H1_tilde", f.in_H1_tilde},
              {"det_class", to_json(f.det_class)},
              {"disc_class", to_json(f.disc_class)}};
}

json to_json(const SingularityReport& r) {
  json points = json::array(), pair = json::array();
  for (const auto& v : r.singular_points) points.push_back(to_json(v));
  for (const auto& v : r.s_equivalence_pair) pair.push_back(to_json(v));
  return json{{"locally_free", r.locally_free},
              {"triangular_form", json{{"x", to_json(r.x)}, {"y", to_json(r.y)}, {"z", to_json(r.z)}}},
              {"singular_points", points},
              {"s_equivalence_pair", pair}};
}

json to_json(const CompleteConic& c) {
  json out{{"primal", to_json(c.primal)}};
  if (c.dual) out["dual"] = to_json(*c.dual);
  if (c.enrichment) {
    const Enrichment& e = *c.enrichment;
    json points = json::array();
    for (const auto& p : e.points) points.push_back(to_json(p));
    out["enrichment"] = json{{"line", to_json(e.line)},
                             {"points", points},
                             {"double_point", e.double_point},
                             {"residual", to_json(e.residual)},
                             {"complement", e.complement}};
  }
  return out;
}

json to_json(const GroupElement& g) {
  return json::array({json::array({to_json(g.a()), to_json(g.b())}), json::array({to_json(g.c()), to_json(g.d())})});
}

json to_json(const WeightedTree& t) {
  json parents = json::array();
  for (const auto& p : t.parent) parents.push_back(p ? json(*p) : json(nullptr));
  return json{{"parent", parents}, {"charge", t.charge}, {"encoding", canonical_encoding(t)}};
}

json to_json(const ExceptionalConic& c) {
  json points = json::array();
  for (const auto& p : c.marked_points) points.push_back(to_json(p));
  return json{{"equation", c.equation.to_string()},
              {"line_restriction", c.line_restriction.to_string()},
              {"marked_points", points}};
}

json to_json(const TreeBundleDescriptor& d) {
  json components = json::array();
  for (const auto& c : d.components) {
    json item{{"kind", component_kind(c)}};
    if (const auto* root = std::get_if<RootDatum>(&c)) {
      json blown = json::array();
      for (const auto& v : root->blown_up) blown.push_back(to_json(v));
      item["blown_up"] = blown;
      if (root->conic) item["conic"] = to_json(*root->conic);
    } else if (const auto* leaf = std::get_if<StableLeafDatum>(&c)) {
      item["conic"] = to_json(leaf->conic);
    } else if (const auto* one = std::get_if<ChargeOneLeafDatum>(&c)) {
      item["point"] = to_json(one->point);
      item["gluing_coordinate"] = one->gluing_coordinate;
    } else if (const auto* mid = std::get_if<IntermediatePlaneDatum>(&c)) {
      json blown = json::array();
      for (const auto& p : mid->blown_up) blown.push_back(to_json(p));
      item["blown_up"] = blown;
    }
    components.push_back(item);
  }
  return json{{"type", degeneration_type_name(d.type)},
              {"tree", to_json(d.tree)},
              {"components", components},
              {"notes", d.notes}};
}

bool uses_field_extension(const json& j) {
  if (j.is_object()) {
    if (j.size() == 3 && j.contains("a") && j.contains("b") && j.contains("d")) return true;
    for (const auto& [key, value] : j.items()) {
      if (uses_field_extension(value)) return true;
    }
  } else if (j.is_array()) {
    for (const auto& value : j) {
      if (uses_field_extension(value)) return true;
    }
  }
  return false;
}

}  // namespace kirwan::json_io
