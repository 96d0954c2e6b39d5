#include "kirwan/degeneration.hpp"

#include <algorithm>

namespace kirwan {

namespace {

const RatFunc& checked_polynomial(const RatFunc& f) {
  if (!f.is_polynomial()) throw PreconditionError("family entries must be polynomial in t");
  return f;
}

Rational coeff(const RatFunc& f, int power) { return checked_polynomial(f).num().coeff(power); }

template <Space S>
int min_valuation(const std::array<Tri<RatFunc, S>, 3>& v) {
  int best = -1;
  for (const auto& tri : v)
    for (std::size_t k = 0; k < 3; ++k) {
      const RatFunc& f = checked_polynomial(tri[k]);
      if (f.is_zero()) continue;
      int val = f.num().valuation();
      if (best < 0 || val < best) best = val;
    }
  return best;
}

template <Space S>
std::array<Tri<Scalar, S>, 3> leading_coefficients(const std::array<Tri<RatFunc, S>, 3>& v, int power) {
  std::array<Tri<Scalar, S>, 3> out;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t k = 0; k < 3; ++k) out[i][k] = Scalar(coeff(v[i][k], power));
  return out;
}

/// Limit of the row span of A(t) through its 15 Pluecker coordinates.
PencilMatrix limit_span(const PencilFamily& f) {
  std::array<std::array<RatFunc, 6>, 2> rows;
  for (int r = 0; r < 2; ++r)
    for (std::size_t k = 0; k < 3; ++k) {
      rows[r][k] = f.at(r, 0)[k];
      rows[r][3 + k] = f.at(r, 1)[k];
    }
  Matrix<RatFunc> minors(6, 6);
  int val = -1;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j) {
      RatFunc p = rows[0][i] * rows[1][j] - rows[0][j] * rows[1][i];
      minors(i, j) = p;
      minors(j, i) = -p;
      if (!p.is_zero() && (val < 0 || p.num().valuation() < val)) val = p.num().valuation();
    }
  if (val < 0) throw PreconditionError("family rows are generically dependent");
  // columns of the limit bivector span the limit plane
  ScalarMatrix cols(6, 6);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) cols(j, i) = Scalar(coeff(minors(i, j), val));
  ScalarMatrix basis = cols.rref();
  PencilMatrix out;
  for (int r = 0; r < 2; ++r)
    for (std::size_t k = 0; k < 3; ++k) {
      out.at(r, 0)[k] = basis(static_cast<std::size_t>(r), k);
      out.at(r, 1)[k] = basis(static_cast<std::size_t>(r), 3 + k);
    }
  return out;
}

Rational rational_of(const Scalar& s) {
  if (!s.is_rational()) throw std::logic_error("expected a rational scalar");
  return s.a();
}

/// Matrix with h x = e0 and h e_a = e1, h e_b = e2 for the complement of the pivot of x.
ScalarMatrix move_to_e0(const VecV& x) {
  std::size_t pivot = 0;
  while (x[pivot].is_zero()) ++pivot;
  ScalarMatrix cols(3, 3);
  std::size_t next = 1;
  for (std::size_t k = 0; k < 3; ++k) cols(k, 0) = x[k];
  for (std::size_t j = 0; j < 3; ++j) {
    if (j == pivot) continue;
    cols(j, next++) = Scalar(1);
  }
  return cols.inverse();
}

/// Matrix with h x = e0 and h y = e2.
ScalarMatrix move_to_e0_e2(const VecV& x, const VecV& y) {
  for (int c = 0; c < 3; ++c) {
    ScalarMatrix cols(3, 3);
    for (std::size_t k = 0; k < 3; ++k) {
      cols(k, 0) = x[k];
      cols(k, 2) = y[k];
    }
    cols(static_cast<std::size_t>(c), 1) = Scalar(1);
    if (cols.rank() == 3) return cols.inverse();
  }
  throw std::logic_error("line pair factors are proportional");
}

PencilFamily transform_vectors(const PencilFamily& f, const ScalarMatrix& h) {
  PencilFamily out;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      for (std::size_t i = 0; i < 3; ++i) {
        RatFunc acc;
        for (std::size_t j = 0; j < 3; ++j) acc += RatFunc(rational_of(h(i, j))) * f.at(r, c)[j];
        out.at(r, c)[i] = acc;
      }
  return out;
}

/// Coefficient of t^power in a form over Q(t).
ScalarMatrix form_coefficient(const QuadForm<RatFunc>& q, int power) {
  ScalarMatrix m(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m(i, j) = Scalar(coeff(q.m(i, j), power));
  return m;
}

/// Transforms the matrix of a form in vector variables by v -> h v.
ScalarMatrix congruent(const ScalarMatrix& h, const ScalarMatrix& m) { return h * m * h.transpose(); }

SymPoly to_sym(const RatFunc& f, int shift) {
  SymPoly out;
  const UPoly& p = checked_polynomial(f).num();
  for (int k = shift; k <= p.degree(); ++k) {
    if (p.coeff(k) == 0) continue;
    Monomial m;
    if (k > shift) m["t"] = k - shift;
    out = out + SymPoly(m, p.coeff(k));
  }
  return out;
}

VecV first_nonzero_entry(const PencilMatrix& a) {
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      if (!a.at(r, c).is_zero()) return a.at(r, c);
  throw PreconditionError("zero pencil");
}

/// A(0) as x tensor N with N invertible; throws otherwise.
Mat2<Scalar> exceptional_factor(const PencilMatrix& a0, const VecV& x) {
  std::size_t pivot = 0;
  while (x[pivot].is_zero()) ++pivot;
  Mat2<Scalar> n{a0.x[pivot] / x[pivot], a0.xp[pivot] / x[pivot], a0.y[pivot] / x[pivot], a0.yp[pivot] / x[pivot]};
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      const Scalar& s = r == 0 ? (c == 0 ? n.a : n.b) : (c == 0 ? n.c : n.d);
      if (a0.at(r, c) != s * x) throw PreconditionError("A(0) is not of the form x (x) N");
    }
  if (n.det().is_zero()) throw PreconditionError("A(0) has dependent rows");
  return n;
}

}  // namespace

FamilyVec family_vec(const std::vector<std::pair<int, VecV>>& terms) {
  FamilyVec out;
  for (const auto& [power, v] : terms)
    for (std::size_t k = 0; k < 3; ++k) out[k] += RatFunc(UPoly::monomial(rational_of(v[k]), power));
  return out;
}

PencilMatrix fibre(const PencilFamily& f, const Rational& c) {
  PencilMatrix out;
  for (int r = 0; r < 2; ++r)
    for (int col = 0; col < 2; ++col)
      for (std::size_t k = 0; k < 3; ++k) out.at(r, col)[k] = Scalar(checked_polynomial(f.at(r, col)[k]).eval(c));
  return out;
}

PencilFamily reparametrize(const PencilFamily& f, const Rational& c) {
  PencilFamily out;
  for (int r = 0; r < 2; ++r)
    for (int col = 0; col < 2; ++col)
      for (std::size_t k = 0; k < 3; ++k) {
        std::vector<Rational> coeffs = checked_polynomial(f.at(r, col)[k]).num().coeffs();
        Rational scale = 1;
        for (auto& a : coeffs) {
          a *= scale;
          scale *= c;
        }
        out.at(r, col)[k] = RatFunc(UPoly(coeffs));
      }
  return out;
}

PencilFamily act_family(const PencilFamily& f, const GroupElement& g) {
  const auto& m = g.matrix();
  return act_pencil(f, Mat2<RatFunc>{RatFunc(rational_of(m.a)), RatFunc(rational_of(m.b)), RatFunc(rational_of(m.c)),
                                      RatFunc(rational_of(m.d))});
}

PencilFamily act_family_left(const Mat2<Scalar>& m, const PencilFamily& f) {
  if (m.det().is_zero()) throw PreconditionError("left factor must be invertible");
  return act_pencil_left(Mat2<RatFunc>{RatFunc(rational_of(m.a)), RatFunc(rational_of(m.b)),
                                       RatFunc(rational_of(m.c)), RatFunc(rational_of(m.d))},
                         f);
}

void check_family(const PencilFamily& f) {
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      for (std::size_t k = 0; k < 3; ++k) checked_polynomial(f.at(r, c)[k]);
  QuadForm<RatFunc> det = det_pencil(f);
  if (det.is_zero()) throw PreconditionError("det(A(t)) vanishes identically");
  if (determinant(det).is_zero()) {
    throw PreconditionError("generic member is not stable: det(A(t)) is a singular conic");
  }
}

YPoint limit_lift(const PencilFamily& f) {
  check_family(f);
  PhiT<RatFunc> phi_t = pluecker_phi(f);
  const int v = min_valuation(phi_t);
  if (v < 0) throw PreconditionError("first blow-up coordinates vanish along the family");
  Phi phi = leading_coefficients(phi_t, v);

  PsiT<RatFunc> psi_t = pairwise_wedges(phi_t);
  const int w = min_valuation(psi_t);
  if (w < 0) throw PreconditionError("family lies over the closure of GZ_R; its lift to Y is not determined");
  Psi psi = leading_coefficients(psi_t, w);

  PencilMatrix a0 = fibre(f, 0);
  PencilMatrix base = rows_independent(a0) ? a0 : limit_span(f);
  return make_y_point(make_xtilde_point(base, phi), psi);
}

const char* degeneration_type_name(DegenerationType t) {
  switch (t) {
    case DegenerationType::Type0:
      return "Type0";
    case DegenerationType::Type1:
      return "Type1";
    case DegenerationType::Type2:
      return "Type2";
    case DegenerationType::Type3:
      return "Type3";
    case DegenerationType::NotSemistable:
      return "NotSemistable";
  }
  return "?";
}

DegenerationType classify_family(const PencilFamily& f) {
  YPoint y = limit_lift(f);
  if (stability_Y(y) == Stability::Unstable) return DegenerationType::NotSemistable;
  StratumFlags flags = strata(y.xpoint);
  if (flags.in_EG) return flags.in_GZR ? DegenerationType::Type3 : DegenerationType::Type1;
  return flags.in_GZR ? DegenerationType::Type2 : DegenerationType::Type0;
}

ExceptionalConic exceptional_conic_from_phi(const std::array<Tri<SymPoly, Space::Dual>, 3>& phi) {
  auto linear = [](const Tri<SymPoly, Space::Dual>& k) {
    return k[0] * sym("z0") + k[1] * sym("z1") + k[2] * sym("z2");
  };
  SymPoly q = linear(phi[1]) * linear(phi[1]) - SymPoly(4) * linear(phi[0]) * linear(phi[2]);
  SymPoly affine = q.substitute({{"z0", SymPoly(1)}});
  const std::vector<std::string> vars{"t", "z1", "z2"};
  if (affine.is_zero()) throw PreconditionError("discriminant vanishes along the family");
  const int low = affine.min_degree(vars);
  if (low != 2) {
    throw PreconditionError("limit point is not a double point of the conic family (order " + std::to_string(low) +
                            ")");
  }

  ExceptionalConic out;
  out.equation = affine.homogeneous_part(vars, 2).substitute({{"t", sym("u0")}, {"z1", sym("u1")}, {"z2", sym("u2")}});
  SymPoly restriction = out.equation.substitute({{"u0", SymPoly(0)}});
  // coefficients of u1^2, u1 u2, u2^2 when they are plain numbers
  std::array<Rational, 3> abc{0, 0, 0};
  for (const auto& [m, coef] : restriction.terms()) {
    auto power = [&m = m](const char* s) {
      auto it = m.find(s);
      return it == m.end() ? 0 : it->second;
    };
    if (m.size() != static_cast<std::size_t>((power("u1") > 0) + (power("u2") > 0))) {
      out.line_restriction = restriction;
      return out;
    }
    abc[static_cast<std::size_t>(power("u2"))] += coef;
  }
  const Rational& a = abc[0];
  const Rational& b = abc[1];
  const Rational& c = abc[2];
  if (a == 0 && b == 0 && c == 0) throw PreconditionError("conic contains the gluing line");
  const Rational lead = a != 0 ? a : (b != 0 ? b : c);
  out.line_restriction = SymPoly(Rational(1) / lead) * restriction;
  for (const auto& r : common_binary_roots({{Scalar(a), Scalar(b), Scalar(c)}})) {
    out.marked_points.push_back({Scalar(0), r[0], r[1]});
  }
  return out;
}

ExceptionalConic exceptional_conic_type1(const PencilFamily& f) {
  if (classify_family(f) != DegenerationType::Type1) throw PreconditionError("family is not of type 1");
  PencilMatrix a0 = fibre(f, 0);
  VecV x = first_nonzero_entry(a0);
  exceptional_factor(a0, x);
  PencilFamily moved = transform_vectors(f, move_to_e0(x));
  PhiT<RatFunc> phi_t = pluecker_phi(moved);
  const int v = min_valuation(phi_t);
  std::array<Tri<SymPoly, Space::Dual>, 3> phi;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t k = 0; k < 3; ++k) phi[i][k] = to_sym(phi_t[i][k], v);
  return exceptional_conic_from_phi(phi);
}

TreeBundleDescriptor tree_bundle_descriptor(const PencilFamily& f) {
  TreeBundleDescriptor out;
  out.type = classify_family(f);
  PencilMatrix a0 = fibre(f, 0);

  switch (out.type) {
    case DegenerationType::NotSemistable:
      throw PreconditionError("family has no semistable limit");

    case DegenerationType::Type0: {
      out.tree = WeightedTree::trivial(2);
      out.components.push_back(RootDatum{{}, det_pencil(limit_lift(f).xpoint.base)});
      return out;
    }

    case DegenerationType::Type1: {
      VecV x = normalized(first_nonzero_entry(a0));
      out.tree = WeightedTree::chain({0, 2});
      out.components.push_back(RootDatum{{x}, std::nullopt});
      out.components.push_back(StableLeafDatum{exceptional_conic_type1(f)});
      return out;
    }

    case DegenerationType::Type2: {
      if (!rows_independent(a0)) throw PreconditionError("descriptor needs A(0) with independent rows");
      ConicClass cls = classify_form(det_pencil(a0));
      if (cls.kind != ConicKind::LinePair) throw PreconditionError("det(A(0)) is not a line pair");
      VecV x(cls.factors[0][0], cls.factors[0][1], cls.factors[0][2]);
      VecV y(cls.factors[1][0], cls.factors[1][1], cls.factors[1][2]);
      QuadForm<RatFunc> det_t = det_pencil(f);
      ScalarMatrix h = move_to_e0_e2(x, y);
      ScalarMatrix m0 = congruent(h, form_coefficient(det_t, 0));
      ScalarMatrix m1 = congruent(h, form_coefficient(det_t, 1));
      // det(t) = c (x + t a).(y + t b) to first order
      Scalar c = Scalar(2) * m0(0, 2);
      ScalarMatrix m = c.inverse() * m1;
      if (!m(1, 1).is_zero()) {
        out.notes.push_back(
            "first-order term of det(A(t)) does not vanish at the node; q points use the remaining terms");
      }
      out.tree = WeightedTree::star(0, {1, 1});
      out.components.push_back(RootDatum{{x, y}, std::nullopt});
      out.components.push_back(ChargeOneLeafDatum{{Scalar(1), Scalar(2) * m(1, 2), m(2, 2)}, 0});
      out.components.push_back(ChargeOneLeafDatum{{m(0, 0), Scalar(2) * m(0, 1), Scalar(1)}, 2});
      out.notes.push_back(
          "limits over GZ_R are classified as Type2 whether the family is admissible or not "
          "(t versus t^2 deformations)");
      return out;
    }

    case DegenerationType::Type3: {
      VecV x = normalized(first_nonzero_entry(a0));
      Mat2<Scalar> n = exceptional_factor(a0, x);
      Scalar inv = n.det().inverse();
      Mat2<Scalar> n_inv{inv * n.d, -(inv * n.b), -(inv * n.c), inv * n.a};
      PencilFamily normal = transform_vectors(act_family_left(n_inv, f), move_to_e0(x));
      QuadForm<RatFunc> det_t = det_pencil(normal);
      ScalarMatrix m1 = form_coefficient(det_t, 1);
      ScalarMatrix m2 = form_coefficient(det_t, 2);
      // det(t) = (z0 + t alpha)(z0 + t beta) to second order, alpha + beta = w, alpha beta = Q
      Scalar w1 = Scalar(2) * m1(0, 1), w2 = Scalar(2) * m1(0, 2);
      Scalar A = w1 * w1 - Scalar(4) * m2(1, 1);
      Scalar B = Scalar(2) * w1 * w2 - Scalar(8) * m2(1, 2);
      Scalar C = w2 * w2 - Scalar(4) * m2(2, 2);
      if (A.is_zero() && B.is_zero() && C.is_zero()) {
        throw PreconditionError("the two branches through the double point coincide to second order");
      }
      if (B * B != Scalar(4) * A * C) throw PreconditionError("second-order branches are not defined by a square");
      Scalar d1 = sqrt_adjoin(A);
      Scalar d2 = d1.is_zero() ? sqrt_adjoin(C) : B / (Scalar(2) * d1);
      Scalar half(Rational(1, 2));
      std::vector<std::array<Scalar, 3>> pts{{Scalar(1), half * (w1 + d1), half * (w2 + d2)},
                                             {Scalar(1), half * (w1 - d1), half * (w2 - d2)}};
      std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
        for (std::size_t k = 0; k < 3; ++k) {
          if (a[k] != b[k]) return lex_less(a[k], b[k]);
        }
        return false;
      });
      out.tree = WeightedTree::chain_then_star({0, 0}, {1, 1});
      out.components.push_back(RootDatum{{x}, std::nullopt});
      out.components.push_back(IntermediatePlaneDatum{pts});
      out.components.push_back(ChargeOneLeafDatum{{Scalar(1), Scalar(0), Scalar(0)}, 0});
      out.components.push_back(ChargeOneLeafDatum{{Scalar(1), Scalar(0), Scalar(0)}, 0});
      out.notes.push_back("charge one leaves carry the canonical point [1,0,0] off their gluing line");
      return out;
    }
  }
  throw std::logic_error("unhandled degeneration type");
}

}  // namespace kirwan
