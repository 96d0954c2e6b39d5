#include "kirwan/group_action.hpp"

#include <algorithm>
#include <stdexcept>

namespace kirwan {

namespace {

using Root = std::array<Scalar, 2>;

std::size_t span_dim(const Phi& phi) {
  ScalarMatrix m(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t k = 0; k < 3; ++k) m(i, k) = phi[i][k];
  return m.rank();
}

/// Group element whose first column is the given root, second column chosen
/// to make the determinant 1.
GroupElement with_first_column(const Root& r) {
  const Scalar& alpha = r[0];
  const Scalar& gamma = r[1];
  if (!gamma.is_zero()) return GroupElement(alpha, -gamma.inverse(), gamma, Scalar(0));
  return GroupElement(alpha, Scalar(0), Scalar(0), alpha.inverse());
}

/// Group element with the given columns, first column rescaled by 1/det.
GroupElement with_columns(const Root& first, const Root& second) {
  Scalar det = first[0] * second[1] - second[0] * first[1];
  if (det.is_zero()) throw std::logic_error("coincident root directions");
  Scalar inv = det.inverse();
  return GroupElement(inv * first[0], second[0], inv * first[1], second[1]);
}

/// Double root of a binary quadratic that is a square.
Root double_root(const std::array<Scalar, 3>& h) {
  if (!h[0].is_zero()) return {-h[1] / (Scalar(2) * h[0]), Scalar(1)};
  return {Scalar(1), Scalar(0)};
}

/// Coefficients (a, b, c) with phi = (a, b, c) * kappa when the span is a line.
std::array<Scalar, 3> line_coefficients(const Phi& phi) {
  std::size_t i = 0;
  while (phi[i].is_zero()) ++i;
  const CovecV& kappa = phi[i];
  std::size_t k = 0;
  while (kappa[k].is_zero()) ++k;
  return {phi[0][k] / kappa[k], phi[1][k] / kappa[k], phi[2][k] / kappa[k]};
}

bool has_shape(CanonicalKind kind, const Phi& p) {
  switch (kind) {
    case CanonicalKind::Null:
      return p[1].is_zero() && p[2].is_zero();
    case CanonicalKind::Square:
      return p[0].is_zero();
    case CanonicalKind::Product:
      return p[1].is_zero();
    case CanonicalKind::Generic:
      return true;
  }
  return false;
}

CanonicalClass finish(const Phi& phi, CanonicalKind kind, const GroupElement& g) {
  CanonicalClass out;
  out.kind = kind;
  out.witness = g;
  out.reduced = act_phi(phi, g);
  if (!has_shape(kind, out.reduced)) throw std::logic_error("canonical reduction missed its normal form");
  return out;
}

}  // namespace

GroupElement::GroupElement(Scalar a, Scalar b, Scalar c, Scalar d)
    : m_{std::move(a), std::move(b), std::move(c), std::move(d)} {
  if (!m_.det().is_one()) throw PreconditionError("group element must have determinant 1");
}

GroupElement operator*(const GroupElement& g, const GroupElement& h) {
  Mat2<Scalar> p = g.m_ * h.m_;
  return GroupElement(p.a, p.b, p.c, p.d);
}

const char* canonical_kind_name(CanonicalKind k) {
  switch (k) {
    case CanonicalKind::Null:
      return "Null";
    case CanonicalKind::Square:
      return "Square";
    case CanonicalKind::Product:
      return "Product";
    case CanonicalKind::Generic:
      return "Generic";
  }
  return "?";
}

const char* stability_name(Stability s) {
  switch (s) {
    case Stability::Stable:
      return "Stable";
    case Stability::ProperlySemistable:
      return "ProperlySemistable";
    case Stability::Unstable:
      return "Unstable";
  }
  return "?";
}

CanonicalClass canonical_reduce(const Phi& phi) {
  if (is_zero(phi)) throw PreconditionError("canonical_reduce needs phi != 0");
  const std::size_t r = rank(disc_form(phi));
  const std::size_t s = span_dim(phi);

  if (r == 3) {
    CanonicalClass out;
    out.kind = CanonicalKind::Generic;
    out.reduced = phi;
    return out;
  }

  if (r == 0) {
    if (has_shape(CanonicalKind::Null, phi)) return finish(phi, CanonicalKind::Null, GroupElement::identity());
    if (s != 1) throw std::logic_error("vanishing discriminant with a non-collinear triple");
    // move the double root to (0:1) through the second column
    Root root = double_root(line_coefficients(phi));
    GroupElement g = root[1].is_zero() ? GroupElement(Scalar(0), Scalar(1), Scalar(-1), Scalar(0))
                                       : GroupElement(Scalar(1), root[0], Scalar(0), Scalar(1));
    return finish(phi, CanonicalKind::Null, g);
  }

  if (r == 1) {
    // collinear triples go all the way to [0, omega, 0]
    if (has_shape(CanonicalKind::Square, phi) && (s != 1 || phi[2].is_zero())) {
      return finish(phi, CanonicalKind::Square, GroupElement::identity());
    }
    if (s == 1) {
      auto roots = common_binary_roots({line_coefficients(phi)});
      if (roots.size() != 2) throw std::logic_error("square discriminant with a double root");
      return finish(phi, CanonicalKind::Square, with_columns(roots[0], roots[1]));
    }
    auto roots = common_binary_roots(coordinate_quadratics(phi[0], phi[1], phi[2]));
    if (roots.size() != 1) throw std::logic_error("square discriminant without a common root");
    return finish(phi, CanonicalKind::Square, with_first_column(roots[0]));
  }

  if (has_shape(CanonicalKind::Product, phi)) return finish(phi, CanonicalKind::Product, GroupElement::identity());
  if (s != 2) throw std::logic_error("rank 2 discriminant with span of dimension " + std::to_string(s));
  // phi = h1 kappa1 + h2 kappa2; the pencil spanned by h1, h2 contains two squares
  std::vector<std::size_t> pivots;
  ScalarMatrix rows(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t k = 0; k < 3; ++k) rows(i, k) = phi[i][k];
  rows.transpose().rref(&pivots);
  const CovecV& k1 = phi[pivots[0]];
  const CovecV& k2 = phi[pivots[1]];
  ScalarMatrix sys(3, 5);
  for (std::size_t k = 0; k < 3; ++k) {
    sys(k, 0) = k1[k];
    sys(k, 1) = k2[k];
    for (std::size_t i = 0; i < 3; ++i) sys(k, 2 + i) = phi[i][k];
  }
  ScalarMatrix red = sys.rref();
  std::array<Scalar, 3> h1{red(0, 2), red(0, 3), red(0, 4)};
  std::array<Scalar, 3> h2{red(1, 2), red(1, 3), red(1, 4)};
  Scalar A = h1[1] * h1[1] - Scalar(4) * h1[0] * h1[2];
  Scalar B = Scalar(2) * h1[1] * h2[1] - Scalar(4) * h1[0] * h2[2] - Scalar(4) * h2[0] * h1[2];
  Scalar C = h2[1] * h2[1] - Scalar(4) * h2[0] * h2[2];
  auto squares = common_binary_roots({{A, B, C}});
  if (squares.size() != 2) throw std::logic_error("product discriminant without two squares in the pencil");
  std::array<Root, 2> dirs;
  for (std::size_t i = 0; i < 2; ++i) {
    const Scalar& l = squares[i][0];
    const Scalar& m = squares[i][1];
    dirs[i] = double_root({l * h1[0] + m * h2[0], l * h1[1] + m * h2[1], l * h1[2] + m * h2[2]});
  }
  return finish(phi, CanonicalKind::Product, with_columns(dirs[1], dirs[0]));
}

std::vector<int> weight_spectrum(const PencilMatrix& base, const Phi& phi) {
  static constexpr int kPhiWeights[3] = {2, 0, -2};
  std::vector<int> first;
  if (!det_pencil(base).is_zero()) first.push_back(0);
  Phi base_phi = pluecker_phi(base);
  for (std::size_t i = 0; i < 3; ++i)
    if (!base_phi[i].is_zero()) first.push_back(kPhiWeights[i]);
  std::vector<int> out;
  for (int w : first)
    for (std::size_t i = 0; i < 3; ++i)
      if (!phi[i].is_zero()) out.push_back(w + kPhiWeights[i]);
  std::sort(out.begin(), out.end());
  return out;
}

Stability torus_verdict(const std::vector<int>& spectrum) {
  bool pos = false, neg = false;
  for (int w : spectrum) {
    pos = pos || w > 0;
    neg = neg || w < 0;
  }
  if (spectrum.empty()) return Stability::Unstable;
  if (pos && neg) return Stability::Stable;
  bool has_zero = std::find(spectrum.begin(), spectrum.end(), 0) != spectrum.end();
  return has_zero ? Stability::ProperlySemistable : Stability::Unstable;
}

}  // namespace kirwan
