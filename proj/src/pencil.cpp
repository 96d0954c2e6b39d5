#include "kirwan/pencil.hpp"

#include <algorithm>
#include <stdexcept>

namespace kirwan {

namespace {

using Root = std::array<Scalar, 2>;

bool root_less(const Root& a, const Root& b) {
  if (a[0] != b[0]) return lex_less(a[0], b[0]);
  return lex_less(a[1], b[1]);
}

void push_root(std::vector<Root>& roots, const Root& r) {
  if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
}

bool vec_less(const VecV& a, const VecV& b) {
  for (std::size_t i = 0; i < 3; ++i) {
    if (a[i] != b[i]) return lex_less(a[i], b[i]);
  }
  return false;
}

}  // namespace

ScalarMatrix row_matrix(const PencilMatrix& a) {
  ScalarMatrix m(2, 6);
  for (int r = 0; r < 2; ++r)
    for (std::size_t k = 0; k < 3; ++k) {
      m(r, k) = a.at(r, 0)[k];
      m(r, 3 + k) = a.at(r, 1)[k];
    }
  return m;
}

bool rows_independent(const PencilMatrix& a) { return row_matrix(a).rank() == 2; }

bool same_span(const PencilMatrix& a, const PencilMatrix& b) {
  ScalarMatrix ma = row_matrix(a), mb = row_matrix(b);
  if (ma.rank() != 2 || mb.rank() != 2) return false;
  return ma.rref() == mb.rref();
}

PlueckerPoint pluecker(const PencilMatrix& a) {
  if (!rows_independent(a)) throw PreconditionError("pencil rows are linearly dependent");
  PlueckerPoint p{det_pencil(a), pluecker_phi(a)};
  for (const auto& row : pluecker_relation(a, p.phi))
    for (const auto& v : row) {
      if (!v.is_zero()) throw std::logic_error("Pluecker relation failed");
    }
  return p;
}

bool is_in_ZG(const PencilMatrix& a) {
  if (!rows_independent(a)) throw PreconditionError("pencil rows are linearly dependent");
  return is_zero(pluecker_phi(a));
}

std::vector<Root> common_binary_roots(const std::vector<std::array<Scalar, 3>>& quadratics) {
  ScalarMatrix m(quadratics.size(), 3);
  for (std::size_t r = 0; r < quadratics.size(); ++r)
    for (std::size_t c = 0; c < 3; ++c) m(r, c) = quadratics[r][c];
  const std::size_t s = m.rank();
  std::vector<Root> roots;
  if (s == 0) throw PreconditionError("every point is a root of the zero binary quadratic");
  if (s == 3) return roots;
  if (s == 2) {
    // the kernel must be proportional to (S^2, ST, T^2)
    ScalarMatrix k = m.nullspace();
    Scalar a = k(0, 0), b = k(1, 0), c = k(2, 0);
    if (b * b != a * c) return roots;
    if (c.is_zero()) {
      roots.push_back({Scalar(1), Scalar(0)});
    } else {
      roots.push_back({b / c, Scalar(1)});
    }
    return roots;
  }
  std::array<Scalar, 3> h;
  for (const auto& q : quadratics) {
    if (!(q[0].is_zero() && q[1].is_zero() && q[2].is_zero())) {
      h = q;
      break;
    }
  }
  const Scalar &a = h[0], &b = h[1], &c = h[2];
  if (a.is_zero()) {
    push_root(roots, {Scalar(1), Scalar(0)});
    if (!b.is_zero()) push_root(roots, {-c / b, Scalar(1)});
  } else {
    Scalar d = sqrt_adjoin(b * b - Scalar(4) * a * c);
    Scalar inv = (Scalar(2) * a).inverse();
    push_root(roots, {(-b + d) * inv, Scalar(1)});
    push_root(roots, {(-b - d) * inv, Scalar(1)});
  }
  std::sort(roots.begin(), roots.end(), root_less);
  return roots;
}

SingularityReport sheaf_singularities(const PencilMatrix& a) {
  if (!rows_independent(a)) throw PreconditionError("pencil rows are linearly dependent");
  QuadraticForm q = det_pencil(a);
  if (q.is_zero()) throw PreconditionError("det(A) vanishes identically");
  SingularityReport report;
  if (rank(q) == 3) {
    report.locally_free = true;
    return report;
  }
  const auto quadratics =
      coordinate_quadratics(wedge(a.x, a.xp), wedge(a.x, a.yp) + wedge(a.y, a.xp), wedge(a.y, a.yp));
  if (std::all_of(quadratics.begin(), quadratics.end(), [](const auto& coeffs) {
        return coeffs[0].is_zero() && coeffs[1].is_zero() && coeffs[2].is_zero();
      })) {
    // Z_G: A = x (x) N, and N^-1 A = diag(x, x)
    for (const VecV* v : {&a.x, &a.xp, &a.y, &a.yp}) {
      if (v->is_zero()) continue;
      report.x = report.y = normalized(*v);
      break;
    }
    report.singular_points = {report.x};
    report.s_equivalence_pair = {report.x, report.y};
    return report;
  }
  auto roots = common_binary_roots(quadratics);
  if (roots.empty()) throw std::logic_error("reducible det(A) without a triangular form");

  bool have = false;
  for (const auto& p : roots) {
    VecV u = p[0] * a.x + p[1] * a.y;
    VecV up = p[0] * a.xp + p[1] * a.yp;
    ScalarMatrix cols(3, 2);
    for (std::size_t k = 0; k < 3; ++k) {
      cols(k, 0) = u[k];
      cols(k, 1) = up[k];
    }
    ScalarMatrix kernel = cols.nullspace();
    if (kernel.cols() != 1) throw PreconditionError("pencil has a zero row combination");
    Root qk{kernel(0, 0), kernel(1, 0)};
    Root qc = qk[1].is_zero() ? Root{Scalar(0), Scalar(1)} : Root{Scalar(1), Scalar(0)};
    Root r = p[0].is_zero() ? Root{Scalar(1), Scalar(0)} : Root{Scalar(0), Scalar(1)};
    VecV w = r[0] * a.x + r[1] * a.y;
    VecV wp = r[0] * a.xp + r[1] * a.yp;
    VecV x = normalized(qc[0] * u + qc[1] * up);
    if (have && !vec_less(x, report.x)) continue;
    have = true;
    report.x = x;
    report.z = qc[0] * w + qc[1] * wp;
    report.y = normalized(qk[0] * w + qk[1] * wp);
  }
  report.singular_points.push_back(report.x);
  bool split = det3(report.z, report.x, report.y).is_zero();
  if (split && !proportional(report.x, report.y)) report.singular_points.push_back(report.y);
  report.s_equivalence_pair = {report.x, report.y};
  return report;
}

}  // namespace kirwan
