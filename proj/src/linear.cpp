#include "kirwan/linear.hpp"

#include <algorithm>
#include <sstream>

namespace kirwan {

namespace {

using Coords = std::array<Scalar, 3>;

Coords normalize_coords(const Coords& c) {
  for (const auto& x : c) {
    if (!x.is_zero()) {
      Scalar inv = x.inverse();
      return {inv * c[0], inv * c[1], inv * c[2]};
    }
  }
  return c;
}

bool coords_less(const Coords& a, const Coords& b) {
  for (std::size_t i = 0; i < 3; ++i) {
    if (a[i] != b[i]) return lex_less(a[i], b[i]);
  }
  return false;
}

Scalar bilinear(const QuadraticForm& q, const Coords& u, const Coords& v) {
  Scalar acc(0);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) acc += u[i] * q.m(i, j) * v[j];
  return acc;
}

Coords cross_coords(const Coords& a, const Coords& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

}  // namespace

std::size_t rank(const QuadraticForm& q) { return q.m.rank(); }

std::string to_string(const QuadraticForm& q) {
  const char var = q.ambient == Ambient::OnDual ? 'e' : 'z';
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i; j < 3; ++j) {
      Scalar c = i == j ? q.m(i, j) : q.m(i, j) + q.m(j, i);
      if (c.is_zero()) continue;
      if (!first) os << " + ";
      first = false;
      bool unit = c.is_one();
      if (!unit) os << (c.is_rational() ? c.to_string() : "(" + c.to_string() + ")") << "*";
      os << var << i;
      if (i == j) {
        os << "^2";
      } else {
        os << "*" << var << j;
      }
    }
  return first ? "0" : os.str();
}

const char* conic_kind_name(ConicKind k) {
  switch (k) {
    case ConicKind::Zero:
      return "Zero";
    case ConicKind::DoubleLine:
      return "DoubleLine";
    case ConicKind::LinePair:
      return "LinePair";
    case ConicKind::Smooth:
      return "Smooth";
  }
  return "?";
}

QuadraticForm product_form(const Coords& a, const Coords& b, Ambient ambient) {
  Matrix<Scalar> m(3, 3);
  const Scalar half(Rational(1, 2));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m(i, j) = half * (a[i] * b[j] + b[i] * a[j]);
  return QuadraticForm(std::move(m), ambient);
}

ConicClass classify_form(const QuadraticForm& q) {
  ConicClass out;
  out.ambient = q.ambient;
  const std::size_t r = rank(q);
  if (r == 0) {
    out.kind = ConicKind::Zero;
    return out;
  }
  if (r == 3) {
    out.kind = ConicKind::Smooth;
    return out;
  }
  if (r == 1) {
    out.kind = ConicKind::DoubleLine;
    std::size_t i = 0;
    while (q.m(i, i).is_zero()) ++i;
    Coords row{q.m(i, 0), q.m(i, 1), q.m(i, 2)};
    Coords n = normalize_coords(row);
    Scalar lead = row[0].is_zero() ? (row[1].is_zero() ? row[2] : row[1]) : row[0];
    out.factors = {n, n};
    out.scale = lead * lead / q.m(i, i);
    return out;
  }

  out.kind = ConicKind::LinePair;
  Matrix<Scalar> kernel = q.m.nullspace();
  Coords k{kernel(0, 0), kernel(1, 0), kernel(2, 0)};
  // complete the singular point to a basis with two unit vectors
  Coords u1, u2;
  bool found = false;
  for (std::size_t i = 0; i < 3 && !found; ++i)
    for (std::size_t j = i + 1; j < 3 && !found; ++j) {
      Coords a{0, 0, 0}, b{0, 0, 0};
      a[i] = 1;
      b[j] = 1;
      Coords x = cross_coords(a, b);
      if (!(k[0] * x[0] + k[1] * x[1] + k[2] * x[2]).is_zero()) {
        u1 = a;
        u2 = b;
        found = true;
      }
    }
  // the residual binary form h(s,t) = q(s*u1 + t*u2)
  Scalar a = bilinear(q, u1, u1);
  Scalar b = Scalar(2) * bilinear(q, u1, u2);
  Scalar c = bilinear(q, u2, u2);
  std::vector<Coords> roots;
  auto combine = [](const Scalar& s, const Coords& x, const Scalar& t, const Coords& y) {
    return Coords{s * x[0] + t * y[0], s * x[1] + t * y[1], s * x[2] + t * y[2]};
  };
  if (a.is_zero()) {
    roots.push_back(u1);
    roots.push_back(combine(c, u1, -b, u2));
  } else {
    Scalar root = sqrt_adjoin(b * b - Scalar(4) * a * c);
    Scalar denom = (Scalar(2) * a).inverse();
    roots.push_back(combine((-b + root) * denom, u1, Scalar(1), u2));
    roots.push_back(combine((-b - root) * denom, u1, Scalar(1), u2));
  }
  for (const auto& pt : roots) out.factors.push_back(normalize_coords(cross_coords(k, pt)));
  std::sort(out.factors.begin(), out.factors.end(), coords_less);
  QuadraticForm p = product_form(out.factors[0], out.factors[1], q.ambient);
  for (std::size_t i = 0; i < 3 && out.scale.is_zero(); ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      if (!p.m(i, j).is_zero()) {
        out.scale = q.m(i, j) / p.m(i, j);
        break;
      }
    }
  return out;
}

}  // namespace kirwan
