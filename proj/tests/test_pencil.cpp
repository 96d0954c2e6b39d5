#include <doctest.h>

#include "kirwan/errors.hpp"
#include "kirwan/pencil.hpp"
#include "support.hpp"

using namespace kirwan;
using testing_support::random_scalar;
using testing_support::random_pencil;
using testing_support::random_vec;

namespace {

VecV e(int i) { return VecV::basis(i); }
CovecV z(int i) { return CovecV::basis(i); }
const VecV zero;

using RVec = Tri<RatFunc, Space::V>;
using RCovec = Tri<RatFunc, Space::Dual>;

RVec re(int i) { return RVec::basis(i); }
RCovec rz(int i) { return RCovec::basis(i); }
const RatFunc t = RatFunc(UPoly::t());

CovecMatrix<RatFunc> covec_matrix(std::array<RCovec, 4> top, std::array<RCovec, 4> bottom) {
  CovecMatrix<RatFunc> b;
  b.entry = {top, bottom};
  return b;
}


}  // namespace

TEST_CASE("det of pencils") {
  auto q = det_pencil(PencilMatrix(e(0), e(1), -e(2), e(0)));
  CHECK(q == sym_product(e(0), e(0)) + sym_product(e(1), e(2)));
  CHECK(det_pencil(PencilMatrix(e(0), zero, zero, e(2))) == sym_product(e(0), e(2)));
  CHECK(det_pencil(PencilMatrix(e(0), zero, zero, e(0))) == sym_product(e(0), e(0)));
}

TEST_CASE("pluecker coordinates") {
  auto p = pluecker(PencilMatrix(e(0), e(1), -e(2), e(0)));
  CHECK(p.phi[0] == z(1));
  CHECK(p.phi[1] == -z(0));
  CHECK(p.phi[2] == -z(2));
  Scalar s(Rational(3, 7));
  auto p2 = pluecker(PencilMatrix(e(0), s * e(1), s * e(2), e(0)));
  CHECK(p2.phi[0] == -s * z(1));
  CHECK(p2.phi[1] == s * s * z(0));
  CHECK(p2.phi[2] == -s * z(2));
  CHECK(is_zero(pluecker(PencilMatrix(e(0), zero, zero, e(0))).phi));
  CHECK_THROWS_AS(pluecker(PencilMatrix(e(0), e(1), Scalar(2) * e(0), Scalar(2) * e(1))), PreconditionError);
}

TEST_CASE("Z_G membership") {
  CHECK(is_in_ZG(PencilMatrix(e(0), zero, zero, e(0))));
  CHECK_FALSE(is_in_ZG(PencilMatrix(e(0), zero, zero, e(2))));
  CHECK_FALSE(is_in_ZG(PencilMatrix(e(0), Scalar(2) * e(0), e(1), Scalar(2) * e(1))));
}

TEST_CASE("relation and left covariance on random pencils") {
  for (int trial = 0; trial < 300; ++trial) {
    PencilMatrix a = random_pencil();
    auto p = pluecker(a);
    for (const auto& row : pluecker_relation(a, p.phi))
      for (const auto& v : row) CHECK(v.is_zero());
    Scalar g00 = random_scalar(), g01 = random_scalar(), g10 = random_scalar(), g11 = random_scalar();
    Scalar dg = g00 * g11 - g01 * g10;
    if (dg.is_zero()) continue;
    PencilMatrix ga(g00 * a.x + g01 * a.y, g00 * a.xp + g01 * a.yp, g10 * a.x + g11 * a.y, g10 * a.xp + g11 * a.yp);
    auto pg = pluecker(ga);
    CHECK(pg.q == dg * p.q);
    for (std::size_t i = 0; i < 3; ++i) CHECK(pg.phi[i] == dg * p.phi[i]);
    CHECK(same_span(a, ga));
  }
}

TEST_CASE("Beilinson B is exact") {
  for (int trial = 0; trial < 100; ++trial) {
    PencilMatrix a = random_pencil();
    auto b = beilinson_B(a);
    CHECK(column_span(b).rank() == 4);
    CHECK(row_pairing(a, b).is_zero());
  }
}

TEST_CASE("Beilinson B matches the type 1 and type 2 resolutions") {
  for (const auto& [ar, br] : {std::pair<int, int>{1, 1}, {2, -3}, {-1, 5}}) {
    RatFunc a(ar), b(br);
    PencilT<RatFunc> pen(re(0), -(t * a) * re(1), (t * b) * re(2), -re(0));
    auto expected = covec_matrix({rz(1), rz(2), (t * a) * rz(0), RCovec()}, {RCovec(), (t * b) * rz(0), rz(1), rz(2)});
    CHECK(row_pairing(pen, expected).is_zero());
    CHECK(same_column_span(beilinson_B(pen), expected));
  }
  PencilT<RatFunc> pen(re(0), -t * re(1), -t * re(1), re(2));
  auto expected = covec_matrix({rz(2), rz(1), t * rz(0), RCovec()}, {RCovec(), t * rz(2), rz(1), rz(0)});
  CHECK(same_column_span(beilinson_B(pen), expected));
}

TEST_CASE("common binary roots") {
  // (S - T)(S + 2T) = S^2 + ST - 2T^2
  auto roots = common_binary_roots({{Scalar(1), Scalar(1), Scalar(-2)}});
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == std::array<Scalar, 2>{Scalar(-2), Scalar(1)});
  CHECK(roots[1] == std::array<Scalar, 2>{Scalar(1), Scalar(1)});
  // S^2 - 2ST + T^2 and S^2 - T^2 share (1:1)
  auto shared = common_binary_roots({{Scalar(1), Scalar(-2), Scalar(1)}, {Scalar(1), Scalar(0), Scalar(-1)}});
  REQUIRE(shared.size() == 1);
  CHECK(shared[0] == std::array<Scalar, 2>{Scalar(1), Scalar(1)});
  CHECK(common_binary_roots({{Scalar(1), Scalar(0), Scalar(0)}, {Scalar(0), Scalar(0), Scalar(1)}}).empty());
  CHECK(common_binary_roots({{Scalar(0), Scalar(1), Scalar(0)}}).size() == 2);
}

TEST_CASE("sheaf singularities") {
  auto nonsplit = sheaf_singularities(PencilMatrix(e(0), zero, e(1), e(2)));
  REQUIRE(nonsplit.singular_points.size() == 1);
  CHECK(nonsplit.singular_points[0] == e(0));

  auto split = sheaf_singularities(PencilMatrix(e(0), zero, zero, e(2)));
  REQUIRE(split.singular_points.size() == 2);
  // tie-break puts the lexicographically smaller factor e2 first
  CHECK(split.x == e(2));
  CHECK(split.singular_points[0] == e(2));
  CHECK(split.singular_points[1] == e(0));

  auto split2 = sheaf_singularities(PencilMatrix(e(0), zero, e(0) + e(2), e(2)));
  CHECK(split2.singular_points.size() == 2);

  auto smooth = sheaf_singularities(PencilMatrix(e(0), e(1), -e(2), e(0)));
  CHECK(smooth.locally_free);
  CHECK(smooth.singular_points.empty());

  CHECK_THROWS_AS(sheaf_singularities(PencilMatrix(e(0), zero, e(1), zero)), PreconditionError);

  // Z_G: A = x (x) N is diag(x, x) after row operations
  auto zg = sheaf_singularities(PencilMatrix(Scalar(2) * e(1), Scalar(-2) * e(1), e(1), Scalar(3) * e(1)));
  CHECK_FALSE(zg.locally_free);
  CHECK(zg.singular_points == std::vector<VecV>{e(1)});
  CHECK(zg.s_equivalence_pair == std::vector<VecV>{e(1), e(1)});
}

TEST_CASE("singularity report does not depend on the presentation") {
  const PencilMatrix bases[] = {PencilMatrix(e(0), zero, e(1), e(2)), PencilMatrix(e(0), zero, zero, e(2)),
                                PencilMatrix(e(1), zero, e(0) + e(2), e(1) - e(2))};
  for (const auto& base : bases) {
    auto ref = sheaf_singularities(base);
    for (int trial = 0; trial < 30; ++trial) {
      Scalar g[4], h[4];
      for (auto& v : g) v = random_scalar();
      for (auto& v : h) v = random_scalar();
      if ((g[0] * g[3] - g[1] * g[2]).is_zero() || (h[0] * h[3] - h[1] * h[2]).is_zero()) continue;
      PencilMatrix ga(g[0] * base.x + g[1] * base.y, g[0] * base.xp + g[1] * base.yp, g[2] * base.x + g[3] * base.y,
                      g[2] * base.xp + g[3] * base.yp);
      PencilMatrix gah(h[0] * ga.x + h[2] * ga.xp, h[1] * ga.x + h[3] * ga.xp, h[0] * ga.y + h[2] * ga.yp,
                       h[1] * ga.y + h[3] * ga.yp);
      auto rep = sheaf_singularities(gah);
      CHECK(rep.singular_points == ref.singular_points);
    }
  }
}
