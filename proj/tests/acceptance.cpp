// Acceptance run: one PASS/FAIL line per criterion. The optional argument is
// the path of the unit test binary, timed for the suite budget.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "kirwan/conic_geometry.hpp"
#include "kirwan/degeneration.hpp"
#include "kirwan/fixtures.hpp"
#include "kirwan/trees.hpp"
#include "worked_charts.hpp"
#include "support.hpp"
#include "tree_oracle.hpp"

using namespace kirwan;
using namespace testing_support;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

/// Collects the first failure of a criterion.
class Verdict {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok && failure_.empty()) failure_ = what;
  }
  const std::string& failure() const { return failure_; }

 private:
  std::string failure_;
};

VecV e(int i) { return VecV::basis(i); }
CovecV z(int i) { return CovecV::basis(i); }
const VecV kZero;

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

const FamilyFixture& fixture(const std::string& name) {
  static const std::vector<FamilyFixture> all = family_fixtures();
  for (const auto& f : all)
    if (f.name == name) return f;
  throw std::logic_error("no fixture " + name);
}

std::string pluecker_relation_holds(Verdict& v) {
  const auto start = Clock::now();
  for (int i = 0; i < 500; ++i) {
    PencilMatrix a = random_pencil();
    for (const auto& row : pluecker_relation(a, pluecker_phi(a)))
      for (const auto& x : row) v.require(x.is_zero(), "relation is nonzero on a random pencil");
  }
  const double elapsed = seconds_since(start);
  v.require(elapsed < 5.0, "took longer than 5 s");
  std::ostringstream s;
  s << std::fixed << std::setprecision(3) << elapsed << " s for 500 pencils";
  return s.str();
}

std::string equivariance(Verdict& v) {
  for (int i = 0; i < 200; ++i) {
    PencilMatrix a = random_pencil();
    GroupElement g = random_group_element();
    const Phi phi = pluecker_phi(a);
    const PencilMatrix ag = act_pencil(a, g);
    v.require(projectively_equal(pluecker_phi(ag), act_phi(phi, g)), "phi(Ag) differs from S2g phi(A)");
    v.require(det_pencil(ag) == det_pencil(a), "det changes under SL2");
    v.require(projectively_equal(pairwise_wedges(act_phi(phi, g)), act_psi(pairwise_wedges(phi), g)),
              "second wedge map is not equivariant");
  }
  return "200 random pairs";
}

std::string dual_conic_identity(Verdict& v) {
  std::optional<Scalar> constant;
  int used = 0;
  for (int i = 0; used < 200 && i < 1000; ++i) {
    PencilMatrix a = random_pencil();
    const QuadraticForm det = det_pencil(a);
    if (rank(det) != 3) continue;
    ++used;
    const QuadraticForm adj = adjugate(det);
    const QuadraticForm disc = disc_form(pluecker_phi(a));
    if (!constant) {
      for (std::size_t k = 0; k < 9 && !constant; ++k) {
        if (!adj(k / 3, k % 3).is_zero()) constant = disc(k / 3, k % 3) / adj(k / 3, k % 3);
      }
    }
    v.require(constant.has_value() && disc == *constant * adj, "disc is not a fixed multiple of adj(det)");
  }
  v.require(used == 200, "too few nondegenerate pencils");
  return "c = " + (constant ? constant->to_string() : std::string("?")) + " on 200 pencils";
}

bool torus_agrees(const XTildePoint& p) {
  const CanonicalClass c = canonical_reduce(p.phi);
  const XTildePoint q = c.witness ? act(p, *c.witness) : p;
  return stability_xtilde(q) == torus_verdict(weight_spectrum(q.base, q.phi));
}

std::string stability_oracle(Verdict& v) {
  const PencilMatrix diag00(e(0), kZero, kZero, e(0));
  const std::vector<Phi> normal_forms{{z(1), CovecV(), CovecV()},       {CovecV(), z(1), CovecV()},
                                      {CovecV(), z(1), z(2)},           {CovecV(), z(1), z(1)},
                                      {z(1), CovecV(), z(2)},           {z(1), CovecV(), z(1)},
                                      {CovecV(), CovecV(), z(2)}};
  int count = 0;
  for (const Phi& phi : normal_forms) {
    v.require(torus_agrees(make_xtilde_point(diag00, phi)), "disagreement on an exceptional normal form");
    ++count;
  }
  std::vector<PencilMatrix> bases{PencilMatrix(e(0), kZero, e(1), e(2)), PencilMatrix(e(0), kZero, kZero, e(2)),
                                  PencilMatrix(e(0), kZero, e(1), kZero)};
  for (const auto& f : stable_pencil_fixtures()) bases.push_back(f.pencil);
  for (const auto& a : bases) {
    v.require(torus_agrees(lift_to_xtilde(a)), "disagreement on a pencil off Z_G");
    ++count;
  }
  for (int trial = 0; trial < 100; ++trial) v.require(torus_agrees(random_xtilde_point(trial)), "random point");
  return std::to_string(count) + " normal forms and 100 random points";
}

std::string golden_matrices(Verdict& v) {
  for (const auto& [ar, br] : {std::pair<int, int>{1, 1}, {2, -3}, {-1, 5}}) {
    RatFunc a(ar), b(br);
    PencilT<RatFunc> pen(re(0), -(t * a) * re(1), (t * b) * re(2), -re(0));
    auto expected = covec_matrix({rz(1), rz(2), (t * a) * rz(0), RCovec()}, {RCovec(), (t * b) * rz(0), rz(1), rz(2)});
    v.require(same_column_span(beilinson_B(pen), expected), "type 1 B(t)");
  }
  for (const RatFunc& s : {t, t * t}) {
    PencilT<RatFunc> pen(re(0), -s * re(1), -s * re(1), re(2));
    auto expected = covec_matrix({rz(2), rz(1), s * rz(0), RCovec()}, {RCovec(), s * rz(2), rz(1), rz(0)});
    v.require(same_column_span(beilinson_B(pen), expected), "type 2 B(t)");
  }
  PencilT<RatFunc> type3(re(0), -(t * t * t) * re(1), -(t * t * t) * re(1), re(0) + t * re(2));
  auto b3 = covec_matrix({rz(2), rz(1), (t * t * t) * rz(0), RCovec()},
                         {RCovec(), (t * t) * rz(2), rz(1), t * rz(0) - rz(2)});
  v.require(same_column_span(beilinson_B(type3), b3), "type 3 B(t)");

  v.require(proper_transform_matrix(matrix({"x1", "x2", "t*a*x0", "0"}, {"0", "t*b*x0", "x1", "x2"}),
                                    single_point_chart("u")) ==
                matrix({"u1", "u2", "a*u0", "0"}, {"0", "b*u0", "u1", "u2"}),
            "type 1 proper transform");
  const BlowupChart two = two_point_chart();
  v.require(proper_transform_matrix(matrix({"x2", "x1", "t*x0", "0"}, {"0", "t*x2", "x1", "x0"}), two) ==
                matrix({"u2", "u1", "u0", "0"}, {"0", "v2", "v1", "v0"}),
            "linear two point proper transform");
  const SymMatrix bz = proper_transform_matrix(matrix({"x2", "x1", "t^2*x0", "0"}, {"0", "t^2*x2", "x1", "x0"}), two);
  v.require(bz == matrix({"u2", "u1", "t*u0", "0"}, {"0", "t*v2", "v1", "v0"}), "quadratic two point proper transform");
  v.require(elementary_transform_matrix(bz, elementary_chart()) ==
                matrix({"u2", "ub1", "ut0", "0"}, {"0", "vt2", "vb1", "v0"}),
            "elementary transform");
  return "B(t) for all families, proper and elementary transforms";
}

std::string degeneration_types(Verdict& v) {
  struct Case {
    const char* name;
    DegenerationType type;
    PencilMatrix base;
    Phi phi;
    Psi psi;
  };
  const PencilMatrix diag00(e(0), kZero, kZero, e(0)), diag02(e(0), kZero, kZero, e(2));
  const std::vector<Case> cases{
      {"type1", DegenerationType::Type1, diag00, {z(1), CovecV(), z(2)}, {VecV(), e(0), VecV()}},
      {"type2-linear", DegenerationType::Type2, diag02, {CovecV(), z(1), CovecV()}, {e(0), VecV(), e(2)}},
      {"type2-quadratic", DegenerationType::Type2, diag02, {CovecV(), z(1), CovecV()}, {e(0), VecV(), e(2)}},
      {"type3", DegenerationType::Type3, diag00, {CovecV(), z(1), CovecV()}, {e(0), VecV(), e(0)}}};
  for (const auto& c : cases) {
    const PencilFamily& f = fixture(c.name).family;
    v.require(classify_family(f) == c.type, std::string(c.name) + " has the wrong type");
    const YPoint y = limit_lift(f);
    v.require(same_span(y.xpoint.base, c.base) && projectively_equal(y.xpoint.phi, c.phi) &&
                  projectively_equal(y.psi, c.psi),
              std::string(c.name) + " has the wrong limit");
  }
  return "Type1, Type2 (t and t^2), Type3 with their limits";
}

std::string exceptional_conic(Verdict& v) {
  using SVec = Tri<SymPoly, Space::V>;
  const SymPoly ts = sym("t");
  auto vec = [](SymPoly a, SymPoly b, SymPoly c) { return SVec(std::move(a), std::move(b), std::move(c)); };
  const SVec e0 = vec(SymPoly(1), SymPoly(0), SymPoly(0));
  PencilT<SymPoly> a(e0 + ts * vec(sym("a0"), sym("x1"), sym("x2")), ts * vec(sym("b0"), SymPoly(0), SymPoly(-1)),
                     ts * vec(sym("c0"), SymPoly(1), SymPoly(0)), e0 + ts * vec(sym("d0"), sym("x1"), sym("x2")));
  PhiT<SymPoly> phi = pluecker_phi(a);
  std::array<Tri<SymPoly, Space::Dual>, 3> reduced;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t k = 0; k < 3; ++k) {
      auto q = phi[i][k].divide(monomial({"t"}));
      if (!q) {
        v.require(false, "phi is not divisible by t");
        return "";
      }
      reduced[i][k] = *q;
    }
  const ExceptionalConic c = exceptional_conic_from_phi(reduced);
  v.require(c.equation == P("u0^2 - 4*(u2 - x2*u0)*(-u1 + x1*u0)"), "conic is " + c.equation.to_string());
  v.require(c.line_restriction == P("u1*u2"), "line ideal is " + c.line_restriction.to_string());
  return "Gamma_p = " + c.equation.to_string() + ", restriction " + c.line_restriction.to_string();
}

std::string singularity_notice(Verdict& v) {
  const auto nonsplit = sheaf_singularities(PencilMatrix(e(0), kZero, e(1), e(2)));
  v.require(nonsplit.singular_points == std::vector<VecV>{e(0)}, "non-split extension");
  const auto split = sheaf_singularities(PencilMatrix(e(0), kZero, kZero, e(2)));
  v.require(split.singular_points.size() == 2, "split extension point count");
  for (const VecV& p : {e(0), e(2)}) {
    bool found = false;
    for (const auto& s : split.singular_points) found = found || proportional(s, p);
    v.require(found, "split extension misses a point");
  }
  return "[e0] for the non-split case, [e0] and [e2] for the split case";
}

std::string tree_counts(Verdict& v) {
  std::string counts;
  for (int n = 1; n <= 3; ++n) {
    const std::size_t mine = enumerate_trees(n).weighted.size();
    const std::size_t oracle = tree_oracle(n).classes;
    v.require(mine == oracle, "n = " + std::to_string(n) + " disagrees with the oracle");
    counts += (n > 1 ? ", " : "") + std::to_string(mine);
  }
  v.require(enumerate_trees(1).weighted.size() == 2 && enumerate_trees(2).weighted.size() == 6, "frozen counts");
  const TreeEnumeration two = enumerate_trees(2);
  for (const WeightedTree& limit : {WeightedTree::chain({0, 2}), WeightedTree::star(0, {1, 1}),
                                    WeightedTree::chain_then_star({0, 0}, {1, 1})}) {
    bool found = false;
    for (const auto& w : two.weighted) found = found || tree_iso(w, limit);
    v.require(found, "limit tree " + canonical_encoding(limit) + " missing for n = 2");
  }
  return "counts " + counts + " for n = 1, 2, 3";
}

std::string y_stability(Verdict& v) {
  for (int trial = 0; trial < 200; ++trial) {
    const XTildePoint p = random_xtilde_point(trial);
    const YPoint y = random_y_point(p);
    const Stability s = stability_Y(y);
    v.require(s != Stability::ProperlySemistable, "properly semistable point in Y");
    v.require(stability_Y(act(y, random_group_element())) == s, "verdict changes under G");
  }
  return "200 points";
}

}  // namespace

int main(int argc, char** argv) {
  const auto suite_start = Clock::now();
  const std::vector<std::pair<std::string, std::function<std::string(Verdict&)>>> criteria{
      {"Pluecker relation", pluecker_relation_holds},
      {"equivariance of phi and of the second wedge map", equivariance},
      {"dual conic identity", dual_conic_identity},
      {"stability classifier against the torus weights", stability_oracle},
      {"golden resolution matrices", golden_matrices},
      {"degeneration classification", degeneration_types},
      {"exceptional conic", exceptional_conic},
      {"singularity notice", singularity_notice},
      {"tree enumeration", tree_counts},
      {"stability in the second blow-up", y_stability}};

  int failures = 0;
  auto report = [&](std::size_t id, const std::string& name, const std::string& failure, const std::string& detail) {
    std::cout << (failure.empty() ? "PASS" : "FAIL") << " [" << id << "] " << name << ": "
              << (failure.empty() ? detail : failure) << "\n";
    failures += !failure.empty();
  };
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    std::string detail;
    try {
      detail = criteria[i].second(v);
    } catch (const std::exception& ex) {
      v.require(false, std::string("exception: ") + ex.what());
    }
    report(i + 1, criteria[i].first, v.failure(), detail);
  }

  Verdict budget;
  std::ostringstream detail;
  if (argc < 2) {
    budget.require(false, "unit test binary not given");
  } else {
    const auto start = Clock::now();
    const int status = std::system((std::string(argv[1]) + " > /dev/null 2>&1").c_str());
    const double units = seconds_since(start);
    const double total = seconds_since(suite_start);
    budget.require(status == 0, "unit tests failed");
    budget.require(total < 60.0, "suite took longer than 60 s");
    detail << std::fixed << std::setprecision(1) << total << " s (unit tests " << units << " s)";
  }
  report(criteria.size() + 1, "full suite time", budget.failure(), detail.str());
  return failures == 0 ? 0 : 1;
}
