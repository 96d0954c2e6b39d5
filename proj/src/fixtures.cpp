#include "kirwan/fixtures.hpp"

namespace kirwan {

namespace {

VecV e(int i) { return VecV::basis(i); }

FamilyVec at(int power, const VecV& v) { return family_vec({{power, v}}); }

}  // namespace

std::vector<FamilyFixture> family_fixtures() {
  return {
      {"type1", "[[e0, t e1], [t e2, e0]]", PencilFamily(at(0, e(0)), at(1, e(1)), at(1, e(2)), at(0, e(0))),
       DegenerationType::Type1},
      {"type2-linear", "[[e0, -t e1], [-t e1, e2]]",
       PencilFamily(at(0, e(0)), at(1, -e(1)), at(1, -e(1)), at(0, e(2))), DegenerationType::Type2},
      {"type2-quadratic", "[[e0, -t^2 e1], [-t^2 e1, e2]]",
       PencilFamily(at(0, e(0)), at(2, -e(1)), at(2, -e(1)), at(0, e(2))), DegenerationType::Type2},
      {"type3", "[[e0, -t^3 e1], [-t^3 e1, e0 + t e2]]",
       PencilFamily(at(0, e(0)), at(3, -e(1)), at(3, -e(1)), family_vec({{0, e(0)}, {1, e(2)}})),
       DegenerationType::Type3},
  };
}

std::vector<PencilFixture> stable_pencil_fixtures() {
  return {
      {"e0^2+e1e2", PencilMatrix(e(0), e(1), -e(2), e(0))},
      {"e0e2-e1^2", PencilMatrix(e(0), e(1), e(1), e(2))},
      {"e0^2+e0e1-e1e2", PencilMatrix(e(0), e(2), e(1), e(0) + e(1))},
      {"e1^2+e1e2-e0e2", PencilMatrix(e(1), e(0), e(2), e(1) + e(2))},
      {"2e0e2-e1^2+e1e2", PencilMatrix(Scalar(2) * e(0), e(1), e(1) - e(2), e(2))},
  };
}

}  // namespace kirwan
