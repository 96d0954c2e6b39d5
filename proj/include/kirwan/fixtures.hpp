#ifndef KIRWAN_FIXTURES_HPP
#define KIRWAN_FIXTURES_HPP

#include <string>
#include <vector>

#include "kirwan/degeneration.hpp"

namespace kirwan {

struct FamilyFixture {
  std::string name;
  std::string description;
  PencilFamily family;
  DegenerationType expected;
};

/// The worked degenerations: one exceptional point, two points (linear and
/// quadratic in t) and two consecutive blow-ups.
std::vector<FamilyFixture> family_fixtures();

struct PencilFixture {
  std::string name;
  PencilMatrix pencil;
};

/// Pencils with smooth jumping conic.
std::vector<PencilFixture> stable_pencil_fixtures();

}  // namespace kirwan

#endif
