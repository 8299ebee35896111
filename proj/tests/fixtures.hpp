#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hvhom/homrep.hpp"

namespace fixtures {

using namespace hvhom;

inline EndoParams endo(Index k, Scalar a, Scalar b, Scalar c, Scalar d) {
  return EndoParams{k, std::move(a), std::move(b), std::move(c), std::move(d)};
}

struct Case {
  const char* name;
  FamilyParams family;
  EndoParams endo;
};

// One admissible parameter choice per primed family, plus two variants with
// a != 1.
inline std::vector<Case> admissible_cases() {
  const Scalar third(1, 3);
  return {
      {"abf", FamilyParams::abf(third, Scalar(0), Scalar(1)), endo(4, Scalar(1), Scalar(1), Scalar(0), Scalar(0))},
      {"abf-a", FamilyParams::abf(third, Scalar(1, 5), Scalar(1)),
       endo(4, parse_scalar("3+i"), Scalar(1), Scalar(0), Scalar(0))},
      {"af", FamilyParams::af(third, Scalar(1)), endo(2, Scalar(1), Scalar(1, 2), Scalar(-1, 2), Scalar(0))},
      {"af-a", FamilyParams::af(third, Scalar(2)), endo(-2, Scalar(2), Scalar(-1, 2), Scalar(-3, 4), Scalar(0))},
      {"bf", FamilyParams::bf(third, Scalar(1)), endo(2, Scalar(2), Scalar(1, 2), Scalar(1, 2), Scalar(0))},
      {"u", FamilyParams::u(Scalar(1)), endo(2, Scalar(2), Scalar(1, 2), Scalar(0), Scalar(0))},
      {"v", FamilyParams::v(Scalar(1)), endo(-1, Scalar(1, 2), Scalar(-1), Scalar(0), Scalar(0))},
      {"ut", FamilyParams::ut(Scalar(2)), endo(3, parse_scalar("i"), Scalar(1, 3), Scalar(0), Scalar(0))},
      {"vt", FamilyParams::vt(Scalar(2)), endo(2, Scalar(3), Scalar(1), Scalar(0), Scalar(0))},
  };
}

// The module with b, c or d moved off its admissible value, q and norm kept.
// The step is not an integer so the abf integrality condition breaks too.
inline HomModuleSpec mutated(const Case& c, char which) {
  const Index q = admissibility(c.family, c.endo).q;
  EndoParams e = c.endo;
  Scalar& field = which == 'b' ? e.b : which == 'c' ? e.c : e.d;
  field = field + Scalar(1, 7);
  return HomModuleSpec{c.family, Endomorphism(e, calibrate_corrections(e, 8)), Scalar(1), q};
}

}  // namespace fixtures
