#include <doctest.h>

#include <string>

#include "hvhom/errors.hpp"
#include "hvhom/expr.hpp"
#include "hvhom/homrep.hpp"
#include "fixtures.hpp"

using namespace hvhom;
using fixtures::admissible_cases;
using fixtures::endo;

namespace {

Scalar S(const char* t) { return parse_scalar(t); }

HomModuleSpec unchecked(const FamilyParams& f, const EndoParams& e, Index q, const Scalar& norm = Scalar(1)) {
  return HomModuleSpec{f, Endomorphism(e, calibrate_corrections(e, 8)), norm, q};
}

}  // namespace

TEST_CASE("admissibility") {
  const FamilyParams abf = FamilyParams::abf(Scalar(1, 3), Scalar(1, 5), Scalar(1));
  CHECK(admissibility(abf, endo(4, Scalar(1), Scalar(1), Scalar(0), Scalar(0))).q == 1);
  CHECK(admissibility(abf, endo(4, Scalar(1), Scalar(1), Scalar(0), Scalar(1, 4))).q == 0);
  try {
    admissibility(abf, endo(4, Scalar(1), Scalar(2), Scalar(0), Scalar(0)));
    FAIL("expected a violation");
  } catch (const ConstraintViolation& e) {
    CHECK(e.name() == "b=1");
  }
  CHECK_THROWS_AS(admissibility(abf, endo(4, Scalar(1), Scalar(1), Scalar(1), Scalar(0))), ConstraintViolation);
  CHECK_THROWS_AS(admissibility(abf, endo(2, Scalar(1), Scalar(1), Scalar(0), Scalar(0))), ConstraintViolation);

  const FamilyParams af = FamilyParams::af(Scalar(1, 3), Scalar(1));
  CHECK_NOTHROW(admissibility(af, endo(2, Scalar(1), Scalar(1, 2), Scalar(-1, 2), Scalar(0))));
  CHECK_THROWS_AS(admissibility(af, endo(2, Scalar(1), Scalar(1, 2), Scalar(1, 2), Scalar(0))), ConstraintViolation);
  CHECK_THROWS_AS(admissibility(FamilyParams::af(Scalar(2), Scalar(1)),
                                endo(2, Scalar(1), Scalar(1, 2), Scalar(-1, 2), Scalar(0))),
                  ConstraintViolation);
  CHECK_NOTHROW(admissibility(FamilyParams::af(Scalar(0), Scalar(1)),
                              endo(2, Scalar(1), Scalar(1, 2), Scalar(-1, 2), Scalar(0))));
  CHECK_NOTHROW(admissibility(FamilyParams::bf(Scalar(1, 3), Scalar(1)),
                              endo(2, Scalar(1), Scalar(1, 2), Scalar(1, 2), Scalar(0))));
  // F = 0: only k = 1 survives, c is free
  CHECK_NOTHROW(admissibility(FamilyParams::af(Scalar(1, 3), Scalar(0)),
                              endo(1, Scalar(1), Scalar(1), Scalar(7), Scalar(0))));
  CHECK_THROWS_AS(admissibility(FamilyParams::af(Scalar(1, 3), Scalar(0)),
                                endo(2, Scalar(1), Scalar(1, 2), Scalar(0), Scalar(0))),
                  ConstraintViolation);
  CHECK_THROWS_AS(admissibility(FamilyParams::u(Scalar(1)), endo(2, Scalar(1), Scalar(1), Scalar(0), Scalar(0))),
                  ConstraintViolation);
  CHECK_NOTHROW(admissibility(FamilyParams::vt(Scalar(1)), endo(5, Scalar(1), Scalar(1), Scalar(0), Scalar(0))));
  CHECK_THROWS_AS(make_hom_module_spec(abf, endo(4, Scalar(1), Scalar(1), Scalar(0), Scalar(0)), Scalar(0)),
                  ConstraintViolation);
}

TEST_CASE("twists and Hom actions") {
  const FamilyParams abf = FamilyParams::abf(Scalar(1), Scalar(0), Scalar(1));
  const HomModuleSpec s = make_hom_module_spec(abf, endo(2, Scalar(3), Scalar(1), Scalar(0), Scalar(0)));
  CHECK(s.q == 1);
  CHECK(twist_vec(s, 2) == ModuleVec(5, Scalar(9)));
  CHECK(twist_vec(s, 0) == ModuleVec(1));
  CHECK(twist_vec(s, -1) == ModuleVec(-1, Scalar(1, 3)));

  const HomModuleSpec s2 = make_hom_module_spec(abf, endo(2, Scalar(3), Scalar(1), Scalar(0), Scalar(0)), S("2i"));
  CHECK(twist_vec(s2, 0) == ModuleVec(1, S("2i")));

  const HomModuleSpec a1 = make_hom_module_spec(FamilyParams::abf(Scalar(1, 3), Scalar(0), Scalar(1)),
                                                endo(4, Scalar(1), Scalar(1), Scalar(0), Scalar(0)));
  CHECK(hom_act(a1, parse_element("L1"), ModuleVec(0)) == ModuleVec(5, Scalar(-1, 3)));
  CHECK(hom_act(a1, parse_element("CI"), parse_module_vec("v0 + v3")).is_zero());

  const HomModuleSpec id = make_hom_module_spec(abf, EndoParams{});
  for (Index t = -4; t <= 4; ++t) CHECK(twist_vec(id, t) == ModuleVec(t));
  const AlgElement x = parse_element("L2 - 1/2*I-1");
  const ModuleVec v = parse_module_vec("v1 + 2*v-3");
  CHECK(hom_act(id, x, v) == act(abf, x, v));
}

TEST_CASE("hom_act agrees with twist after act on basis inputs") {
  for (const auto& c : admissible_cases()) {
    const std::string label = c.name;
    CAPTURE(label);
    const HomModuleSpec s = make_hom_module_spec(c.family, c.endo);
    for (const auto& g : window_generators(4)) {
      for (Index t = -4; t <= 4; ++t) {
        const ModuleVec direct = act(c.family, g, t);
        ModuleVec expected;
        for (const auto& [u, coeff] : direct.terms()) {
          expected.add_term(c.endo.k * u + s.q, pow_int(c.endo.a, u) * coeff);
        }
        CHECK(hom_act(s, AlgElement(g), ModuleVec(t)) == expected);
      }
    }
  }
}

TEST_CASE("printed closed forms") {
  const HomModuleSpec a1 = make_hom_module_spec(FamilyParams::abf(Scalar(1, 3), Scalar(0), Scalar(1)),
                                                endo(4, Scalar(1), Scalar(1), Scalar(0), Scalar(0)));
  CHECK(hom_act_printed(a1, Generator::L(1), 0) == ModuleVec(5, Scalar(1, 3)));

  const Scalar a(2), m(5);
  const HomModuleSpec a2 = make_hom_module_spec(FamilyParams::af(Scalar(1, 3), Scalar(1)),
                                                endo(2, a, Scalar(1, 2), Scalar(-1, 2), Scalar(0)), m);
  CHECK(hom_act_printed(a2, Generator::L(1), 1) == ModuleVec(4, Scalar(2 * 2) * a * a * m));

  const Scalar F(3);
  const HomModuleSpec b = make_hom_module_spec(FamilyParams::bf(Scalar(1, 3), F),
                                               endo(2, a, Scalar(1, 2), Scalar(1, 6), Scalar(0)), m);
  CHECK(hom_act_printed(b, Generator::I(2), -2) == ModuleVec(0, Scalar(2) * F * m));
}

TEST_CASE("admissible specs satisfy both Hom-module conditions") {
  for (const auto& c : admissible_cases()) {
    const std::string label = c.name;
    CAPTURE(label);
    const HomModuleSpec s = make_hom_module_spec(c.family, c.endo, S("2/3"));
    CHECK(check_compat_27(s, 6).passed());
    CHECK(check_homrep_26(s, 5).passed());
  }
  const HomModuleSpec id = make_hom_module_spec(FamilyParams::v(Scalar(1)), EndoParams{});
  CHECK(check_compat_27(id, 6).passed());
  CHECK(check_homrep_26(id, 5).passed());
}

TEST_CASE("breaking one constraint breaks the module") {
  for (const auto& c : admissible_cases()) {
    for (const char which : {'b', 'c', 'd'}) {
      const std::string label = std::string(c.name) + " " + which;
      CAPTURE(label);
      const HomModuleSpec s = fixtures::mutated(c, which);
      CHECK_THROWS_AS(admissibility(c.family, s.endo.params()), ConstraintViolation);
      CHECK_FALSE(check_compat_27(s, 5).passed());
      // Where I only links v_{-n} and v_0, both sides of the Hom-representation
      // identity scale the same way in b, c and d, so it survives the mutation.
      const std::string tag = family_tag(c.family.family);
      const bool survives = tag == "bf" || tag == "u" || tag == "ut";
      CHECK(check_homrep_26(s, 5).passed() == survives);
    }
  }
  const HomModuleSpec b2 =
      unchecked(FamilyParams::abf(Scalar(1, 3), Scalar(1, 5), Scalar(1)), endo(4, Scalar(1), Scalar(2), Scalar(0), Scalar(0)), 1);
  const CheckReport r = check_compat_27(b2, 6, {10000, 1});
  bool found = false;
  for (const auto& cex : r.counterexamples) {
    const auto& p = cex.point.fields();
    if (p[0].second == Point::Value("I") && p[1].second == Point::Value(Index{1}) &&
        p[2].second == Point::Value(Index{0})) {
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("twist solver") {
  const FamilyParams abf = FamilyParams::abf(Scalar(1), Scalar(0), Scalar(1));
  for (const Scalar& a : {Scalar(1), Scalar(2), S("1-i")}) {
    CAPTURE(a.str());
    const TwistSolution sol = solve_twist_window(abf, endo(2, a, Scalar(1), Scalar(0), Scalar(0)), 10);
    CHECK(sol.interior == 8);
    CHECK(sol.dimension() == 1);
    TwistMatrix closed;
    for (Index t = -10; t <= 10; ++t) closed[{t, 2 * t + 1}] = pow_int(a, t);
    CHECK(sol.contains(closed));
    TwistMatrix other = closed;
    other[{0, 1}] = Scalar(2);
    CHECK_FALSE(sol.contains(other));
  }
  CHECK(solve_twist_window(abf, endo(2, Scalar(1), Scalar(2), Scalar(0), Scalar(0)), 10).dimension() == 0);

  const TwistSolution ident = solve_twist_window(FamilyParams::abf(Scalar(1, 3), Scalar(1, 5), Scalar(1)), EndoParams{}, 6);
  CHECK(ident.dimension() >= 1);
  TwistMatrix diag;
  for (Index t = -6; t <= 6; ++t) diag[{t, t}] = Scalar(1);
  CHECK(ident.contains(diag));

  for (const auto& c : admissible_cases()) {
    const std::string label = c.name;
    CAPTURE(label);
    const TwistSolution sol = solve_twist_window(c.family, c.endo, 8);
    const HomModuleSpec s = make_hom_module_spec(c.family, c.endo);
    TwistMatrix closed;
    for (Index t = -8; t <= 8; ++t) {
      const ModuleVec image = twist_vec(s, t);
      for (const auto& [j, coeff] : image.terms()) closed[{t, j}] = coeff;
    }
    CHECK(sol.dimension() >= 1);
    CHECK(sol.contains(closed));
  }
  CHECK_THROWS_AS(solve_twist_window(abf, endo(2, Scalar(1), Scalar(1), Scalar(0), Scalar(0)), 1), WindowTooSmall);
}

TEST_CASE("closed-form audit") {
  const HomModuleSpec a1 = make_hom_module_spec(FamilyParams::abf(Scalar(1, 3), Scalar(0), Scalar(1)),
                                                endo(4, Scalar(1), Scalar(1), Scalar(0), Scalar(0)));
  const AuditReport r1 = audit_section3(a1);
  CHECK(r1.identical());
  CHECK(r1.entries.size() == 26 * 13);
  for (const auto& c : r1.checks) CHECK(c.passed());

  CHECK(audit_section3(make_hom_module_spec(FamilyParams::abf(Scalar(1, 3), Scalar(1, 5), Scalar(1)), EndoParams{}))
            .identical());

  const Index k = 2;
  const HomModuleSpec a2 = make_hom_module_spec(FamilyParams::af(Scalar(1, 3), Scalar(1)),
                                                endo(k, Scalar(3), Scalar(1, 2), Scalar(-1, 2), Scalar(0)));
  const AuditReport r2 = audit_section3(a2, 6);
  std::set<std::string> expected;
  for (Index n = -6; n <= 6; ++n) {
    for (Index t = -6; t <= 6; ++t) {
      if (t != 0 && n + t != 0) expected.insert("L" + std::to_string(n) + "(v" + std::to_string(t) + ")");
    }
  }
  std::set<std::string> got;
  for (const auto& e : r2.entries) {
    if (e.matches) continue;
    got.insert(e.component);
    CHECK(parse_module_vec(e.printed) == Scalar(k) * parse_module_vec(e.derived));
  }
  CHECK(got == expected);
  for (const auto& c : r2.checks) CHECK(c.passed());
}

TEST_CASE("audit mismatches of the remaining closed forms") {
  const auto mismatched = [](const HomModuleSpec& s) {
    std::set<std::string> out;
    for (const auto& e : audit_section3(s, 4).entries) {
      if (!e.matches) out.insert(e.component);
    }
    return out;
  };
  // B': the special line carries a^n in print
  const HomModuleSpec b = make_hom_module_spec(FamilyParams::bf(Scalar(1, 3), Scalar(1)),
                                               endo(2, Scalar(2), Scalar(1, 2), Scalar(1, 2), Scalar(0)));
  std::set<std::string> want_b;
  for (Index n = -4; n <= 4; ++n) {
    if (n != 0) want_b.insert("L" + std::to_string(n) + "(v" + std::to_string(-n) + ")");
  }
  CHECK(mismatched(b) == want_b);
  CHECK(mismatched(make_hom_module_spec(FamilyParams::bf(Scalar(1, 3), Scalar(1)),
                                        endo(2, Scalar(1), Scalar(1, 2), Scalar(1, 2), Scalar(0))))
            .empty());

  for (const auto& f : {FamilyParams::u(Scalar(1)), FamilyParams::v(Scalar(1))}) {
    CHECK(mismatched(make_hom_module_spec(f, endo(2, Scalar(3), Scalar(1, 2), Scalar(0), Scalar(0)))).empty());
  }

  // U~': printed (t+n) where the composition has t
  std::set<std::string> want_ut;
  for (Index n = -4; n <= 4; ++n) {
    for (Index t = -4; t <= 4; ++t) {
      if (n != 0 && t != -n) want_ut.insert("L" + std::to_string(n) + "(v" + std::to_string(t) + ")");
    }
  }
  CHECK(mismatched(make_hom_module_spec(FamilyParams::ut(Scalar(1)),
                                        endo(2, Scalar(1), Scalar(1, 2), Scalar(0), Scalar(0)))) == want_ut);

  // V~': I_0 on v_0
  CHECK(mismatched(make_hom_module_spec(FamilyParams::vt(Scalar(1)),
                                        endo(2, Scalar(1), Scalar(1), Scalar(0), Scalar(0)))) ==
        std::set<std::string>{"I0(v0)"});
}

TEST_CASE("weight criterion") {
  const FamilyParams abf = FamilyParams::abf(Scalar(1, 3), Scalar(1, 5), Scalar(1));
  const HomModuleSpec k1q0 = make_hom_module_spec(abf, endo(1, Scalar(2), Scalar(1), Scalar(0), Scalar(0)));
  const HomModuleSpec k1q1 = make_hom_module_spec(abf, endo(1, Scalar(2), Scalar(1), Scalar(0), Scalar(-1)));
  const HomModuleSpec k4 = make_hom_module_spec(abf, endo(4, Scalar(1), Scalar(1), Scalar(0), Scalar(0)));
  const HomModuleSpec v1 = make_hom_module_spec(FamilyParams::v(Scalar(1)), endo(1, Scalar(3), Scalar(1), Scalar(0), Scalar(0)));
  REQUIRE(k1q1.q == 1);
  CHECK(is_weight_module(k1q0));
  CHECK_FALSE(is_weight_module(k1q1));
  CHECK_FALSE(is_weight_module(k4));
  CHECK(is_weight_module(v1));
  CHECK(l0_acts_diagonally(k1q0, 8));
  CHECK(l0_acts_diagonally(v1, 8));
  CHECK_FALSE(l0_acts_diagonally(k1q1, 8));
  CHECK_FALSE(l0_acts_diagonally(k4, 8));
}
