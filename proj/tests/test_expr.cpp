#include <doctest.h>

#include "hvhom/errors.hpp"
#include "hvhom/expr.hpp"

using namespace hvhom;

namespace {

std::string roundtrip(const std::string& text) { return format_value(eval_expr(parse_expr(text))); }

}  // namespace

TEST_CASE("expression examples") {
  CHECK(roundtrip("[L2, I-2]") == "2*I0 + 6*CLI");
  const AlgElement x = parse_element("3/2*L2 + I-1 - CL");
  CHECK(x.size() == 3);
  CHECK(x.coeff(Generator::L(2)) == Scalar(3, 2));
  CHECK(x.coeff(Generator::I(-1)) == Scalar(1));
  CHECK(x.coeff(Generator::CL()) == Scalar(-1));
  CHECK_THROWS_AS(eval_expr(parse_expr("L1 + v0")), SortError);
}

TEST_CASE("sort rules") {
  CHECK_THROWS_AS(eval_expr(parse_expr("L1 + v0")), SortError);
  CHECK_THROWS_AS(eval_expr(parse_expr("[v1, v2]")), SortError);
  CHECK_THROWS_AS(eval_expr(parse_expr("[L1, v2]")), SortError);
  CHECK_THROWS_AS(eval_expr(parse_expr("3")), SortError);
  CHECK_THROWS_AS(parse_element("v1"), SortError);
  CHECK_THROWS_AS(parse_module_vec("L1"), SortError);
  CHECK(parse_module_vec("0").is_zero());
  CHECK(parse_element("0").is_zero());
  CHECK(parse_module_vec("2*v3 - v-1") == ModuleVec(3, Scalar(2)) - ModuleVec(-1));
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_expr("L1 + * L2");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
  }
  CHECK_THROWS_AS(parse_expr("3 L1"), ParseError);
  CHECK_THROWS_AS(parse_expr("[L1 L2]"), ParseError);
  CHECK_THROWS_AS(parse_expr("(L1"), ParseError);
  CHECK_THROWS_AS(parse_expr("L"), ParseError);
  CHECK_THROWS_AS(parse_expr("X1"), ParseError);
  CHECK_THROWS_AS(parse_expr("L1 L2"), ParseError);
  CHECK_THROWS_AS(parse_expr("L99999999999999999999"), ParseError);
  CHECK_THROWS_AS(parse_expr(""), ParseError);
}

TEST_CASE("whitespace, signs and nesting") {
  CHECK(roundtrip(" 2 * L1 ") == "2*L1");
  CHECK(roundtrip("-L1") == "-L1");
  CHECK(roundtrip("-2*L1 - -3*L1") == "L1");
  CHECK(roundtrip("3+i*L1") == "3+i*L1");
  CHECK(roundtrip("i*L1 - i*L1") == "0");
  CHECK(roundtrip("2*(L1 + I1) - I1") == "2*L1 + I1");
  CHECK(roundtrip("[[L1, L2], L-3]") == "-6*L0 - 2*CL");
  CHECK(roundtrip("[L1, L-1] + 0") == "2*L0");
  CHECK(roundtrip("CLI + CL + CI") == "CL + CLI + CI");
  CHECK(roundtrip("v-2 + 1/2*v3") == "v-2 + 1/2*v3");
}

TEST_CASE("canonical text round trips") {
  for (const char* text : {"0", "L0", "-L0", "2*I0 + 6*CLI", "3/2*L2 + I-1 - CL", "-1/2*L-3 + I2 - CI",
                           "i*L1 - i*I1", "3+i*L1 - 3-i*I2", "1/2i*CL", "-1/2+2/3i*L4", "v0", "-v5 + 7/2*v6",
                           "-i*v-1"}) {
    CAPTURE(text);
    const std::string once = roundtrip(text);
    CHECK(once == text);
    CHECK(roundtrip(once) == once);
  }
}
