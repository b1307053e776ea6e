#include <doctest.h>

#include <random>

#include "hopfbrace/skew_brace.hpp"

using namespace hopfbrace;

namespace {

Table c4_add()
{
  Table t(4, std::vector<Index>(4));
  for (Index a = 0; a < 4; ++a)
    for (Index b = 0; b < 4; ++b)
      t[a][b] = (a + b) % 4;
  return t;
}

Table c4_radical()
{
  Table t(4, std::vector<Index>(4));
  for (Index a = 0; a < 4; ++a)
    for (Index b = 0; b < 4; ++b)
      t[a][b] = (a + b + 2 * a * b) % 4;
  return t;
}

} // namespace

TEST_CASE("validate_skew_brace accepts the examples")
{
  Table c2 = {{0, 1}, {1, 0}};
  CHECK(validate_skew_brace(c2, c2, 0).validated());
  auto b = validate_skew_brace(c4_add(), c4_radical(), 0);
  CHECK(b == radical_c4());
  CHECK(opposite_brace(symmetric_group(3)).validated());
}

TEST_CASE("declared identity must match")
{
  try {
    validate_skew_brace(c4_add(), c4_add(), 1);
    FAIL("expected identity mismatch");
  } catch (const ValidationError& e) {
    CHECK(e.kind() == Violation::IdentityMismatch);
    CHECK(e.witness() == std::vector<Index>{1, 0});
  }
}

TEST_CASE("one corrupted circ entry yields a compatibility triple")
{
  auto circ = c4_radical();
  circ[1][1] = 2; // compatibility is checked before the circ group axioms
  try {
    validate_skew_brace(c4_add(), circ, 0);
    FAIL("expected compatibility violation");
  } catch (const ValidationError& e) {
    CHECK(e.kind() == Violation::Compatibility);
    REQUIRE(e.witness().size() == 3);
    Index a = e.witness()[0], b = e.witness()[1], c = e.witness()[2];
    auto dot = c4_add();
    Index lhs = circ[a][dot[b][c]];
    Index rhs = dot[dot[circ[a][b]][(4 - a) % 4]][circ[a][c]];
    CHECK(lhs != rhs);
  }
}

TEST_CASE("lambda and star on radical_c4")
{
  auto b = radical_c4();
  CHECK(lambda_act(b, 1, 1) == 3);
  CHECK(star_set(b, 1, 1) == 2);
  for (Index x = 0; x < 4; ++x) {
    CHECK(lambda_act(b, 2, x) == x);
    CHECK(star_set(b, 2, x) == 0);
    CHECK(lambda_act(b, x, 1) == (1 + 2 * x) % 4);
  }
  CHECK_THROWS_AS(lambda_act(b, 4, 0), std::out_of_range);
  CHECK_THROWS_AS(star_set(b, 0, 9), std::out_of_range);
}

TEST_CASE("trivial and opposite braces")
{
  auto s3 = symmetric_group(3);
  auto t = trivial_brace(s3);
  auto o = opposite_brace(s3);
  std::vector<Index> image;
  for (Index a = 0; a < 6; ++a)
    for (Index b = 0; b < 6; ++b) {
      CHECK(t.lambda(a, b) == b);
      CHECK(t.star(a, b) == 0);
      // a⋆b = a⁻¹·b·a·b⁻¹ in the opposite brace
      CHECK(o.star(a, b) == s3.mul(s3.mul(s3.inv(a), b), s3.mul(a, s3.inv(b))));
      image.push_back(o.star(a, b));
    }
  CHECK(subgroup_generated(s3, image).size() == 3);
}

TEST_CASE("set-level laws on several braces")
{
  std::vector<SkewBrace> braces = {radical_c4(), opposite_brace(symmetric_group(3)),
                                   opposite_brace(dihedral_group(4)),
                                   direct_product(radical_c4(), opposite_brace(symmetric_group(3)))};
  for (const auto& b : braces) {
    const auto n = static_cast<Index>(b.order());
    for (Index a = 0; a < n; ++a)
      for (Index x = 0; x < n; ++x) {
        CHECK(b.circ().mul(a, x) == b.dot().mul(a, b.lambda(a, x)));
        Index direct = b.dot().mul(b.dot().mul(b.dot().inv(a), b.circ().mul(a, x)), b.dot().inv(x));
        CHECK(b.star(a, x) == direct);
        for (Index y = 0; y < n; ++y) {
          CHECK(b.lambda(b.circ().mul(a, x), y) == b.lambda(a, b.lambda(x, y)));
          CHECK(b.lambda(a, b.dot().mul(x, y)) == b.dot().mul(b.lambda(a, x), b.lambda(a, y)));
        }
      }
  }
}

TEST_CASE("direct product is componentwise")
{
  auto r = radical_c4();
  auto p = direct_product(r, r);
  CHECK(p.order() == 16);
  std::mt19937 rng(3);
  std::uniform_int_distribution<Index> d(0, 3);
  for (int k = 0; k < 20; ++k) {
    Index a1 = d(rng), a2 = d(rng), b1 = d(rng), b2 = d(rng);
    CHECK(p.star(a1 * 4 + a2, b1 * 4 + b2) == r.star(a1, b1) * 4 + r.star(a2, b2));
  }
}

TEST_CASE("morphisms and kernels")
{
  auto r = radical_c4();
  auto c2 = trivial_brace(cyclic_group(2));
  BraceMapSet mod2{r, c2, {0, 1, 0, 1}};
  CHECK(validate_morphism(mod2));
  CHECK(kernel_set(mod2).members() == std::vector<Index>{0, 2});

  BraceMapSet id{r, r, {0, 1, 2, 3}};
  CHECK(validate_morphism(id));
  CHECK(kernel_set(id).size() == 1);

  auto s3 = trivial_brace(symmetric_group(3));
  BraceMapSet zero{s3, s3, std::vector<Index>(6, 0)};
  CHECK(validate_morphism(zero));
  CHECK(kernel_set(zero).size() == 6);

  BraceMapSet bad{r, c2, {0, 1, 1, 0}};
  CHECK_FALSE(validate_morphism(bad));
  CHECK_THROWS_AS(kernel_set(bad), std::invalid_argument);
  BraceMapSet short_map{r, c2, {0, 1}};
  CHECK_FALSE(validate_morphism(short_map));
}

TEST_CASE("order cap")
{
  CHECK_THROWS_AS(cyclic_group(max_order + 1), std::invalid_argument);
  CHECK_THROWS_AS(direct_product(cyclic_group(20), cyclic_group(20)), std::invalid_argument);
}
