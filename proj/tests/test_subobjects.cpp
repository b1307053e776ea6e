#include <doctest.h>

#include <thread>

#include "hopfbrace/subobjects.hpp"

using namespace hopfbrace;

namespace {

std::vector<Index> ids(std::initializer_list<Index> l) { return l; }

HopfBrace rad() { return HopfBrace(radical_c4()); }
HopfBrace op_s3() { return HopfBrace(opposite_brace(symmetric_group(3))); }
HopfBrace triv_s3() { return HopfBrace(trivial_brace(symmetric_group(3))); }

} // namespace

TEST_CASE("generated subbraces")
{
  CHECK(generated_subbrace(rad(), ids({})).is_trivial());
  CHECK(generated_subbrace(rad(), ids({2})).carrier().members() == ids({0, 2}));
  auto a3 = generated_subbrace(op_s3(), ids({3}));
  CHECK(a3.carrier().members() == ids({0, 3, 4}));
  CHECK_THROWS_AS(generated_subbrace(rad(), ids({4})), std::out_of_range);
  CHECK_THROWS_AS(generated_subbrace(HopfBrace(radical_c4(), 3), ids({1})),
                  std::invalid_argument);
}

TEST_CASE("strongness")
{
  CHECK(is_strong(generated_subbrace(rad(), ids({2}))));
  // ⟨(1 2)⟩ is moved by conjugation in the opposite brace.
  CHECK_FALSE(is_strong(generated_subbrace(op_s3(), ids({2}))));
  CHECK(is_strong(generated_subbrace(triv_s3(), ids({2}))));
}

TEST_CASE("both normality tests")
{
  auto a3 = generated_subbrace(op_s3(), ids({3}));
  CHECK(is_normal(a3));
  CHECK(is_normal_via_star(a3));
  auto two = generated_subbrace(rad(), ids({2}));
  CHECK(is_normal(two));
  CHECK(is_normal_via_star(two));
  auto t = generated_subbrace(triv_s3(), ids({2}));
  CHECK_FALSE(is_normal(t));
  CHECK_FALSE(is_normal_via_star(t));
}

TEST_CASE("flag cache survives copies and concurrent queries")
{
  auto a3 = generated_subbrace(op_s3(), ids({3}));
  std::vector<std::thread> threads;
  std::vector<char> results(8);
  for (std::size_t k = 0; k < results.size(); ++k)
    threads.emplace_back([&, k] { results[k] = is_normal(a3); });
  for (auto& t : threads)
    t.join();
  for (char r : results)
    CHECK(r);
  Subbrace copy = a3;
  CHECK(is_normal(copy));
  CHECK(copy == a3);
}

TEST_CASE("quotients and kernels")
{
  auto h = rad();
  auto two = generated_subbrace(h, ids({2}));
  auto q = quotient(h, two);
  CHECK(q.brace.dimension() == 2);
  CHECK(q.brace.base().dot() == q.brace.base().circ());
  CHECK(hopf_kernel(q.projection) == two);
  CHECK(q.projection.surjective());

  auto same = quotient(h, trivial_subbrace(h));
  CHECK(same.brace.dimension() == 4);
  CHECK(same.brace.base() == h.base());
  CHECK(quotient(h, whole_subbrace(h)).brace.dimension() == 1);

  CHECK_THROWS_AS(quotient(triv_s3(), generated_subbrace(triv_s3(), ids({2}))),
                  std::invalid_argument);
  CHECK(hopf_kernel(identity_morphism(h)).is_trivial());
}

TEST_CASE("kernel of the mod-2 map")
{
  HopfBrace c2(trivial_brace(cyclic_group(2)));
  HopfMorphism f(rad(), c2, {0, 1, 0, 1});
  CHECK(hopf_kernel(f).carrier().members() == ids({0, 2}));
  CHECK(f.surjective());
  CHECK(f.apply(Element::basis(3, Rational(2))) == Element::basis(1, Rational(2)));
  CHECK_THROWS_AS(HopfMorphism(rad(), c2, {0, 1, 1, 0}), std::invalid_argument);
  HopfMorphism zero(rad(), c2, {0, 0, 0, 0});
  CHECK_FALSE(zero.surjective());
}

TEST_CASE("brace normal closure")
{
  auto h = triv_s3();
  CHECK(brace_normal_closure(h, ids({2})).dimension() == 6);
  auto n = brace_normal_closure(op_s3(), ids({3}));
  CHECK(n.dimension() == 3);
  CHECK(is_normal(n));
}

TEST_CASE("every subgroup: normal implies strong, quotient then kernel is the identity")
{
  for (auto b : {radical_c4(), opposite_brace(dihedral_group(4)), trivial_brace(alternating_group(4)),
                 direct_product(radical_c4(), radical_c4())}) {
    HopfBrace h(b);
    for (const auto& s : all_subgroups(b.dot())) {
      Subbrace sb(h, s);
      CHECK(is_normal(sb) == is_normal_via_star(sb));
      if (!is_normal(sb))
        continue;
      CHECK(is_strong(sb));
      CHECK(hopf_kernel(quotient(h, sb).projection) == sb);
    }
  }
}
