#include <doctest.h>

#include "hopfbrace/series.hpp"

using namespace hopfbrace;

namespace {

using Sizes = std::vector<std::size_t>;

HopfBrace rad() { return HopfBrace(radical_c4()); }
HopfBrace op_s3() { return HopfBrace(opposite_brace(symmetric_group(3))); }
HopfBrace triv(const FiniteGroup& g) { return HopfBrace(trivial_brace(g)); }

} // namespace

TEST_CASE("series on radical_c4")
{
  for (auto kind : {SeriesKind::Left, SeriesKind::Right, SeriesKind::Gamma}) {
    auto r = compute_series(rad(), kind);
    CHECK(r.sizes() == Sizes{4, 2, 1});
    CHECK(r.nil_class == 3u);
    CHECK_FALSE(r.stabilized);
    CHECK(r.terms[1].carrier().members() == std::vector<Index>{0, 2});
    CHECK(r.generators.size() == 3);
  }
}

TEST_CASE("series on trivial braces")
{
  auto r = left_series(triv(cyclic_group(2)));
  CHECK(r.sizes() == Sizes{2, 1});
  CHECK(r.nil_class == 2u);
  CHECK(right_series(triv(symmetric_group(4))).sizes() == Sizes{24, 1});
  auto g = gamma_series(triv(symmetric_group(3)));
  CHECK(g.sizes() == Sizes{6, 3, 3});
  CHECK(g.stabilized);
  CHECK_FALSE(g.nil_class);
  CHECK(gamma_series(triv(cyclic_group(4))).sizes() == Sizes{4, 1});
  auto one = left_series(triv(cyclic_group(1)));
  CHECK(one.sizes() == Sizes{1});
  CHECK(one.nil_class == 1u);
}

TEST_CASE("series on opposite S3 stabilize at A3")
{
  for (auto kind : {SeriesKind::Left, SeriesKind::Right, SeriesKind::Gamma}) {
    auto r = compute_series(op_s3(), kind);
    CHECK(r.sizes() == Sizes{6, 3, 3});
    CHECK(r.stabilized);
    CHECK_FALSE(r.nil_class);
  }
}

TEST_CASE("max_n limits the number of steps")
{
  auto r = left_series(rad(), 1);
  CHECK(r.sizes() == Sizes{4, 2});
  CHECK_FALSE(r.nil_class);
  CHECK_FALSE(r.stabilized);
  CHECK_THROWS_AS(left_series(rad(), 0), std::invalid_argument);
  CHECK_THROWS_AS(parse_series_kind("upper"), std::invalid_argument);
  CHECK(parse_series_kind("gamma") == SeriesKind::Gamma);
}

TEST_CASE("relative and Huq commutators")
{
  auto h = rad();
  CHECK(relative_commutator(trivial_subbrace(h)).is_trivial());
  auto two = generated_subbrace(h, std::vector<Index>{2});
  CHECK(relative_commutator(two).is_trivial());
  CHECK(huq_commutator(whole_subbrace(h)) == two);

  auto o = op_s3();
  auto a3 = generated_subbrace(o, std::vector<Index>{3});
  CHECK(relative_commutator(a3) == a3);
  CHECK(huq_commutator(whole_subbrace(o)) == a3);

  auto t = triv(symmetric_group(3));
  CHECK(huq_commutator(whole_subbrace(t)).dimension() == 3);
  CHECK_THROWS_AS(relative_commutator(generated_subbrace(t, std::vector<Index>{1})),
                  std::invalid_argument);
  CHECK_THROWS_AS(huq_commutator(generated_subbrace(t, std::vector<Index>{1})),
                  std::invalid_argument);
}

TEST_CASE("Hopf center")
{
  CHECK(hopf_center(rad()).is_whole());
  CHECK(hopf_center(op_s3()).is_trivial());
  CHECK(hopf_center(triv(symmetric_group(3))).is_trivial());
  CHECK(hopf_center(triv(dihedral_group(4))).dimension() == 2);
  CHECK(is_strong(hopf_center(HopfBrace(opposite_brace(dihedral_group(4))))));
}

TEST_CASE("socle and annihilator")
{
  auto r = soc_ann(rad());
  CHECK(r.soc.carrier().members() == std::vector<Index>{0, 2});
  CHECK(r.ann.carrier().members() == std::vector<Index>{0, 2});
  // Only c1 + c3 = 0 is imposed, so the linear socle is 3-dimensional.
  CHECK(r.soc_space.dimension() == 3);
  CHECK(r.ann_space.dimension() == 3);
  CHECK(r.soc_strict);
  CHECK(r.ann_strict);
  CHECK(is_subspace_of(carrier_span(4, r.soc.carrier()), r.soc_space));

  auto o = soc_ann(op_s3());
  CHECK(o.soc.is_trivial());
  CHECK(o.ann.is_trivial());
  CHECK(o.soc_space.dimension() == 1);
  CHECK_FALSE(o.soc_strict);

  auto d = soc_ann(triv(dihedral_group(4)));
  CHECK(d.soc.carrier() == center(dihedral_group(4)));
  CHECK(d.ann.carrier() == center(dihedral_group(4)));
  CHECK(d.soc_space.dimension() == 2);

  CHECK_THROWS_AS(soc_ann(HopfBrace(radical_c4(), 3)), std::invalid_argument);
}

TEST_CASE("abelianisations")
{
  auto f = abelianize_F(rad());
  CHECK(f.quotient.brace.dimension() == 2);
  CHECK(f.generators_already_normal);
  CHECK(abelianize_ab(rad()).quotient.brace.dimension() == 2);

  CHECK(abelianize_F(op_s3()).quotient.brace.dimension() == 2);
  CHECK(abelianize_ab(op_s3()).quotient.brace.dimension() == 2);

  auto t = triv(symmetric_group(3));
  auto ft = abelianize_F(t);
  CHECK(ft.quotient.brace.dimension() == 6);
  CHECK(ft.kernel.is_trivial());
  CHECK(abelianize_ab(t).quotient.brace.dimension() == 2);
  CHECK(abelianize_ab(triv(cyclic_group(5))).quotient.brace.dimension() == 5);
  auto q = abelianize_ab(HopfBrace(opposite_brace(symmetric_group(4)))).quotient.brace.base();
  CHECK(q.dot() == q.circ());
  CHECK(q.dot().is_abelian());
}

TEST_CASE("nilpotency report")
{
  auto r = nilpotency_report(rad());
  CHECK(r.left_class == 3u);
  CHECK(r.right_class == 3u);
  CHECK(r.gamma_class == 3u);
  CHECK(r.right_nil_index == 2u);

  auto o = nilpotency_report(op_s3(), 10);
  CHECK_FALSE(o.left_class);
  CHECK_FALSE(o.right_class);
  CHECK_FALSE(o.gamma_class);
  CHECK_FALSE(o.right_nil_index);

  auto a = nilpotency_report(triv(cyclic_group(6)));
  CHECK(a.left_class == 2u);
  CHECK(a.right_class == 2u);
  CHECK(a.gamma_class == 2u);
  CHECK(a.right_nil_index == 1u);
}
