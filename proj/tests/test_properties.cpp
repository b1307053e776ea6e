#include <doctest.h>

#include <random>

#include "hopfbrace/catalog.hpp"
#include "hopfbrace/extensions.hpp"
#include "hopfbrace/propositions.hpp"
#include "hopfbrace/series.hpp"

using namespace hopfbrace;

namespace {

std::vector<HopfBrace> small_catalog(std::size_t max = 24)
{
  std::vector<HopfBrace> out;
  for (const auto& e : builtin_catalog())
    if (e.brace.order() <= max)
      out.emplace_back(e.brace);
  return out;
}

bool descending(const SeriesResult& r)
{
  for (std::size_t k = 1; k < r.terms.size(); ++k)
    if (!r.terms[k].carrier().is_subset_of(r.terms[k - 1].carrier()))
      return false;
  return true;
}

} // namespace

TEST_CASE("propositions hold on every catalog brace")
{
  for (const auto& e : builtin_catalog()) {
    CAPTURE(e.descriptor.name);
    auto r = verify_propositions(HopfBrace(e.brace));
    for (const auto& v : r.violations)
      MESSAGE(v.identity << ": " << v.detail);
    CHECK(r.ok());
  }
}

TEST_CASE("set-level brace laws")
{
  for (const auto& h : small_catalog()) {
    const auto& b = h.base();
    const auto n = static_cast<Index>(b.order());
    for (Index a = 0; a < n; ++a)
      for (Index x = 0; x < n; ++x) {
        CHECK(b.circ().mul(a, x) == b.dot().mul(a, b.lambda(a, x)));
        for (Index y = 0; y < n; ++y) {
          CHECK(b.lambda(a, b.dot().mul(x, y)) == b.dot().mul(b.lambda(a, x), b.lambda(a, y)));
          CHECK(b.lambda(b.circ().mul(a, x), y) == b.lambda(a, b.lambda(x, y)));
        }
      }
  }
}

TEST_CASE("series are descending chains of normal subbraces")
{
  for (const auto& h : small_catalog()) {
    for (auto kind : {SeriesKind::Left, SeriesKind::Right, SeriesKind::Gamma}) {
      auto r = compute_series(h, kind);
      CHECK(descending(r));
      CHECK(r.terms.front().is_whole());
      for (const auto& t : r.terms) {
        if (kind == SeriesKind::Left)
          CHECK(is_strong(t));
        else
          CHECK(is_normal(t));
      }
      if (r.nil_class)
        CHECK(r.terms.back().is_trivial());
    }
  }
}

TEST_CASE("both normality tests agree on every subgroup")
{
  for (const auto& h : small_catalog(12)) {
    for (const auto& s : all_subgroups(h.base().dot())) {
      Subbrace sb(h, s);
      CHECK(is_normal(sb) == is_normal_via_star(sb));
    }
  }
}

TEST_CASE("socle and annihilator containments")
{
  for (const auto& h : small_catalog()) {
    auto r = soc_ann(h);
    CHECK(r.ann.carrier().is_subset_of(r.soc.carrier()));
    CHECK(r.soc.carrier().is_subset_of(center(h.base().dot())));
    CHECK(is_normal(r.soc));
    CHECK(is_normal(r.ann));
    CHECK(is_subspace_of(r.ann_space, r.soc_space));
    CHECK(is_subspace_of(carrier_span(h.dimension(), r.soc.carrier()), r.soc_space));
    CHECK(is_subspace_of(carrier_span(h.dimension(), r.ann.carrier()), r.ann_space));
  }
}

TEST_CASE("quotients are skew braces and the extension tests match commutators")
{
  for (const auto& h : small_catalog(12)) {
    for (const auto& s : all_subgroups(h.base().dot())) {
      Subbrace sb(h, s);
      if (!is_normal(sb))
        continue;
      auto q = quotient(h, sb);
      CHECK(q.brace.dimension() * s.size() == h.dimension());
      auto r = check_central(q.projection);
      CHECK(*r.central_hopfcoc == relative_commutator(sb).is_trivial());
      CHECK(*r.central_huq == huq_commutator(sb).is_trivial());
    }
  }
}

TEST_CASE("random products stay valid")
{
  std::mt19937_64 rng(7);
  const auto& cat = builtin_catalog();
  std::vector<const CatalogEntry*> small;
  for (const auto& e : cat)
    if (e.brace.order() <= 6)
      small.push_back(&e);
  std::uniform_int_distribution<std::size_t> pick(0, small.size() - 1);
  for (int k = 0; k < 4; ++k) {
    const auto& a = *small[pick(rng)];
    const auto& b = *small[pick(rng)];
    CAPTURE(a.descriptor.name);
    CAPTURE(b.descriptor.name);
    auto p = direct_product(a.brace, b.brace);
    CHECK_NOTHROW(validate_skew_brace(p.dot().table(), p.circ().table(), p.identity()));
    HopfBrace h(p);
    CHECK(verify_propositions(h).ok());
    auto na = nilpotency_report(HopfBrace(a.brace));
    auto nb = nilpotency_report(HopfBrace(b.brace));
    auto np = nilpotency_report(h);
    CHECK(np.left_class.has_value() == (na.left_class && nb.left_class));
    if (np.left_class)
      CHECK(*np.left_class == std::max(*na.left_class, *nb.left_class));
  }
}
