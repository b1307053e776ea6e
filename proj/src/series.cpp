#include "hopfbrace/series.hpp"

#include <stdexcept>

namespace hopfbrace {

const char* to_string(SeriesKind k)
{
  switch (k) {
  case SeriesKind::Left:
    return "left";
  case SeriesKind::Right:
    return "right";
  case SeriesKind::Gamma:
    return "gamma";
  }
  return "?";
}

SeriesKind parse_series_kind(const std::string& s)
{
  if (s == "left")
    return SeriesKind::Left;
  if (s == "right")
    return SeriesKind::Right;
  if (s == "gamma")
    return SeriesKind::Gamma;
  throw std::invalid_argument("unknown series kind '" + s + "' (expected left, right or gamma)");
}

std::vector<std::size_t> SeriesResult::sizes() const
{
  std::vector<std::size_t> out;
  for (const auto& t : terms)
    out.push_back(t.dimension());
  return out;
}

namespace {

/// Generators of the next term from the current carrier.
template <class Step>
SeriesResult iterate(const HopfBrace& h, SeriesKind kind, std::size_t max_n, Step step)
{
  if (max_n == 0)
    throw std::invalid_argument("series needs max_n >= 1");
  const auto& dot = h.base().dot();
  SeriesResult r{kind, {}, {}, false, std::nullopt};
  r.terms.push_back(whole_subbrace(h));
  while (!r.terms.back().is_trivial() && r.terms.size() <= max_n) {
    std::vector<Index> gens = step(r.terms.back().carrier());
    Subbrace next = generated_subbrace(h, gens);
    bool repeat = next == r.terms.back();
    r.terms.push_back(std::move(next));
    if (repeat) {
      r.stabilized = true;
      break;
    }
  }
  if (r.terms.back().is_trivial())
    r.nil_class = r.terms.size();
  for (const auto& t : r.terms)
    r.generators.push_back(small_generating_set(dot, t.carrier()));
  return r;
}

} // namespace

SeriesResult left_series(const HopfBrace& h, std::size_t max_n)
{
  const auto& br = h.base();
  return iterate(h, SeriesKind::Left, max_n, [&](const SubgroupSet& cur) {
    std::vector<Index> gens;
    for (Index a = 0; a < br.order(); ++a)
      for (Index x : cur.members())
        gens.push_back(br.star(a, x));
    return gens;
  });
}

SeriesResult right_series(const HopfBrace& h, std::size_t max_n)
{
  const auto& br = h.base();
  return iterate(h, SeriesKind::Right, max_n, [&](const SubgroupSet& cur) {
    std::vector<Index> gens;
    for (Index x : cur.members())
      for (Index a = 0; a < br.order(); ++a)
        gens.push_back(br.star(x, a));
    return gens;
  });
}

SeriesResult gamma_series(const HopfBrace& h, std::size_t max_n)
{
  const auto& br = h.base();
  return iterate(h, SeriesKind::Gamma, max_n, [&](const SubgroupSet& cur) {
    std::vector<Index> gens;
    for (Index i : cur.members())
      for (Index a = 0; a < br.order(); ++a) {
        gens.push_back(br.star(i, a));
        gens.push_back(br.star(a, i));
        gens.push_back(br.dot().commutator(a, i));
      }
    return gens;
  });
}

SeriesResult compute_series(const HopfBrace& h, SeriesKind kind, std::size_t max_n)
{
  switch (kind) {
  case SeriesKind::Left:
    return left_series(h, max_n);
  case SeriesKind::Right:
    return right_series(h, max_n);
  case SeriesKind::Gamma:
    return gamma_series(h, max_n);
  }
  throw std::invalid_argument("unknown series kind");
}

Subbrace relative_commutator(const Subbrace& i)
{
  if (!is_normal(i))
    throw std::invalid_argument("relative commutator needs a normal subbrace");
  const auto& br = i.brace();
  std::vector<Index> gens;
  for (Index x : i.carrier().members())
    for (Index a = 0; a < br.order(); ++a) {
      gens.push_back(br.star(x, a));
      Index ax = br.star(a, x);
      for (Index k = 0; k < br.order(); ++k)
        gens.push_back(br.dot().conj(k, ax));
    }
  return generated_subbrace(i.parent(), gens);
}

Subbrace huq_commutator(const Subbrace& i)
{
  if (!is_normal(i))
    throw std::invalid_argument("Huq commutator needs a normal subbrace");
  const auto& br = i.brace();
  std::vector<Index> gens;
  for (Index x : i.carrier().members())
    for (Index a = 0; a < br.order(); ++a) {
      gens.push_back(br.dot().commutator(x, a));
      gens.push_back(br.circ().commutator(x, a));
      gens.push_back(br.star(x, a));
    }
  return brace_normal_closure(i.parent(), gens);
}

Subbrace hopf_center(const HopfBrace& h) { return Subbrace(h, center(h.base().dot())); }

Subspace carrier_span(std::size_t ambient, const SubgroupSet& s)
{
  std::vector<SparseVector> rows;
  for (Index g : s.members())
    rows.push_back(SparseVector::unit(g, Rational(1)));
  return rref(rows, ambient);
}

SocAnnResult soc_ann(const HopfBrace& h)
{
  if (!h.over_rationals())
    throw std::invalid_argument("socle computations are refused in prime-field mode");
  const auto& br = h.base();
  const std::size_t n = br.order();
  const SubgroupSet z = center(br.dot());
  const Index e = br.identity();

  // Coordinates outside Z(G) vanish.
  std::vector<SparseVector> outside;
  for (Index g = 0; g < n; ++g)
    if (!z.contains(g))
      outside.push_back(SparseVector::unit(g, Rational(1)));

  // For fixed b and target t ≠ e: Σ_{g ∈ Z, g⋆b = t} c_g = 0.
  auto star_rows = [&](bool mirrored) {
    std::vector<SparseVector> rows;
    for (Index b = 0; b < n; ++b) {
      std::vector<std::vector<SparseVector::Entry>> by_target(n);
      for (Index g : z.members()) {
        Index t = mirrored ? br.star(b, g) : br.star(g, b);
        if (t != e)
          by_target[t].emplace_back(g, Rational(1));
      }
      for (auto& entries : by_target)
        if (!entries.empty())
          rows.push_back(SparseVector::from_entries(std::move(entries)));
    }
    return rows;
  };

  std::vector<SparseVector> soc_rows = outside;
  auto left = star_rows(false);
  soc_rows.insert(soc_rows.end(), left.begin(), left.end());
  std::vector<SparseVector> ann_rows = soc_rows;
  auto right = star_rows(true);
  ann_rows.insert(ann_rows.end(), right.begin(), right.end());

  // x·b = x•b: Σ_g c_g (δ_{gb} − δ_{g∘b}) = 0 coordinatewise.
  std::vector<SparseVector> eq_rows = outside;
  for (Index b = 0; b < n; ++b) {
    std::vector<std::vector<SparseVector::Entry>> by_target(n);
    for (Index g : z.members()) {
      by_target[br.dot().mul(g, b)].emplace_back(g, Rational(1));
      by_target[br.circ().mul(g, b)].emplace_back(g, Rational(-1));
    }
    for (auto& entries : by_target) {
      auto v = SparseVector::from_entries(std::move(entries));
      if (!v.empty())
        eq_rows.push_back(std::move(v));
    }
  }

  std::vector<Index> soc_members, ann_members;
  for (Index g : z.members()) {
    bool trivial = true;
    for (Index b = 0; b < n && trivial; ++b)
      trivial = br.lambda(g, b) == b;
    if (!trivial)
      continue;
    soc_members.push_back(g);
    bool fixed = true;
    for (Index b = 0; b < n && fixed; ++b)
      fixed = br.lambda(b, g) == g;
    if (fixed)
      ann_members.push_back(g);
  }

  SocAnnResult r{solve_common_nullspace(soc_rows, n),
                 solve_common_nullspace(ann_rows, n),
                 Subbrace(h, SubgroupSet(soc_members)),
                 Subbrace(h, SubgroupSet(ann_members)),
                 false,
                 false,
                 solve_common_nullspace(eq_rows, n),
                 false};
  r.soc_strict = carrier_span(n, r.soc.carrier()).dimension() < r.soc_space.dimension();
  r.ann_strict = carrier_span(n, r.ann.carrier()).dimension() < r.ann_space.dimension();
  r.star_trivial_differs_from_equal_products = !(r.soc_space == r.equal_products_space);
  return r;
}

namespace {

Abelianisation abelianize(const HopfBrace& h, bool with_commutators)
{
  const auto& br = h.base();
  std::vector<Index> gens;
  for (Index a = 0; a < br.order(); ++a)
    for (Index b = 0; b < br.order(); ++b) {
      gens.push_back(br.star(a, b));
      if (with_commutators)
        gens.push_back(br.dot().commutator(a, b));
    }
  Subbrace raw = generated_subbrace(h, gens);
  Subbrace kernel = brace_normal_closure(h, gens);
  bool already = raw == kernel;
  auto q = quotient(h, kernel);
  return {std::move(kernel), std::move(q), already};
}

} // namespace

Abelianisation abelianize_F(const HopfBrace& h) { return abelianize(h, false); }

Abelianisation abelianize_ab(const HopfBrace& h) { return abelianize(h, true); }

NilpotencyReport nilpotency_report(const HopfBrace& h, std::size_t max_n)
{
  NilpotencyReport r;
  r.left_class = left_series(h, max_n).nil_class;
  auto right = right_series(h, max_n);
  r.right_class = right.nil_class;
  r.gamma_class = gamma_series(h, max_n).nil_class;
  for (std::size_t k = 0; k < right.terms.size(); ++k)
    if (relative_commutator(right.terms[k]).is_trivial()) {
      r.right_nil_index = k + 1;
      break;
    }
  return r;
}

} // namespace hopfbrace
