#include "hopfbrace/subobjects.hpp"

#include <stdexcept>

namespace hopfbrace {

namespace {

constexpr std::uint8_t unknown = 0, no = 1, yes = 2;

void require_rationals(const HopfBrace& h)
{
  if (!h.over_rationals())
    throw std::invalid_argument("subobject computations are refused in prime-field mode");
}

bool dot_normal(const SkewBrace& br, const SubgroupSet& k)
{
  return is_normal_subgroup(br.dot(), k);
}

} // namespace

Subbrace::Subbrace(HopfBrace parent, SubgroupSet carrier)
    : parent_(std::move(parent)), carrier_(std::move(carrier))
{
  require_rationals(parent_);
}

Subbrace::Subbrace(const Subbrace& o)
    : strong_(o.strong_.load()), normal_(o.normal_.load()), parent_(o.parent_),
      carrier_(o.carrier_)
{
}

Subbrace& Subbrace::operator=(const Subbrace& o)
{
  strong_ = o.strong_.load();
  normal_ = o.normal_.load();
  parent_ = o.parent_;
  carrier_ = o.carrier_;
  return *this;
}

Subbrace generated_subbrace(const HopfBrace& h, std::span<const Index> gens)
{
  require_rationals(h);
  return Subbrace(h, subgroup_generated(h.base().dot(), gens));
}

Subbrace whole_subbrace(const HopfBrace& h) { return Subbrace(h, whole_group(h.base().dot())); }

Subbrace trivial_subbrace(const HopfBrace& h)
{
  return Subbrace(h, trivial_subgroup(h.base().dot()));
}

bool is_strong(const Subbrace& b)
{
  if (auto s = b.strong_.load(); s != unknown)
    return s == yes;
  const auto& br = b.brace();
  bool ok = true;
  for (Index a = 0; a < br.order() && ok; ++a)
    for (Index x : b.carrier().members())
      if (!b.carrier().contains(br.lambda(a, x))) {
        ok = false;
        break;
      }
  b.strong_ = ok ? yes : no;
  return ok;
}

bool is_normal(const Subbrace& b)
{
  if (auto s = b.normal_.load(); s != unknown)
    return s == yes;
  const auto& br = b.brace();
  bool ok = dot_normal(br, b.carrier()) && is_normal_subgroup(br.circ(), b.carrier()) &&
            is_strong(b);
  b.normal_ = ok ? yes : no;
  return ok;
}

bool is_normal_via_star(const Subbrace& b)
{
  const auto& br = b.brace();
  if (!dot_normal(br, b.carrier()))
    return false;
  for (Index a = 0; a < br.order(); ++a)
    for (Index x : b.carrier().members())
      if (!b.carrier().contains(br.star(x, a)) || !b.carrier().contains(br.star(a, x)))
        return false;
  return true;
}

Subbrace brace_normal_closure(const HopfBrace& h, std::span<const Index> gens)
{
  require_rationals(h);
  const auto& br = h.base();
  SubgroupSet cur = subgroup_generated(br.dot(), gens);
  for (;;) {
    std::vector<Index> next = cur.members();
    for (Index a = 0; a < br.order(); ++a)
      for (Index x : cur.members()) {
        next.push_back(br.dot().conj(a, x));
        next.push_back(br.circ().conj(a, x));
        next.push_back(br.lambda(a, x));
      }
    SubgroupSet grown = subgroup_generated(br.dot(), next);
    if (grown == cur)
      return Subbrace(h, std::move(cur));
    cur = std::move(grown);
  }
}

HopfMorphism::HopfMorphism(HopfBrace source, HopfBrace target, std::vector<Index> images)
    : source_(std::move(source)), target_(std::move(target)),
      map_{source_.base(), target_.base(), std::move(images)}
{
  if (source_.characteristic() != target_.characteristic())
    throw std::invalid_argument("morphism between different ground fields");
  if (!validate_morphism(map_))
    throw std::invalid_argument("map is not a brace morphism");
}

bool HopfMorphism::surjective() const
{
  const auto& t = target_.base().dot();
  return subgroup_generated(t, map_.images).size() == t.order();
}

HopfMorphism identity_morphism(const HopfBrace& h)
{
  std::vector<Index> id(h.dimension());
  for (Index g = 0; g < id.size(); ++g)
    id[g] = g;
  return HopfMorphism(h, h, std::move(id));
}

Subbrace hopf_kernel(const HopfMorphism& f) { return Subbrace(f.source(), kernel_set(f.map())); }

Quotient quotient(const HopfBrace& h, const Subbrace& b)
{
  if (!is_normal(b))
    throw std::invalid_argument("quotient requires a normal subbrace");
  const auto& br = h.base();
  auto qd = quotient_group(br.dot(), b.carrier());
  auto qc = quotient_group(br.circ(), b.carrier());
  // For normal B the ·- and ∘-cosets coincide (g∘B = g·λ_g(B) = g·B), so
  // first-appearance numbering agrees.
  if (qd.projection != qc.projection)
    throw std::logic_error("dot and circ cosets disagree for a normal subbrace");
  HopfBrace q(validate_skew_brace(qd.group.table(), qc.group.table(), qd.group.identity()),
              h.prime());
  HopfMorphism pi(h, q, qd.projection);
  return {std::move(q), std::move(pi)};
}

} // namespace hopfbrace
