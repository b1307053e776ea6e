#pragma once

#include <atomic>
#include <cstdint>
#include <span>
#include <utility>

#include "hopfbrace/hopf.hpp"

namespace hopfbrace {

/// A Hopf subbrace k[K] of k[G], carried by a subgroup K of (G,·). Only
/// group-like generators are accepted.
class Subbrace
{
public:
  Subbrace(HopfBrace parent, SubgroupSet carrier);
  Subbrace(const Subbrace& o);
  Subbrace& operator=(const Subbrace& o);

  const HopfBrace& parent() const { return parent_; }
  const SkewBrace& brace() const { return parent_.base(); }
  const SubgroupSet& carrier() const { return carrier_; }
  std::size_t dimension() const { return carrier_.size(); }
  bool is_trivial() const { return carrier_.size() == 1; }
  bool is_whole() const { return carrier_.size() == parent_.dimension(); }

  friend bool operator==(const Subbrace& a, const Subbrace& b) { return a.carrier_ == b.carrier_; }

private:
  friend bool is_strong(const Subbrace&);
  friend bool is_normal(const Subbrace&);

  // 0 unknown, 1 no, 2 yes
  mutable std::atomic<std::uint8_t> strong_{0};
  mutable std::atomic<std::uint8_t> normal_{0};

  HopfBrace parent_;
  SubgroupSet carrier_;
};

/// Subbrace on the ·-subgroup generated by gens. Throws std::out_of_range for
/// a bad index and std::invalid_argument in prime-field mode.
Subbrace generated_subbrace(const HopfBrace& h, std::span<const Index> gens);
Subbrace whole_subbrace(const HopfBrace& h);
Subbrace trivial_subbrace(const HopfBrace& h);

/// λ_h(b) ∈ B for all h ∈ G, b ∈ B.
bool is_strong(const Subbrace& b);
/// ·-normal, ∘-normal and λ-stable.
bool is_normal(const Subbrace& b);
/// ·-normal with b⋆a ∈ B and a⋆b ∈ B for all a ∈ G, b ∈ B.
bool is_normal_via_star(const Subbrace& b);

/// Closes gens under ·-generation, ·- and ∘-conjugation and λ: the smallest
/// normal subbrace containing them.
Subbrace brace_normal_closure(const HopfBrace& h, std::span<const Index> gens);

/// Linear extension of a set-level brace morphism.
class HopfMorphism
{
public:
  /// Throws std::invalid_argument unless `map` is a valid brace morphism
  /// between the bases of source and target.
  HopfMorphism(HopfBrace source, HopfBrace target, std::vector<Index> images);

  const HopfBrace& source() const { return source_; }
  const HopfBrace& target() const { return target_; }
  const BraceMapSet& map() const { return map_; }
  Index operator()(Index g) const { return map_.images[g]; }

  /// Image subgroup equals the whole target carrier.
  bool surjective() const;

  /// Basis-to-basis extension.
  template <class F>
  BasicElement<F> apply(const BasicElement<F>& x) const
  {
    std::vector<typename BasicSparseVector<F>::Entry> e;
    for (const auto& [i, c] : x.terms())
      e.emplace_back(map_.images[i], c);
    return BasicElement<F>(BasicSparseVector<F>::from_entries(std::move(e)));
  }

private:
  HopfBrace source_;
  HopfBrace target_;
  BraceMapSet map_;
};

HopfMorphism identity_morphism(const HopfBrace& h);

/// Hker(f) on group-likes: {g : f(g) = e}.
Subbrace hopf_kernel(const HopfMorphism& f);

struct Quotient
{
  HopfBrace brace;
  HopfMorphism projection;
};

/// H / B on cosets of the carrier. Throws std::invalid_argument unless B is
/// normal.
Quotient quotient(const HopfBrace& h, const Subbrace& b);

} // namespace hopfbrace
