#pragma once

#include <memory>
#include <vector>

#include "hopfbrace/group.hpp"

namespace hopfbrace {

/// Finite skew brace (G, ·, ∘): two groups on one carrier with a shared
/// identity and a∘(b·c) = (a∘b)·a⁻¹·(a∘c). Values are immutable and copies
/// share storage.
class SkewBrace
{
public:
  std::size_t order() const { return data_->dot.order(); }
  Index identity() const { return data_->dot.identity(); }
  const FiniteGroup& dot() const { return data_->dot; }
  const FiniteGroup& circ() const { return data_->circ; }

  /// λ_a(b) = a⁻¹·(a∘b)
  Index lambda(Index a, Index b) const { return data_->lambda[a * order() + b]; }
  /// a⋆b = λ_a(b)·b⁻¹
  Index star(Index a, Index b) const { return data_->star[a * order() + b]; }

  /// False only for braces built with `unchecked`.
  bool validated() const { return data_->validated; }

  /// Both groups are validated but the compatibility law is not; used to
  /// build negative controls for the identity verifiers.
  static SkewBrace unchecked(const FiniteGroup& dot, const FiniteGroup& circ);

  friend bool operator==(const SkewBrace& a, const SkewBrace& b)
  {
    return a.dot() == b.dot() && a.circ() == b.circ();
  }

private:
  friend SkewBrace validate_skew_brace(const Table&, const Table&, Index);

  struct Data
  {
    FiniteGroup dot;
    FiniteGroup circ;
    std::vector<Index> lambda;
    std::vector<Index> star;
    bool validated = true;
  };
  SkewBrace(FiniteGroup dot, FiniteGroup circ, bool validated);

  std::shared_ptr<const Data> data_;
};

/// Checks, in order: the dot table is a group, the declared identity is its
/// identity, the compatibility law (before the circ group axioms, so that a
/// corrupted circ entry is reported with its compatibility witness), and
/// finally that circ is a group with the same identity. Throws
/// ValidationError carrying the first witness found.
SkewBrace validate_skew_brace(const Table& dot_table, const Table& circ_table, Index identity);

Index lambda_act(const SkewBrace& b, Index x, Index y);
Index star_set(const SkewBrace& b, Index x, Index y);

/// a∘b := a·b
SkewBrace trivial_brace(const FiniteGroup& g);
/// a∘b := b·a
SkewBrace opposite_brace(const FiniteGroup& g);
/// Componentwise structure; pairs indexed as a * |b2| + b.
SkewBrace direct_product(const SkewBrace& b1, const SkewBrace& b2);
/// Z/4 with a·b = a+b and a∘b = a+b+2ab.
SkewBrace radical_c4();

/// Set-level brace morphism.
struct BraceMapSet
{
  SkewBrace source;
  SkewBrace target;
  std::vector<Index> images;
};

bool validate_morphism(const BraceMapSet& f);

/// Fiber over the identity. Throws std::invalid_argument for an invalid map.
SubgroupSet kernel_set(const BraceMapSet& f);

} // namespace hopfbrace
