#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "hopfbrace/errors.hpp"

namespace hopfbrace {

using Table = std::vector<std::vector<Index>>;

/// Finite group given by a validated Cayley table. Copies share storage.
class FiniteGroup
{
public:
  /// Validates shape, Latin property, identity and associativity. `name`
  /// is used in error messages ("dot", "circ", ...).
  static FiniteGroup from_table(const Table& table, const std::string& name = "table");

  std::size_t order() const { return data_->n; }
  Index identity() const { return data_->identity; }
  Index mul(Index a, Index b) const { return data_->table[a * data_->n + b]; }
  Index inv(Index a) const { return data_->inverse[a]; }

  /// a·b·a⁻¹
  Index conj(Index a, Index b) const { return mul(mul(a, b), inv(a)); }
  /// a·b·a⁻¹·b⁻¹
  Index commutator(Index a, Index b) const { return mul(mul(a, b), mul(inv(a), inv(b))); }

  Table table() const;
  bool is_abelian() const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b)
  {
    return a.data_ == b.data_ || (a.data_->n == b.data_->n && a.data_->table == b.data_->table);
  }

private:
  struct Data
  {
    std::size_t n = 0;
    Index identity = 0;
    std::vector<Index> table;
    std::vector<Index> inverse;
  };
  explicit FiniteGroup(std::shared_ptr<const Data> d) : data_(std::move(d)) {}

  std::shared_ptr<const Data> data_;
};

/// Sorted member list of a subgroup.
class SubgroupSet
{
public:
  SubgroupSet() = default;
  /// Members are sorted and deduplicated; closure is the caller's contract.
  explicit SubgroupSet(std::vector<Index> members);

  const std::vector<Index>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(Index x) const;
  bool is_subset_of(const SubgroupSet& other) const;

  friend bool operator==(const SubgroupSet&, const SubgroupSet&) = default;
  friend auto operator<=>(const SubgroupSet&, const SubgroupSet&) = default;

private:
  std::vector<Index> members_;
};

SubgroupSet whole_group(const FiniteGroup& g);
SubgroupSet trivial_subgroup(const FiniteGroup& g);

/// Smallest subgroup containing gens.
SubgroupSet subgroup_generated(const FiniteGroup& g, std::span<const Index> gens);
/// Smallest normal subgroup containing gens.
SubgroupSet normal_closure(const FiniteGroup& g, std::span<const Index> gens);
SubgroupSet center(const FiniteGroup& g);

bool is_subgroup(const FiniteGroup& g, std::span<const Index> members);
bool is_normal_subgroup(const FiniteGroup& g, const SubgroupSet& s);

/// Every subgroup of g, sorted.
std::vector<SubgroupSet> all_subgroups(const FiniteGroup& g);

/// Greedy generating set: scan members in order and keep those not yet
/// generated by the previous picks.
std::vector<Index> small_generating_set(const FiniteGroup& g, const SubgroupSet& s);

struct QuotientGroup
{
  FiniteGroup group;
  /// carrier index -> coset index; cosets are numbered by first appearance.
  std::vector<Index> projection;
  /// smallest member of each coset
  std::vector<Index> representatives;
};

/// Throws std::invalid_argument if n is not normal in g.
QuotientGroup quotient_group(const FiniteGroup& g, const SubgroupSet& n);

// Constructors --------------------------------------------------------------

/// A permutation of {0..m-1} as its image list.
using Permutation = std::vector<Index>;

/// Cycle notation on 1-based points, "()" for the identity.
std::string cycle_notation(const Permutation& p);

/// Group of a closed set of permutations of equal degree; the table follows
/// the input order and products are composed right-to-left.
FiniteGroup group_from_permutations(const std::vector<Permutation>& perms);

/// All permutations of degree m in lexicographic order.
std::vector<Permutation> symmetric_permutations(std::size_t m);
std::vector<Permutation> alternating_permutations(std::size_t m);
/// Symmetries of the regular m-gon (order 2m), lexicographic order.
std::vector<Permutation> dihedral_permutations(std::size_t m);

FiniteGroup cyclic_group(std::size_t n);
FiniteGroup symmetric_group(std::size_t m);
FiniteGroup alternating_group(std::size_t m);
/// Dihedral group of order 2m.
FiniteGroup dihedral_group(std::size_t m);
/// Pairs (a, b) are indexed as a * |h| + b.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

} // namespace hopfbrace
