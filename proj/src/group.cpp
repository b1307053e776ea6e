#include "hopfbrace/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hopfbrace {

const char* to_string(Violation v)
{
  switch (v) {
  case Violation::Shape: return "shape";
  case Violation::NotLatinSquare: return "not-a-group (Latin square)";
  case Violation::NoIdentity: return "not-a-group (identity)";
  case Violation::NotAssociative: return "not-a-group (associativity)";
  case Violation::IdentityMismatch: return "identity-mismatch";
  case Violation::Compatibility: return "compatibility";
  }
  return "unknown";
}

namespace {

[[noreturn]] void fail(Violation kind, const std::string& table, std::vector<Index> witness,
                       const std::string& detail)
{
  throw ValidationError(kind, table, std::move(witness),
                        std::string(to_string(kind)) + " violation in " + table + " table: " +
                            detail);
}

} // namespace

FiniteGroup FiniteGroup::from_table(const Table& table, const std::string& name)
{
  const std::size_t n = table.size();
  if (n == 0 || n > max_order)
    fail(Violation::Shape, name, {},
         "order " + std::to_string(n) + " outside [1, " + std::to_string(max_order) + "]");

  auto data = std::make_shared<Data>();
  data->n = n;
  data->table.resize(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    if (table[r].size() != n)
      fail(Violation::Shape, name, {static_cast<Index>(r)},
           "row " + std::to_string(r) + " has " + std::to_string(table[r].size()) +
               " entries, expected " + std::to_string(n));
    for (std::size_t c = 0; c < n; ++c) {
      if (table[r][c] >= n)
        fail(Violation::Shape, name, {static_cast<Index>(r), static_cast<Index>(c)},
             "entry (" + std::to_string(r) + "," + std::to_string(c) + ") = " +
                 std::to_string(table[r][c]) + " out of range");
      data->table[r * n + c] = table[r][c];
    }
  }
  const auto at = [&](std::size_t a, std::size_t b) { return data->table[a * n + b]; };

  std::vector<int> seen(n);
  for (std::size_t r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), -1);
    for (std::size_t c = 0; c < n; ++c) {
      Index x = at(r, c);
      if (seen[x] >= 0)
        fail(Violation::NotLatinSquare, name,
             {static_cast<Index>(r), static_cast<Index>(seen[x]), static_cast<Index>(c)},
             "row " + std::to_string(r) + " repeats entry " + std::to_string(x) +
                 " in columns " + std::to_string(seen[x]) + " and " + std::to_string(c));
      seen[x] = static_cast<int>(c);
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), -1);
    for (std::size_t r = 0; r < n; ++r) {
      Index x = at(r, c);
      if (seen[x] >= 0)
        fail(Violation::NotLatinSquare, name,
             {static_cast<Index>(seen[x]), static_cast<Index>(r), static_cast<Index>(c)},
             "column " + std::to_string(c) + " repeats entry " + std::to_string(x) +
                 " in rows " + std::to_string(seen[x]) + " and " + std::to_string(r));
      seen[x] = static_cast<int>(r);
    }
  }

  // In a Latin square the only candidate identity is the unique idempotent.
  std::size_t e = n;
  for (std::size_t a = 0; a < n && e == n; ++a)
    if (at(a, a) == a)
      e = a;
  bool two_sided = e < n;
  for (std::size_t a = 0; two_sided && a < n; ++a)
    two_sided = at(e, a) == a && at(a, e) == a;
  if (!two_sided)
    fail(Violation::NoIdentity, name, {}, "no two-sided identity element");
  data->identity = static_cast<Index>(e);

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (at(at(a, b), c) != at(a, at(b, c)))
          fail(Violation::NotAssociative, name,
               {static_cast<Index>(a), static_cast<Index>(b), static_cast<Index>(c)},
               "(ab)c != a(bc) at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                   std::to_string(c) + ")");

  data->inverse.resize(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (at(a, b) == e)
        data->inverse[a] = static_cast<Index>(b);

  return FiniteGroup(std::move(data));
}

Table FiniteGroup::table() const
{
  Table t(order(), std::vector<Index>(order()));
  for (std::size_t a = 0; a < order(); ++a)
    for (std::size_t b = 0; b < order(); ++b)
      t[a][b] = mul(static_cast<Index>(a), static_cast<Index>(b));
  return t;
}

bool FiniteGroup::is_abelian() const
{
  for (Index a = 0; a < order(); ++a)
    for (Index b = a + 1; b < order(); ++b)
      if (mul(a, b) != mul(b, a))
        return false;
  return true;
}

SubgroupSet::SubgroupSet(std::vector<Index> members) : members_(std::move(members))
{
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool SubgroupSet::contains(Index x) const
{
  return std::binary_search(members_.begin(), members_.end(), x);
}

bool SubgroupSet::is_subset_of(const SubgroupSet& other) const
{
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                       members_.end());
}

SubgroupSet whole_group(const FiniteGroup& g)
{
  std::vector<Index> all(g.order());
  std::iota(all.begin(), all.end(), Index{0});
  return SubgroupSet(std::move(all));
}

SubgroupSet trivial_subgroup(const FiniteGroup& g) { return SubgroupSet({g.identity()}); }

SubgroupSet subgroup_generated(const FiniteGroup& g, std::span<const Index> gens)
{
  // Right multiplication by generators reaches every product of generators,
  // which in a finite group is the generated subgroup.
  std::vector<bool> in(g.order(), false);
  std::vector<Index> members{g.identity()};
  in[g.identity()] = true;
  std::vector<Index> distinct;
  for (Index x : gens) {
    if (x >= g.order())
      throw std::out_of_range("generator " + std::to_string(x) + " out of range");
    if (x != g.identity() && std::find(distinct.begin(), distinct.end(), x) == distinct.end())
      distinct.push_back(x);
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (Index s : distinct) {
      Index y = g.mul(members[i], s);
      if (!in[y]) {
        in[y] = true;
        members.push_back(y);
      }
    }
  }
  return SubgroupSet(std::move(members));
}

SubgroupSet normal_closure(const FiniteGroup& g, std::span<const Index> gens)
{
  SubgroupSet s = subgroup_generated(g, gens);
  for (;;) {
    std::vector<Index> extra = s.members();
    bool grew = false;
    for (Index a = 0; a < g.order(); ++a)
      for (Index x : s.members()) {
        Index y = g.conj(a, x);
        if (!s.contains(y) && std::find(extra.begin(), extra.end(), y) == extra.end()) {
          extra.push_back(y);
          grew = true;
        }
      }
    if (!grew)
      return s;
    s = subgroup_generated(g, extra);
  }
}

SubgroupSet center(const FiniteGroup& g)
{
  std::vector<Index> z;
  for (Index a = 0; a < g.order(); ++a) {
    bool central = true;
    for (Index x = 0; x < g.order() && central; ++x)
      central = g.mul(a, x) == g.mul(x, a);
    if (central)
      z.push_back(a);
  }
  return SubgroupSet(std::move(z));
}

bool is_subgroup(const FiniteGroup& g, std::span<const Index> members)
{
  SubgroupSet s(std::vector<Index>(members.begin(), members.end()));
  if (s.size() == 0 || !s.contains(g.identity()))
    return false;
  for (Index a : s.members()) {
    if (a >= g.order() || !s.contains(g.inv(a)))
      return false;
    for (Index b : s.members())
      if (!s.contains(g.mul(a, b)))
        return false;
  }
  return true;
}

bool is_normal_subgroup(const FiniteGroup& g, const SubgroupSet& s)
{
  if (!is_subgroup(g, s.members()))
    return false;
  for (Index a = 0; a < g.order(); ++a)
    for (Index x : s.members())
      if (!s.contains(g.conj(a, x)))
        return false;
  return true;
}

std::vector<SubgroupSet> all_subgroups(const FiniteGroup& g)
{
  // Every subgroup arises from the trivial one by adjoining one element at a
  // time, so closing the family under "adjoin an element" finds them all.
  std::set<SubgroupSet> found;
  std::deque<SubgroupSet> queue{trivial_subgroup(g)};
  found.insert(queue.front());
  while (!queue.empty()) {
    SubgroupSet s = std::move(queue.front());
    queue.pop_front();
    for (Index x = 0; x < g.order(); ++x) {
      if (s.contains(x))
        continue;
      std::vector<Index> gens = small_generating_set(g, s);
      gens.push_back(x);
      SubgroupSet t = subgroup_generated(g, gens);
      if (found.insert(t).second)
        queue.push_back(std::move(t));
    }
  }
  return {found.begin(), found.end()};
}

std::vector<Index> small_generating_set(const FiniteGroup& g, const SubgroupSet& s)
{
  std::vector<Index> gens;
  SubgroupSet span = trivial_subgroup(g);
  for (Index x : s.members()) {
    if (span.contains(x))
      continue;
    gens.push_back(x);
    span = subgroup_generated(g, gens);
    if (span.size() == s.size())
      break;
  }
  return gens;
}

QuotientGroup quotient_group(const FiniteGroup& g, const SubgroupSet& n)
{
  if (!is_normal_subgroup(g, n))
    throw std::invalid_argument("quotient_group: subgroup is not normal");
  const Index unassigned = static_cast<Index>(g.order());
  std::vector<Index> proj(g.order(), unassigned);
  std::vector<Index> reps;
  for (Index a = 0; a < g.order(); ++a) {
    if (proj[a] != unassigned)
      continue;
    auto id = static_cast<Index>(reps.size());
    reps.push_back(a);
    for (Index x : n.members())
      proj[g.mul(a, x)] = id;
  }
  Table t(reps.size(), std::vector<Index>(reps.size()));
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = 0; j < reps.size(); ++j)
      t[i][j] = proj[g.mul(reps[i], reps[j])];
  return {FiniteGroup::from_table(t, "quotient"), std::move(proj), std::move(reps)};
}

std::string cycle_notation(const Permutation& p)
{
  std::ostringstream os;
  std::vector<bool> done(p.size(), false);
  bool any = false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (done[i] || p[i] == i)
      continue;
    any = true;
    os << '(';
    std::size_t j = i;
    bool first = true;
    while (!done[j]) {
      done[j] = true;
      os << (first ? "" : " ") << j + 1;
      first = false;
      j = p[j];
    }
    os << ')';
  }
  if (!any)
    os << "()";
  return os.str();
}

FiniteGroup group_from_permutations(const std::vector<Permutation>& perms)
{
  const std::size_t n = perms.size();
  if (n == 0 || n > max_order)
    throw std::invalid_argument("permutation group order out of range");
  std::vector<std::pair<Permutation, Index>> lookup;
  lookup.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    lookup.emplace_back(perms[i], static_cast<Index>(i));
  std::sort(lookup.begin(), lookup.end());
  Table t(n, std::vector<Index>(n));
  Permutation prod(perms[0].size());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t x = 0; x < prod.size(); ++x)
        prod[x] = perms[a][perms[b][x]];
      auto it = std::lower_bound(lookup.begin(), lookup.end(), std::make_pair(prod, Index{0}));
      if (it == lookup.end() || it->first != prod)
        throw std::invalid_argument("permutation set is not closed under composition");
      t[a][b] = it->second;
    }
  return FiniteGroup::from_table(t, "permutation");
}

namespace {

bool is_even(const Permutation& p)
{
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      inversions += p[i] > p[j];
  return inversions % 2 == 0;
}

void check_size(std::size_t order)
{
  if (order == 0 || order > max_order)
    throw std::invalid_argument("group order " + std::to_string(order) + " outside [1, " +
                                std::to_string(max_order) + "]");
}

} // namespace

std::vector<Permutation> symmetric_permutations(std::size_t m)
{
  std::size_t order = 1;
  for (std::size_t k = 2; k <= m; ++k)
    order *= k;
  check_size(order);
  Permutation p(m);
  std::iota(p.begin(), p.end(), Index{0});
  std::vector<Permutation> out;
  do
    out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<Permutation> alternating_permutations(std::size_t m)
{
  auto all = symmetric_permutations(m);
  std::erase_if(all, [](const Permutation& p) { return !is_even(p); });
  return all;
}

std::vector<Permutation> dihedral_permutations(std::size_t m)
{
  if (m < 3)
    throw std::invalid_argument("dihedral group needs m >= 3");
  check_size(2 * m);
  std::vector<Permutation> out;
  for (std::size_t k = 0; k < m; ++k) {
    Permutation rot(m), ref(m);
    for (std::size_t x = 0; x < m; ++x) {
      rot[x] = static_cast<Index>((x + k) % m);
      ref[x] = static_cast<Index>((k + m - x) % m);
    }
    out.push_back(std::move(rot));
    out.push_back(std::move(ref));
  }
  std::sort(out.begin(), out.end());
  return out;
}

FiniteGroup cyclic_group(std::size_t n)
{
  check_size(n);
  Table t(n, std::vector<Index>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      t[a][b] = static_cast<Index>((a + b) % n);
  return FiniteGroup::from_table(t, "cyclic");
}

FiniteGroup symmetric_group(std::size_t m) { return group_from_permutations(symmetric_permutations(m)); }

FiniteGroup alternating_group(std::size_t m)
{
  return group_from_permutations(alternating_permutations(m));
}

FiniteGroup dihedral_group(std::size_t m) { return group_from_permutations(dihedral_permutations(m)); }

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h)
{
  const std::size_t n = g.order() * h.order();
  check_size(n);
  const auto m = static_cast<Index>(h.order());
  Table t(n, std::vector<Index>(n));
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      t[a][b] = g.mul(a / m, b / m) * m + h.mul(a % m, b % m);
  return FiniteGroup::from_table(t, "product");
}

} // namespace hopfbrace
