#include "hopfbrace/skew_brace.hpp"

#include <stdexcept>
#include <string>

namespace hopfbrace {

SkewBrace::SkewBrace(FiniteGroup dot, FiniteGroup circ, bool validated)
{
  auto d = std::make_shared<Data>(Data{std::move(dot), std::move(circ), {}, {}, validated});
  const std::size_t n = d->dot.order();
  d->lambda.resize(n * n);
  d->star.resize(n * n);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      Index l = d->dot.mul(d->dot.inv(a), d->circ.mul(a, b));
      d->lambda[a * n + b] = l;
      d->star[a * n + b] = d->dot.mul(l, d->dot.inv(b));
    }
  data_ = std::move(d);
}

SkewBrace SkewBrace::unchecked(const FiniteGroup& dot, const FiniteGroup& circ)
{
  if (dot.order() != circ.order() || dot.identity() != circ.identity())
    throw std::invalid_argument("unchecked brace needs equal orders and identities");
  return SkewBrace(dot, circ, false);
}

SkewBrace validate_skew_brace(const Table& dot_table, const Table& circ_table, Index identity)
{
  FiniteGroup dot = FiniteGroup::from_table(dot_table, "dot");
  const std::size_t n = dot.order();
  if (identity != dot.identity())
    throw ValidationError(Violation::IdentityMismatch, "dot", {identity, dot.identity()},
                          "identity-mismatch: declared identity " + std::to_string(identity) +
                              " but the dot identity is " + std::to_string(dot.identity()));

  if (circ_table.size() != n)
    throw ValidationError(Violation::Shape, "circ", {},
                          "circ table has " + std::to_string(circ_table.size()) +
                              " rows, expected " + std::to_string(n));
  for (std::size_t r = 0; r < n; ++r) {
    if (circ_table[r].size() != n)
      throw ValidationError(Violation::Shape, "circ", {static_cast<Index>(r)},
                            "circ row " + std::to_string(r) + " has wrong length");
    for (Index x : circ_table[r])
      if (x >= n)
        throw ValidationError(Violation::Shape, "circ", {static_cast<Index>(r)},
                              "circ row " + std::to_string(r) + " has entry out of range");
  }

  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      for (Index c = 0; c < n; ++c) {
        Index lhs = circ_table[a][dot.mul(b, c)];
        Index rhs = dot.mul(dot.mul(circ_table[a][b], dot.inv(a)), circ_table[a][c]);
        if (lhs != rhs)
          throw ValidationError(Violation::Compatibility, "", {a, b, c},
                                "compatibility violation a∘(b·c) != (a∘b)·a⁻¹·(a∘c) at (a,b,c) = (" +
                                    std::to_string(a) + "," + std::to_string(b) + "," +
                                    std::to_string(c) + ")");
      }

  FiniteGroup circ = FiniteGroup::from_table(circ_table, "circ");
  if (circ.identity() != identity)
    throw ValidationError(Violation::IdentityMismatch, "circ", {identity, circ.identity()},
                          "identity-mismatch: declared identity " + std::to_string(identity) +
                              " but the circ identity is " + std::to_string(circ.identity()));
  return SkewBrace(std::move(dot), std::move(circ), true);
}

Index lambda_act(const SkewBrace& b, Index x, Index y)
{
  if (x >= b.order() || y >= b.order())
    throw std::out_of_range("lambda_act: index out of range");
  return b.dot().mul(b.dot().inv(x), b.circ().mul(x, y));
}

Index star_set(const SkewBrace& b, Index x, Index y)
{
  if (x >= b.order() || y >= b.order())
    throw std::out_of_range("star_set: index out of range");
  return b.dot().mul(lambda_act(b, x, y), b.dot().inv(y));
}

SkewBrace trivial_brace(const FiniteGroup& g)
{
  Table t = g.table();
  return validate_skew_brace(t, t, g.identity());
}

SkewBrace opposite_brace(const FiniteGroup& g)
{
  Table t = g.table();
  Table op(t.size(), std::vector<Index>(t.size()));
  for (std::size_t a = 0; a < t.size(); ++a)
    for (std::size_t b = 0; b < t.size(); ++b)
      op[a][b] = t[b][a];
  return validate_skew_brace(t, op, g.identity());
}

SkewBrace direct_product(const SkewBrace& b1, const SkewBrace& b2)
{
  FiniteGroup dot = direct_product(b1.dot(), b2.dot());
  FiniteGroup circ = direct_product(b1.circ(), b2.circ());
  return validate_skew_brace(dot.table(), circ.table(), dot.identity());
}

SkewBrace radical_c4()
{
  Table dot(4, std::vector<Index>(4)), circ(4, std::vector<Index>(4));
  for (Index a = 0; a < 4; ++a)
    for (Index b = 0; b < 4; ++b) {
      dot[a][b] = (a + b) % 4;
      circ[a][b] = (a + b + 2 * a * b) % 4;
    }
  return validate_skew_brace(dot, circ, 0);
}

bool validate_morphism(const BraceMapSet& f)
{
  const auto& s = f.source;
  const auto& t = f.target;
  if (f.images.size() != s.order())
    return false;
  for (Index x : f.images)
    if (x >= t.order())
      return false;
  if (f.images[s.identity()] != t.identity())
    return false;
  for (Index a = 0; a < s.order(); ++a)
    for (Index b = 0; b < s.order(); ++b) {
      if (f.images[s.dot().mul(a, b)] != t.dot().mul(f.images[a], f.images[b]))
        return false;
      if (f.images[s.circ().mul(a, b)] != t.circ().mul(f.images[a], f.images[b]))
        return false;
    }
  return true;
}

SubgroupSet kernel_set(const BraceMapSet& f)
{
  if (!validate_morphism(f))
    throw std::invalid_argument("kernel_set: not a brace morphism");
  std::vector<Index> k;
  for (Index a = 0; a < f.source.order(); ++a)
    if (f.images[a] == f.target.identity())
      k.push_back(a);
  return SubgroupSet(std::move(k));
}

} // namespace hopfbrace
