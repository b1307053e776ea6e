#include "hopfbrace/linalg.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace hopfbrace {

namespace {

void check_range(const SparseVector& v, std::size_t ambient)
{
  if (v.extent() > ambient)
    throw std::out_of_range("vector index " + std::to_string(v.extent() - 1) +
                            " outside ambient dimension " + std::to_string(ambient));
}

// Subtract multiples of the pivot rows so that v vanishes on every pivot.
SparseVector reduce(SparseVector v, const std::map<std::size_t, SparseVector>& pivot_rows)
{
  for (const auto& [pivot, row] : pivot_rows) {
    Rational c = v.at(pivot);
    if (!is_zero(c))
      v -= c * row;
  }
  return v;
}

} // namespace

Rational dot_product(const SparseVector& a, const SparseVector& b)
{
  Rational s = 0;
  const auto& x = a.entries();
  const auto& y = b.entries();
  std::size_t i = 0, j = 0;
  while (i < x.size() && j < y.size()) {
    if (x[i].first < y[j].first)
      ++i;
    else if (y[j].first < x[i].first)
      ++j;
    else
      s += x[i++].second * y[j++].second;
  }
  return s;
}

Subspace Subspace::full(std::size_t ambient)
{
  std::vector<SparseVector> basis;
  basis.reserve(ambient);
  for (std::size_t i = 0; i < ambient; ++i)
    basis.push_back(SparseVector::unit(i, Rational(1)));
  return rref(basis, ambient);
}

std::vector<std::size_t> Subspace::pivots() const
{
  std::vector<std::size_t> p;
  p.reserve(rows_.size());
  for (const auto& r : rows_)
    p.push_back(*r.leading_index());
  return p;
}

Subspace rref(std::span<const SparseVector> rows, std::size_t ambient)
{
  std::map<std::size_t, SparseVector> pivot_rows;
  for (const auto& input : rows) {
    check_range(input, ambient);
    SparseVector v = reduce(input, pivot_rows);
    if (v.empty())
      continue;
    std::size_t pivot = *v.leading_index();
    Rational lead = v.at(pivot);
    v = Rational(1 / lead) * v;
    for (auto& [p, row] : pivot_rows) {
      Rational c = row.at(pivot);
      if (!is_zero(c))
        row -= c * v;
    }
    pivot_rows.emplace(pivot, std::move(v));
  }
  Subspace s(ambient);
  s.rows_.reserve(pivot_rows.size());
  for (auto& [p, row] : pivot_rows)
    s.rows_.push_back(std::move(row));
  return s;
}

bool contains(const Subspace& space, const SparseVector& v)
{
  if (v.extent() > space.ambient())
    throw std::invalid_argument("dimension mismatch: vector index " +
                                std::to_string(v.extent() - 1) + " in ambient dimension " +
                                std::to_string(space.ambient()));
  SparseVector r = v;
  for (const auto& row : space.rows()) {
    Rational c = r.at(*row.leading_index());
    if (!is_zero(c))
      r -= c * row;
  }
  return r.empty();
}

Subspace solve_common_nullspace(std::span<const SparseVector> constraint_rows,
                                std::size_t ambient)
{
  Subspace reduced = rref(constraint_rows, ambient);
  auto pivots = reduced.pivots();
  std::vector<bool> is_pivot(ambient, false);
  for (auto p : pivots)
    is_pivot[p] = true;

  // Each free column f gives x_f = 1, x_p = -R[p][f] on pivot columns.
  std::vector<SparseVector> basis;
  for (std::size_t f = 0; f < ambient; ++f) {
    if (is_pivot[f])
      continue;
    std::vector<SparseVector::Entry> entries{{f, Rational(1)}};
    for (std::size_t k = 0; k < pivots.size(); ++k) {
      Rational c = reduced.rows()[k].at(f);
      if (!is_zero(c))
        entries.emplace_back(pivots[k], Rational(-c));
    }
    basis.push_back(SparseVector::from_entries(std::move(entries)));
  }
  return rref(basis, ambient);
}

Subspace intersect(const Subspace& a, const Subspace& b)
{
  if (a.ambient() != b.ambient())
    throw std::invalid_argument("dimension mismatch: " + std::to_string(a.ambient()) +
                                " vs " + std::to_string(b.ambient()));
  // a ∩ b = (a^⊥ + b^⊥)^⊥ for the standard form, nondegenerate over Q.
  Subspace a_perp = solve_common_nullspace(a.rows(), a.ambient());
  Subspace b_perp = solve_common_nullspace(b.rows(), b.ambient());
  std::vector<SparseVector> constraints = a_perp.rows();
  constraints.insert(constraints.end(), b_perp.rows().begin(), b_perp.rows().end());
  return solve_common_nullspace(constraints, a.ambient());
}

bool is_subspace_of(const Subspace& a, const Subspace& b)
{
  if (a.ambient() != b.ambient())
    throw std::invalid_argument("dimension mismatch");
  for (const auto& row : a.rows())
    if (!contains(b, row))
      return false;
  return true;
}

} // namespace hopfbrace
