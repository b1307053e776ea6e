#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hopfbrace/scalar.hpp"

namespace hopfbrace {

/// Sparse coordinate vector: entries sorted by index, no stored zeros.
template <class F>
class BasicSparseVector
{
public:
  using Entry = std::pair<std::size_t, F>;

  BasicSparseVector() = default;

  /// Accepts entries in any order; repeated indices are summed.
  static BasicSparseVector from_entries(std::vector<Entry> entries)
  {
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    BasicSparseVector v;
    v.entries_.reserve(entries.size());
    for (auto& e : entries) {
      if (!v.entries_.empty() && v.entries_.back().first == e.first)
        v.entries_.back().second += e.second;
      else
        v.entries_.push_back(std::move(e));
    }
    v.prune();
    return v;
  }

  static BasicSparseVector unit(std::size_t index, F value)
  {
    BasicSparseVector v;
    if (!is_zero(value))
      v.entries_.emplace_back(index, std::move(value));
    return v;
  }

  const std::vector<Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

  /// One past the largest stored index (0 for the zero vector).
  std::size_t extent() const { return entries_.empty() ? 0 : entries_.back().first + 1; }

  F at(std::size_t index) const
  {
    auto it = find(index);
    return it == entries_.end() ? F{} : it->second;
  }

  std::optional<std::size_t> leading_index() const
  {
    if (entries_.empty())
      return std::nullopt;
    return entries_.front().first;
  }

  BasicSparseVector& operator+=(const BasicSparseVector& o) { return *this = *this + o; }
  BasicSparseVector& operator-=(const BasicSparseVector& o) { return *this = *this - o; }

  friend BasicSparseVector operator+(const BasicSparseVector& a, const BasicSparseVector& b)
  {
    return merge(a, b, false);
  }
  friend BasicSparseVector operator-(const BasicSparseVector& a, const BasicSparseVector& b)
  {
    return merge(a, b, true);
  }
  friend BasicSparseVector operator*(const F& s, const BasicSparseVector& v)
  {
    BasicSparseVector r;
    if (is_zero(s))
      return r;
    r.entries_.reserve(v.entries_.size());
    for (const auto& [i, c] : v.entries_)
      r.entries_.emplace_back(i, F(s * c));
    r.prune();
    return r;
  }

  friend bool operator==(const BasicSparseVector& a, const BasicSparseVector& b)
  {
    return a.entries_ == b.entries_;
  }

private:
  auto find(std::size_t index) const
  {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                               [](const Entry& e, std::size_t i) { return e.first < i; });
    return (it != entries_.end() && it->first == index) ? it : entries_.end();
  }

  void prune()
  {
    std::erase_if(entries_, [](const Entry& e) { return is_zero(e.second); });
  }

  static BasicSparseVector merge(const BasicSparseVector& a, const BasicSparseVector& b,
                                 bool subtract)
  {
    BasicSparseVector r;
    r.entries_.reserve(a.entries_.size() + b.entries_.size());
    std::size_t i = 0, j = 0;
    while (i < a.entries_.size() || j < b.entries_.size()) {
      if (j == b.entries_.size() ||
          (i < a.entries_.size() && a.entries_[i].first < b.entries_[j].first)) {
        r.entries_.push_back(a.entries_[i++]);
      } else if (i == a.entries_.size() || b.entries_[j].first < a.entries_[i].first) {
        const auto& e = b.entries_[j++];
        r.entries_.emplace_back(e.first, subtract ? F(F{} - e.second) : e.second);
      } else {
        F s = subtract ? F(a.entries_[i].second - b.entries_[j].second)
                       : F(a.entries_[i].second + b.entries_[j].second);
        if (!is_zero(s))
          r.entries_.emplace_back(a.entries_[i].first, std::move(s));
        ++i;
        ++j;
      }
    }
    return r;
  }

  std::vector<Entry> entries_;
};

using SparseVector = BasicSparseVector<Rational>;

Rational dot_product(const SparseVector& a, const SparseVector& b);

/// Row space in reduced row-echelon form over the rationals. Two spanning
/// sets of the same space yield equal values.
class Subspace
{
public:
  explicit Subspace(std::size_t ambient = 0) : ambient_(ambient) {}

  static Subspace full(std::size_t ambient);

  std::size_t ambient() const { return ambient_; }
  std::size_t dimension() const { return rows_.size(); }
  const std::vector<SparseVector>& rows() const { return rows_; }
  std::vector<std::size_t> pivots() const;

  friend bool operator==(const Subspace& a, const Subspace& b)
  {
    return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
  }

private:
  friend Subspace rref(std::span<const SparseVector> rows, std::size_t ambient);

  std::size_t ambient_;
  std::vector<SparseVector> rows_;
};

/// Throws std::out_of_range if any index is >= ambient.
Subspace rref(std::span<const SparseVector> rows, std::size_t ambient);

/// Throws std::invalid_argument if v has an index outside the ambient space.
bool contains(const Subspace& space, const SparseVector& v);

/// {x : <row, x> = 0 for every constraint row}.
Subspace solve_common_nullspace(std::span<const SparseVector> constraint_rows,
                                std::size_t ambient);

Subspace intersect(const Subspace& a, const Subspace& b);

/// a ⊆ b as subspaces.
bool is_subspace_of(const Subspace& a, const Subspace& b);

} // namespace hopfbrace
