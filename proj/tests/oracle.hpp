#pragma once

// Independent set-level oracle for the regression values. Nothing here uses
// the library: tables come from closed formulas or hand-rolled permutation
// composition, subgroups are found by enumerating every subset of the
// carrier, and ranks are computed by a separate floating-point elimination.

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <vector>

namespace oracle {

struct RawBrace
{
  int n = 0;
  int e = 0;
  std::vector<std::vector<int>> dot, circ;

  int inv(const std::vector<std::vector<int>>& t, int a) const
  {
    for (int b = 0; b < n; ++b)
      if (t[a][b] == e)
        return b;
    return -1;
  }
  int lambda(int a, int b) const { return dot[inv(dot, a)][circ[a][b]]; }
  int star(int a, int b) const { return dot[lambda(a, b)][inv(dot, b)]; }
};

inline RawBrace radical_c4()
{
  RawBrace b{4, 0, {}, {}};
  b.dot.assign(4, std::vector<int>(4));
  b.circ = b.dot;
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) {
      b.dot[x][y] = (x + y) % 4;
      b.circ[x][y] = (x + y + 2 * x * y) % 4;
    }
  return b;
}

inline RawBrace cyclic_trivial(int n)
{
  RawBrace b{n, 0, {}, {}};
  b.dot.assign(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      b.dot[x][y] = (x + y) % n;
  b.circ = b.dot;
  return b;
}

/// S3 as the six permutations of {0,1,2} in lexicographic order, product
/// (p*q)(i) = p(q(i)).
inline std::vector<std::array<int, 3>> s3_elements()
{
  std::vector<std::array<int, 3>> out;
  std::array<int, 3> p{0, 1, 2};
  do
    out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline std::vector<std::vector<int>> s3_table()
{
  auto els = s3_elements();
  std::vector<std::vector<int>> t(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::array<int, 3> c{};
      for (int i = 0; i < 3; ++i)
        c[i] = els[a][els[b][i]];
      t[a][b] = static_cast<int>(std::find(els.begin(), els.end(), c) - els.begin());
    }
  return t;
}

inline int s3_sign(int idx)
{
  auto p = s3_elements()[idx];
  int inv = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      inv += p[i] > p[j];
  return inv % 2;
}

inline RawBrace s3_trivial()
{
  RawBrace b{6, 0, s3_table(), {}};
  b.circ = b.dot;
  return b;
}

inline RawBrace s3_opposite()
{
  RawBrace b{6, 0, s3_table(), {}};
  b.circ.assign(6, std::vector<int>(6));
  for (int x = 0; x < 6; ++x)
    for (int y = 0; y < 6; ++y)
      b.circ[x][y] = b.dot[y][x];
  return b;
}

/// D4 as symmetries of the square on {0,1,2,3}, lexicographic order.
inline RawBrace d4_trivial()
{
  std::vector<std::array<int, 4>> els;
  for (int k = 0; k < 4; ++k) {
    els.push_back({k % 4, (k + 1) % 4, (k + 2) % 4, (k + 3) % 4});
    els.push_back({k % 4, (k + 3) % 4, (k + 2) % 4, (k + 1) % 4});
  }
  std::sort(els.begin(), els.end());
  RawBrace b{8, 0, {}, {}};
  b.dot.assign(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int c = 0; c < 8; ++c) {
      std::array<int, 4> p{};
      for (int i = 0; i < 4; ++i)
        p[i] = els[a][els[c][i]];
      b.dot[a][c] = static_cast<int>(std::find(els.begin(), els.end(), p) - els.begin());
    }
  b.circ = b.dot;
  return b;
}

using Mask = std::uint32_t;

inline bool closed(const std::vector<std::vector<int>>& t, Mask m)
{
  for (int a = 0; a < 32; ++a)
    if (m >> a & 1)
      for (int b = 0; b < 32; ++b)
        if ((m >> b & 1) && !(m >> t[a][b] & 1))
          return false;
  return true;
}

/// Smallest ·-closed subset containing gens and e: the intersection of all
/// closed supersets, found by enumerating every subset.
inline Mask generated(const RawBrace& b, Mask gens)
{
  gens |= Mask{1} << b.e;
  Mask best = (Mask{1} << b.n) - 1;
  for (Mask m = 0; m < (Mask{1} << b.n); ++m)
    if ((m & gens) == gens && closed(b.dot, m))
      best &= m;
  return best;
}

inline Mask star_image(const RawBrace& b, Mask left, Mask right)
{
  Mask out = 0;
  for (int x = 0; x < b.n; ++x)
    for (int y = 0; y < b.n; ++y)
      if ((left >> x & 1) && (right >> y & 1))
        out |= Mask{1} << b.star(x, y);
  return out;
}

inline Mask all(const RawBrace& b) { return (Mask{1} << b.n) - 1; }

/// Sizes of H^1, H^2, ... (left) or H^(1), ... (right), stopping at the
/// first repeat or at {e}.
inline std::vector<int> series_sizes(const RawBrace& b, bool left, int max_terms = 10)
{
  std::vector<int> sizes;
  Mask cur = all(b);
  sizes.push_back(std::popcount(cur));
  for (int k = 1; k < max_terms; ++k) {
    Mask next = generated(b, left ? star_image(b, all(b), cur) : star_image(b, cur, all(b)));
    sizes.push_back(std::popcount(next));
    if (next == cur || std::popcount(next) == 1)
      break;
    cur = next;
  }
  return sizes;
}

inline std::vector<int> gamma_sizes(const RawBrace& b, int max_terms = 10)
{
  std::vector<int> sizes;
  Mask cur = all(b);
  sizes.push_back(std::popcount(cur));
  for (int k = 1; k < max_terms; ++k) {
    Mask gens = star_image(b, cur, all(b)) | star_image(b, all(b), cur);
    for (int h = 0; h < b.n; ++h)
      for (int i = 0; i < b.n; ++i)
        if (cur >> i & 1) {
          int c = b.dot[b.dot[h][i]][b.dot[b.inv(b.dot, h)][b.inv(b.dot, i)]];
          gens |= Mask{1} << c;
        }
    Mask next = generated(b, gens);
    sizes.push_back(std::popcount(next));
    if (next == cur || std::popcount(next) == 1)
      break;
    cur = next;
  }
  return sizes;
}

inline Mask center(const RawBrace& b)
{
  Mask z = 0;
  for (int a = 0; a < b.n; ++a) {
    bool c = true;
    for (int x = 0; x < b.n; ++x)
      c = c && b.dot[a][x] == b.dot[x][a];
    if (c)
      z |= Mask{1} << a;
  }
  return z;
}

inline Mask socle(const RawBrace& b)
{
  Mask s = 0;
  for (int a = 0; a < b.n; ++a) {
    if (!(center(b) >> a & 1))
      continue;
    bool trivial = true;
    for (int x = 0; x < b.n; ++x)
      trivial = trivial && b.lambda(a, x) == x;
    if (trivial)
      s |= Mask{1} << a;
  }
  return s;
}

inline Mask annihilator(const RawBrace& b)
{
  Mask s = 0;
  for (int a = 0; a < b.n; ++a) {
    if (!(socle(b) >> a & 1))
      continue;
    bool fixed = true;
    for (int x = 0; x < b.n; ++x)
      fixed = fixed && b.lambda(x, a) == a;
    if (fixed)
      s |= Mask{1} << a;
  }
  return s;
}

/// |G / <G⋆G>| (optionally with ·-commutators added).
inline int abelianisation_dim(const RawBrace& b, bool with_commutators)
{
  Mask gens = star_image(b, all(b), all(b));
  if (with_commutators)
    for (int x = 0; x < b.n; ++x)
      for (int y = 0; y < b.n; ++y)
        gens |= Mask{1} << b.dot[b.dot[x][y]][b.dot[b.inv(b.dot, x)][b.inv(b.dot, y)]];
  return b.n / std::popcount(generated(b, gens));
}

inline int float_rank(std::vector<std::vector<double>> rows)
{
  int rank = 0;
  if (rows.empty())
    return 0;
  const int cols = static_cast<int>(rows[0].size());
  for (int c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    int p = rank;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (std::fabs(rows[r][c]) > std::fabs(rows[p][c]))
        p = r;
    if (std::fabs(rows[p][c]) < 1e-9)
      continue;
    std::swap(rows[p], rows[rank]);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r)
      if (r != rank) {
        double f = rows[r][c] / rows[rank][c];
        for (int k = 0; k < cols; ++k)
          rows[r][k] -= f * rows[rank][k];
      }
    ++rank;
  }
  return rank;
}

/// Dimension of {x supported on Z(G) : x⋆b = ε(x)ε(b)1 for all b} (and,
/// when `two_sided`, also b⋆x = ε(b)ε(x)1), from the rank of every integer
/// solution in [-2, 2]^|Z| found by brute-force enumeration.
inline int socle_space_dim(const RawBrace& b, bool two_sided)
{
  std::vector<int> z;
  for (int a = 0; a < b.n; ++a)
    if (center(b) >> a & 1)
      z.push_back(a);
  const int m = static_cast<int>(z.size());
  std::vector<std::vector<double>> solutions;
  std::vector<int> coeff(m, -2);
  for (;;) {
    bool ok = true;
    for (int y = 0; y < b.n && ok; ++y) {
      std::vector<int> left(b.n, 0), right(b.n, 0);
      int eps = 0;
      for (int k = 0; k < m; ++k) {
        left[b.star(z[k], y)] += coeff[k];
        right[b.star(y, z[k])] += coeff[k];
        eps += coeff[k];
      }
      for (int t = 0; t < b.n && ok; ++t) {
        int expect = t == b.e ? eps : 0;
        ok = left[t] == expect && (!two_sided || right[t] == expect);
      }
    }
    if (ok) {
      std::vector<double> full(b.n, 0.0);
      for (int k = 0; k < m; ++k)
        full[z[k]] = coeff[k];
      solutions.push_back(full);
    }
    int k = 0;
    while (k < m && ++coeff[k] > 2)
      coeff[k++] = -2;
    if (k == m)
      break;
  }
  return float_rank(solutions);
}

} // namespace oracle
