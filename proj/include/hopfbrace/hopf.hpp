#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "hopfbrace/linalg.hpp"
#include "hopfbrace/skew_brace.hpp"

namespace hopfbrace {

/// The group-algebra Hopf brace k[G] of a skew brace: both products are the
/// bilinear extensions of the Cayley tables, Δ(g) = g⊗g, ε(g) = 1, S and T
/// are the two inversions. The ground field is Q unless a prime is given;
/// the prime must not divide the carrier order.
class HopfBrace
{
public:
  explicit HopfBrace(SkewBrace base, std::optional<std::uint64_t> prime = std::nullopt);

  /// Skips the requirement that `base` was validated; negative controls only.
  static HopfBrace unvalidated(SkewBrace base);

  const SkewBrace& base() const { return base_; }
  std::size_t dimension() const { return base_.order(); }
  std::optional<std::uint64_t> prime() const { return prime_; }
  bool over_rationals() const { return !prime_; }
  /// 0 for Q.
  std::uint64_t characteristic() const { return prime_.value_or(0); }

private:
  struct Unchecked
  {
  };
  HopfBrace(Unchecked, SkewBrace base) : base_(std::move(base)) {}

  SkewBrace base_;
  std::optional<std::uint64_t> prime_;
};

/// Linear combination of group-like basis elements δ_g.
template <class F>
class BasicElement
{
public:
  using Vector = BasicSparseVector<F>;

  BasicElement() = default;
  explicit BasicElement(Vector v) : v_(std::move(v)) {}

  static BasicElement basis(Index g, F coefficient)
  {
    return BasicElement(Vector::unit(g, std::move(coefficient)));
  }

  const Vector& coefficients() const { return v_; }
  const auto& terms() const { return v_.entries(); }
  bool is_zero() const { return v_.empty(); }

  friend BasicElement operator+(const BasicElement& a, const BasicElement& b)
  {
    return BasicElement(a.v_ + b.v_);
  }
  friend BasicElement operator-(const BasicElement& a, const BasicElement& b)
  {
    return BasicElement(a.v_ - b.v_);
  }
  friend BasicElement operator*(const F& s, const BasicElement& a) { return BasicElement(s * a.v_); }
  BasicElement& operator+=(const BasicElement& o) { return *this = *this + o; }
  friend bool operator==(const BasicElement&, const BasicElement&) = default;

private:
  Vector v_;
};

using Element = BasicElement<Rational>;

/// Element of H⊗H, stored by flattened pair index i * dim + j.
template <class F>
class BasicTensor2
{
public:
  using Vector = BasicSparseVector<F>;

  BasicTensor2() = default;
  explicit BasicTensor2(std::size_t dim) : dim_(dim) {}

  static BasicTensor2 pure(std::size_t dim, const BasicElement<F>& x, const BasicElement<F>& y)
  {
    std::vector<typename Vector::Entry> e;
    e.reserve(x.terms().size() * y.terms().size());
    for (const auto& [i, a] : x.terms())
      for (const auto& [j, b] : y.terms())
        e.emplace_back(i * dim + j, a * b);
    BasicTensor2 t(dim);
    t.v_ = Vector::from_entries(std::move(e));
    return t;
  }

  static BasicTensor2 from_entries(std::size_t dim, std::vector<typename Vector::Entry> e)
  {
    BasicTensor2 t(dim);
    t.v_ = Vector::from_entries(std::move(e));
    return t;
  }

  std::size_t dim() const { return dim_; }
  F coefficient(Index i, Index j) const { return v_.at(i * dim_ + j); }

  template <class Fn>
  void for_each(Fn&& fn) const
  {
    for (const auto& [k, c] : v_.entries())
      fn(static_cast<Index>(k / dim_), static_cast<Index>(k % dim_), c);
  }

  BasicTensor2 flip() const
  {
    std::vector<typename Vector::Entry> e;
    for_each([&](Index i, Index j, const F& c) { e.emplace_back(j * dim_ + i, c); });
    BasicTensor2 t(dim_);
    t.v_ = Vector::from_entries(std::move(e));
    return t;
  }

  bool is_zero() const { return v_.empty(); }

  friend BasicTensor2 operator+(const BasicTensor2& a, const BasicTensor2& b)
  {
    BasicTensor2 t(a.dim_ ? a.dim_ : b.dim_);
    t.v_ = a.v_ + b.v_;
    return t;
  }
  friend BasicTensor2 operator*(const F& s, const BasicTensor2& a)
  {
    BasicTensor2 t(a.dim_);
    t.v_ = s * a.v_;
    return t;
  }
  BasicTensor2& operator+=(const BasicTensor2& o) { return *this = *this + o; }
  friend bool operator==(const BasicTensor2& a, const BasicTensor2& b) { return a.v_ == b.v_; }

private:
  std::size_t dim_ = 0;
  Vector v_;
};

using Tensor2 = BasicTensor2<Rational>;

// Element-level arithmetic -------------------------------------------------

namespace detail {

template <class F>
void check_basis(const HopfBrace& h, const BasicElement<F>& x)
{
  if (x.coefficients().extent() > h.dimension())
    throw std::invalid_argument("basis mismatch: element index " +
                                std::to_string(x.coefficients().extent() - 1) +
                                " outside dimension " + std::to_string(h.dimension()));
}

template <class F, class Op>
BasicElement<F> bilinear(const HopfBrace& h, const BasicElement<F>& x, const BasicElement<F>& y,
                         Op op)
{
  check_basis(h, x);
  check_basis(h, y);
  std::vector<typename BasicSparseVector<F>::Entry> e;
  e.reserve(x.terms().size() * y.terms().size());
  for (const auto& [i, a] : x.terms())
    for (const auto& [j, b] : y.terms())
      e.emplace_back(op(static_cast<Index>(i), static_cast<Index>(j)), a * b);
  return BasicElement<F>(BasicSparseVector<F>::from_entries(std::move(e)));
}

template <class F, class Op>
BasicElement<F> linear(const HopfBrace& h, const BasicElement<F>& x, Op op)
{
  check_basis(h, x);
  std::vector<typename BasicSparseVector<F>::Entry> e;
  e.reserve(x.terms().size());
  for (const auto& [i, a] : x.terms())
    e.emplace_back(op(static_cast<Index>(i)), a);
  return BasicElement<F>(BasicSparseVector<F>::from_entries(std::move(e)));
}

} // namespace detail

template <class F>
F scalar_one(const HopfBrace& h)
{
  return scalar_from_int<F>(h.characteristic(), 1);
}

template <class F>
BasicElement<F> basis_element(const HopfBrace& h, Index g)
{
  if (g >= h.dimension())
    throw std::out_of_range("basis index out of range");
  return BasicElement<F>::basis(g, scalar_one<F>(h));
}

/// The shared unit 1 = δ_e.
template <class F>
BasicElement<F> unit(const HopfBrace& h)
{
  return basis_element<F>(h, h.base().identity());
}

template <class F>
BasicElement<F> dot_mul(const HopfBrace& h, const BasicElement<F>& x, const BasicElement<F>& y)
{
  const auto& g = h.base().dot();
  return detail::bilinear(h, x, y, [&](Index a, Index b) { return g.mul(a, b); });
}

template <class F>
BasicElement<F> circ_mul(const HopfBrace& h, const BasicElement<F>& x, const BasicElement<F>& y)
{
  const auto& g = h.base().circ();
  return detail::bilinear(h, x, y, [&](Index a, Index b) { return g.mul(a, b); });
}

template <class F>
BasicTensor2<F> comultiply(const HopfBrace& h, const BasicElement<F>& x)
{
  detail::check_basis(h, x);
  std::vector<typename BasicSparseVector<F>::Entry> e;
  e.reserve(x.terms().size());
  for (const auto& [i, a] : x.terms())
    e.emplace_back(i * h.dimension() + i, a);
  return BasicTensor2<F>::from_entries(h.dimension(), std::move(e));
}

template <class F>
F counit(const HopfBrace& h, const BasicElement<F>& x)
{
  detail::check_basis(h, x);
  F s{};
  for (const auto& [i, a] : x.terms())
    s += a;
  return s;
}

template <class F>
BasicElement<F> antipode_S(const HopfBrace& h, const BasicElement<F>& x)
{
  const auto& g = h.base().dot();
  return detail::linear(h, x, [&](Index a) { return g.inv(a); });
}

template <class F>
BasicElement<F> antipode_T(const HopfBrace& h, const BasicElement<F>& x)
{
  const auto& g = h.base().circ();
  return detail::linear(h, x, [&](Index a) { return g.inv(a); });
}

/// a⇀b, the bilinear extension of λ.
template <class F>
BasicElement<F> act_left(const HopfBrace& h, const BasicElement<F>& a, const BasicElement<F>& b)
{
  const auto& br = h.base();
  return detail::bilinear(h, a, b, [&](Index x, Index y) { return br.lambda(x, y); });
}

/// a⋆b, the bilinear extension of the set-level star.
template <class F>
BasicElement<F> star(const HopfBrace& h, const BasicElement<F>& a, const BasicElement<F>& b)
{
  const auto& br = h.base();
  return detail::bilinear(h, a, b, [&](Index x, Index y) { return br.star(x, y); });
}

template <class F>
BasicTensor2<F> tensor(const HopfBrace& h, const BasicElement<F>& x, const BasicElement<F>& y)
{
  return BasicTensor2<F>::pure(h.dimension(), x, y);
}

/// Σ c_ij · fn(δ_i, δ_j)
template <class F, class Fn>
auto contract(const HopfBrace& h, const BasicTensor2<F>& t, Fn&& fn)
{
  using R = std::invoke_result_t<Fn, const BasicElement<F>&, const BasicElement<F>&>;
  R acc{};
  t.for_each([&](Index i, Index j, const F& c) {
    acc += c * fn(basis_element<F>(h, i), basis_element<F>(h, j));
  });
  return acc;
}

/// Evaluates a Sweedler expression x₁ ⊗ … ⊗ x_legs ↦ fn(legs) by iterating
/// the comultiplication on the last leg and extending linearly.
template <class F, class Fn>
auto sweedler(const HopfBrace& h, const BasicElement<F>& x, std::size_t legs, Fn&& fn)
{
  using Legs = std::span<const BasicElement<F>>;
  using R = std::invoke_result_t<Fn, Legs>;
  struct Term
  {
    std::vector<Index> legs;
    F coeff;
  };
  std::vector<Term> terms;
  for (const auto& [i, c] : x.terms())
    terms.push_back({{static_cast<Index>(i)}, c});
  for (std::size_t k = 1; k < legs; ++k) {
    std::vector<Term> next;
    for (const auto& t : terms) {
      comultiply(h, basis_element<F>(h, t.legs.back())).for_each([&](Index i, Index j, const F& c) {
        Term u{t.legs, t.coeff * c};
        u.legs.back() = i;
        u.legs.push_back(j);
        next.push_back(std::move(u));
      });
    }
    terms = std::move(next);
  }
  R acc{};
  std::vector<BasicElement<F>> elems;
  for (const auto& t : terms) {
    elems.clear();
    for (Index g : t.legs)
      elems.push_back(basis_element<F>(h, g));
    acc += t.coeff * fn(Legs(elems));
  }
  return acc;
}

} // namespace hopfbrace
