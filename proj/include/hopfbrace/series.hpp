#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfbrace/subobjects.hpp"

namespace hopfbrace {

enum class SeriesKind
{
  Left,
  Right,
  Gamma
};

const char* to_string(SeriesKind k);
/// Throws std::invalid_argument for anything but left, right, gamma.
SeriesKind parse_series_kind(const std::string& s);

struct SeriesResult
{
  SeriesKind kind;
  std::vector<Subbrace> terms;
  /// Greedy generating set of each term's carrier.
  std::vector<std::vector<Index>> generators;
  /// Last two terms are equal.
  bool stabilized = false;
  /// 1-based position of the first trivial term, if one was reached.
  std::optional<std::size_t> nil_class;

  std::vector<std::size_t> sizes() const;
};

/// Terms are computed until a term is k1, a term repeats, or max_n terms
/// beyond H exist. Throws std::invalid_argument if max_n == 0.
SeriesResult left_series(const HopfBrace& h, std::size_t max_n = 10);
SeriesResult right_series(const HopfBrace& h, std::size_t max_n = 10);
SeriesResult gamma_series(const HopfBrace& h, std::size_t max_n = 10);
SeriesResult compute_series(const HopfBrace& h, SeriesKind kind, std::size_t max_n = 10);

/// Generated by i⋆h, h⋆i and every ·-conjugate of h⋆i. Throws
/// std::invalid_argument unless I is normal.
Subbrace relative_commutator(const Subbrace& i);
/// Normal closure of [i,h]·, [i,h]∘ and i⋆h. Throws std::invalid_argument
/// unless I is normal.
Subbrace huq_commutator(const Subbrace& i);

/// k[Z(G,·)].
Subbrace hopf_center(const HopfBrace& h);

struct SocAnnResult
{
  Subspace soc_space;
  Subspace ann_space;
  Subbrace soc;
  Subbrace ann;
  /// span(Soc carrier) is a proper subspace of soc_space.
  bool soc_strict = false;
  bool ann_strict = false;
  /// {x ∈ k[Z] : x·b = x•b for all b}, compared with soc_space.
  Subspace equal_products_space;
  bool star_trivial_differs_from_equal_products = false;
};

/// Throws std::invalid_argument in prime-field mode.
SocAnnResult soc_ann(const HopfBrace& h);

/// Coordinate span of a carrier.
Subspace carrier_span(std::size_t ambient, const SubgroupSet& s);

struct Abelianisation
{
  Subbrace kernel;
  Quotient quotient;
  /// The ·-subgroup generated by the raw generators was already normal, so
  /// the closure step added nothing.
  bool generators_already_normal = false;
};

/// H / H·(H⋆H)⁺, also H₁(H).
Abelianisation abelianize_F(const HopfBrace& h);
/// H / H·[H,H]⁺ with [H,H] generated by ⋆-values and ·-commutators.
Abelianisation abelianize_ab(const HopfBrace& h);

struct NilpotencyReport
{
  std::optional<std::size_t> left_class;
  std::optional<std::size_t> right_class;
  /// Minimal n with [H⁽ⁿ⁾, H] = k1.
  std::optional<std::size_t> right_nil_index;
  std::optional<std::size_t> gamma_class;
};

NilpotencyReport nilpotency_report(const HopfBrace& h, std::size_t max_n = 10);

} // namespace hopfbrace
