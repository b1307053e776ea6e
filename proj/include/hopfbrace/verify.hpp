#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hopfbrace/hopf.hpp"

namespace hopfbrace {

inline constexpr std::uint64_t default_seed = 20240917;
inline constexpr std::size_t default_samples = 32;

struct VerifyOptions
{
  std::uint64_t seed = default_seed;
  /// Random 2-term linear combinations per identity, on top of the
  /// exhaustive basis sweep.
  std::size_t samples = default_samples;
  bool exhaustive = true;
};

struct IdentityViolation
{
  std::string identity;
  /// Basis indices of the failing tuple; empty for a random sample.
  std::vector<Index> basis;
  /// Position of the failing random sample, if any.
  std::optional<std::size_t> sample;
  std::string detail;
};

struct IdentityCheck
{
  std::string name;
  std::size_t basis_cases = 0;
  std::size_t random_cases = 0;
  std::size_t failures = 0;
};

/// Outcome of one verification suite. Violations are capped per identity;
/// `failures` in each check is the full count.
struct VerificationReport
{
  std::string suite;
  std::vector<IdentityCheck> checks;
  std::vector<IdentityViolation> violations;

  bool ok() const { return violations.empty(); }
  void merge(const VerificationReport& other);
};

/// a•(b·c) = (a₁•b)·S(a₂)·(a₃•c)
VerificationReport verify_hopf_brace_axiom(const HopfBrace& h, const VerifyOptions& opts = {});

/// One clause (1-4) of the ⋆-product lemma. Throws std::invalid_argument for
/// other clause numbers.
VerificationReport verify_star_lemma(const HopfBrace& h, int clause,
                                     const VerifyOptions& opts = {});

/// Hopf algebra laws for both structures plus the identities relating ·, •,
/// ⇀, ⋆, S and T.
VerificationReport verify_structure_identities(const HopfBrace& h,
                                               const VerifyOptions& opts = {});

} // namespace hopfbrace
