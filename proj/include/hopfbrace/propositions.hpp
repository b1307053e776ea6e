#pragma once

#include "hopfbrace/verify.hpp"

namespace hopfbrace {

struct PropositionOptions
{
  std::size_t max_n = 10;
  /// Both normality tests are compared on every subgroup up to this order;
  /// above it only on the normal subgroups of (G,·).
  std::size_t all_subgroups_up_to = 24;
};

/// Subobject, series, socle and extension statements checked exhaustively
/// on the carrier. Each check's basis_cases counts the objects examined.
VerificationReport verify_propositions(const HopfBrace& h, const PropositionOptions& opts = {});

} // namespace hopfbrace
