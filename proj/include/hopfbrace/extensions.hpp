#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfbrace/subobjects.hpp"

namespace hopfbrace {

/// A kernel element k and a source element a at which a check failed.
struct CentralityWitness
{
  Index kernel_element;
  Index source_element;
  std::string detail;
};

struct ExtensionReport
{
  HopfMorphism morphism;
  bool surjective = false;
  Subbrace kernel;
  /// Unset when that check was not run.
  std::optional<bool> central_hopfcoc;
  std::optional<bool> central_huq;
  /// First failing pair per check, in (k, a) lexicographic order.
  std::optional<CentralityWitness> hopfcoc_witness;
  std::optional<CentralityWitness> huq_witness;
};

/// k⋆a = a⋆k = e for every k in Hker(f) and a in the source. Throws
/// std::invalid_argument for a non-surjective f.
ExtensionReport check_central_hopfcoc(const HopfMorphism& f);
/// a·k = k·a = k∘a = a∘k for every kernel k and source a. Throws
/// std::invalid_argument for a non-surjective f.
ExtensionReport check_central_huq(const HopfMorphism& f);
/// Both checks in one report.
ExtensionReport check_central(const HopfMorphism& f);

struct ConsequenceReport
{
  std::size_t pairs_checked = 0;
  std::vector<CentralityWitness> failures;
  bool ok() const { return failures.empty(); }
};

/// x·k = x∘k and k·x = k∘x for every kernel k and source x. Throws
/// std::invalid_argument unless f is Hopf_coc-central.
ConsequenceReport centrality_consequences(const HopfMorphism& f);

} // namespace hopfbrace
