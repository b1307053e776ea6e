#include "hopfbrace/extensions.hpp"

#include <stdexcept>

namespace hopfbrace {

namespace {

void require_surjective(const HopfMorphism& f)
{
  if (!f.surjective())
    throw std::invalid_argument("centrality needs a surjective morphism");
}

ExtensionReport base_report(const HopfMorphism& f)
{
  require_surjective(f);
  return ExtensionReport{f, true, hopf_kernel(f), std::nullopt, std::nullopt, std::nullopt,
                         std::nullopt};
}

std::string idx(Index i) { return std::to_string(i); }

void run_hopfcoc(ExtensionReport& r)
{
  const auto& br = r.kernel.brace();
  r.central_hopfcoc = true;
  for (Index k : r.kernel.carrier().members())
    for (Index a = 0; a < br.order(); ++a) {
      Index ka = br.star(k, a), ak = br.star(a, k);
      if (ka != br.identity() || ak != br.identity()) {
        r.central_hopfcoc = false;
        r.hopfcoc_witness = CentralityWitness{
            k, a,
            ka != br.identity() ? idx(k) + "⋆" + idx(a) + " = " + idx(ka) + " ≠ e"
                                : idx(a) + "⋆" + idx(k) + " = " + idx(ak) + " ≠ e"};
        return;
      }
    }
}

void run_huq(ExtensionReport& r)
{
  const auto& br = r.kernel.brace();
  r.central_huq = true;
  for (Index k : r.kernel.carrier().members())
    for (Index a = 0; a < br.order(); ++a) {
      Index p1 = br.dot().mul(a, k), p2 = br.dot().mul(k, a);
      Index p3 = br.circ().mul(k, a), p4 = br.circ().mul(a, k);
      if (p1 != p2 || p2 != p3 || p3 != p4) {
        r.central_huq = false;
        r.huq_witness = CentralityWitness{k, a,
                                          "a·k = " + idx(p1) + ", k·a = " + idx(p2) +
                                              ", k∘a = " + idx(p3) + ", a∘k = " + idx(p4) +
                                              " (k = " + idx(k) + ", a = " + idx(a) + ")"};
        return;
      }
    }
}

} // namespace

ExtensionReport check_central_hopfcoc(const HopfMorphism& f)
{
  auto r = base_report(f);
  run_hopfcoc(r);
  return r;
}

ExtensionReport check_central_huq(const HopfMorphism& f)
{
  auto r = base_report(f);
  run_huq(r);
  return r;
}

ExtensionReport check_central(const HopfMorphism& f)
{
  auto r = base_report(f);
  run_hopfcoc(r);
  run_huq(r);
  return r;
}

ConsequenceReport centrality_consequences(const HopfMorphism& f)
{
  auto central = check_central_hopfcoc(f);
  if (!*central.central_hopfcoc)
    throw std::invalid_argument("centrality consequences need a Hopf_coc-central extension");
  const auto& br = f.source().base();
  ConsequenceReport r;
  for (Index k : central.kernel.carrier().members())
    for (Index x = 0; x < br.order(); ++x) {
      ++r.pairs_checked;
      if (br.dot().mul(x, k) != br.circ().mul(x, k))
        r.failures.push_back({k, x, "x·k ≠ x∘k"});
      if (br.dot().mul(k, x) != br.circ().mul(k, x))
        r.failures.push_back({k, x, "k·x ≠ k∘x"});
    }
  return r;
}

} // namespace hopfbrace
