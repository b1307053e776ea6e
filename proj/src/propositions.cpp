#include "hopfbrace/propositions.hpp"

#include <sstream>

#include "hopfbrace/extensions.hpp"
#include "hopfbrace/series.hpp"

namespace hopfbrace {

namespace {

std::string show(const SubgroupSet& s)
{
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < s.members().size(); ++i)
    os << (i ? "," : "") << s.members()[i];
  os << "}";
  return os.str();
}

class Recorder
{
public:
  explicit Recorder(VerificationReport& r) : r_(r) {}

  /// Starts a named check; `expect` records one examined case.
  void begin(std::string name) { r_.checks.push_back({std::move(name)}); }

  void expect(bool ok, const std::string& detail)
  {
    auto& c = r_.checks.back();
    ++c.basis_cases;
    if (ok)
      return;
    if (c.failures++ < 8)
      r_.violations.push_back({c.name, {}, std::nullopt, detail});
  }

private:
  VerificationReport& r_;
};

std::vector<Subbrace> candidate_subbraces(const HopfBrace& h, const PropositionOptions& opts,
                                          bool& all)
{
  const auto& dot = h.base().dot();
  std::vector<Subbrace> out;
  all = h.dimension() <= opts.all_subgroups_up_to;
  for (auto& s : all_subgroups(dot))
    if (all || is_normal_subgroup(dot, s))
      out.emplace_back(h, std::move(s));
  return out;
}

} // namespace

VerificationReport verify_propositions(const HopfBrace& h, const PropositionOptions& opts)
{
  VerificationReport report;
  report.suite = "propositions";
  Recorder rec(report);
  const auto& br = h.base();
  const std::size_t n = br.order();

  rec.begin("λ_{a∘b} = λ_a λ_b and a∘b = a·λ_a(b)");
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      bool ok = br.circ().mul(a, b) == br.dot().mul(a, br.lambda(a, b));
      for (Index c = 0; c < n && ok; ++c)
        ok = br.lambda(br.circ().mul(a, b), c) == br.lambda(a, br.lambda(b, c));
      rec.expect(ok, "a = " + std::to_string(a) + ", b = " + std::to_string(b));
    }

  auto right = right_series(h, opts.max_n);
  rec.begin("right series terms are normal (both tests)");
  for (const auto& t : right.terms)
    rec.expect(is_normal(t) && is_normal_via_star(t), "term " + show(t.carrier()));
  rec.begin("right series descends");
  for (std::size_t k = 1; k < right.terms.size(); ++k)
    rec.expect(right.terms[k].carrier().is_subset_of(right.terms[k - 1].carrier()),
               "term " + std::to_string(k + 1));

  auto left = left_series(h, opts.max_n);
  rec.begin("left series terms are strong");
  for (const auto& t : left.terms)
    rec.expect(is_strong(t), "term " + show(t.carrier()));

  auto gamma = gamma_series(h, opts.max_n);
  rec.begin("Γ terms are normal");
  for (const auto& t : gamma.terms)
    rec.expect(is_normal(t) && is_normal_via_star(t), "term " + show(t.carrier()));
  rec.begin("Γ_{n+1} = [Γ_n, H]_Huq");
  for (std::size_t k = 0; k + 1 < gamma.terms.size(); ++k) {
    auto huq = huq_commutator(gamma.terms[k]);
    rec.expect(huq == gamma.terms[k + 1], "Γ_" + std::to_string(k + 2) + " = " +
                                              show(gamma.terms[k + 1].carrier()) +
                                              " but Huq gives " + show(huq.carrier()));
  }
  rec.begin("Γ series descends");
  for (std::size_t k = 1; k < gamma.terms.size(); ++k)
    rec.expect(gamma.terms[k].carrier().is_subset_of(gamma.terms[k - 1].carrier()),
               "term " + std::to_string(k + 1));

  bool all = false;
  auto subs = candidate_subbraces(h, opts, all);
  rec.begin(all ? "is_normal = is_normal_via_star on every subgroup"
                : "is_normal = is_normal_via_star on every ·-normal subgroup");
  for (const auto& s : subs)
    rec.expect(is_normal(s) == is_normal_via_star(s), "subgroup " + show(s.carrier()));
  rec.begin("strong subbraces are ∘-closed and T-closed");
  for (const auto& s : subs) {
    if (!is_strong(s))
      continue;
    bool ok = true;
    for (Index x : s.carrier().members()) {
      ok = ok && s.carrier().contains(br.circ().inv(x));
      for (Index y : s.carrier().members())
        ok = ok && s.carrier().contains(br.circ().mul(x, y));
    }
    rec.expect(ok, "subgroup " + show(s.carrier()));
  }

  std::vector<Subbrace> normals;
  for (const auto& s : subs)
    if (is_normal(s))
      normals.push_back(s);

  rec.begin("normal subbraces are strong");
  for (const auto& b : normals)
    rec.expect(is_strong(b), "subgroup " + show(b.carrier()));
  rec.begin("[I,H] is normal and contained in I");
  for (const auto& b : normals) {
    auto c = relative_commutator(b);
    rec.expect(is_normal(c) && c.carrier().is_subset_of(b.carrier()),
               "I = " + show(b.carrier()) + ", [I,H] = " + show(c.carrier()));
  }
  rec.begin("Hker(H → H/B) = B");
  for (const auto& b : normals) {
    auto q = quotient(h, b);
    rec.expect(hopf_kernel(q.projection) == b, "B = " + show(b.carrier()));
  }
  rec.begin("H → H/B central iff [B,H] = k1");
  for (const auto& b : normals) {
    auto q = quotient(h, b);
    bool central = *check_central_hopfcoc(q.projection).central_hopfcoc;
    rec.expect(central == relative_commutator(b).is_trivial(), "B = " + show(b.carrier()));
  }
  rec.begin("central extensions satisfy x·k = x∘k and k·x = k∘x");
  for (const auto& b : normals) {
    auto q = quotient(h, b);
    if (*check_central_hopfcoc(q.projection).central_hopfcoc)
      rec.expect(centrality_consequences(q.projection).ok(), "B = " + show(b.carrier()));
  }

  auto sa = soc_ann(h);
  rec.begin("Soc and Ann are normal");
  rec.expect(is_normal(sa.soc) && is_normal_via_star(sa.soc), "Soc = " + show(sa.soc.carrier()));
  rec.expect(is_normal(sa.ann) && is_normal_via_star(sa.ann), "Ann = " + show(sa.ann.carrier()));
  rec.begin("Ann ⊆ Soc and ann ⊆ soc");
  rec.expect(sa.ann.carrier().is_subset_of(sa.soc.carrier()), "Ann ⊄ Soc");
  rec.expect(is_subspace_of(sa.ann_space, sa.soc_space), "ann ⊄ soc");
  rec.begin("span(Soc) ⊆ soc and span(Ann) ⊆ ann");
  rec.expect(is_subspace_of(carrier_span(n, sa.soc.carrier()), sa.soc_space), "span(Soc) ⊄ soc");
  rec.expect(is_subspace_of(carrier_span(n, sa.ann.carrier()), sa.ann_space), "span(Ann) ⊄ ann");
  rec.begin("S = T on Soc");
  for (Index g : sa.soc.carrier().members())
    rec.expect(br.dot().inv(g) == br.circ().inv(g), "g = " + std::to_string(g));
  rec.begin("Soc carrier is ∘-closed");
  for (Index x : sa.soc.carrier().members())
    for (Index y : sa.soc.carrier().members())
      rec.expect(sa.soc.carrier().contains(br.circ().mul(x, y)),
                 std::to_string(x) + "∘" + std::to_string(y));
  rec.begin("a⋆(x·y) = e for x, y in Ann");
  for (Index x : sa.ann.carrier().members())
    for (Index y : sa.ann.carrier().members())
      for (Index a = 0; a < n; ++a)
        rec.expect(br.star(a, br.dot().mul(x, y)) == br.identity(),
                   "a = " + std::to_string(a) + ", x = " + std::to_string(x) +
                       ", y = " + std::to_string(y));
  rec.begin("quotients by Ann-subbraces are central both ways");
  for (const auto& b : normals) {
    if (!b.carrier().is_subset_of(sa.ann.carrier()))
      continue;
    auto r = check_central(quotient(h, b).projection);
    rec.expect(*r.central_hopfcoc && *r.central_huq, "B = " + show(b.carrier()));
  }

  auto hz = hopf_center(h);
  rec.begin("HZ is strong and central");
  rec.expect(is_strong(hz), "λ moves Z(G)");
  for (Index z : hz.carrier().members())
    for (Index a = 0; a < n; ++a)
      rec.expect(br.dot().mul(z, a) == br.dot().mul(a, z),
                 std::to_string(z) + " and " + std::to_string(a) + " do not commute");

  rec.begin("⟨H⋆H⟩ is ·-normal");
  {
    std::vector<Index> gens;
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b)
        gens.push_back(br.star(a, b));
    auto s = subgroup_generated(br.dot(), gens);
    rec.expect(is_normal_subgroup(br.dot(), s), "⟨H⋆H⟩ = " + show(s));
  }
  rec.begin("F(H) and ab(H) are trivial braces");
  {
    auto f = abelianize_F(h);
    const auto& q = f.quotient.brace.base();
    rec.expect(q.dot() == q.circ(), "F(H) has · ≠ ∘");
    auto ab = abelianize_ab(h);
    const auto& qa = ab.quotient.brace.base();
    rec.expect(qa.dot() == qa.circ() && qa.dot().is_abelian(), "ab(H) not commutative trivial");
  }
  return report;
}

} // namespace hopfbrace
