// Command-line front end: validate braces, compute series and invariants,
// check central extensions and run the verification suites.

#include <chrono>
#include <cstdlib>
#include <future>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hopfbrace/catalog.hpp"
#include "hopfbrace/extensions.hpp"
#include "hopfbrace/propositions.hpp"
#include "hopfbrace/series.hpp"
#include "hopfbrace/verify.hpp"

using namespace hopfbrace;
using nlohmann::ordered_json;

namespace {

constexpr const char* engine_version = "1.0.0";

enum Exit
{
  ok = 0,
  failed = 1,
  bad_input = 2
};

struct Common
{
  bool json = false;
  bool timing = false;
};

ordered_json carrier_json(const SubgroupSet& s, const BraceDescriptor& d)
{
  ordered_json j;
  j["indices"] = s.members();
  if (!d.labels.empty()) {
    std::vector<std::string> names;
    for (Index g : s.members())
      names.push_back(d.labels[g]);
    j["labels"] = names;
  }
  return j;
}

std::string carrier_text(const std::vector<Index>& s, const BraceDescriptor& d)
{
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < s.size(); ++i)
    os << (i ? ", " : "") << s[i];
  os << "}";
  if (!d.labels.empty() && !s.empty()) {
    os << "  [";
    for (std::size_t i = 0; i < s.size(); ++i)
      os << (i ? ", " : "") << d.labels[s[i]];
    os << "]";
  }
  return os.str();
}

ordered_json descriptor_json(const BraceDescriptor& d)
{
  return {{"name", d.name}, {"order", d.order}, {"construction", to_string(d.construction)}};
}

class Output
{
public:
  Output(const Common& c, std::string command) : c_(c), start_(std::chrono::steady_clock::now())
  {
    doc_["engine_version"] = engine_version;
    doc_["command"] = std::move(command);
  }

  ordered_json& doc() { return doc_; }
  std::ostream& text() { return text_; }

  int finish(int code)
  {
    if (c_.timing) {
      double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                            start_)
                      .count();
      doc_["timing_ms"] = ms;
      text_ << "time: " << ms << " ms\n";
    }
    doc_["exit_code"] = code;
    if (c_.json)
      std::cout << doc_.dump(2) << "\n";
    else
      std::cout << text_.str();
    return code;
  }

private:
  const Common& c_;
  std::chrono::steady_clock::time_point start_;
  ordered_json doc_;
  std::ostringstream text_;
};

std::uint64_t default_seed_from_env()
{
  if (const char* s = std::getenv("HOPFBRACE_SEED")) {
    try {
      return std::stoull(s);
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring unparsable HOPFBRACE_SEED '" << s << "'\n";
    }
  }
  return default_seed;
}

ordered_json validation_json(const ValidationError& e)
{
  return {{"violation", to_string(e.kind())},
          {"table", e.table()},
          {"witness", e.witness()},
          {"message", e.what()}};
}

int cmd_validate(const Common& c, const std::string& input)
{
  Output out(c, "validate");
  auto e = resolve_brace(input);
  out.doc()["brace"] = descriptor_json(e.descriptor);
  out.doc()["valid"] = true;
  out.text() << e.descriptor.name << ": valid skew brace of order " << e.descriptor.order << "\n";
  return out.finish(ok);
}

int cmd_series(const Common& c, const std::string& input, const std::string& kind_name,
               std::size_t max_n)
{
  auto kind = parse_series_kind(kind_name);
  auto e = resolve_brace(input);
  HopfBrace h(e.brace);
  auto r = compute_series(h, kind, max_n);
  Output out(c, "series");
  out.doc()["brace"] = descriptor_json(e.descriptor);
  out.doc()["kind"] = to_string(kind);
  out.doc()["max_n"] = max_n;
  ordered_json terms = ordered_json::array();
  for (std::size_t k = 0; k < r.terms.size(); ++k) {
    ordered_json t;
    t["size"] = r.terms[k].dimension();
    t["carrier"] = carrier_json(r.terms[k].carrier(), e.descriptor);
    t["generators"] = r.generators[k];
    terms.push_back(t);
  }
  out.doc()["sizes"] = r.sizes();
  out.doc()["terms"] = terms;
  out.doc()["stabilized"] = r.stabilized;
  out.doc()["nil_class"] = r.nil_class ? ordered_json(*r.nil_class) : ordered_json(nullptr);

  auto& t = out.text();
  t << e.descriptor.name << ": " << to_string(kind) << " series\n";
  t << "  term  size  generators\n";
  for (std::size_t k = 0; k < r.terms.size(); ++k)
    t << "  " << k + 1 << "     " << r.terms[k].dimension() << "     "
      << carrier_text(r.generators[k], e.descriptor) << "\n";
  t << "sizes: [";
  auto sizes = r.sizes();
  for (std::size_t k = 0; k < sizes.size(); ++k)
    t << (k ? ", " : "") << sizes[k];
  t << "]\n";
  if (r.nil_class)
    t << "nilpotent, class " << *r.nil_class << "\n";
  else if (r.stabilized)
    t << "stabilized at size " << sizes.back() << ", not nilpotent\n";
  else
    t << "not nilpotent within " << max_n << " steps\n";
  return out.finish(ok);
}

int cmd_invariants(const Common& c, const std::string& input, std::size_t max_n)
{
  auto e = resolve_brace(input);
  HopfBrace h(e.brace);
  auto sa = soc_ann(h);
  auto hz = hopf_center(h);
  auto f = abelianize_F(h);
  auto ab = abelianize_ab(h);
  auto nil = nilpotency_report(h, max_n);
  const auto& d = e.descriptor;

  Output out(c, "invariants");
  auto& j = out.doc();
  j["brace"] = descriptor_json(d);
  j["hopf_center"] = carrier_json(hz.carrier(), d);
  j["Soc"] = carrier_json(sa.soc.carrier(), d);
  j["Ann"] = carrier_json(sa.ann.carrier(), d);
  j["dim_soc"] = sa.soc_space.dimension();
  j["dim_ann"] = sa.ann_space.dimension();
  j["soc_strictly_contains_span_Soc"] = sa.soc_strict;
  j["ann_strictly_contains_span_Ann"] = sa.ann_strict;
  j["star_trivial_differs_from_equal_products"] = sa.star_trivial_differs_from_equal_products;
  j["dim_F"] = f.quotient.brace.dimension();
  j["F_kernel"] = carrier_json(f.kernel.carrier(), d);
  j["F_generators_already_normal"] = f.generators_already_normal;
  j["dim_ab"] = ab.quotient.brace.dimension();
  j["ab_kernel"] = carrier_json(ab.kernel.carrier(), d);
  auto opt = [](const std::optional<std::size_t>& v) {
    return v ? ordered_json(*v) : ordered_json(nullptr);
  };
  j["nilpotency"] = {{"left_class", opt(nil.left_class)},
                     {"right_class", opt(nil.right_class)},
                     {"right_nil_index", opt(nil.right_nil_index)},
                     {"gamma_class", opt(nil.gamma_class)}};

  auto cls = [](const std::optional<std::size_t>& v) {
    return v ? std::to_string(*v) : std::string("not nilpotent");
  };
  auto& t = out.text();
  t << d.name << " (order " << d.order << ")\n";
  t << "  HZ       " << carrier_text(hz.carrier().members(), d) << "\n";
  t << "  Soc      " << carrier_text(sa.soc.carrier().members(), d) << "\n";
  t << "  Ann      " << carrier_text(sa.ann.carrier().members(), d) << "\n";
  t << "  dim soc  " << sa.soc_space.dimension() << (sa.soc_strict ? "  (strictly larger than span Soc)" : "") << "\n";
  t << "  dim ann  " << sa.ann_space.dimension() << (sa.ann_strict ? "  (strictly larger than span Ann)" : "") << "\n";
  t << "  dim F    " << f.quotient.brace.dimension() << "\n";
  t << "  dim ab   " << ab.quotient.brace.dimension() << "\n";
  t << "  left class " << cls(nil.left_class) << ", right class " << cls(nil.right_class)
    << ", Γ class " << cls(nil.gamma_class) << "\n";
  if (nil.right_nil_index)
    t << "  [H^(n),H] = k1 from n = " << *nil.right_nil_index << "\n";
  return out.finish(ok);
}

ordered_json witness_json(const std::optional<CentralityWitness>& w)
{
  if (!w)
    return nullptr;
  return {{"kernel_element", w->kernel_element},
          {"source_element", w->source_element},
          {"detail", w->detail}};
}

int cmd_check_central(const Common& c, const std::string& input, const std::string& map_path)
{
  auto e = resolve_brace(input);
  auto m = load_map(map_path);
  if (!(m.source.brace == e.brace))
    throw std::invalid_argument("map source '" + m.source.descriptor.name +
                                "' differs from input '" + e.descriptor.name + "'");
  HopfMorphism f(HopfBrace(m.source.brace), HopfBrace(m.target.brace), m.images);
  auto r = check_central(f);
  const auto& d = e.descriptor;

  Output out(c, "check-central");
  auto& j = out.doc();
  j["brace"] = descriptor_json(d);
  j["target"] = descriptor_json(m.target.descriptor);
  j["surjective"] = r.surjective;
  j["kernel"] = carrier_json(r.kernel.carrier(), d);
  j["central_hopfcoc"] = *r.central_hopfcoc;
  j["hopfcoc_witness"] = witness_json(r.hopfcoc_witness);
  j["central_huq"] = *r.central_huq;
  j["huq_witness"] = witness_json(r.huq_witness);
  if (*r.central_hopfcoc) {
    auto cons = centrality_consequences(f);
    j["consequences_ok"] = cons.ok();
  }

  auto& t = out.text();
  t << d.name << " -> " << m.target.descriptor.name << "\n";
  t << "  kernel   " << carrier_text(r.kernel.carrier().members(), d) << "\n";
  t << "  central (cocommutative Hopf algebras): " << (*r.central_hopfcoc ? "yes" : "no") << "\n";
  if (r.hopfcoc_witness)
    t << "    witness: " << r.hopfcoc_witness->detail << "\n";
  t << "  central (Huq): " << (*r.central_huq ? "yes" : "no") << "\n";
  if (r.huq_witness)
    t << "    witness: " << r.huq_witness->detail << "\n";
  return out.finish(ok);
}

struct VerifyRequest
{
  std::string suite;
  VerifyOptions opts;
  std::optional<std::uint64_t> prime;
};

std::vector<VerificationReport> run_suites(const SkewBrace& b, const VerifyRequest& req)
{
  HopfBrace h(b, req.prime);
  std::vector<VerificationReport> out;
  const bool all = req.suite == "all";
  if (all || req.suite == "axioms")
    out.push_back(verify_hopf_brace_axiom(h, req.opts));
  if (all || req.suite == "lemma") {
    VerificationReport lemma;
    lemma.suite = "lemma";
    for (int clause = 1; clause <= 4; ++clause)
      lemma.merge(verify_star_lemma(h, clause, req.opts));
    out.push_back(std::move(lemma));
  }
  if (all || req.suite == "structure")
    out.push_back(verify_structure_identities(h, req.opts));
  if ((all && !req.prime) || req.suite == "propositions") {
    if (req.prime)
      throw std::invalid_argument("the propositions suite needs rational mode");
    out.push_back(verify_propositions(h));
  }
  return out;
}

int cmd_verify(const Common& c, const std::vector<std::string>& inputs, bool all_entries,
               const VerifyRequest& req)
{
  static const std::vector<std::string> suites = {"all", "axioms", "lemma", "structure",
                                                  "propositions"};
  if (std::find(suites.begin(), suites.end(), req.suite) == suites.end())
    throw std::invalid_argument("unknown suite '" + req.suite + "'");
  std::vector<CatalogEntry> entries;
  if (all_entries)
    entries = builtin_catalog();
  for (const auto& in : inputs)
    entries.push_back(resolve_brace(in));
  if (entries.empty())
    throw std::invalid_argument("verify needs an input or --all");

  // Entries run concurrently; results are reported in input order.
  std::vector<std::future<std::vector<VerificationReport>>> jobs;
  for (const auto& e : entries)
    jobs.push_back(std::async(std::launch::async, run_suites, e.brace, req));

  Output out(c, "verify");
  auto& j = out.doc();
  j["suite"] = req.suite;
  j["seed"] = req.opts.seed;
  j["samples"] = req.opts.samples;
  j["field"] = req.prime ? "GF(" + std::to_string(*req.prime) + ")" : std::string("Q");
  auto& t = out.text();
  t << "suite " << req.suite << ", seed " << req.opts.seed << ", samples " << req.opts.samples
    << ", field " << j["field"].get<std::string>() << "\n";

  bool pass = true;
  ordered_json results = ordered_json::array();
  for (std::size_t k = 0; k < entries.size(); ++k) {
    auto reports = jobs[k].get();
    ordered_json entry;
    entry["brace"] = descriptor_json(entries[k].descriptor);
    ordered_json suites_json = ordered_json::array();
    for (const auto& r : reports) {
      ordered_json s;
      s["suite"] = r.suite;
      s["ok"] = r.ok();
      ordered_json checks = ordered_json::array();
      std::size_t cases = 0, failures = 0;
      for (const auto& ch : r.checks) {
        checks.push_back({{"identity", ch.name},
                          {"basis_cases", ch.basis_cases},
                          {"random_cases", ch.random_cases},
                          {"failures", ch.failures}});
        cases += ch.basis_cases + ch.random_cases;
        failures += ch.failures;
      }
      s["checks"] = checks;
      ordered_json viol = ordered_json::array();
      for (const auto& v : r.violations)
        viol.push_back({{"identity", v.identity},
                        {"basis", v.basis},
                        {"sample", v.sample ? ordered_json(*v.sample) : ordered_json(nullptr)},
                        {"detail", v.detail}});
      s["violations"] = viol;
      suites_json.push_back(s);
      pass = pass && r.ok();
      t << "  " << entries[k].descriptor.name << "  " << r.suite << "  "
        << (r.ok() ? "PASS" : "FAIL") << "  (" << r.checks.size() << " identities, " << cases
        << " cases, " << failures << " failures)\n";
      if (!r.ok())
        t << "    first witness: " << r.violations.front().detail << "\n";
    }
    entry["suites"] = suites_json;
    results.push_back(entry);
  }
  j["results"] = results;
  j["ok"] = pass;
  t << (pass ? "all checks passed" : "verification FAILED") << "\n";
  return out.finish(pass ? ok : failed);
}

/// Runs a command body, mapping exceptions to exit codes.
template <class Fn>
int guarded(const Common& c, const std::string& command, Fn&& fn)
{
  auto fail = [&](int code, ordered_json detail, const std::string& text) {
    if (c.json) {
      ordered_json j;
      j["engine_version"] = engine_version;
      j["command"] = command;
      j["error"] = std::move(detail);
      j["exit_code"] = code;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cerr << "error: " << text << "\n";
    }
    return code;
  };
  try {
    return fn();
  } catch (const ValidationError& e) {
    std::ostringstream os;
    os << to_string(e.kind()) << (e.table().empty() ? "" : " in " + e.table()) << ": " << e.what()
       << "\n  witness:";
    for (Index i : e.witness())
      os << " " << i;
    return fail(failed, validation_json(e), os.str());
  } catch (const ParseError& e) {
    ordered_json d = {{"parse_error", e.what()}, {"line", e.line()}, {"field", e.field()}};
    std::string where = e.line() ? " (line " + std::to_string(e.line()) + ")" : "";
    return fail(bad_input, d, std::string(e.what()) + where);
  } catch (const std::invalid_argument& e) {
    return fail(bad_input, {{"input_error", e.what()}}, e.what());
  } catch (const std::out_of_range& e) {
    return fail(bad_input, {{"input_error", e.what()}}, e.what());
  }
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Skew braces and their group-algebra Hopf braces: series, socles, central "
               "extensions and identity verification"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_flag("--json", common.json, "Emit one JSON document");
  app.add_flag("--timing", common.timing, "Report wall-clock time");
  app.set_version_flag("--version", engine_version);

  std::string input;
  const std::string input_help = "Catalog name, trivial:<G>, opposite:<G>, brace file, or - for stdin";

  auto* validate = app.add_subcommand("validate", "Check the skew brace axioms");
  validate->add_option("input", input, input_help)->required();

  std::string kind = "left";
  std::size_t max_n = 10;
  auto* series = app.add_subcommand("series", "Left, right or Γ series");
  series->add_option("input", input, input_help)->required();
  series->add_option("--kind", kind, "left, right or gamma")->capture_default_str();
  series->add_option("--max", max_n, "Maximum number of steps")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  auto* inv = app.add_subcommand("invariants", "Socle, annihilator, center, F(H), ab(H)");
  inv->add_option("input", input, input_help)->required();
  inv->add_option("--max", max_n, "Maximum series steps for nilpotency")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  std::string map_path;
  auto* central = app.add_subcommand("check-central", "Centrality of a surjective morphism");
  central->add_option("input", input, input_help)->required();
  central->add_option("--map", map_path, "Map file {source, target, images}")->required();

  std::vector<std::string> inputs;
  bool all_entries = false;
  VerifyRequest req{"all", {default_seed_from_env(), default_samples, true}, std::nullopt};
  std::uint64_t prime = 0;
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("input", inputs, input_help);
  verify->add_flag("--all", all_entries, "Every catalog entry");
  verify->add_option("--suite", req.suite, "all, axioms, lemma, structure or propositions")
      ->capture_default_str();
  verify->add_option("--seed", req.opts.seed, "Random seed (default from HOPFBRACE_SEED)")
      ->capture_default_str();
  verify->add_option("--samples", req.opts.samples, "Random combinations per identity")
      ->capture_default_str();
  verify->add_option("--prime", prime, "Verify over GF(p) instead of Q");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? ok : bad_input;
  }
  if (prime)
    req.prime = prime;

  if (*validate)
    return guarded(common, "validate", [&] { return cmd_validate(common, input); });
  if (*series)
    return guarded(common, "series", [&] { return cmd_series(common, input, kind, max_n); });
  if (*inv)
    return guarded(common, "invariants", [&] { return cmd_invariants(common, input, max_n); });
  if (*central)
    return guarded(common, "check-central",
                   [&] { return cmd_check_central(common, input, map_path); });
  return guarded(common, "verify", [&] { return cmd_verify(common, inputs, all_entries, req); });
}
