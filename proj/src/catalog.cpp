#include "hopfbrace/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace hopfbrace {

using nlohmann::json;

const char* to_string(Construction c)
{
  switch (c) {
  case Construction::Trivial:
    return "trivial";
  case Construction::Opposite:
    return "opposite";
  case Construction::RadicalC4:
    return "radical_c4";
  case Construction::Product:
    return "product";
  case Construction::File:
    return "file";
  }
  return "?";
}

namespace {

std::vector<std::string> index_labels(std::size_t n)
{
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(std::to_string(i));
  return out;
}

std::vector<std::string> perm_labels(const std::vector<Permutation>& perms)
{
  std::vector<std::string> out;
  for (const auto& p : perms)
    out.push_back(cycle_notation(p));
  return out;
}

std::vector<std::string> product_labels(const std::vector<std::string>& a,
                                        const std::vector<std::string>& b)
{
  std::vector<std::string> out;
  for (const auto& x : a)
    for (const auto& y : b)
      out.push_back("(" + x + "," + y + ")");
  return out;
}

std::size_t parse_size(const std::string& s, const std::string& spec)
{
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 3)
    throw std::invalid_argument("bad group spec '" + spec + "'");
  return std::stoul(s);
}

NamedGroup parse_factor(const std::string& f)
{
  if (f.size() < 2)
    throw std::invalid_argument("bad group spec '" + f + "'");
  std::size_t m = parse_size(f.substr(1), f);
  switch (f[0]) {
  case 'C':
    if (m < 1 || m > max_order)
      break;
    return {cyclic_group(m), index_labels(m)};
  case 'S':
    if (m < 1 || m > 5)
      break;
    return {symmetric_group(m), perm_labels(symmetric_permutations(m))};
  case 'A':
    if (m < 1 || m > 5)
      break;
    return {alternating_group(m), perm_labels(alternating_permutations(m))};
  case 'D':
    if (m < 3 || 2 * m > max_order)
      break;
    return {dihedral_group(m), perm_labels(dihedral_permutations(m))};
  default:
    break;
  }
  throw std::invalid_argument("unsupported group '" + f + "' (Cn, Sn/An with n<=5, Dn with n>=3)");
}

CatalogEntry make_entry(std::string name, Construction c, std::string notes, SkewBrace b,
                        std::vector<std::string> labels)
{
  return {BraceDescriptor{std::move(name), b.order(), c, std::move(notes), std::move(labels)},
          std::move(b)};
}

CatalogEntry group_brace(const std::string& prefix, const std::string& group)
{
  auto g = parse_group_spec(group);
  if (prefix == "trivial")
    return make_entry("trivial:" + group, Construction::Trivial, "a∘b = a·b",
                      trivial_brace(g.group), std::move(g.labels));
  return make_entry("opposite:" + group, Construction::Opposite, "a∘b = b·a",
                    opposite_brace(g.group), std::move(g.labels));
}

CatalogEntry product_entry(const CatalogEntry& a, const CatalogEntry& b)
{
  return make_entry("product(" + a.descriptor.name + "," + b.descriptor.name + ")",
                    Construction::Product, "componentwise", direct_product(a.brace, b.brace),
                    product_labels(a.descriptor.labels, b.descriptor.labels));
}

std::vector<CatalogEntry> build_catalog()
{
  std::vector<CatalogEntry> c;
  for (const char* g : {"C2", "C4", "C2xC2", "S3", "D4", "A4", "S4"})
    c.push_back(group_brace("trivial", g));
  for (const char* g : {"S3", "D4", "A4", "S4"})
    c.push_back(group_brace("opposite", g));
  c.push_back(make_entry("radical_c4", Construction::RadicalC4, "Z/4, a·b = a+b, a∘b = a+b+2ab",
                         radical_c4(), index_labels(4)));
  const CatalogEntry rad = c.back();
  c.push_back(product_entry(rad, rad));
  c.push_back(product_entry(rad, group_brace("trivial", "S3")));
  c.push_back(product_entry(group_brace("trivial", "C2"), group_brace("opposite", "S4")));
  return c;
}

/// 1-based line of the first occurrence of "key", or 0.
std::size_t line_of_key(const std::string& text, const std::string& key)
{
  auto pos = text.find("\"" + key + "\"");
  if (pos == std::string::npos)
    return 0;
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + pos, '\n'));
}

json parse_document(const std::string& text)
{
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t byte = std::min<std::size_t>(e.byte, text.size());
    std::size_t line = 1 + static_cast<std::size_t>(
                               std::count(text.begin(), text.begin() + byte, '\n'));
    throw ParseError(std::string("malformed document: ") + e.what(), line);
  }
}

const json& field(const json& doc, const std::string& key)
{
  if (!doc.is_object())
    throw ParseError("document must be an object", 1);
  auto it = doc.find(key);
  if (it == doc.end())
    throw ParseError("missing field '" + key + "'", 0, key);
  return *it;
}

Index index_value(const json& v, const std::string& text, const std::string& key)
{
  if (!v.is_number_integer() || v.get<long long>() < 0 ||
      v.get<long long>() >= static_cast<long long>(max_order))
    throw ParseError("field '" + key + "' must hold indices in [0, " + std::to_string(max_order) +
                         ")",
                     line_of_key(text, key), key);
  return static_cast<Index>(v.get<long long>());
}

Table table_value(const json& doc, const std::string& text, const std::string& key)
{
  const json& v = field(doc, key);
  if (!v.is_array())
    throw ParseError("field '" + key + "' must be a matrix", line_of_key(text, key), key);
  Table t;
  for (const auto& row : v) {
    if (!row.is_array())
      throw ParseError("field '" + key + "' must be a matrix", line_of_key(text, key), key);
    auto& out = t.emplace_back();
    for (const auto& x : row)
      out.push_back(index_value(x, text, key));
  }
  return t;
}

std::string read_all(std::istream& in)
{
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string read_file(const std::filesystem::path& path)
{
  std::ifstream in(path);
  if (!in)
    throw std::invalid_argument("cannot read '" + path.string() + "'");
  return read_all(in);
}

} // namespace

NamedGroup parse_group_spec(const std::string& spec)
{
  auto cut = spec.find('x');
  if (cut == std::string::npos)
    return parse_factor(spec);
  auto a = parse_factor(spec.substr(0, cut));
  auto b = parse_group_spec(spec.substr(cut + 1));
  if (a.group.order() * b.group.order() > max_order)
    throw std::invalid_argument("group '" + spec + "' exceeds order " + std::to_string(max_order));
  return {direct_product(a.group, b.group), product_labels(a.labels, b.labels)};
}

const std::vector<CatalogEntry>& builtin_catalog()
{
  static const std::vector<CatalogEntry> catalog = build_catalog();
  return catalog;
}

CatalogEntry resolve_brace(const std::string& spec)
{
  for (const auto& e : builtin_catalog())
    if (e.descriptor.name == spec)
      return e;
  for (const char* prefix : {"trivial", "opposite"}) {
    std::string p = std::string(prefix) + ":";
    if (spec.rfind(p, 0) == 0)
      return group_brace(prefix, spec.substr(p.size()));
  }
  if (spec == "-")
    return parse_brace(read_all(std::cin));
  if (std::filesystem::is_regular_file(spec))
    return load_brace(spec);
  throw std::invalid_argument("'" + spec + "' is neither a catalog name nor a readable file");
}

CatalogEntry parse_brace(const std::string& text)
{
  json doc = parse_document(text);
  const json& order = field(doc, "order");
  Index n = index_value(order, text, "order");
  Index identity = index_value(field(doc, "identity"), text, "identity");
  Table dot = table_value(doc, text, "dot_table");
  Table circ = table_value(doc, text, "circ_table");
  if (dot.size() != n)
    throw ParseError("dot_table has " + std::to_string(dot.size()) + " rows, order is " +
                         std::to_string(n),
                     line_of_key(text, "dot_table"), "dot_table");
  if (circ.size() != n)
    throw ParseError("circ_table has " + std::to_string(circ.size()) + " rows, order is " +
                         std::to_string(n),
                     line_of_key(text, "circ_table"), "circ_table");

  BraceDescriptor d;
  d.name = "file";
  if (auto it = doc.find("name"); it != doc.end()) {
    if (!it->is_string())
      throw ParseError("field 'name' must be a string", line_of_key(text, "name"), "name");
    d.name = it->get<std::string>();
  }
  if (auto it = doc.find("labels"); it != doc.end()) {
    if (!it->is_array() || it->size() != n)
      throw ParseError("field 'labels' must list one string per element",
                       line_of_key(text, "labels"), "labels");
    for (const auto& l : *it) {
      if (!l.is_string())
        throw ParseError("field 'labels' must list strings", line_of_key(text, "labels"),
                         "labels");
      d.labels.push_back(l.get<std::string>());
    }
  }
  SkewBrace b = validate_skew_brace(dot, circ, identity);
  d.order = b.order();
  d.construction = Construction::File;
  return {std::move(d), std::move(b)};
}

CatalogEntry load_brace(const std::filesystem::path& path)
{
  auto e = parse_brace(read_file(path));
  e.descriptor.notes = path.string();
  return e;
}

std::string brace_to_json(const BraceDescriptor& d, const SkewBrace& b)
{
  // One table row per line keeps files diffable.
  auto table = [](const Table& t) {
    std::string s = "[\n";
    for (std::size_t i = 0; i < t.size(); ++i)
      s += "    " + json(t[i]).dump() + (i + 1 < t.size() ? ",\n" : "\n");
    return s + "  ]";
  };
  std::string s = "{\n";
  s += "  \"name\": " + json(d.name).dump() + ",\n";
  s += "  \"order\": " + std::to_string(b.order()) + ",\n";
  s += "  \"identity\": " + std::to_string(b.identity()) + ",\n";
  if (!d.labels.empty())
    s += "  \"labels\": " + json(d.labels).dump() + ",\n";
  s += "  \"dot_table\": " + table(b.dot().table()) + ",\n";
  s += "  \"circ_table\": " + table(b.circ().table()) + "\n";
  return s + "}\n";
}

void save_brace(const BraceDescriptor& d, const SkewBrace& b, const std::filesystem::path& path)
{
  std::ofstream out(path);
  if (!out)
    throw std::invalid_argument("cannot write '" + path.string() + "'");
  out << brace_to_json(d, b);
}

MapDocument parse_map(const std::string& text, const std::filesystem::path& base_dir)
{
  json doc = parse_document(text);
  auto spec = [&](const std::string& key) {
    const json& v = field(doc, key);
    if (!v.is_string())
      throw ParseError("field '" + key + "' must name a brace", line_of_key(text, key), key);
    auto s = v.get<std::string>();
    auto local = base_dir / s;
    if (!base_dir.empty() && std::filesystem::path(s).is_relative() &&
        std::filesystem::is_regular_file(local))
      return local.string();
    return s;
  };
  MapDocument m{resolve_brace(spec("source")), resolve_brace(spec("target")), {}};
  const json& images = field(doc, "images");
  if (!images.is_array() || images.size() != m.source.brace.order())
    throw ParseError("field 'images' must list one target index per source element",
                     line_of_key(text, "images"), "images");
  for (const auto& v : images) {
    Index i = index_value(v, text, "images");
    if (i >= m.target.brace.order())
      throw ParseError("image " + std::to_string(i) + " outside the target carrier",
                       line_of_key(text, "images"), "images");
    m.images.push_back(i);
  }
  return m;
}

MapDocument load_map(const std::filesystem::path& path)
{
  return parse_map(read_file(path), path.parent_path());
}

} // namespace hopfbrace
