#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "hopfbrace/skew_brace.hpp"

namespace hopfbrace {

enum class Construction
{
  Trivial,
  Opposite,
  RadicalC4,
  Product,
  File
};

const char* to_string(Construction c);

struct BraceDescriptor
{
  std::string name;
  std::size_t order = 0;
  Construction construction = Construction::File;
  std::string notes;
  /// Element names by carrier index; empty when the source has none.
  std::vector<std::string> labels;
};

struct CatalogEntry
{
  BraceDescriptor descriptor;
  SkewBrace brace;
};

/// Fixed order; names are unique.
const std::vector<CatalogEntry>& builtin_catalog();

/// Finite group with element names. Accepts Cn, Sn, An, Dn (order 2n) and
/// products joined by 'x', e.g. "C2xC2". Throws std::invalid_argument.
struct NamedGroup
{
  FiniteGroup group;
  std::vector<std::string> labels;
};
NamedGroup parse_group_spec(const std::string& spec);

/// Catalog name, then "trivial:<group>" or "opposite:<group>", then a brace
/// file path ("-" reads stdin). Throws std::invalid_argument when nothing
/// matches, ParseError for a malformed file and ValidationError for a file
/// that is not a skew brace.
CatalogEntry resolve_brace(const std::string& spec);

/// Brace document: {name, order, identity, dot_table, circ_table, labels?}.
CatalogEntry parse_brace(const std::string& text);
CatalogEntry load_brace(const std::filesystem::path& path);
std::string brace_to_json(const BraceDescriptor& d, const SkewBrace& b);
void save_brace(const BraceDescriptor& d, const SkewBrace& b, const std::filesystem::path& path);

/// Map document: {source, target, images}. source and target are resolved
/// with resolve_brace; a relative file name is tried against base_dir first.
struct MapDocument
{
  CatalogEntry source;
  CatalogEntry target;
  std::vector<Index> images;
};
MapDocument parse_map(const std::string& text, const std::filesystem::path& base_dir = {});
MapDocument load_map(const std::filesystem::path& path);

} // namespace hopfbrace
