#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hopfbrace {

using Index = std::uint32_t;

enum class Violation
{
  Shape,            // table is not n×n with entries in range, or order too large
  NotLatinSquare,   // a row or column repeats an entry
  NoIdentity,       // no two-sided identity element
  NotAssociative,   // (ab)c != a(bc)
  IdentityMismatch, // declared identity differs from the group's identity
  Compatibility,    // a∘(b·c) != (a∘b)·a⁻¹·(a∘c)
};

const char* to_string(Violation v);

/// A failed axiom with the minimal witness that exhibits it.
class ValidationError : public std::runtime_error
{
public:
  ValidationError(Violation kind, std::string table, std::vector<Index> witness,
                  const std::string& message)
      : std::runtime_error(message), kind_(kind), table_(std::move(table)),
        witness_(std::move(witness))
  {
  }

  Violation kind() const { return kind_; }
  /// "dot", "circ" or empty when the violation involves both tables.
  const std::string& table() const { return table_; }
  const std::vector<Index>& witness() const { return witness_; }

private:
  Violation kind_;
  std::string table_;
  std::vector<Index> witness_;
};

/// Malformed brace or map document.
class ParseError : public std::runtime_error
{
public:
  ParseError(const std::string& message, std::size_t line = 0, std::string field = {})
      : std::runtime_error(message), line_(line), field_(std::move(field))
  {
  }

  /// 1-based line number, 0 when unknown.
  std::size_t line() const { return line_; }
  const std::string& field() const { return field_; }

private:
  std::size_t line_;
  std::string field_;
};

/// Hard cap on carrier sizes.
inline constexpr std::size_t max_order = 200;

} // namespace hopfbrace
