#pragma once

#include <cassert>
#include <cstdint>
#include <ostream>
#include <string>

#include <gmpxx.h>

namespace hopfbrace {

/// Exact rationals. GMP keeps every result in lowest terms with a positive
/// denominator, so structural equality is value equality.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1)
{
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

inline std::string to_string(const Rational& x) { return x.get_str(); }

/// Element of the prime field F_p. A default-constructed value is the
/// additive zero of whichever field it is later combined with.
class ModP
{
public:
  ModP() = default;
  ModP(std::uint64_t modulus, std::int64_t value) : p_(modulus)
  {
    assert(modulus > 1);
    auto m = static_cast<std::int64_t>(modulus);
    auto r = value % m;
    v_ = static_cast<std::uint64_t>(r < 0 ? r + m : r);
  }

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }

  friend ModP operator+(const ModP& a, const ModP& b)
  {
    auto p = join(a, b);
    return raw(p, p ? (a.v_ + b.v_) % p : 0);
  }
  friend ModP operator-(const ModP& a, const ModP& b)
  {
    auto p = join(a, b);
    return raw(p, p ? (a.v_ + p - b.v_) % p : 0);
  }
  friend ModP operator*(const ModP& a, const ModP& b)
  {
    auto p = join(a, b);
    return raw(p, p ? static_cast<std::uint64_t>(
                          (static_cast<unsigned __int128>(a.v_) * b.v_) % p)
                    : 0);
  }
  ModP operator-() const { return raw(p_, p_ ? (p_ - v_) % p_ : 0); }
  ModP& operator+=(const ModP& o) { return *this = *this + o; }
  ModP& operator-=(const ModP& o) { return *this = *this - o; }
  ModP& operator*=(const ModP& o) { return *this = *this * o; }

  friend bool operator==(const ModP& a, const ModP& b) { return a.v_ == b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const ModP& x)
  {
    return os << x.v_ << " (mod " << x.p_ << ")";
  }

private:
  static ModP raw(std::uint64_t p, std::uint64_t v)
  {
    ModP r;
    r.p_ = p;
    r.v_ = v;
    return r;
  }
  static std::uint64_t join(const ModP& a, const ModP& b)
  {
    assert(a.p_ == 0 || b.p_ == 0 || a.p_ == b.p_);
    return a.p_ ? a.p_ : b.p_;
  }

  std::uint64_t p_ = 0;
  std::uint64_t v_ = 0;
};

inline bool is_zero(const ModP& x) { return x.value() == 0; }

inline std::string to_string(const ModP& x) { return std::to_string(x.value()); }

/// Scalar construction from an integer in the field selected by `prime`
/// (ignored for rationals).
template <class F>
F scalar_from_int(std::uint64_t prime, long value);

template <>
inline Rational scalar_from_int<Rational>(std::uint64_t, long value)
{
  return Rational(value);
}

template <>
inline ModP scalar_from_int<ModP>(std::uint64_t prime, long value)
{
  return ModP(prime, value);
}

} // namespace hopfbrace
