#include "hopfbrace/verify.hpp"

#include <array>
#include <random>
#include <sstream>

namespace hopfbrace {

namespace {

bool is_prime(std::uint64_t p)
{
  if (p < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0)
      return false;
  return true;
}

} // namespace

HopfBrace::HopfBrace(SkewBrace base, std::optional<std::uint64_t> prime)
    : base_(std::move(base)), prime_(prime)
{
  if (!base_.validated())
    throw std::invalid_argument("HopfBrace requires a validated skew brace");
  if (prime_) {
    if (!is_prime(*prime_))
      throw std::invalid_argument(std::to_string(*prime_) + " is not prime");
    if (base_.order() % *prime_ == 0)
      throw std::invalid_argument("characteristic " + std::to_string(*prime_) +
                                  " divides the carrier order " +
                                  std::to_string(base_.order()) + "; refusing prime-field mode");
  }
}

HopfBrace HopfBrace::unvalidated(SkewBrace base) { return HopfBrace(Unchecked{}, std::move(base)); }

void VerificationReport::merge(const VerificationReport& other)
{
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
}

namespace {

constexpr std::size_t max_violations_per_identity = 8;

std::uint64_t fnv1a(const std::string& s)
{
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

template <class F>
struct Ops
{
  using E = BasicElement<F>;
  using T2 = BasicTensor2<F>;
  using Legs = std::span<const E>;

  const HopfBrace& h;

  E dot(const E& x, const E& y) const { return dot_mul(h, x, y); }
  E circ(const E& x, const E& y) const { return circ_mul(h, x, y); }
  E S(const E& x) const { return antipode_S(h, x); }
  E T(const E& x) const { return antipode_T(h, x); }
  E act(const E& a, const E& b) const { return act_left(h, a, b); }
  E st(const E& a, const E& b) const { return star(h, a, b); }
  F eps(const E& x) const { return counit(h, x); }
  T2 delta(const E& x) const { return comultiply(h, x); }
  E one() const { return unit<F>(h); }
  T2 ten(const E& x, const E& y) const { return tensor(h, x, y); }

  template <class Fn>
  auto sw(const E& x, std::size_t legs, Fn&& fn) const
  {
    return sweedler(h, x, legs, std::forward<Fn>(fn));
  }
};

template <class F>
F random_scalar(std::mt19937_64& rng, std::uint64_t p)
{
  if constexpr (std::is_same_v<F, Rational>) {
    std::uniform_int_distribution<long> num(1, 5), den(1, 4), sign(0, 1);
    long n = num(rng);
    return make_rational(sign(rng) ? n : -n, den(rng));
  } else {
    std::uniform_int_distribution<std::uint64_t> v(1, p - 1);
    return F(p, static_cast<std::int64_t>(v(rng)));
  }
}

template <class F>
class Runner
{
public:
  using E = BasicElement<F>;

  Runner(const HopfBrace& h, const VerifyOptions& opts, std::string suite) : h_(h), opts_(opts)
  {
    report_.suite = std::move(suite);
  }

  /// fn maps an array of N elements to a (lhs, rhs) pair.
  template <std::size_t N, class Fn>
  void check(const std::string& name, Fn&& fn)
  {
    IdentityCheck c{name};
    std::size_t recorded = 0;
    const std::size_t n = h_.dimension();
    std::array<E, N> args;

    auto record = [&](std::vector<Index> basis, std::optional<std::size_t> sample) {
      ++c.failures;
      if (recorded++ < max_violations_per_identity)
        report_.violations.push_back({name, std::move(basis), sample, describe(name, args)});
    };

    if (opts_.exhaustive) {
      std::array<Index, N> idx{};
      for (;;) {
        for (std::size_t k = 0; k < N; ++k)
          args[k] = basis_element<F>(h_, idx[k]);
        auto [lhs, rhs] = fn(args);
        ++c.basis_cases;
        if (!(lhs == rhs))
          record(std::vector<Index>(idx.begin(), idx.end()), std::nullopt);
        std::size_t k = N;
        while (k > 0 && ++idx[k - 1] == n)
          idx[--k] = 0;
        if (k == 0)
          break;
      }
    }

    std::mt19937_64 rng(opts_.seed ^ fnv1a(name));
    std::uniform_int_distribution<Index> pick(0, static_cast<Index>(n - 1));
    for (std::size_t s = 0; s < opts_.samples; ++s) {
      for (auto& a : args) {
        Index g = pick(rng);
        a = E::basis(g, random_scalar<F>(rng, h_.characteristic()));
        if (n > 1) {
          Index g2 = pick(rng);
          while (g2 == g)
            g2 = pick(rng);
          a += E::basis(g2, random_scalar<F>(rng, h_.characteristic()));
        }
      }
      auto [lhs, rhs] = fn(args);
      ++c.random_cases;
      if (!(lhs == rhs))
        record({}, s);
    }
    report_.checks.push_back(std::move(c));
  }

  VerificationReport take() { return std::move(report_); }

private:
  template <std::size_t N>
  static std::string describe(const std::string& name, const std::array<E, N>& args)
  {
    std::ostringstream os;
    os << name << " fails at";
    for (const auto& a : args) {
      os << " [";
      bool first = true;
      for (const auto& [i, c] : a.terms()) {
        os << (first ? "" : " + ") << to_string(c) << "*d" << i;
        first = false;
      }
      os << "]";
    }
    return os.str();
  }

  const HopfBrace& h_;
  const VerifyOptions& opts_;
  VerificationReport report_;
};

template <class F>
VerificationReport axiom_impl(const HopfBrace& h, const VerifyOptions& opts)
{
  Ops<F> o{h};
  using Legs = typename Ops<F>::Legs;
  Runner<F> r(h, opts, "axioms");
  r.template check<3>("a•(b·c) = (a1•b)·S(a2)·(a3•c)", [&](const auto& v) {
    const auto &a = v[0], &b = v[1], &c = v[2];
    auto rhs = o.sw(a, 3, [&](Legs l) { return o.dot(o.dot(o.circ(l[0], b), o.S(l[1])), o.circ(l[2], c)); });
    return std::pair{o.circ(a, o.dot(b, c)), rhs};
  });
  return r.take();
}

template <class F>
VerificationReport lemma_impl(const HopfBrace& h, int clause, const VerifyOptions& opts)
{
  Ops<F> o{h};
  using Legs = typename Ops<F>::Legs;
  Runner<F> r(h, opts, "lemma");
  switch (clause) {
  case 1:
    r.template check<3>("a⋆(x·y) = (a1⋆x1)·x2·(a2⋆y)·S(x3)", [&](const auto& v) {
      const auto &a = v[0], &x = v[1], &y = v[2];
      auto rhs = o.sw(a, 2, [&](Legs la) {
        return o.sw(x, 3, [&](Legs lx) {
          return o.dot(o.dot(o.dot(o.st(la[0], lx[0]), lx[1]), o.st(la[1], y)), o.S(lx[2]));
        });
      });
      return std::pair{o.st(a, o.dot(x, y)), rhs};
    });
    break;
  case 2:
    r.template check<3>("(x•y)⋆a = (x1⋆(y1⋆a1))·(y2⋆a2)·(x2⋆a3)", [&](const auto& v) {
      const auto &x = v[0], &y = v[1], &a = v[2];
      auto rhs = o.sw(x, 2, [&](Legs lx) {
        return o.sw(y, 2, [&](Legs ly) {
          return o.sw(a, 3, [&](Legs la) {
            return o.dot(o.dot(o.st(lx[0], o.st(ly[0], la[0])), o.st(ly[1], la[1])),
                         o.st(lx[1], la[2]));
          });
        });
      });
      return std::pair{o.st(o.circ(x, y), a), rhs};
    });
    break;
  case 3:
    r.template check<3>("a⇀(x⋆y) = (a1•x•T(a2))⋆(a3⇀y)", [&](const auto& v) {
      const auto &a = v[0], &x = v[1], &y = v[2];
      auto rhs = o.sw(a, 3, [&](Legs la) {
        return o.st(o.circ(o.circ(la[0], x), o.T(la[1])), o.act(la[2], y));
      });
      return std::pair{o.act(a, o.st(x, y)), rhs};
    });
    break;
  case 4:
    r.template check<2>("a1•x•T(a2) = a1·(a2⇀(x1·(x2⋆T(a3))))·S(a4)", [&](const auto& v) {
      const auto &a = v[0], &x = v[1];
      auto lhs = o.sw(a, 2, [&](Legs la) { return o.circ(o.circ(la[0], x), o.T(la[1])); });
      auto rhs = o.sw(a, 4, [&](Legs la) {
        auto inner = o.sw(x, 2, [&](Legs lx) { return o.dot(lx[0], o.st(lx[1], o.T(la[2]))); });
        return o.dot(o.dot(la[0], o.act(la[1], inner)), o.S(la[3]));
      });
      return std::pair{lhs, rhs};
    });
    break;
  default:
    throw std::invalid_argument("star lemma clause must be 1-4, got " + std::to_string(clause));
  }
  return r.take();
}

template <class F>
VerificationReport structure_impl(const HopfBrace& h, const VerifyOptions& opts)
{
  Ops<F> o{h};
  using E = BasicElement<F>;
  using Legs = typename Ops<F>::Legs;
  using Triple = BasicSparseVector<F>;
  const std::size_t n = h.dimension();
  Runner<F> r(h, opts, "structure");

  // Coalgebra and Hopf algebra laws for both structures.
  r.template check<1>("(Δ⊗id)Δ(a) = (id⊗Δ)Δ(a)", [&](const auto& v) {
    std::vector<typename Triple::Entry> left, right;
    o.delta(v[0]).for_each([&](Index i, Index j, const F& c) {
      o.delta(basis_element<F>(h, i)).for_each([&](Index p, Index q, const F& d) {
        left.emplace_back((p * n + q) * n + j, c * d);
      });
      o.delta(basis_element<F>(h, j)).for_each([&](Index p, Index q, const F& d) {
        right.emplace_back((i * n + p) * n + q, c * d);
      });
    });
    return std::pair{Triple::from_entries(left), Triple::from_entries(right)};
  });
  r.template check<1>("(ε⊗id)Δ(a) = a = (id⊗ε)Δ(a)", [&](const auto& v) {
    auto l = contract(h, o.delta(v[0]), [&](const E& x, const E& y) { return o.eps(x) * y; });
    auto rr = contract(h, o.delta(v[0]), [&](const E& x, const E& y) { return o.eps(y) * x; });
    return std::pair{l + rr, F(scalar_from_int<F>(h.characteristic(), 2)) * v[0]};
  });
  r.template check<1>("τΔ(a) = Δ(a)", [&](const auto& v) {
    return std::pair{o.delta(v[0]).flip(), o.delta(v[0])};
  });
  r.template check<1>("S(a1)·a2 = ε(a)1 = a1·S(a2)", [&](const auto& v) {
    auto l = o.sw(v[0], 2, [&](Legs a) { return o.dot(o.S(a[0]), a[1]); });
    auto rr = o.sw(v[0], 2, [&](Legs a) { return o.dot(a[0], o.S(a[1])); });
    return std::pair{l + rr, F(scalar_from_int<F>(h.characteristic(), 2)) * (o.eps(v[0]) * o.one())};
  });
  r.template check<1>("T(a1)•a2 = ε(a)1 = a1•T(a2)", [&](const auto& v) {
    auto l = o.sw(v[0], 2, [&](Legs a) { return o.circ(o.T(a[0]), a[1]); });
    auto rr = o.sw(v[0], 2, [&](Legs a) { return o.circ(a[0], o.T(a[1])); });
    return std::pair{l + rr, F(scalar_from_int<F>(h.characteristic(), 2)) * (o.eps(v[0]) * o.one())};
  });
  r.template check<1>("S(S(a)) = a = T(T(a))", [&](const auto& v) {
    return std::pair{o.S(o.S(v[0])) + o.T(o.T(v[0])),
                     F(scalar_from_int<F>(h.characteristic(), 2)) * v[0]};
  });
  r.template check<2>("Δ(a·b) = (a1·b1)⊗(a2·b2)", [&](const auto& v) {
    auto rhs = o.sw(v[0], 2, [&](Legs a) {
      return o.sw(v[1], 2, [&](Legs b) { return o.ten(o.dot(a[0], b[0]), o.dot(a[1], b[1])); });
    });
    return std::pair{o.delta(o.dot(v[0], v[1])), rhs};
  });
  r.template check<2>("Δ(a•b) = (a1•b1)⊗(a2•b2)", [&](const auto& v) {
    auto rhs = o.sw(v[0], 2, [&](Legs a) {
      return o.sw(v[1], 2, [&](Legs b) { return o.ten(o.circ(a[0], b[0]), o.circ(a[1], b[1])); });
    });
    return std::pair{o.delta(o.circ(v[0], v[1])), rhs};
  });
  r.template check<2>("ε(a·b) = ε(a)ε(b) = ε(a•b)", [&](const auto& v) {
    F lhs = o.eps(o.dot(v[0], v[1])) + o.eps(o.circ(v[0], v[1]));
    F rhs = scalar_from_int<F>(h.characteristic(), 2) * o.eps(v[0]) * o.eps(v[1]);
    return std::pair{lhs, rhs};
  });

  // Identities tying the two products together.
  r.template check<2>("a⇀b = S(a1)·(a2•b)", [&](const auto& v) {
    auto rhs = o.sw(v[0], 2, [&](Legs a) { return o.dot(o.S(a[0]), o.circ(a[1], v[1])); });
    return std::pair{o.act(v[0], v[1]), rhs};
  });
  r.template check<2>("a⋆b = S(a1)·(a2•b1)·S(b2)", [&](const auto& v) {
    auto rhs = o.sw(v[0], 2, [&](Legs a) {
      return o.sw(v[1], 2, [&](Legs b) { return o.dot(o.dot(o.S(a[0]), o.circ(a[1], b[0])), o.S(b[1])); });
    });
    return std::pair{o.st(v[0], v[1]), rhs};
  });
  r.template check<2>("a⋆b = (a⇀b1)·S(b2)", [&](const auto& v) {
    auto rhs = o.sw(v[1], 2, [&](Legs b) { return o.dot(o.act(v[0], b[0]), o.S(b[1])); });
    return std::pair{o.st(v[0], v[1]), rhs};
  });
  r.template check<2>("a•b = a1·(a2⇀b)", [&](const auto& v) {
    auto rhs = o.sw(v[0], 2, [&](Legs a) { return o.dot(a[0], o.act(a[1], v[1])); });
    return std::pair{o.circ(v[0], v[1]), rhs};
  });
  r.template check<2>("a·b = a1•(T(a2)⇀b)", [&](const auto& v) {
    auto rhs = o.sw(v[0], 2, [&](Legs a) { return o.circ(a[0], o.act(o.T(a[1]), v[1])); });
    return std::pair{o.dot(v[0], v[1]), rhs};
  });
  r.template check<1>("S(a) = a1⇀T(a2)", [&](const auto& v) {
    auto rhs = o.sw(v[0], 2, [&](Legs a) { return o.act(a[0], o.T(a[1])); });
    return std::pair{o.S(v[0]), rhs};
  });
  r.template check<1>("a⇀1 = ε(a)1", [&](const auto& v) {
    return std::pair{o.act(v[0], o.one()), o.eps(v[0]) * o.one()};
  });
  r.template check<3>("a⇀(b·c) = (a1⇀b)·(a2⇀c)", [&](const auto& v) {
    auto rhs = o.sw(v[0], 2, [&](Legs a) { return o.dot(o.act(a[0], v[1]), o.act(a[1], v[2])); });
    return std::pair{o.act(v[0], o.dot(v[1], v[2])), rhs};
  });
  r.template check<3>("(a•b)⇀c = a⇀(b⇀c)", [&](const auto& v) {
    return std::pair{o.act(o.circ(v[0], v[1]), v[2]), o.act(v[0], o.act(v[1], v[2]))};
  });
  r.template check<2>("Δ(a⇀b) = (a1⇀b1)⊗(a2⇀b2)", [&](const auto& v) {
    auto rhs = o.sw(v[0], 2, [&](Legs a) {
      return o.sw(v[1], 2, [&](Legs b) { return o.ten(o.act(a[0], b[0]), o.act(a[1], b[1])); });
    });
    return std::pair{o.delta(o.act(v[0], v[1])), rhs};
  });
  r.template check<2>("ε(a⇀b) = ε(a)ε(b)", [&](const auto& v) {
    return std::pair{o.eps(o.act(v[0], v[1])), F(o.eps(v[0]) * o.eps(v[1]))};
  });
  r.template check<2>("S(a⇀b) = a⇀S(b)", [&](const auto& v) {
    return std::pair{o.S(o.act(v[0], v[1])), o.act(v[0], o.S(v[1]))};
  });
  r.template check<2>("Δ(a⋆b) = (a1⋆b1)⊗(a2⋆b2)", [&](const auto& v) {
    auto rhs = o.sw(v[0], 2, [&](Legs a) {
      return o.sw(v[1], 2, [&](Legs b) { return o.ten(o.st(a[0], b[0]), o.st(a[1], b[1])); });
    });
    return std::pair{o.delta(o.st(v[0], v[1])), rhs};
  });
  r.template check<2>("ε(a⋆b) = ε(a)ε(b)", [&](const auto& v) {
    return std::pair{o.eps(o.st(v[0], v[1])), F(o.eps(v[0]) * o.eps(v[1]))};
  });
  r.template check<1>("T(b) = S(T(b1)⇀b2)", [&](const auto& v) {
    auto rhs = o.sw(v[0], 2, [&](Legs b) { return o.S(o.act(o.T(b[0]), b[1])); });
    return std::pair{o.T(v[0]), rhs};
  });
  return r.take();
}

} // namespace

VerificationReport verify_hopf_brace_axiom(const HopfBrace& h, const VerifyOptions& opts)
{
  return h.over_rationals() ? axiom_impl<Rational>(h, opts) : axiom_impl<ModP>(h, opts);
}

VerificationReport verify_star_lemma(const HopfBrace& h, int clause, const VerifyOptions& opts)
{
  return h.over_rationals() ? lemma_impl<Rational>(h, clause, opts)
                            : lemma_impl<ModP>(h, clause, opts);
}

VerificationReport verify_structure_identities(const HopfBrace& h, const VerifyOptions& opts)
{
  return h.over_rationals() ? structure_impl<Rational>(h, opts) : structure_impl<ModP>(h, opts);
}

} // namespace hopfbrace
