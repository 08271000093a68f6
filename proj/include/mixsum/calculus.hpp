#ifndef MIXSUM_CALCULUS_HPP
#define MIXSUM_CALCULUS_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "mixsum/ideal.hpp"
#include "mixsum/linalg.hpp"

namespace mixsum {

/// The ideal generated by f/x over minimal generators f and variables x
/// dividing f.
inline MonomialIdeal partial_star(const MonomialIdeal& I,
                                  const Caps& caps = default_caps()) {
  if (I.is_zero()) throw DomainError("partial_star of the zero ideal");
  std::vector<Monomial> gens;
  for (const auto& f : I.gens())
    for (std::size_t x : f.support())
      gens.push_back(f / Monomial::variable(f.arity(), x));
  return minimalize(std::move(gens), I.ring(), caps);
}

struct GolodReport {
  MonomialIdeal ideal;
  MonomialIdeal partial_star;
  bool is_star_strongly_golod = false;
  // Pair of generators of partial_star whose product escapes the ideal.
  std::optional<std::pair<Monomial, Monomial>> witness;
};

/// Checks partial_star(I)^2 subseteq I.
inline GolodReport is_star_strongly_golod(const MonomialIdeal& I,
                                          const Caps& caps = default_caps()) {
  if (I.is_zero() || I.is_unit())
    throw DomainError("star-strongly-Golod test needs a nonzero proper ideal");
  GolodReport rep;
  rep.ideal = I;
  rep.partial_star = partial_star(I, caps);
  rep.is_star_strongly_golod = true;
  const auto& ds = rep.partial_star.gens();
  for (std::size_t a = 0; a < ds.size() && rep.is_star_strongly_golod; ++a)
    for (std::size_t b = a; b < ds.size(); ++b) {
      if (!I.contains_monomial(ds[a] * ds[b])) {
        rep.is_star_strongly_golod = false;
        rep.witness = std::make_pair(ds[a], ds[b]);
        break;
      }
    }
  return rep;
}

namespace detail {

// One linear inequality sum_j coef[j]*x_j >= rhs over the rationals.
struct Ineq {
  std::vector<Rational> coef;
  Rational rhs;
};

inline void normalize_ineq(Ineq& q) {
  BigInt denom_lcm = 1;
  auto fold = [&](const Rational& r) {
    denom_lcm = boost::multiprecision::lcm(denom_lcm,
                                           boost::multiprecision::denominator(r));
  };
  for (const auto& c : q.coef) fold(c);
  fold(q.rhs);
  BigInt g = 0;
  auto scaled = [&](const Rational& r) {
    Rational v = r * denom_lcm;
    return boost::multiprecision::numerator(v);
  };
  for (const auto& c : q.coef) g = boost::multiprecision::gcd(g, scaled(c));
  g = boost::multiprecision::gcd(g, scaled(q.rhs));
  if (g == 0) return;
  for (auto& c : q.coef) c = Rational(scaled(c) / g);
  q.rhs = Rational(scaled(q.rhs) / g);
}

/// Fourier-Motzkin elimination of the first `nelim` variables. Remaining
/// inequalities mention only the kept variables.
inline std::vector<Ineq> fourier_motzkin(std::vector<Ineq> sys, std::size_t nelim,
                                         std::size_t row_cap = 20000) {
  for (std::size_t k = 0; k < nelim; ++k) {
    std::vector<Ineq> pos, neg, zero;
    for (auto& q : sys) {
      if (q.coef[k] > 0)
        pos.push_back(std::move(q));
      else if (q.coef[k] < 0)
        neg.push_back(std::move(q));
      else
        zero.push_back(std::move(q));
    }
    std::vector<Ineq> next = std::move(zero);
    for (const auto& p : pos)
      for (const auto& n : neg) {
        Ineq q;
        q.coef.resize(p.coef.size());
        Rational cp = p.coef[k], cn = -n.coef[k];
        for (std::size_t j = 0; j < q.coef.size(); ++j)
          q.coef[j] = cn * p.coef[j] + cp * n.coef[j];
        q.rhs = cn * p.rhs + cp * n.rhs;
        normalize_ineq(q);
        bool trivial = q.rhs <= 0 &&
                       std::all_of(q.coef.begin(), q.coef.end(),
                                   [](const Rational& c) { return c == 0; });
        if (!trivial) next.push_back(std::move(q));
      }
    std::sort(next.begin(), next.end(), [](const Ineq& a, const Ineq& b) {
      return std::tie(a.coef, a.rhs) < std::tie(b.coef, b.rhs);
    });
    next.erase(std::unique(next.begin(), next.end(),
                           [](const Ineq& a, const Ineq& b) {
                             return a.coef == b.coef && a.rhs == b.rhs;
                           }),
               next.end());
    if (next.size() > row_cap)
      throw ResourceLimit("Fourier-Motzkin row cap exceeded");
    sys = std::move(next);
  }
  return sys;
}

}  // namespace detail

/// Integral closure of a monomial ideal: the ideal of all monomials whose
/// exponent vector lies in the Newton polyhedron conv(exponents) + R^n_{>=0}.
///
/// Membership of a candidate v is decided by the exact rational feasibility
/// system { v >= sum lambda_i a_i, sum lambda_i = 1, lambda >= 0 }, projected
/// once per ideal by Fourier-Motzkin elimination of the lambda block.
/// Candidates range over the box v_j <= max_i a_ij: a minimal integral point
/// of the polyhedron satisfies this, since exceeding the bound in slot j
/// leaves v - e_j feasible.
inline MonomialIdeal integral_closure(const MonomialIdeal& I,
                                      const Caps& caps = default_caps()) {
  if (I.is_zero()) throw DomainError("integral closure of the zero ideal");
  if (I.is_unit()) return I;
  const std::size_t n = I.ring().arity();
  const std::size_t g = I.num_gens();

  // variables: lambda_1..lambda_g then v_1..v_n
  std::vector<detail::Ineq> sys;
  auto blank = [&] {
    detail::Ineq q;
    q.coef.assign(g + n, Rational(0));
    q.rhs = 0;
    return q;
  };
  for (std::size_t i = 0; i < g; ++i) {
    auto q = blank();
    q.coef[i] = 1;  // lambda_i >= 0
    sys.push_back(q);
  }
  {
    auto q = blank();
    for (std::size_t i = 0; i < g; ++i) q.coef[i] = 1;
    q.rhs = 1;  // sum lambda >= 1
    sys.push_back(q);
    for (std::size_t i = 0; i < g; ++i) q.coef[i] = -1;
    q.rhs = -1;  // -sum lambda >= -1
    sys.push_back(q);
  }
  for (std::size_t j = 0; j < n; ++j) {
    auto q = blank();
    q.coef[g + j] = 1;
    for (std::size_t i = 0; i < g; ++i) q.coef[i] = -I.gens()[i].exp(j);
    sys.push_back(q);  // v_j - sum lambda_i a_ij >= 0
  }
  auto projected = detail::fourier_motzkin(std::move(sys), g);

  std::vector<int> box(n, 0);
  for (std::size_t j = 0; j < n; ++j)
    for (const auto& a : I.gens()) box[j] = std::max(box[j], a.exp(j));
  unsigned long long volume = 1;
  for (std::size_t j = 0; j < n; ++j) {
    volume *= static_cast<unsigned long long>(box[j]) + 1;
    if (volume > caps.lattice_nodes)
      throw ResourceLimit("integral closure candidate box too large");
  }

  std::vector<Monomial> accepted;
  std::vector<int> v(n, 0);
  for (;;) {
    bool feasible = true;
    for (const auto& q : projected) {
      Rational lhs = -q.rhs;
      for (std::size_t j = 0; j < n; ++j) lhs += q.coef[g + j] * v[j];
      if (lhs < 0) {
        feasible = false;
        break;
      }
    }
    if (feasible) accepted.push_back(Monomial(v));
    std::size_t j = 0;
    while (j < n && v[j] == box[j]) v[j++] = 0;
    if (j == n) break;
    ++v[j];
  }
  return minimalize(std::move(accepted), I.ring(), caps);
}

/// Minimal monomial primes containing I: minimal vertex covers of the
/// supports of the generators of radical(I). Each prime is generated by
/// variables.
inline std::vector<MonomialIdeal> min_primes(const MonomialIdeal& I) {
  if (I.is_zero() || I.is_unit())
    throw DomainError("min_primes needs a nonzero proper ideal");
  MonomialIdeal rad = radical(I);
  std::vector<std::vector<std::size_t>> edges;
  for (const auto& gmon : rad.gens()) edges.push_back(gmon.support());

  std::vector<std::vector<std::size_t>> covers;
  std::vector<std::size_t> current;
  auto recurse = [&](auto&& self, std::size_t edge_idx) -> void {
    // find next edge not already covered
    while (edge_idx < edges.size()) {
      bool covered = false;
      for (std::size_t v : edges[edge_idx])
        if (std::find(current.begin(), current.end(), v) != current.end()) {
          covered = true;
          break;
        }
      if (!covered) break;
      ++edge_idx;
    }
    if (edge_idx == edges.size()) {
      covers.push_back(current);
      return;
    }
    for (std::size_t v : edges[edge_idx]) {
      current.push_back(v);
      self(self, edge_idx + 1);
      current.pop_back();
    }
  };
  recurse(recurse, 0);

  for (auto& c : covers) std::sort(c.begin(), c.end());
  std::sort(covers.begin(), covers.end(),
            [](const auto& a, const auto& b) {
              return a.size() != b.size() ? a.size() < b.size() : a < b;
            });
  covers.erase(std::unique(covers.begin(), covers.end()), covers.end());
  std::vector<std::vector<std::size_t>> minimal;
  for (const auto& c : covers) {
    bool has_subset = false;
    for (const auto& m : minimal)
      if (std::includes(c.begin(), c.end(), m.begin(), m.end())) {
        has_subset = true;
        break;
      }
    if (!has_subset) minimal.push_back(c);
  }

  std::vector<MonomialIdeal> primes;
  for (const auto& c : minimal) {
    std::vector<Monomial> gens;
    for (std::size_t v : c) gens.push_back(Monomial::variable(I.ring().arity(), v));
    primes.push_back(minimalize(std::move(gens), I.ring()));
  }
  return primes;
}

/// Contraction of (J localized at the monomial prime P) back to R: set the
/// variables outside P to 1 in every generator.
inline MonomialIdeal localize_at_prime(const MonomialIdeal& J,
                                       const MonomialIdeal& P,
                                       const Caps& caps = default_caps()) {
  std::vector<bool> in_prime(J.ring().arity(), false);
  for (const auto& g : P.gens())
    for (std::size_t v : g.support()) in_prime[v] = true;
  std::vector<Monomial> gens;
  for (const auto& g : J.gens()) {
    std::vector<int> e(J.ring().arity(), 0);
    for (std::size_t j = 0; j < e.size(); ++j)
      if (in_prime[j]) e[j] = g.exp(j);
    gens.push_back(Monomial(std::move(e)));
  }
  return minimalize(std::move(gens), J.ring(), caps);
}

/// s-th symbolic power via localization-contraction at each minimal prime.
inline MonomialIdeal symbolic_power(const MonomialIdeal& I, long long s,
                                    const Caps& caps = default_caps()) {
  if (I.is_zero() || I.is_unit())
    throw DomainError("symbolic power needs a nonzero proper ideal");
  if (s < 1) throw DomainError("symbolic power exponent must be positive");
  MonomialIdeal Is = power(I, s, caps);
  std::optional<MonomialIdeal> acc;
  for (const auto& P : min_primes(I)) {
    MonomialIdeal comp = localize_at_prime(Is, P, caps);
    acc = acc ? combine(*acc, comp, CombineKind::Intersect, caps) : comp;
  }
  return *acc;
}

/// Same ideal computed through colons: the P-primary component of I^s is the
/// saturation of I^s by the product of the variables outside P. Used to
/// cross-check symbolic_power.
inline MonomialIdeal symbolic_power_colon_route(const MonomialIdeal& I, long long s,
                                                const Caps& caps = default_caps()) {
  if (I.is_zero() || I.is_unit())
    throw DomainError("symbolic power needs a nonzero proper ideal");
  if (s < 1) throw DomainError("symbolic power exponent must be positive");
  MonomialIdeal Is = power(I, s, caps);
  std::optional<MonomialIdeal> acc;
  for (const auto& P : min_primes(I)) {
    std::vector<bool> in_prime(I.ring().arity(), false);
    for (const auto& g : P.gens())
      for (std::size_t v : g.support()) in_prime[v] = true;
    Monomial f = Monomial::one(I.ring().arity());
    for (std::size_t j = 0; j < I.ring().arity(); ++j)
      if (!in_prime[j]) f = f * Monomial::variable(I.ring().arity(), j);
    MonomialIdeal comp = saturate(Is, minimalize({f}, I.ring()), caps);
    acc = acc ? combine(*acc, comp, CombineKind::Intersect, caps) : comp;
  }
  return *acc;
}

}  // namespace mixsum

#endif  // MIXSUM_CALCULUS_HPP
