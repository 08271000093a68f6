// Test-only oracles: brute-force routes independent of the library
// implementations they check.
#ifndef MIXSUM_TEST_ORACLES_HPP
#define MIXSUM_TEST_ORACLES_HPP

#include <functional>
#include <vector>

#include "mixsum/ideal.hpp"

namespace oracles {

using mixsum::MonomialIdeal;
using mixsum::Monomial;
using mixsum::PolyRing;

/// All monomials of total degree <= max_deg, by direct enumeration.
inline std::vector<Monomial> monomials_up_to(const PolyRing& ring, int max_deg) {
  std::vector<Monomial> out;
  std::vector<int> e(ring.arity(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == ring.arity()) {
      out.push_back(Monomial(e));
      return;
    }
    for (int v = 0; v <= left; ++v) {
      e[i] = v;
      rec(i + 1, left - v);
    }
    e[i] = 0;
  };
  rec(0, max_deg);
  return out;
}

/// Degreewise equality of two monomial ideals: identical membership for all
/// monomials of degree <= max_deg. Complete when max_deg reaches the largest
/// generator degree of both sides.
inline bool equal_up_to_degree(const MonomialIdeal& A, const MonomialIdeal& B,
                               int max_deg) {
  for (const auto& m : monomials_up_to(A.ring(), max_deg))
    if (A.contains_monomial(m) != B.contains_monomial(m)) return false;
  return true;
}

/// Definitional colon membership: m in (I : J) iff m*g in I for all gens g.
inline bool colon_member(const MonomialIdeal& I, const MonomialIdeal& J,
                         const Monomial& m) {
  for (const auto& g : J.gens())
    if (!I.contains_monomial(m * g)) return false;
  return true;
}

/// Integral-closure membership by the valuation-free definition restricted
/// to bounded exponents: f is integral over I if f^r lies in I^r for some
/// r <= r_max.
inline bool closure_member_bounded(const MonomialIdeal& I, const Monomial& f,
                                   int r_max) {
  for (int r = 1; r <= r_max; ++r)
    if (mixsum::power(I, r).contains_monomial(f.pow(r))) return true;
  return false;
}

}  // namespace oracles

#endif  // MIXSUM_TEST_ORACLES_HPP
