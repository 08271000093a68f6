#ifndef MIXSUM_RANDOM_GEN_HPP
#define MIXSUM_RANDOM_GEN_HPP

#include <random>

#include "mixsum/ideal.hpp"

namespace mixsum {

/// Seeded generator for test corpora. Draws bounded integers from raw
/// mt19937_64 output so that streams are identical across platforms
/// (std::uniform_int_distribution is implementation-defined).
class IdealGen {
 public:
  explicit IdealGen(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t raw() { return rng_(); }

  long long below(long long n) {  // uniform-ish in [0, n)
    return static_cast<long long>(rng_() % static_cast<std::uint64_t>(n));
  }

  Monomial monomial(const PolyRing& ring, int max_exp) {
    for (;;) {
      std::vector<int> e(ring.arity());
      for (auto& v : e) v = static_cast<int>(below(max_exp + 1));
      Monomial m(e);
      if (!m.is_one()) return m;  // keep ideals proper
    }
  }

  MonomialIdeal ideal(const PolyRing& ring, int max_gens, int max_exp) {
    int count = 1 + static_cast<int>(below(max_gens));
    std::vector<Monomial> gens;
    for (int i = 0; i < count; ++i) gens.push_back(monomial(ring, max_exp));
    return minimalize(std::move(gens), ring);
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace mixsum

#endif  // MIXSUM_RANDOM_GEN_HPP
