#ifndef MIXSUM_LIND_HPP
#define MIXSUM_LIND_HPP

#include <functional>
#include <memory>
#include <mutex>
#include <set>

#include "mixsum/betti.hpp"
#include "mixsum/calculus.hpp"
#include "mixsum/modgb.hpp"

namespace mixsum {

/// Rank-1 complex resolving R itself.
inline FreeComplex trivial_resolution(const PolyRing& ring, long long characteristic) {
  FreeComplex C;
  C.ring = ring;
  C.field_char = characteristic;
  C.modules.push_back({Monomial::one(ring.arity())});
  C.diffs.resize(1);
  C.augmentation.push_back(Term{Rational(1), Monomial::one(ring.arity())});
  C.minimal = true;
  return C;
}

/// Minimal graded free resolution of an ideal: minimalized Taylor complex.
inline FreeComplex minimal_resolution(const MonomialIdeal& I, long long characteristic,
                                      const Caps& caps = default_caps()) {
  if (I.is_zero()) throw DomainError("resolution of the zero ideal");
  if (I.is_unit()) return trivial_resolution(I.ring(), characteristic);
  return minimalize_complex(taylor_complex(I, characteristic, caps));
}

inline const FreeComplex& minimal_resolution_cached(const MonomialIdeal& I,
                                                    long long characteristic,
                                                    const Caps& caps = default_caps()) {
  static std::map<std::pair<std::uint64_t, long long>, std::unique_ptr<FreeComplex>>
      cache;
  static std::mutex mu;
  std::pair<std::uint64_t, long long> key{canonical_digest(I), characteristic};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }
  auto computed =
      std::make_unique<FreeComplex>(minimal_resolution(I, characteristic, caps));
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(key, std::move(computed));
  return *it->second;
}

/// Betti table read off the generator multidegrees of a minimal complex.
inline BettiTable complex_betti(const FreeComplex& C) {
  BettiTable t;
  t.field_char = C.field_char;
  for (std::size_t i = 0; i < C.modules.size(); ++i)
    for (const auto& g : C.modules[i])
      t.entries[{static_cast<int>(i), g.degree()}] += 1;
  return t;
}

/// Chain map lifting of the inclusion (module of F) into (module of G),
/// solved degreewise on multigraded strands. Both complexes must be
/// resolutions carrying augmentations.
inline ChainMap chain_lift(const FreeComplex& F, const FreeComplex& G) {
  if (F.augmentation.size() != F.rank(0) || G.augmentation.size() != G.rank(0))
    throw DomainError("chain_lift needs augmented resolutions");
  CoeffField k = F.field();
  ChainMap phi;
  phi.maps.resize(F.modules.size());

  phi.maps[0].rows = G.rank(0);
  phi.maps[0].cols.resize(F.rank(0));
  for (std::size_t j = 0; j < F.rank(0); ++j) {
    const Term& af = F.augmentation[j];
    bool placed = false;
    for (std::size_t t = 0; t < G.rank(0) && !placed; ++t) {
      const Term& ag = G.augmentation[t];
      if (ag.mono.divides(af.mono)) {
        phi.maps[0].set_entry(
            t, j, poly_term(k.div(af.coeff, ag.coeff), af.mono / ag.mono, k));
        placed = true;
      }
    }
    if (!placed) throw DomainError("chain_lift: source module not inside target");
  }

  for (std::size_t i = 1; i < F.modules.size(); ++i) {
    auto& out = phi.maps[i];
    out.rows = G.rank(i);
    out.cols.resize(F.rank(i));
    // strand solves are per source generator
    for (std::size_t j = 0; j < F.rank(i); ++j) {
      const Monomial& a = F.modules[i][j];
      // v = phi_{i-1}(d_F(e_j)) as scalars on G_{i-1} gens dividing a
      std::map<std::size_t, Rational> v;
      for (const auto& [r, p] : F.diffs[i].cols[j]) {
        for (const auto& [h, q] : phi.maps[i - 1].cols[r]) {
          // entry q is a single term (multigraded); its product with p's term
          Poly prod = poly_mul(p, q, k);
          for (const auto& t : prod) {
            Rational& slot = v[h];
            slot = k.add(slot, t.coeff);
          }
        }
      }
      std::vector<std::size_t> src_gens, dst_gens;
      if (i < G.modules.size())
        for (std::size_t h = 0; h < G.rank(i); ++h)
          if (G.modules[i][h].divides(a)) src_gens.push_back(h);
      for (std::size_t h = 0; h < G.rank(i - 1); ++h)
        if (G.modules[i - 1][h].divides(a)) dst_gens.push_back(h);

      std::vector<Rational> rhs(dst_gens.size(), k.zero());
      bool rhs_zero = true;
      for (std::size_t r = 0; r < dst_gens.size(); ++r) {
        auto it = v.find(dst_gens[r]);
        if (it != v.end() && !k.is_zero(it->second)) {
          rhs[r] = it->second;
          rhs_zero = false;
        }
      }
      if (rhs_zero) continue;  // zero column
      std::vector<std::vector<Rational>> M(dst_gens.size(),
                                           std::vector<Rational>(src_gens.size(),
                                                                 k.zero()));
      for (std::size_t c = 0; c < src_gens.size(); ++c)
        for (const auto& [r, p] : G.diffs[i].cols[src_gens[c]]) {
          auto pos = std::lower_bound(dst_gens.begin(), dst_gens.end(), r);
          if (pos != dst_gens.end() && *pos == r)
            M[static_cast<std::size_t>(pos - dst_gens.begin())][c] =
                p.front().coeff;
        }
      auto res = gauss(std::move(M), rhs, k);
      if (!res.solution) throw DomainError("chain_lift: strand system inconsistent");
      for (std::size_t c = 0; c < src_gens.size(); ++c) {
        if (k.is_zero((*res.solution)[c])) continue;
        out.set_entry(src_gens[c], j,
                      poly_term((*res.solution)[c], a / G.modules[i][src_gens[c]], k));
      }
    }
  }
  return phi;
}

enum class TorVerdict { NotTorVanishing, TorVanishing, DoublyTorVanishing };

inline const char* to_string(TorVerdict v) {
  switch (v) {
    case TorVerdict::NotTorVanishing: return "not_tor_vanishing";
    case TorVerdict::TorVanishing: return "tor_vanishing";
    case TorVerdict::DoublyTorVanishing: return "doubly_tor_vanishing";
  }
  return "?";
}

struct LiftingClassification {
  TorVerdict verdict = TorVerdict::NotTorVanishing;
  ChainMap lifting;
  // (homological degree, target row, source column) preventing a stronger
  // verdict: a unit entry for not_tor_vanishing, a linear entry otherwise.
  std::optional<std::tuple<std::size_t, std::size_t, std::size_t>> offending;
};

/// Sorts the lifting into not/Tor/doubly by the smallest power of the
/// maximal ideal containing all entries. On minimal resolutions the verdict
/// does not depend on the lifting chosen.
inline LiftingClassification classify_lifting(ChainMap phi) {
  LiftingClassification out;
  std::optional<std::tuple<std::size_t, std::size_t, std::size_t>> unit_at;
  std::optional<std::tuple<std::size_t, std::size_t, std::size_t>> linear_at;
  for (std::size_t i = 0; i < phi.maps.size(); ++i)
    for (std::size_t c = 0; c < phi.maps[i].col_count(); ++c)
      for (const auto& [r, p] : phi.maps[i].cols[c])
        for (const auto& t : p) {
          long long deg = t.mono.degree();
          if (deg == 0 && !unit_at) unit_at = {i, r, c};
          if (deg == 1 && !linear_at) linear_at = {i, r, c};
        }
  if (unit_at) {
    out.verdict = TorVerdict::NotTorVanishing;
    out.offending = unit_at;
  } else if (linear_at) {
    out.verdict = TorVerdict::TorVanishing;
    out.offending = linear_at;
  } else {
    out.verdict = TorVerdict::DoublyTorVanishing;
  }
  out.lifting = std::move(phi);
  return out;
}

/// Lifts the inclusion M1 <= M2 over minimal resolutions and classifies it.
inline LiftingClassification lift_and_classify(const MonomialIdeal& M1,
                                               const MonomialIdeal& M2,
                                               long long characteristic,
                                               const Caps& caps = default_caps()) {
  if (!contains(M2, M1)) throw DomainError("lift_and_classify needs M1 inside M2");
  const FreeComplex& F = minimal_resolution_cached(M1, characteristic, caps);
  const FreeComplex& G = minimal_resolution_cached(M2, characteristic, caps);
  return classify_lifting(chain_lift(F, G));
}

/// H_i(F) != 0, decided by Groebner normal forms: some kernel generator of
/// d_i escapes the column module of d_{i+1}.
inline bool homology_nonzero(const FreeComplex& F, std::size_t i) {
  if (i >= F.modules.size()) return false;
  CoeffField k = F.field();
  std::size_t arity = F.ring.arity();
  std::vector<ModVec> kernel;
  if (i == 0) {
    for (std::size_t j = 0; j < F.rank(0); ++j) {
      ModVec v;
      Poly one;
      one.push_back(Term{Rational(1), Monomial::one(arity)});
      v.comps.push_back({j, std::move(one)});
      kernel.push_back(std::move(v));
    }
  } else {
    kernel = graded_kernel(F.diffs[i], arity, k);
  }
  if (kernel.empty()) return false;
  std::vector<ModVec> image;
  if (i + 1 < F.modules.size()) image = matrix_columns(F.diffs[i + 1]);
  auto gb = groebner_basis(std::move(image), k);
  for (const auto& z : kernel)
    if (!module_member(z, gb, k)) return true;
  return false;
}

/// Linearity defect of the module resolved by a minimal complex: the top
/// homological index where the linear part fails to be exact.
inline int linearity_defect_of_complex(const FreeComplex& minres) {
  FreeComplex L = linear_part(minres);
  for (std::size_t i = L.modules.size(); i-- > 1;)
    if (homology_nonzero(L, i)) return static_cast<int>(i);
  return 0;
}

inline int linearity_defect(const MonomialIdeal& I, long long characteristic,
                            const Caps& caps = default_caps()) {
  if (I.is_zero()) return 0;  // zero module convention
  if (I.is_unit()) return 0;  // free module
  return linearity_defect_of_complex(minimal_resolution_cached(I, characteristic, caps));
}

/// Minimal resolution of the subquotient I2/I1 via the mapping cone of a
/// lifted inclusion, then minimalization.
inline FreeComplex quotient_resolution(const MonomialIdeal& I2, const MonomialIdeal& I1,
                                       long long characteristic,
                                       const Caps& caps = default_caps()) {
  if (!contains(I2, I1)) throw DomainError("quotient_resolution needs I1 inside I2");
  if (I1.is_zero()) return minimal_resolution(I2, characteristic, caps);
  const FreeComplex& F = minimal_resolution_cached(I1, characteristic, caps);
  const FreeComplex& G = minimal_resolution_cached(I2, characteristic, caps);
  ChainMap phi = chain_lift(F, G);
  auto cone = mapping_cone(F, G, phi);
  // the cone presents a quotient module, so the submodule augmentation of G
  // does not survive
  cone.cone.augmentation.clear();
  return minimalize_complex(std::move(cone.cone));
}

/// lind of I2/I1; 0 for the zero module.
inline int linearity_defect_quotient(const MonomialIdeal& I2, const MonomialIdeal& I1,
                                     long long characteristic,
                                     const Caps& caps = default_caps()) {
  if (I2 == I1) return 0;
  return linearity_defect_of_complex(quotient_resolution(I2, I1, characteristic, caps));
}

struct SmallTypeStep {
  long long s = 0;
  bool partial_star_certified = false;  // d*(I^s) <= I^{s-1}
  TorVerdict verdict = TorVerdict::NotTorVanishing;
};

struct SmallTypeReport {
  bool all_tor_vanishing = true;
  bool all_doubly = true;
  std::vector<SmallTypeStep> steps;
};

/// Checks the consecutive-power inclusions I^s <= I^{s-1} for s = 1..s_max:
/// the d*-containment certificate and the lifting classification.
inline SmallTypeReport small_type_check(const MonomialIdeal& I, long long s_max,
                                        bool require_doubly, long long characteristic,
                                        const Caps& caps = default_caps()) {
  if (s_max < 1) throw DomainError("small_type_check needs s_max >= 1");
  if (I.is_zero() || I.is_unit())
    throw DomainError("small_type_check needs a nonzero proper ideal");
  (void)require_doubly;
  SmallTypeReport rep;
  MonomialIdeal prev = unit_ideal(I.ring());
  MonomialIdeal cur = I;
  for (long long s = 1; s <= s_max; ++s) {
    SmallTypeStep step;
    step.s = s;
    step.partial_star_certified = contains(prev, partial_star(cur, caps));
    step.verdict = lift_and_classify(cur, prev, characteristic, caps).verdict;
    if (step.verdict == TorVerdict::NotTorVanishing) rep.all_tor_vanishing = false;
    if (step.verdict != TorVerdict::DoublyTorVanishing) rep.all_doubly = false;
    rep.steps.push_back(step);
    prev = cur;
    cur = combine(cur, I, CombineKind::Product, caps);
  }
  return rep;
}

/// Bounded sanity check of Sega's criterion: the maps
/// Tor_i(R/m^{q+1}, M) -> Tor_i(R/m^q, M) vanish for i > d and q <= q_max.
/// Checked strandwise per multidegree; not a proof, just a finite probe.
inline bool sega_maps_vanish_above(const FreeComplex& minres, int d, int q_max) {
  CoeffField k = minres.field();
  const std::size_t n = minres.ring.arity();
  for (int q = 0; q <= q_max; ++q) {
    // multidegrees where the q+1 strand of some F_i is nonzero
    std::set<std::vector<int>> degrees;
    std::vector<std::vector<int>> shifts;
    {
      std::vector<int> u(n, 0);
      std::function<void(std::size_t, int)> rec = [&](std::size_t idx, int left) {
        if (idx == n) {
          shifts.push_back(u);
          return;
        }
        for (int v = 0; v <= left; ++v) {
          u[idx] = v;
          rec(idx + 1, left - v);
        }
        u[idx] = 0;
      };
      rec(0, q);
    }
    for (const auto& mod : minres.modules)
      for (const auto& g : mod)
        for (const auto& u : shifts) {
          std::vector<int> a(n);
          for (std::size_t t = 0; t < n; ++t) a[t] = g.exp(t) + u[t];
          degrees.insert(std::move(a));
        }

    auto strand_basis = [&](std::size_t i, const Monomial& a, int mod_q) {
      std::vector<std::size_t> basis;
      if (i >= minres.modules.size()) return basis;
      for (std::size_t g = 0; g < minres.rank(i); ++g) {
        const Monomial& dg = minres.modules[i][g];
        if (dg.divides(a) && (a / dg).degree() < mod_q) basis.push_back(g);
      }
      return basis;
    };
    auto strand_matrix = [&](std::size_t i, const Monomial& a, int mod_q,
                             const std::vector<std::size_t>& rows,
                             const std::vector<std::size_t>& cols) {
      std::vector<std::vector<Rational>> M(rows.size(),
                                           std::vector<Rational>(cols.size(),
                                                                 k.zero()));
      if (i == 0 || i >= minres.modules.size()) return M;
      std::map<std::size_t, std::size_t> row_index;
      for (std::size_t r = 0; r < rows.size(); ++r) row_index[rows[r]] = r;
      for (std::size_t c = 0; c < cols.size(); ++c)
        for (const auto& [r, p] : minres.diffs[i].cols[cols[c]]) {
          auto it = row_index.find(r);
          if (it != row_index.end()) M[it->second][c] = p.front().coeff;
        }
      return M;
    };

    for (const auto& aexp : degrees) {
      Monomial a(aexp);
      for (std::size_t i = static_cast<std::size_t>(d) + 1;
           i < minres.modules.size(); ++i) {
        auto big_i = strand_basis(i, a, q + 1);
        if (big_i.empty()) continue;
        auto big_prev = strand_basis(i - 1, a, q + 1);
        auto small_i = strand_basis(i, a, q);
        auto small_next = strand_basis(i + 1, a, q);
        // cycles in the (q+1)-strand
        auto Mi = strand_matrix(i, a, q + 1, big_prev, big_i);
        auto cycles = nullspace(Mi, k);
        if (cycles.empty()) continue;
        // image columns in the q-strand at level i
        auto Mnext = strand_matrix(i + 1, a, q, small_i, small_next);
        // assemble [image | projected cycles] and compare ranks
        std::map<std::size_t, std::size_t> small_index;
        for (std::size_t t = 0; t < small_i.size(); ++t) small_index[small_i[t]] = t;
        std::vector<std::vector<Rational>> img(small_i.size());
        for (std::size_t r = 0; r < small_i.size(); ++r)
          img[r] = Mnext.empty() ? std::vector<Rational>() : Mnext[r];
        std::size_t img_cols = small_next.size();
        std::vector<std::vector<Rational>> aug(small_i.size());
        for (std::size_t r = 0; r < small_i.size(); ++r) {
          aug[r] = img[r];
          aug[r].resize(img_cols + cycles.size(), k.zero());
        }
        for (std::size_t z = 0; z < cycles.size(); ++z)
          for (std::size_t t = 0; t < big_i.size(); ++t) {
            auto it = small_index.find(big_i[t]);
            if (it != small_index.end())
              aug[it->second][img_cols + z] = cycles[z][t];
          }
        std::size_t rank_img = img_cols == 0 ? 0 : rank_rational(img, k);
        std::size_t rank_aug = rank_rational(aug, k);
        if (rank_aug != rank_img) return false;
      }
    }
  }
  return true;
}

}  // namespace mixsum

#endif  // MIXSUM_LIND_HPP
