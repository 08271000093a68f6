#ifndef MIXSUM_BETTI_HPP
#define MIXSUM_BETTI_HPP

#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "mixsum/simplicial.hpp"

namespace mixsum {

/// Betti multiplicities keyed by (homological index, multidegree).
struct MultigradedBettiTable {
  long long field_char = 0;
  std::map<std::pair<int, std::vector<int>>, std::size_t> entries;

  std::size_t total(int i) const {
    std::size_t t = 0;
    for (const auto& [key, mult] : entries)
      if (key.first == i) t += mult;
    return t;
  }
  int max_index() const {
    int m = -1;
    for (const auto& [key, mult] : entries) m = std::max(m, key.first);
    return m;
  }
};

/// Coarse Betti table keyed by (homological index, total degree).
struct BettiTable {
  long long field_char = 0;
  std::map<std::pair<int, long long>, std::size_t> entries;

  std::size_t total(int i) const {
    std::size_t t = 0;
    for (const auto& [key, mult] : entries)
      if (key.first == i) t += mult;
    return t;
  }
  /// Max homological index with a nonzero entry; -1 for the zero module.
  int pd() const {
    int m = -1;
    for (const auto& [key, mult] : entries) m = std::max(m, key.first);
    return m;
  }
  /// Max of degree - index; meaningful only for nonzero modules.
  long long reg() const {
    long long m = std::numeric_limits<long long>::min();
    for (const auto& [key, mult] : entries)
      m = std::max(m, key.second - key.first);
    return m;
  }
};

inline BettiTable coarsen(const MultigradedBettiTable& mt) {
  BettiTable t;
  t.field_char = mt.field_char;
  for (const auto& [key, mult] : mt.entries) {
    long long deg = 0;
    for (int e : key.second) deg += e;
    t.entries[{key.first, deg}] += mult;
  }
  return t;
}

/// Multigraded Betti numbers of the ideal I through reduced homology of
/// upper Koszul complexes over the lcm lattice.
inline MultigradedBettiTable betti_table(const MonomialIdeal& I,
                                         long long characteristic,
                                         const Caps& caps = default_caps()) {
  if (I.is_zero() || I.is_unit())
    throw DomainError("betti_table needs a nonzero proper ideal");
  MultigradedBettiTable table;
  table.field_char = characteristic;
  for (const auto& a : lcm_lattice(I, caps)) {
    auto K = upper_koszul(I, a);
    auto dims = homology_dims(K.complex, characteristic);
    for (std::size_t d = 0; d < dims.size(); ++d) {
      if (dims[d] == 0) continue;
      // dims[d] = H~_{d-1}, contributing to beta_{d-1+1... } = beta_{d? }
      // beta_{i,a} = dim H~_{i-1}, so i = d.
      table.entries[{static_cast<int>(d), a.exps()}] = dims[d];
    }
  }
  return table;
}

/// Process-wide memo for Betti tables keyed by (canonical digest, char).
inline const MultigradedBettiTable& betti_table_cached(
    const MonomialIdeal& I, long long characteristic,
    const Caps& caps = default_caps()) {
  static std::map<std::pair<std::uint64_t, long long>,
                  std::unique_ptr<MultigradedBettiTable>>
      cache;
  static std::mutex mu;
  std::pair<std::uint64_t, long long> key{canonical_digest(I), characteristic};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }
  auto computed = std::make_unique<MultigradedBettiTable>(
      betti_table(I, characteristic, caps));
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(key, std::move(computed));
  return *it->second;
}

/// pd/reg/depth bundle for an ideal and its quotient ring.
struct InvariantRecord {
  int pd_ideal = 0;
  int pd_quotient = 0;
  long long reg_ideal = 0;
  long long reg_quotient = 0;
  int depth_quotient = 0;

  bool operator==(const InvariantRecord&) const = default;
};

inline InvariantRecord invariants_from_table(const BettiTable& t,
                                             std::size_t ring_arity) {
  InvariantRecord rec;
  rec.pd_ideal = t.pd();
  rec.pd_quotient = rec.pd_ideal + 1;
  rec.reg_ideal = t.reg();
  rec.reg_quotient = rec.reg_ideal - 1;
  rec.depth_quotient = static_cast<int>(ring_arity) - rec.pd_quotient;
  return rec;
}

inline InvariantRecord invariants(const MonomialIdeal& I, long long characteristic,
                                  const Caps& caps = default_caps()) {
  return invariants_from_table(coarsen(betti_table_cached(I, characteristic, caps)),
                               I.ring().arity());
}

/// Graded Betti numbers of the subquotient M = I2/I1 (I1 inside I2), computed
/// degreewise as Koszul homology: for each multidegree a dividing
/// lcm(G(I1) u G(I2)), the strand has basis e_S with x^{a-S} a monomial of M.
/// Every Betti multidegree of such a module divides that lcm, so the table is
/// complete once degree_bound reaches its total degree.
inline BettiTable koszul_betti(const MonomialIdeal& I2, const MonomialIdeal& I1,
                               long long characteristic, long long degree_bound,
                               const Caps& caps = default_caps()) {
  if (!contains(I2, I1)) throw DomainError("koszul_betti needs I1 inside I2");
  const std::size_t n = I2.ring().arity();
  if (n > 25) throw ResourceLimit("koszul_betti arity cap");
  Monomial lcm_all = Monomial::one(n);
  for (const auto& g : I1.gens()) lcm_all = lcm_all.lcm(g);
  for (const auto& g : I2.gens()) lcm_all = lcm_all.lcm(g);
  if (lcm_all.degree() > degree_bound)
    throw DomainError("koszul_betti degree bound " + std::to_string(degree_bound) +
                      " below lcm degree " + std::to_string(lcm_all.degree()));
  unsigned long long volume = 1;
  for (std::size_t j = 0; j < n; ++j) {
    volume *= static_cast<unsigned long long>(lcm_all.exp(j)) + 1;
    if (volume > caps.lattice_nodes)
      throw ResourceLimit("koszul_betti divisor box too large");
  }

  auto in_module = [&](const Monomial& m) {
    return I2.contains_monomial(m) && !I1.contains_monomial(m);
  };

  BettiTable table;
  table.field_char = characteristic;
  std::vector<int> a(n, 0);
  for (;;) {
    Monomial am(a);
    // strand basis per exterior degree
    std::vector<std::vector<std::uint32_t>> basis(n + 1);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> e(a);
      bool ok = true;
      for (std::size_t v = 0; v < n; ++v)
        if ((mask >> v) & 1u) {
          if (e[v] == 0) {
            ok = false;
            break;
          }
          --e[v];
        }
      if (ok && in_module(Monomial(e)))
        basis[static_cast<std::size_t>(__builtin_popcount(mask))].push_back(mask);
    }
    std::vector<std::size_t> rank(n + 2, 0);
    for (std::size_t i = 1; i <= n; ++i) {
      const auto& src = basis[i];
      const auto& dst = basis[i - 1];
      if (src.empty() || dst.empty()) continue;
      std::map<std::uint32_t, std::size_t> dst_index;
      for (std::size_t k = 0; k < dst.size(); ++k) dst_index[dst[k]] = k;
      std::vector<std::vector<long long>> M(dst.size(),
                                            std::vector<long long>(src.size(), 0));
      for (std::size_t j = 0; j < src.size(); ++j) {
        std::uint32_t f = src[j];
        int sign = 1;
        for (std::size_t v = 0; v < n; ++v) {
          if ((f >> v) & 1u) {
            auto it = dst_index.find(f & ~(1u << v));
            if (it != dst_index.end()) M[it->second][j] += sign;
            sign = -sign;
          }
        }
      }
      rank[i] = rank_over(M, characteristic);
    }
    long long total_deg = am.degree();
    for (std::size_t i = 0; i <= n; ++i) {
      std::size_t h = basis[i].size() - rank[i] - rank[i + 1];
      if (h > 0)
        table.entries[{static_cast<int>(i), total_deg}] += h;
    }
    std::size_t j = 0;
    while (j < n && a[j] == lcm_all.exp(j)) a[j++] = 0;
    if (j == n) break;
    ++a[j];
  }
  return table;
}

/// Betti table of the module I2/I1 together with depth/reg derived values.
struct ModuleInvariants {
  BettiTable table;
  int pd = -1;          // -1 for the zero module
  long long reg = 0;    // meaningful when pd >= 0
  int depth = 0;        // arity - pd (Auslander-Buchsbaum); arity for 0 module
};

inline ModuleInvariants module_invariants(const MonomialIdeal& I2,
                                          const MonomialIdeal& I1,
                                          long long characteristic,
                                          const Caps& caps = default_caps()) {
  Monomial lcm_all = Monomial::one(I2.ring().arity());
  for (const auto& g : I1.gens()) lcm_all = lcm_all.lcm(g);
  for (const auto& g : I2.gens()) lcm_all = lcm_all.lcm(g);
  ModuleInvariants mi;
  mi.table = koszul_betti(I2, I1, characteristic, lcm_all.degree(), caps);
  mi.pd = mi.table.pd();
  mi.reg = mi.pd >= 0 ? mi.table.reg() : 0;
  mi.depth = static_cast<int>(I2.ring().arity()) - std::max(mi.pd, 0);
  if (mi.pd < 0) mi.depth = static_cast<int>(I2.ring().arity());
  return mi;
}

/// Per-index ledger for the Betti splitting identity
/// beta_i(P) = beta_i(I) + beta_i(J) + beta_{i-1}(I n J).
struct SplittingReport {
  bool holds = false;
  struct Row {
    int i;
    std::size_t beta_p, beta_i, beta_j, beta_inter_prev;
    bool equal;
  };
  std::vector<Row> rows;
};

inline SplittingReport splitting_check(const MonomialIdeal& P, const MonomialIdeal& I,
                                       const MonomialIdeal& J, long long characteristic,
                                       const Caps& caps = default_caps()) {
  if (I.is_zero() || J.is_zero())
    throw DomainError("splitting_check needs nonzero parts");
  if (combine(I, J, CombineKind::Sum, caps) != P)
    throw DomainError("decomposition mismatch: P != I + J");
  MonomialIdeal inter = combine(I, J, CombineKind::Intersect, caps);
  const auto& tp = betti_table_cached(P, characteristic, caps);
  const auto& ti = betti_table_cached(I, characteristic, caps);
  const auto& tj = betti_table_cached(J, characteristic, caps);
  const auto& tn = betti_table_cached(inter, characteristic, caps);
  int imax = std::max(std::max(tp.max_index(), ti.max_index()),
                      std::max(tj.max_index(), tn.max_index() + 1));
  SplittingReport rep;
  rep.holds = true;
  for (int i = 0; i <= imax; ++i) {
    SplittingReport::Row row;
    row.i = i;
    row.beta_p = tp.total(i);
    row.beta_i = ti.total(i);
    row.beta_j = tj.total(i);
    row.beta_inter_prev = i >= 1 ? tn.total(i - 1) : 0;
    row.equal = row.beta_p == row.beta_i + row.beta_j + row.beta_inter_prev;
    if (!row.equal) rep.holds = false;
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace mixsum

#endif  // MIXSUM_BETTI_HPP
