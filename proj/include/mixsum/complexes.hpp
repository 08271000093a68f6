#ifndef MIXSUM_COMPLEXES_HPP
#define MIXSUM_COMPLEXES_HPP

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "mixsum/ideal.hpp"
#include "mixsum/linalg.hpp"

namespace mixsum {

struct Term {
  Rational coeff;
  Monomial mono;

  bool operator==(const Term& o) const {
    return coeff == o.coeff && mono == o.mono;
  }
};

/// Polynomial entry of a differential: sorted term list, no zero
/// coefficients. Multigraded complexes only ever hold single-term entries,
/// but the arithmetic below does not rely on that.
using Poly = std::vector<Term>;

inline Poly poly_term(const Rational& c, const Monomial& m, const CoeffField& F) {
  Rational cn = F.normalize(c);
  if (F.is_zero(cn)) return {};
  return {Term{cn, m}};
}

inline Poly poly_add(const Poly& a, const Poly& b, const CoeffField& F) {
  Poly out;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() ||
        (i < a.size() && canonical_less(a[i].mono, b[j].mono))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || canonical_less(b[j].mono, a[i].mono)) {
      out.push_back(b[j++]);
    } else {
      Rational c = F.add(a[i].coeff, b[j].coeff);
      if (!F.is_zero(c)) out.push_back(Term{c, a[i].mono});
      ++i;
      ++j;
    }
  }
  return out;
}

inline Poly poly_scale(const Poly& a, const Rational& c, const Monomial& m,
                       const CoeffField& F) {
  Rational cn = F.normalize(c);
  if (F.is_zero(cn)) return {};
  Poly out;
  out.reserve(a.size());
  for (const auto& t : a) out.push_back(Term{F.mul(t.coeff, cn), t.mono * m});
  std::sort(out.begin(), out.end(),
            [](const Term& x, const Term& y) { return canonical_less(x.mono, y.mono); });
  return out;
}

inline Poly poly_mul(const Poly& a, const Poly& b, const CoeffField& F) {
  Poly out;
  for (const auto& t : a) out = poly_add(out, poly_scale(b, t.coeff, t.mono, F), F);
  return out;
}

inline Poly poly_neg(const Poly& a, const CoeffField& F) {
  Poly out = a;
  for (auto& t : out) t.coeff = F.neg(t.coeff);
  return out;
}

/// Column-major sparse matrix of polynomial entries.
struct SparseMatrix {
  std::size_t rows = 0;
  std::vector<std::vector<std::pair<std::size_t, Poly>>> cols;

  std::size_t col_count() const { return cols.size(); }

  const Poly* entry(std::size_t r, std::size_t c) const {
    for (const auto& [row, p] : cols[c])
      if (row == r) return &p;
    return nullptr;
  }
  void set_entry(std::size_t r, std::size_t c, Poly p) {
    auto& col = cols[c];
    for (auto it = col.begin(); it != col.end(); ++it) {
      if (it->first == r) {
        if (p.empty())
          col.erase(it);
        else
          it->second = std::move(p);
        return;
      }
      if (it->first > r) {
        if (!p.empty()) col.insert(it, {r, std::move(p)});
        return;
      }
    }
    if (!p.empty()) col.push_back({r, std::move(p)});
  }
};

/// Matrix product A*B (A applied after B), entries multiplied symbolically.
inline SparseMatrix sparse_compose(const SparseMatrix& A, const SparseMatrix& B,
                                   const CoeffField& F) {
  SparseMatrix out;
  out.rows = A.rows;
  out.cols.resize(B.col_count());
  for (std::size_t j = 0; j < B.col_count(); ++j) {
    std::map<std::size_t, Poly> acc;
    for (const auto& [mid, p] : B.cols[j]) {
      for (const auto& [r, q] : A.cols[mid]) {
        Poly prod = poly_mul(q, p, F);
        auto it = acc.find(r);
        if (it == acc.end())
          acc.emplace(r, std::move(prod));
        else
          it->second = poly_add(it->second, prod, F);
      }
    }
    for (auto& [r, p] : acc)
      if (!p.empty()) out.cols[j].push_back({r, std::move(p)});
  }
  return out;
}

/// Bounded complex of multigraded free modules with explicit differentials.
/// modules[i] lists the generator multidegrees of F_i; diffs[i] is
/// d_i : F_i -> F_{i-1} for i >= 1 (diffs[0] is unused). augmentation maps
/// the degree-0 generators to module elements (for resolutions).
struct FreeComplex {
  PolyRing ring;
  long long field_char = 0;
  std::vector<std::vector<Monomial>> modules;
  std::vector<SparseMatrix> diffs;
  std::vector<Term> augmentation;
  bool minimal = false;

  std::size_t length() const { return modules.empty() ? 0 : modules.size() - 1; }
  std::size_t rank(std::size_t i) const {
    return i < modules.size() ? modules[i].size() : 0;
  }
  std::size_t total_rank() const {
    std::size_t t = 0;
    for (const auto& m : modules) t += m.size();
    return t;
  }
  CoeffField field() const { return CoeffField(field_char); }
};

inline bool poly_has_constant_term(const Poly& p) {
  for (const auto& t : p)
    if (t.mono.is_one()) return true;
  return false;
}

/// d o d = 0 and multigraded homogeneity of every entry.
inline void check_complex(const FreeComplex& C) {
  CoeffField F = C.field();
  for (std::size_t k = 1; k < C.modules.size(); ++k) {
    const auto& d = C.diffs[k];
    if (d.rows != C.rank(k - 1) || d.col_count() != C.rank(k))
      throw DomainError("differential shape mismatch");
    for (std::size_t c = 0; c < d.col_count(); ++c)
      for (const auto& [r, p] : d.cols[c])
        for (const auto& t : p)
          if (t.mono * C.modules[k - 1][r] != C.modules[k][c])
            throw DomainError("differential entry not multigraded");
    if (k >= 2) {
      SparseMatrix dd = sparse_compose(C.diffs[k - 1], d, F);
      for (const auto& col : dd.cols)
        if (!col.empty()) throw DomainError("d o d != 0");
    }
  }
  if (!C.augmentation.empty() && C.modules.size() >= 2) {
    // augmentation composed with d_1 vanishes
    for (std::size_t c = 0; c < C.diffs[1].col_count(); ++c) {
      Poly acc;
      CoeffField F2 = C.field();
      for (const auto& [r, p] : C.diffs[1].cols[c]) {
        const Term& a = C.augmentation[r];
        acc = poly_add(acc, poly_scale(p, a.coeff, a.mono, F2), F2);
      }
      if (!acc.empty()) throw DomainError("augmentation does not kill d_1");
    }
  }
  if (C.minimal) {
    for (std::size_t k = 1; k < C.modules.size(); ++k)
      for (const auto& col : C.diffs[k].cols)
        for (const auto& [r, p] : col)
          if (poly_has_constant_term(p))
            throw DomainError("minimal complex has a unit entry");
  }
}

/// Taylor complex of a monomial ideal: basis e_S for nonempty subsets S of
/// the generators, deg e_S = lcm(S), differential the signed alternating sum
/// of lcm quotients.
inline FreeComplex taylor_complex(const MonomialIdeal& I, long long characteristic,
                                  const Caps& caps = default_caps()) {
  if (I.is_zero()) throw DomainError("Taylor complex of the zero ideal");
  const std::size_t g = I.num_gens();
  if (g > caps.taylor_gens)
    throw ResourceLimit("Taylor generator cap exceeded: " + std::to_string(g));
  CoeffField F(characteristic);
  FreeComplex C;
  C.ring = I.ring();
  C.field_char = characteristic;
  C.modules.resize(g);
  C.diffs.resize(g);

  std::vector<std::vector<std::uint32_t>> subsets(g + 1);
  std::vector<std::map<std::uint32_t, std::size_t>> index(g + 1);
  for (std::uint32_t mask = 1; mask < (1u << g); ++mask) {
    std::size_t size = static_cast<std::size_t>(__builtin_popcount(mask));
    index[size][mask] = subsets[size].size();
    subsets[size].push_back(mask);
  }
  auto lcm_of = [&](std::uint32_t mask) {
    Monomial m = Monomial::one(I.ring().arity());
    for (std::size_t t = 0; t < g; ++t)
      if ((mask >> t) & 1u) m = m.lcm(I.gens()[t]);
    return m;
  };
  for (std::size_t size = 1; size <= g; ++size)
    for (std::uint32_t mask : subsets[size])
      C.modules[size - 1].push_back(lcm_of(mask));

  for (std::size_t size = 2; size <= g; ++size) {
    SparseMatrix d;
    d.rows = C.rank(size - 2);
    d.cols.resize(C.rank(size - 1));
    for (std::size_t j = 0; j < subsets[size].size(); ++j) {
      std::uint32_t mask = subsets[size][j];
      Monomial l = lcm_of(mask);
      int sign = -1;  // dropping the p-th member of S carries (-1)^p, 1-based
      for (std::size_t t = 0; t < g; ++t) {
        if (!((mask >> t) & 1u)) continue;
        std::uint32_t sub = mask & ~(1u << t);
        Monomial ls = lcm_of(sub);
        std::size_t r = index[size - 1].at(sub);
        d.set_entry(r, j, poly_term(Rational(sign), l / ls, F));
        sign = -sign;
      }
    }
    C.diffs[size - 1 + 0] = std::move(d);
  }
  // diffs[k] holds d_k : F_k -> F_{k-1}; shift what we built at index size-1
  // (loop above stored d at index size-1, which is exactly k = size-1).

  C.augmentation.reserve(g);
  for (std::size_t t = 0; t < g; ++t)
    C.augmentation.push_back(Term{Rational(1), I.gens()[t]});
  C.minimal = false;
  return C;
}

/// Removes generator `index` of F_level, dropping the corresponding column
/// of d_level and row of d_{level+1}, plus the augmentation slot at level 0.
inline void remove_generator(FreeComplex& C, std::size_t level, std::size_t index) {
  C.modules[level].erase(C.modules[level].begin() + index);
  if (level == 0 && !C.augmentation.empty())
    C.augmentation.erase(C.augmentation.begin() + index);
  if (level >= 1 && level < C.diffs.size()) {
    auto& d = C.diffs[level];
    d.cols.erase(d.cols.begin() + index);
  }
  if (level + 1 < C.diffs.size()) {
    auto& d = C.diffs[level + 1];
    d.rows -= 1;
    for (auto& col : d.cols) {
      for (auto it = col.begin(); it != col.end();) {
        if (it->first == index) {
          it = col.erase(it);
        } else {
          if (it->first > index) it->first -= 1;
          ++it;
        }
      }
    }
  }
  if (level >= 1 && level < C.diffs.size()) C.diffs[level].rows = C.rank(level - 1);
}

/// Gaussian elimination of unit entries: homotopy-equivalent complex with all
/// entries in the maximal ideal. Pivots are taken in canonical (row, column)
/// order, so the output is deterministic. Ranks of the result equal the Betti
/// numbers when the input is a resolution.
inline FreeComplex minimalize_complex(FreeComplex C) {
  CoeffField F = C.field();
  for (;;) {
    bool found = false;
    for (std::size_t k = 1; k < C.modules.size() && !found; ++k) {
      auto& d = C.diffs[k];
      std::size_t best_r = 0, best_c = 0;
      bool have = false;
      for (std::size_t c = 0; c < d.col_count(); ++c)
        for (const auto& [r, p] : d.cols[c])
          if (poly_has_constant_term(p)) {
            if (!have || r < best_r || (r == best_r && c < best_c)) {
              have = true;
              best_r = r;
              best_c = c;
            }
          }
      if (!have) continue;
      found = true;
      // pivot value: the constant coefficient (entries are multigraded, so a
      // constant entry is a pure scalar)
      const Poly& pv = *d.entry(best_r, best_c);
      Rational u = pv.front().coeff;
      Rational uinv = F.inv(u);
      // row best_r of d, excluding pivot column
      std::vector<std::pair<std::size_t, Poly>> row_entries;
      for (std::size_t c = 0; c < d.col_count(); ++c) {
        if (c == best_c) continue;
        const Poly* p = d.entry(best_r, c);
        if (p) row_entries.push_back({c, *p});
      }
      std::vector<std::pair<std::size_t, Poly>> col_entries;
      for (const auto& [r, p] : d.cols[best_c])
        if (r != best_r) col_entries.push_back({r, p});
      for (const auto& [c, w] : row_entries) {
        for (const auto& [r, v] : col_entries) {
          // d[r][c] -= v * uinv * w
          Poly upd = poly_mul(v, poly_scale(w, F.neg(uinv), Monomial::one(C.ring.arity()), F), F);
          const Poly* cur = d.entry(r, c);
          Poly next = cur ? poly_add(*cur, upd, F) : upd;
          d.set_entry(r, c, std::move(next));
        }
      }
      remove_generator(C, k, best_c);
      remove_generator(C, k - 1, best_r);
      while (!C.modules.empty() && C.modules.back().empty()) {
        C.modules.pop_back();
        C.diffs.pop_back();
      }
    }
    if (!found) break;
  }
  C.minimal = true;
  return C;
}

/// Keeps only the total-degree-1 terms of every differential entry. Input
/// must be minimal; the result is a complex (it need not be exact).
inline FreeComplex linear_part(const FreeComplex& C) {
  if (!C.minimal) throw DomainError("linear_part needs a minimal complex");
  FreeComplex L = C;
  for (std::size_t k = 1; k < L.modules.size(); ++k)
    for (auto& col : L.diffs[k].cols) {
      for (auto& [r, p] : col) {
        Poly kept;
        for (const auto& t : p)
          if (t.mono.degree() == 1) kept.push_back(t);
        p = std::move(kept);
      }
      col.erase(std::remove_if(col.begin(), col.end(),
                               [](const auto& e) { return e.second.empty(); }),
                col.end());
    }
  return L;
}

/// Position of the (p, q) block inside degree p+q of a tensor product;
/// shared by tensor_product and tensor_map so indexing cannot diverge.
inline std::vector<std::vector<std::size_t>> tensor_offsets(const FreeComplex& A,
                                                            const FreeComplex& B) {
  std::size_t la = A.modules.size(), lb = B.modules.size();
  std::vector<std::vector<std::size_t>> offset(la, std::vector<std::size_t>(lb, 0));
  for (std::size_t i = 0; i < la + lb - 1; ++i) {
    std::size_t pos = 0;
    for (std::size_t p = 0; p < la; ++p) {
      std::size_t q = i - p;
      if (i < p || q >= lb) continue;
      offset[p][q] = pos;
      pos += A.rank(p) * B.rank(q);
    }
  }
  return offset;
}

/// Tensor product of complexes over disjoint-variable subrings of the same
/// ambient ring. Generator (a,b) in degree p+q has multidegree
/// deg(a)*deg(b); d(a x b) = d_A a x b + (-1)^p a x d_B b.
inline FreeComplex tensor_product(const FreeComplex& A, const FreeComplex& B) {
  if (A.ring != B.ring || A.field_char != B.field_char)
    throw RingMismatch("tensor factors built over different rings");
  CoeffField F = A.field();
  FreeComplex C;
  C.ring = A.ring;
  C.field_char = A.field_char;
  std::size_t la = A.modules.size(), lb = B.modules.size();
  std::size_t len = la + lb - 1;
  C.modules.resize(len);
  C.diffs.resize(len);

  auto offset = tensor_offsets(A, B);
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t p = 0; p < la; ++p) {
      std::size_t q = i - p;
      if (i < p || q >= lb) continue;
      for (std::size_t ia = 0; ia < A.rank(p); ++ia)
        for (std::size_t ib = 0; ib < B.rank(q); ++ib)
          C.modules[i].push_back(A.modules[p][ia] * B.modules[q][ib]);
    }
  }
  for (std::size_t i = 1; i < len; ++i) {
    SparseMatrix d;
    d.rows = C.rank(i - 1);
    d.cols.resize(C.rank(i));
    for (std::size_t p = 0; p < la; ++p) {
      std::size_t q = i - p;
      if (i < p || q >= lb) continue;
      for (std::size_t ia = 0; ia < A.rank(p); ++ia)
        for (std::size_t ib = 0; ib < B.rank(q); ++ib) {
          std::size_t colidx = offset[p][q] + ia * B.rank(q) + ib;
          if (p >= 1) {
            for (const auto& [ra, poly] : A.diffs[p].cols[ia]) {
              std::size_t rowidx = offset[p - 1][q] + ra * B.rank(q) + ib;
              d.set_entry(rowidx, colidx, poly);
            }
          }
          if (q >= 1) {
            Rational sign((p % 2 == 0) ? 1 : -1);
            for (const auto& [rb, poly] : B.diffs[q].cols[ib]) {
              std::size_t rowidx = offset[p][q - 1] + ia * B.rank(q - 1) + rb;
              d.set_entry(rowidx, colidx,
                          poly_scale(poly, sign, Monomial::one(C.ring.arity()), F));
            }
          }
        }
    }
    C.diffs[i] = std::move(d);
  }
  if (!A.augmentation.empty() && !B.augmentation.empty()) {
    for (std::size_t ia = 0; ia < A.rank(0); ++ia)
      for (std::size_t ib = 0; ib < B.rank(0); ++ib)
        C.augmentation.push_back(
            Term{F.mul(A.augmentation[ia].coeff, B.augmentation[ib].coeff),
                 A.augmentation[ia].mono * B.augmentation[ib].mono});
  }
  C.minimal = A.minimal && B.minimal;
  return C;
}

/// Chain map between complexes: maps[i] : F_i(src) -> F_i(tgt).
struct ChainMap {
  std::vector<SparseMatrix> maps;
};

/// Verifies d_tgt o phi = phi o d_src symbolically.
inline void check_chain_map(const FreeComplex& src, const FreeComplex& tgt,
                            const ChainMap& phi) {
  CoeffField F = src.field();
  for (std::size_t i = 1; i < src.modules.size(); ++i) {
    if (i >= phi.maps.size()) break;
    SparseMatrix lhs = i < tgt.diffs.size()
                           ? sparse_compose(tgt.diffs[i], phi.maps[i], F)
                           : SparseMatrix{};
    SparseMatrix rhs = sparse_compose(phi.maps[i - 1], src.diffs[i], F);
    if (lhs.cols.empty()) {
      lhs.rows = rhs.rows;
      lhs.cols.resize(rhs.col_count());
    }
    for (std::size_t c = 0; c < rhs.col_count(); ++c) {
      std::map<std::size_t, Poly> diff;
      for (const auto& [r, p] : lhs.cols[c]) diff[r] = p;
      for (const auto& [r, p] : rhs.cols[c]) {
        auto it = diff.find(r);
        if (it == diff.end())
          diff[r] = poly_neg(p, F);
        else
          it->second = poly_add(it->second, poly_neg(p, F), F);
      }
      for (const auto& [r, p] : diff)
        if (!p.empty()) throw DomainError("not a chain map");
    }
  }
}

/// Mapping cone of phi : A -> D. cone_i = D_i + A_{i-1}, with
/// d(0, a) = (phi(a), -d_A(a)). Index maps of the D-part and A-part
/// generators are returned alongside the cone.
struct ConeResult {
  FreeComplex cone;
  // position of D_i gen j inside cone_i, and of A_{i-1} gen j inside cone_i
  std::vector<std::size_t> d_offset;  // per homological degree: D part starts at 0
  std::vector<std::size_t> a_offset;  // A_{i-1} part offset inside cone_i
};

inline ConeResult mapping_cone(const FreeComplex& A, const FreeComplex& D,
                               const ChainMap& phi) {
  CoeffField F = A.field();
  ConeResult out;
  FreeComplex& C = out.cone;
  C.ring = A.ring;
  C.field_char = A.field_char;
  std::size_t len = std::max(D.modules.size(), A.modules.size() + 1);
  C.modules.resize(len);
  C.diffs.resize(len);
  out.d_offset.assign(len, 0);
  out.a_offset.assign(len, 0);
  for (std::size_t i = 0; i < len; ++i) {
    std::size_t nd = D.rank(i);
    out.a_offset[i] = nd;
    C.modules[i] = i < D.modules.size() ? D.modules[i] : std::vector<Monomial>{};
    if (i >= 1 && i - 1 < A.modules.size())
      C.modules[i].insert(C.modules[i].end(), A.modules[i - 1].begin(),
                          A.modules[i - 1].end());
  }
  for (std::size_t i = 1; i < len; ++i) {
    SparseMatrix d;
    d.rows = C.rank(i - 1);
    d.cols.resize(C.rank(i));
    if (i < D.diffs.size())
      for (std::size_t c = 0; c < D.rank(i); ++c)
        for (const auto& [r, p] : D.diffs[i].cols[c]) d.set_entry(r, c, p);
    if (i - 1 < A.modules.size()) {
      // phi component into D_{i-1}
      if (i - 1 < phi.maps.size())
        for (std::size_t c = 0; c < A.rank(i - 1); ++c)
          for (const auto& [r, p] : phi.maps[i - 1].cols[c])
            d.set_entry(r, out.a_offset[i] + c, p);
      // -d_A component into A_{i-2}
      if (i - 1 >= 1 && i - 1 < A.diffs.size())
        for (std::size_t c = 0; c < A.rank(i - 1); ++c)
          for (const auto& [r, p] : A.diffs[i - 1].cols[c])
            d.set_entry(out.a_offset[i - 1] + r, out.a_offset[i] + c,
                        poly_neg(p, F));
    }
    C.diffs[i] = std::move(d);
  }
  C.augmentation = D.augmentation;
  C.minimal = false;
  return out;
}

inline ChainMap identity_chain_map(const FreeComplex& C) {
  ChainMap id;
  id.maps.resize(C.modules.size());
  for (std::size_t i = 0; i < C.modules.size(); ++i) {
    id.maps[i].rows = C.rank(i);
    id.maps[i].cols.resize(C.rank(i));
    for (std::size_t j = 0; j < C.rank(i); ++j)
      id.maps[i].set_entry(j, j, Poly{Term{Rational(1), Monomial::one(C.ring.arity())}});
  }
  return id;
}

/// g o f for chain maps f : X -> Y, g : Y -> Z.
inline ChainMap compose_chain_maps(const ChainMap& g, const ChainMap& f,
                                   const CoeffField& F) {
  ChainMap out;
  out.maps.resize(f.maps.size());
  for (std::size_t i = 0; i < f.maps.size(); ++i) {
    if (i < g.maps.size()) {
      out.maps[i] = sparse_compose(g.maps[i], f.maps[i], F);
    } else {
      out.maps[i].rows = 0;
      out.maps[i].cols.resize(f.maps[i].col_count());
    }
  }
  return out;
}

/// Componentwise tensor of chain maps: (f x g)(a x b) = f(a) x g(b).
inline ChainMap tensor_map(const FreeComplex& A, const FreeComplex& B,
                           const FreeComplex& A2, const FreeComplex& B2,
                           const ChainMap& f, const ChainMap& g,
                           const CoeffField& F) {
  auto off_src = tensor_offsets(A, B);
  auto off_dst = tensor_offsets(A2, B2);
  std::size_t la = A.modules.size(), lb = B.modules.size();
  std::size_t len = la + lb - 1;
  ChainMap out;
  out.maps.resize(len);
  std::size_t dst_len = A2.modules.size() + B2.modules.size() - 1;
  for (std::size_t i = 0; i < len; ++i) {
    std::size_t dst_rank = 0;
    if (i < dst_len)
      for (std::size_t p = 0; p < A2.modules.size(); ++p) {
        std::size_t q = i - p;
        if (i >= p && q < B2.modules.size()) dst_rank += A2.rank(p) * B2.rank(q);
      }
    out.maps[i].rows = dst_rank;
    std::size_t src_rank = 0;
    for (std::size_t p = 0; p < la; ++p) {
      std::size_t q = i - p;
      if (i >= p && q < lb) src_rank += A.rank(p) * B.rank(q);
    }
    out.maps[i].cols.resize(src_rank);
    for (std::size_t p = 0; p < la; ++p) {
      std::size_t q = i - p;
      if (i < p || q >= lb) continue;
      if (p >= A2.modules.size() || q >= B2.modules.size()) continue;
      if (p >= f.maps.size() || q >= g.maps.size()) continue;
      for (std::size_t ia = 0; ia < A.rank(p); ++ia)
        for (std::size_t ib = 0; ib < B.rank(q); ++ib) {
          std::size_t col = off_src[p][q] + ia * B.rank(q) + ib;
          for (const auto& [ra, pf] : f.maps[p].cols[ia])
            for (const auto& [rb, pg] : g.maps[q].cols[ib]) {
              std::size_t row = off_dst[p][q] + ra * B2.rank(q) + rb;
              out.maps[i].set_entry(row, col, poly_mul(pf, pg, F));
            }
        }
    }
  }
  return out;
}

/// Direct sum, generators of A first.
inline FreeComplex direct_sum(const FreeComplex& A, const FreeComplex& B) {
  FreeComplex C;
  C.ring = A.ring;
  C.field_char = A.field_char;
  std::size_t len = std::max(A.modules.size(), B.modules.size());
  C.modules.resize(len);
  C.diffs.resize(len);
  for (std::size_t i = 0; i < len; ++i) {
    if (i < A.modules.size()) C.modules[i] = A.modules[i];
    if (i < B.modules.size())
      C.modules[i].insert(C.modules[i].end(), B.modules[i].begin(),
                          B.modules[i].end());
  }
  for (std::size_t i = 1; i < len; ++i) {
    SparseMatrix d;
    d.rows = C.rank(i - 1);
    d.cols.resize(C.rank(i));
    std::size_t arow = i - 1 < A.modules.size() ? A.rank(i - 1) : 0;
    std::size_t acol = i < A.modules.size() ? A.rank(i) : 0;
    if (i < A.diffs.size())
      for (std::size_t c = 0; c < A.rank(i); ++c)
        for (const auto& [r, p] : A.diffs[i].cols[c]) d.set_entry(r, c, p);
    if (i < B.diffs.size())
      for (std::size_t c = 0; c < B.rank(i); ++c)
        for (const auto& [r, p] : B.diffs[i].cols[c])
          d.set_entry(arow + r, acol + c, p);
    C.diffs[i] = std::move(d);
  }
  C.augmentation = A.augmentation;
  C.augmentation.insert(C.augmentation.end(), B.augmentation.begin(),
                        B.augmentation.end());
  C.minimal = A.minimal && B.minimal;
  return C;
}

}  // namespace mixsum

#endif  // MIXSUM_COMPLEXES_HPP
