#ifndef MIXSUM_MODGB_HPP
#define MIXSUM_MODGB_HPP

#include <deque>
#include <optional>
#include <vector>

#include "mixsum/complexes.hpp"

namespace mixsum {

/// Sparse element of a free module with polynomial coordinates, components
/// sorted by index.
struct ModVec {
  std::vector<std::pair<std::size_t, Poly>> comps;

  bool is_zero() const { return comps.empty(); }
};

inline ModVec modvec_add(const ModVec& a, const ModVec& b, const CoeffField& F) {
  ModVec out;
  std::size_t i = 0, j = 0;
  while (i < a.comps.size() || j < b.comps.size()) {
    if (j == b.comps.size() ||
        (i < a.comps.size() && a.comps[i].first < b.comps[j].first)) {
      out.comps.push_back(a.comps[i++]);
    } else if (i == a.comps.size() || b.comps[j].first < a.comps[i].first) {
      out.comps.push_back(b.comps[j++]);
    } else {
      Poly p = poly_add(a.comps[i].second, b.comps[j].second, F);
      if (!p.empty()) out.comps.push_back({a.comps[i].first, std::move(p)});
      ++i;
      ++j;
    }
  }
  return out;
}

inline ModVec modvec_scale(const ModVec& a, const Rational& c, const Monomial& m,
                           const CoeffField& F) {
  ModVec out;
  for (const auto& [idx, p] : a.comps) {
    Poly q = poly_scale(p, c, m, F);
    if (!q.empty()) out.comps.push_back({idx, std::move(q)});
  }
  return out;
}

/// Leading term under position-over-term: smallest component index wins,
/// then the degrevlex-largest monomial within it.
struct LeadTerm {
  std::size_t comp;
  Monomial mono;
  Rational coeff;
};

inline LeadTerm leading_term(const ModVec& v) {
  const auto& [idx, p] = v.comps.front();
  const Term* best = &p.front();
  for (const auto& t : p)
    if (degrevlex_less(best->mono, t.mono)) best = &t;
  return LeadTerm{idx, best->mono, best->coeff};
}

/// Full normal form of v against basis; head and tail terms are reduced.
inline ModVec normal_form(ModVec v, const std::vector<ModVec>& basis,
                          const CoeffField& F) {
  ModVec remainder;
  while (!v.is_zero()) {
    LeadTerm lv = leading_term(v);
    bool reduced = false;
    for (const auto& b : basis) {
      LeadTerm lb = leading_term(b);
      if (lb.comp == lv.comp && lb.mono.divides(lv.mono)) {
        Rational c = F.neg(F.div(lv.coeff, lb.coeff));
        v = modvec_add(v, modvec_scale(b, c, lv.mono / lb.mono, F), F);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      // move the lead term to the remainder and keep reducing the rest
      ModVec lead;
      lead.comps.push_back({lv.comp, {Term{lv.coeff, lv.mono}}});
      remainder = modvec_add(remainder, lead, F);
      v = modvec_add(v, modvec_scale(lead, Rational(-1), Monomial::one(lv.mono.arity()), F), F);
    }
  }
  return remainder;
}

/// Buchberger completion for submodules of free modules.
inline std::vector<ModVec> groebner_basis(std::vector<ModVec> gens,
                                          const CoeffField& F) {
  std::vector<ModVec> basis;
  for (auto& g : gens)
    if (!g.is_zero()) basis.push_back(std::move(g));
  std::deque<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) pairs.push_back({i, j});
  while (!pairs.empty()) {
    auto [i, j] = pairs.front();
    pairs.pop_front();
    LeadTerm li = leading_term(basis[i]), lj = leading_term(basis[j]);
    if (li.comp != lj.comp) continue;
    Monomial u = li.mono.lcm(lj.mono);
    ModVec s = modvec_add(
        modvec_scale(basis[i], F.inv(li.coeff), u / li.mono, F),
        modvec_scale(basis[j], F.neg(F.inv(lj.coeff)), u / lj.mono, F), F);
    ModVec r = normal_form(std::move(s), basis, F);
    if (!r.is_zero()) {
      for (std::size_t t = 0; t < basis.size(); ++t) pairs.push_back({t, basis.size()});
      basis.push_back(std::move(r));
    }
  }
  return basis;
}

/// Columns of a sparse matrix as module vectors.
inline std::vector<ModVec> matrix_columns(const SparseMatrix& d) {
  std::vector<ModVec> cols;
  for (const auto& col : d.cols) {
    ModVec v;
    for (const auto& [r, p] : col) v.comps.push_back({r, p});
    cols.push_back(std::move(v));
  }
  return cols;
}

/// Is w in the submodule generated by gens? Decided by normal form against a
/// Groebner basis.
inline bool module_member(const ModVec& w, const std::vector<ModVec>& gb,
                          const CoeffField& F) {
  return normal_form(w, gb, F).is_zero();
}

/// Generating set of the kernel of the map sending e_j to the j-th column of
/// d. Kernel vectors are extracted by the elimination trick: compute a
/// Groebner basis of the graphs (col_j, e_j) in F + R^cols with the ambient
/// components taking order priority; basis elements supported only on the
/// tracking block are exactly the syzygies.
inline std::vector<ModVec> graded_kernel(const SparseMatrix& d, std::size_t arity,
                                         const CoeffField& F) {
  const std::size_t shift = d.rows;
  std::vector<ModVec> gens;
  for (std::size_t j = 0; j < d.col_count(); ++j) {
    ModVec v;
    for (const auto& [r, p] : d.cols[j]) v.comps.push_back({r, p});
    gens.push_back(std::move(v));
  }
  for (std::size_t j = 0; j < d.col_count(); ++j) {
    Poly one;
    one.push_back(Term{Rational(1), Monomial::one(arity)});
    gens[j].comps.push_back({shift + j, std::move(one)});
  }
  auto gb = groebner_basis(std::move(gens), F);
  std::vector<ModVec> kernel;
  for (const auto& g : gb) {
    bool pure = true;
    for (const auto& [idx, p] : g.comps)
      if (idx < shift) {
        pure = false;
        break;
      }
    if (pure && !g.is_zero()) {
      ModVec k;
      for (const auto& [idx, p] : g.comps) k.comps.push_back({idx - shift, p});
      kernel.push_back(std::move(k));
    }
  }
  return kernel;
}

}  // namespace mixsum

#endif  // MIXSUM_MODGB_HPP
