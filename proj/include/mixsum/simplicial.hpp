#ifndef MIXSUM_SIMPLICIAL_HPP
#define MIXSUM_SIMPLICIAL_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "mixsum/ideal.hpp"
#include "mixsum/linalg.hpp"

namespace mixsum {

/// Simplicial complex on a small vertex set, faces as bitsets, closed under
/// subsets. The empty face is a face whenever the complex is nonvoid.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  SimplicialComplex(std::size_t vertices, std::vector<std::uint32_t> faces)
      : n_(vertices), faces_(std::move(faces)) {
    std::sort(faces_.begin(), faces_.end());
    faces_.erase(std::unique(faces_.begin(), faces_.end()), faces_.end());
    for (std::uint32_t f : faces_) {
      for (std::size_t v = 0; v < n_; ++v) {
        if ((f >> v) & 1u) {
          if (!has_face(f & ~(1u << v)))
            throw DomainError("face list not closed under subsets");
        }
      }
    }
  }

  std::size_t vertex_count() const { return n_; }
  const std::vector<std::uint32_t>& faces() const { return faces_; }
  bool is_void() const { return faces_.empty(); }

  bool has_face(std::uint32_t mask) const {
    return std::binary_search(faces_.begin(), faces_.end(), mask);
  }

  /// Maximal faces.
  std::vector<std::uint32_t> facets() const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t f : faces_) {
      bool maximal = true;
      for (std::size_t v = 0; v < n_ && maximal; ++v)
        if (!((f >> v) & 1u) && has_face(f | (1u << v))) maximal = false;
      if (maximal) out.push_back(f);
    }
    return out;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint32_t> faces_;
};

/// Upper Koszul complex of I at multidegree a: squarefree tau <= supp(a)
/// with x^a / x^tau in I. Vertices are the variables in supp(a);
/// vertex_vars records the ring indices in order.
struct UpperKoszul {
  SimplicialComplex complex;
  std::vector<std::size_t> vertex_vars;
};

inline UpperKoszul upper_koszul(const MonomialIdeal& I, const Monomial& a) {
  auto supp = a.support();
  const std::size_t n = supp.size();
  if (n > 31) throw ResourceLimit("upper Koszul support too large");
  std::vector<std::uint32_t> faces;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    Monomial tau = Monomial::one(a.arity());
    for (std::size_t v = 0; v < n; ++v)
      if ((mask >> v) & 1u) tau = tau * Monomial::variable(a.arity(), supp[v]);
    if (tau.divides(a) && I.contains_monomial(a / tau)) faces.push_back(mask);
  }
  return UpperKoszul{SimplicialComplex(n, std::move(faces)), supp};
}

/// Dimensions of reduced simplicial homology over the field of the given
/// characteristic. Entry d+1 of the result is dim H~_d, starting at
/// H~_{-1}. Rational ranks go through fraction-free elimination.
inline std::vector<std::size_t> homology_dims(const SimplicialComplex& K,
                                              long long characteristic) {
  const std::size_t n = K.vertex_count();
  std::vector<std::vector<std::uint32_t>> by_card(n + 1);
  for (std::uint32_t f : K.faces())
    by_card[static_cast<std::size_t>(__builtin_popcount(f))].push_back(f);

  // boundary_rank[c]: rank of the map from card-c faces to card-(c-1) faces
  std::vector<std::size_t> boundary_rank(n + 2, 0);
  for (std::size_t c = 1; c <= n; ++c) {
    const auto& src = by_card[c];
    const auto& dst = by_card[c - 1];
    if (src.empty() || dst.empty()) continue;
    std::map<std::uint32_t, std::size_t> dst_index;
    for (std::size_t i = 0; i < dst.size(); ++i) dst_index[dst[i]] = i;
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
    boundary_rank[c] = rank_over(M, characteristic);
  }

  std::vector<std::size_t> dims(n + 1, 0);
  for (std::size_t c = 0; c <= n; ++c) {
    std::size_t chains = by_card[c].size();
    dims[c] = chains - boundary_rank[c] - boundary_rank[c + 1];
  }
  return dims;  // dims[d+1] = H~_d with faces of cardinality d+1
}

}  // namespace mixsum

#endif  // MIXSUM_SIMPLICIAL_HPP
