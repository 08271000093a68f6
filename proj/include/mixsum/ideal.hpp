#ifndef MIXSUM_IDEAL_HPP
#define MIXSUM_IDEAL_HPP

#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "mixsum/core.hpp"

namespace mixsum {

struct Caps {
  // Generator count allowed after any ideal operation.
  std::size_t max_gens = 1u << 16;
  // lcm_lattice refuses ideals with more generators than this by default;
  // closures are exponential in the worst case.
  std::size_t lattice_gens = 24;
  // Hard ceiling on the number of lattice nodes produced.
  std::size_t lattice_nodes = 1u << 20;
  // Taylor complex generator cap.
  std::size_t taylor_gens = 16;
  // Subset-enumeration cap for LCM-certificate verification.
  std::size_t subset_verify = 20;
};

inline Caps& default_caps() {
  static Caps caps;
  return caps;
}

/// Monomial ideal held by its unique minimal generating set, canonically
/// ordered. The zero ideal has no generators; the unit ideal is (1).
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  explicit MonomialIdeal(PolyRing ring) : ring_(std::move(ring)) {}

  const PolyRing& ring() const { return ring_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  std::size_t num_gens() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }
  bool is_proper() const { return !is_unit(); }

  bool contains_monomial(const Monomial& m) const {
    for (const auto& g : gens_)
      if (g.divides(m)) return true;
    return false;
  }

  bool operator==(const MonomialIdeal& o) const {
    return ring_ == o.ring_ && gens_ == o.gens_;
  }
  bool operator!=(const MonomialIdeal& o) const { return !(*this == o); }

  // Only minimalize() constructs nonempty ideals.
  friend MonomialIdeal minimalize(std::vector<Monomial> gens, const PolyRing& ring,
                                  const Caps& caps);

 private:
  PolyRing ring_;
  std::vector<Monomial> gens_;
};

/// Reduces a generating set to the unique minimal one, canonically sorted.
/// Idempotent.
inline MonomialIdeal minimalize(std::vector<Monomial> gens, const PolyRing& ring,
                                const Caps& caps = default_caps()) {
  for (const auto& g : gens)
    if (g.arity() != ring.arity())
      throw RingMismatch("generator arity does not match ring");
  std::sort(gens.begin(), gens.end(), canonical_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& k : kept) {
      if (k.divides(g)) {  // earlier gens have lower degree
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(g);
  }
  if (kept.size() > caps.max_gens)
    throw ResourceLimit("generator cap exceeded: " + std::to_string(kept.size()));
  MonomialIdeal I(ring);
  I.gens_ = std::move(kept);
  return I;
}

inline MonomialIdeal zero_ideal(const PolyRing& ring) {
  return MonomialIdeal(ring);
}

inline MonomialIdeal unit_ideal(const PolyRing& ring) {
  return minimalize({Monomial::one(ring.arity())}, ring);
}

inline MonomialIdeal maximal_ideal(const PolyRing& ring) {
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < ring.arity(); ++i)
    gens.push_back(Monomial::variable(ring.arity(), i));
  return minimalize(std::move(gens), ring);
}

enum class CombineKind { Sum, Product, Intersect, Colon };

inline void check_same_ring(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (I.ring() != J.ring()) throw RingMismatch("ideals over different rings");
}

inline MonomialIdeal combine(const MonomialIdeal& I, const MonomialIdeal& J,
                             CombineKind kind, const Caps& caps = default_caps()) {
  check_same_ring(I, J);
  const PolyRing& R = I.ring();
  switch (kind) {
    case CombineKind::Sum: {
      std::vector<Monomial> gens = I.gens();
      gens.insert(gens.end(), J.gens().begin(), J.gens().end());
      return minimalize(std::move(gens), R, caps);
    }
    case CombineKind::Product: {
      std::vector<Monomial> gens;
      for (const auto& f : I.gens())
        for (const auto& g : J.gens()) gens.push_back(f * g);
      return minimalize(std::move(gens), R, caps);
    }
    case CombineKind::Intersect: {
      if (I.is_zero() || J.is_zero()) return zero_ideal(R);
      std::vector<Monomial> gens;
      for (const auto& f : I.gens())
        for (const auto& g : J.gens()) gens.push_back(f.lcm(g));
      return minimalize(std::move(gens), R, caps);
    }
    case CombineKind::Colon: {
      // (I : J) = intersection over g in G(J) of (I : g),
      // with (I : g) generated by lcm(f, g)/g.
      if (J.is_zero()) throw DomainError("colon by the zero ideal");
      if (I.is_zero()) return zero_ideal(R);
      std::optional<MonomialIdeal> acc;
      for (const auto& g : J.gens()) {
        std::vector<Monomial> q;
        for (const auto& f : I.gens()) q.push_back(f.lcm(g) / g);
        MonomialIdeal Ig = minimalize(std::move(q), R, caps);
        acc = acc ? combine(*acc, Ig, CombineKind::Intersect, caps) : Ig;
      }
      return *acc;
    }
  }
  throw DomainError("unknown combine kind");
}

inline MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J) {
  return combine(I, J, CombineKind::Sum);
}
inline MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J) {
  return combine(I, J, CombineKind::Product);
}
inline MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
  return combine(I, J, CombineKind::Intersect);
}
inline MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J) {
  return combine(I, J, CombineKind::Colon);
}

/// I^s with I^0 the unit ideal.
inline MonomialIdeal power(const MonomialIdeal& I, long long s,
                           const Caps& caps = default_caps()) {
  if (s < 0) throw DomainError("negative ideal power");
  MonomialIdeal acc = unit_ideal(I.ring());
  for (long long i = 0; i < s; ++i) acc = combine(acc, I, CombineKind::Product, caps);
  return acc;
}

/// I : J^infinity, reached by iterating the colon until a fixpoint.
inline MonomialIdeal saturate(const MonomialIdeal& I, const MonomialIdeal& J,
                              const Caps& caps = default_caps()) {
  if (J.is_zero()) throw DomainError("saturation by the zero ideal");
  MonomialIdeal cur = I;
  for (;;) {
    MonomialIdeal next = combine(cur, J, CombineKind::Colon, caps);
    if (next == cur) return cur;
    cur = next;
  }
}

inline MonomialIdeal radical(const MonomialIdeal& I) {
  std::vector<Monomial> gens;
  for (const auto& g : I.gens()) gens.push_back(g.radical());
  return minimalize(std::move(gens), I.ring());
}

/// true iff J is contained in I.
inline bool contains(const MonomialIdeal& I, const MonomialIdeal& J) {
  check_same_ring(I, J);
  for (const auto& g : J.gens())
    if (!I.contains_monomial(g)) return false;
  return true;
}

/// All lcms of nonempty subsets of G(I), i.e. the closure of G(I) under
/// pairwise lcm. Returned in canonical order.
inline std::vector<Monomial> lcm_lattice(const MonomialIdeal& I,
                                         const Caps& caps = default_caps()) {
  if (I.is_zero() || I.is_unit())
    throw DomainError("lcm_lattice needs a nonzero proper ideal");
  if (I.num_gens() > caps.lattice_gens)
    throw ResourceLimit("lcm_lattice generator cap exceeded: " +
                        std::to_string(I.num_gens()));
  auto cmp = [](const Monomial& a, const Monomial& b) {
    return a.exps() < b.exps();
  };
  std::set<Monomial, decltype(cmp)> seen(cmp);
  std::vector<Monomial> queue = I.gens();
  for (const auto& g : queue) seen.insert(g);
  // closure under lcm with generators reaches every subset lcm
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    Monomial m = queue[qi];
    for (const auto& g : I.gens()) {
      Monomial l = m.lcm(g);
      if (seen.insert(l).second) {
        if (seen.size() > caps.lattice_nodes)
          throw ResourceLimit("lcm lattice node cap exceeded");
        queue.push_back(l);
      }
    }
  }
  std::vector<Monomial> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

/// Result of embedding I and J into the tensor product ring.
struct MixedEmbedding {
  PolyRing T;
  MonomialIdeal I_T;  // extension of I
  MonomialIdeal J_T;  // extension of J
  MonomialIdeal P;    // I_T + J_T
  std::size_t split;  // number of variables coming from R
};

/// Builds T = R (x) S with concatenated variables and extends both ideals.
/// Colliding names from S are suffixed rather than rejected.
inline MixedEmbedding mixed_embed(const PolyRing& R, const PolyRing& S,
                                  const MonomialIdeal& I, const MonomialIdeal& J,
                                  const Caps& caps = default_caps()) {
  if (R.characteristic() != S.characteristic())
    throw RingMismatch("tensor factors have different characteristics");
  if (I.ring() != R || J.ring() != S)
    throw RingMismatch("ideal does not live in the declared factor ring");
  std::vector<std::string> vars = R.vars();
  for (const auto& v : S.vars()) {
    std::string name = v;
    int suffix = 1;
    while (std::find(vars.begin(), vars.end(), name) != vars.end())
      name = v + "_" + std::to_string(suffix++);
    vars.push_back(name);
  }
  PolyRing T(vars, R.characteristic());
  std::size_t split = R.arity();
  auto extend = [&](const Monomial& m, bool left) {
    std::vector<int> e(T.arity(), 0);
    for (std::size_t i = 0; i < m.arity(); ++i)
      e[left ? i : split + i] = m.exp(i);
    return Monomial(std::move(e));
  };
  std::vector<Monomial> gi, gj;
  for (const auto& g : I.gens()) gi.push_back(extend(g, true));
  for (const auto& g : J.gens()) gj.push_back(extend(g, false));
  MixedEmbedding out;
  out.T = T;
  out.I_T = minimalize(gi, T, caps);
  out.J_T = minimalize(gj, T, caps);
  out.P = combine(out.I_T, out.J_T, CombineKind::Sum, caps);
  out.split = split;
  return out;
}

inline std::string to_string(const MonomialIdeal& I) {
  if (I.is_zero()) return "0";
  std::string out;
  for (const auto& g : I.gens()) {
    if (!out.empty()) out += ", ";
    out += to_string(g, I.ring());
  }
  return out;
}

/// Parses a comma-separated monomial list; "0" denotes the zero ideal.
inline MonomialIdeal parse_ideal(const std::string& text, const PolyRing& ring,
                                 const Caps& caps = default_caps()) {
  std::size_t p = 0;
  detail::skip_ws(text, p);
  if (p < text.size() && text[p] == '0') {
    ++p;
    detail::skip_ws(text, p);
    if (p != text.size()) throw ParseError("unexpected text after '0'", p);
    return zero_ideal(ring);
  }
  std::vector<Monomial> gens;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ',') {
      std::string piece = text.substr(start, i - start);
      bool blank = piece.find_first_not_of(" \t") == std::string::npos;
      if (blank) throw ParseError("empty monomial in ideal list", start);
      gens.push_back(parse_monomial(piece, ring, start));
      start = i + 1;
    }
  }
  if (gens.empty()) throw ParseError("empty ideal text", 0);
  return minimalize(std::move(gens), ring, caps);
}

/// FNV-1a digest of the canonical form; stable across platforms, used for
/// cache keys.
inline std::uint64_t canonical_digest(const MonomialIdeal& I) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](std::uint64_t v) {
    for (int b = 0; b < 8; ++b) {
      h ^= (v >> (8 * b)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  mix(I.ring().arity());
  mix(static_cast<std::uint64_t>(I.ring().characteristic()));
  for (const auto& v : I.ring().vars())
    for (char c : v) mix(static_cast<unsigned char>(c));
  for (const auto& g : I.gens())
    for (int e : g.exps()) mix(static_cast<std::uint64_t>(e));
  return h;
}

}  // namespace mixsum

#endif  // MIXSUM_IDEAL_HPP
