#ifndef MIXSUM_CORE_HPP
#define MIXSUM_CORE_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace mixsum {

// Thrown on malformed input text; position is a 0-based offset into the text.
struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
};

struct RingMismatch : std::runtime_error {
  explicit RingMismatch(const std::string& msg) : std::runtime_error(msg) {}
};

// A configured cap was exceeded (Taylor generators, lattice size, ...).
struct ResourceLimit : std::runtime_error {
  explicit ResourceLimit(const std::string& msg) : std::runtime_error(msg) {}
};

struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

inline bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

/// Ambient polynomial ring: ordered variable names plus the field
/// characteristic (0 or a prime).
class PolyRing {
 public:
  PolyRing() = default;
  PolyRing(std::vector<std::string> vars, long long characteristic = 0)
      : vars_(std::move(vars)), char_(characteristic) {
    if (char_ != 0 && !is_prime(char_))
      throw DomainError("field characteristic must be 0 or prime, got " +
                        std::to_string(char_));
    for (const auto& v : vars_) {
      if (v.empty()) throw DomainError("empty variable name");
    }
    auto sorted = vars_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw DomainError("duplicate variable name in ring");
  }

  std::size_t arity() const { return vars_.size(); }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::string& var_name(std::size_t i) const { return vars_.at(i); }
  long long characteristic() const { return char_; }

  bool operator==(const PolyRing& o) const {
    return vars_ == o.vars_ && char_ == o.char_;
  }
  bool operator!=(const PolyRing& o) const { return !(*this == o); }

  int var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i] == name) return static_cast<int>(i);
    return -1;
  }

 private:
  std::vector<std::string> vars_;
  long long char_ = 0;
};

/// Monomial as an exponent vector over a fixed ring arity. Exponents are
/// machine integers; arithmetic checks for overflow since products of many
/// generators are formed when taking powers.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t arity) : exps_(arity, 0) {}
  explicit Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
    for (int e : exps_)
      if (e < 0) throw DomainError("negative exponent");
  }

  static Monomial one(std::size_t arity) { return Monomial(arity); }
  static Monomial variable(std::size_t arity, std::size_t i) {
    Monomial m(arity);
    m.exps_[i] = 1;
    return m;
  }

  std::size_t arity() const { return exps_.size(); }
  int exp(std::size_t i) const { return exps_[i]; }
  const std::vector<int>& exps() const { return exps_; }

  bool is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
  }

  long long degree() const {
    return std::accumulate(exps_.begin(), exps_.end(), 0LL);
  }

  /// Indices of the variables dividing this monomial.
  std::vector<std::size_t> support() const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > 0) s.push_back(i);
    return s;
  }

  Monomial operator*(const Monomial& o) const {
    check_arity(o);
    Monomial r(arity());
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      long long s = static_cast<long long>(exps_[i]) + o.exps_[i];
      if (s > std::numeric_limits<int>::max())
        throw ResourceLimit("exponent overflow in monomial product");
      r.exps_[i] = static_cast<int>(s);
    }
    return r;
  }

  bool divides(const Monomial& o) const {
    check_arity(o);
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > o.exps_[i]) return false;
    return true;
  }

  /// Exact quotient o.divides(*this) must hold.
  Monomial operator/(const Monomial& o) const {
    check_arity(o);
    Monomial r(arity());
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (o.exps_[i] > exps_[i]) throw DomainError("monomial quotient not exact");
      r.exps_[i] = exps_[i] - o.exps_[i];
    }
    return r;
  }

  Monomial lcm(const Monomial& o) const {
    check_arity(o);
    Monomial r(arity());
    for (std::size_t i = 0; i < exps_.size(); ++i)
      r.exps_[i] = std::max(exps_[i], o.exps_[i]);
    return r;
  }

  Monomial gcd(const Monomial& o) const {
    check_arity(o);
    Monomial r(arity());
    for (std::size_t i = 0; i < exps_.size(); ++i)
      r.exps_[i] = std::min(exps_[i], o.exps_[i]);
    return r;
  }

  Monomial radical() const {
    Monomial r(arity());
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = exps_[i] > 0 ? 1 : 0;
    return r;
  }

  Monomial pow(long long e) const {
    if (e < 0) throw DomainError("negative monomial power");
    Monomial r(arity());
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      long long s = static_cast<long long>(exps_[i]) * e;
      if (s > std::numeric_limits<int>::max())
        throw ResourceLimit("exponent overflow in monomial power");
      r.exps_[i] = static_cast<int>(s);
    }
    return r;
  }

  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
  bool operator!=(const Monomial& o) const { return exps_ != o.exps_; }

 private:
  void check_arity(const Monomial& o) const {
    if (exps_.size() != o.exps_.size())
      throw RingMismatch("monomial arity mismatch");
  }
  std::vector<int> exps_;
};

/// Canonical order: total degree first, then descending lexicographic on
/// exponent vectors, so x^2 < x*y < y^2. All ideal outputs are sorted this
/// way, which keeps serialized results byte-stable.
inline bool canonical_less(const Monomial& a, const Monomial& b) {
  long long da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return std::lexicographical_compare(b.exps().begin(), b.exps().end(),
                                      a.exps().begin(), a.exps().end());
}

/// Degree-reverse-lexicographic order (used as the term order inside the
/// module Groebner routines). Returns a < b.
inline bool degrevlex_less(const Monomial& a, const Monomial& b) {
  long long da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  // revlex tie-break: larger last nonzero difference means smaller.
  for (std::size_t i = a.arity(); i-- > 0;) {
    if (a.exp(i) != b.exp(i)) return a.exp(i) > b.exp(i);
  }
  return false;
}

// --- text I/O -------------------------------------------------------------

inline std::string to_string(const Monomial& m, const PolyRing& ring) {
  if (m.is_one()) return "1";
  std::string out;
  for (std::size_t i = 0; i < ring.arity(); ++i) {
    if (m.exp(i) == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.var_name(i);
    if (m.exp(i) != 1) out += "^" + std::to_string(m.exp(i));
  }
  return out;
}

namespace detail {
inline void skip_ws(const std::string& s, std::size_t& p) {
  while (p < s.size() && (s[p] == ' ' || s[p] == '\t')) ++p;
}
inline bool name_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '_';
}
}  // namespace detail

/// Parses `x^2*y` style monomial text; exponent 1 may be omitted, `*`
/// separates factors, `1` denotes the constant monomial.
inline Monomial parse_monomial(const std::string& text, const PolyRing& ring,
                               std::size_t offset = 0) {
  std::size_t p = 0;
  const std::string& s = text;
  detail::skip_ws(s, p);
  if (p < s.size() && s[p] == '1') {
    ++p;
    detail::skip_ws(s, p);
    if (p != s.size()) throw ParseError("unexpected text after '1'", offset + p);
    return Monomial::one(ring.arity());
  }
  Monomial m = Monomial::one(ring.arity());
  bool expect_factor = true;
  while (p < s.size()) {
    detail::skip_ws(s, p);
    if (p >= s.size()) break;
    if (!expect_factor) {
      if (s[p] != '*')
        throw ParseError(std::string("expected '*' before '") + s[p] + "'",
                         offset + p);
      ++p;
      detail::skip_ws(s, p);
    }
    std::size_t start = p;
    while (p < s.size() && detail::name_char(s[p])) ++p;
    if (p == start) throw ParseError("expected variable name", offset + p);
    std::string name = s.substr(start, p - start);
    int vi = ring.var_index(name);
    if (vi < 0) throw ParseError("unknown variable '" + name + "'", offset + start);
    long long e = 1;
    detail::skip_ws(s, p);
    if (p < s.size() && s[p] == '^') {
      ++p;
      detail::skip_ws(s, p);
      std::size_t dstart = p;
      while (p < s.size() && s[p] >= '0' && s[p] <= '9') ++p;
      if (p == dstart) throw ParseError("expected exponent after '^'", offset + p);
      e = std::stoll(s.substr(dstart, p - dstart));
    }
    Monomial f = Monomial::variable(ring.arity(), static_cast<std::size_t>(vi));
    m = m * f.pow(e);
    expect_factor = false;
  }
  if (expect_factor) throw ParseError("empty monomial", offset);
  return m;
}

/// Parses a comma/space separated list of variable names into a ring.
inline PolyRing parse_ring(const std::string& text, long long characteristic = 0) {
  std::vector<std::string> names;
  std::size_t p = 0;
  while (p < text.size()) {
    detail::skip_ws(text, p);
    if (p >= text.size()) break;
    if (text[p] == ',') {
      ++p;
      continue;
    }
    std::size_t start = p;
    while (p < text.size() && detail::name_char(text[p])) ++p;
    if (p == start) throw ParseError("expected variable name", p);
    names.push_back(text.substr(start, p - start));
  }
  if (names.empty()) throw ParseError("empty ring declaration", 0);
  return PolyRing(std::move(names), characteristic);
}

}  // namespace mixsum

#endif  // MIXSUM_CORE_HPP
