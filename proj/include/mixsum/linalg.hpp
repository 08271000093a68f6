#ifndef MIXSUM_LINALG_HPP
#define MIXSUM_LINALG_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <vector>

#include "mixsum/core.hpp"

namespace mixsum {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Runtime coefficient field: exact rationals when characteristic 0,
/// otherwise the prime field embedded as canonical representatives 0..p-1.
class CoeffField {
 public:
  using Elem = Rational;

  explicit CoeffField(long long characteristic = 0) : p_(characteristic) {
    if (p_ != 0 && !is_prime(p_))
      throw DomainError("characteristic must be 0 or prime");
  }

  long long characteristic() const { return p_; }

  Elem from_int(long long v) const { return normalize(Rational(v)); }
  Elem zero() const { return Rational(0); }
  Elem one() const { return Rational(1); }

  Elem normalize(const Rational& x) const {
    if (p_ == 0) return x;
    BigInt num = boost::multiprecision::numerator(x) % p_;
    BigInt den = boost::multiprecision::denominator(x) % p_;
    if (num < 0) num += p_;
    if (den < 0) den += p_;
    if (den == 0) throw DomainError("denominator divisible by characteristic");
    long long n = num.convert_to<long long>();
    long long d = den.convert_to<long long>();
    return Rational(mulmod(n, invmod(d)));
  }

  Elem add(const Elem& a, const Elem& b) const { return normalize(a + b); }
  Elem sub(const Elem& a, const Elem& b) const { return normalize(a - b); }
  Elem mul(const Elem& a, const Elem& b) const { return normalize(a * b); }
  Elem neg(const Elem& a) const { return normalize(-a); }
  Elem inv(const Elem& a) const {
    if (a == 0) throw DomainError("inverse of zero");
    if (p_ == 0) return Rational(1) / a;
    long long v = boost::multiprecision::numerator(a).convert_to<long long>();
    return Rational(invmod(v));
  }
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
  bool is_zero(const Elem& a) const { return a == 0; }

 private:
  long long mulmod(long long a, long long b) const {
    return static_cast<long long>((__int128)a * b % p_);
  }
  long long invmod(long long a) const {
    long long t = 0, nt = 1, r = p_, nr = a % p_;
    if (nr < 0) nr += p_;
    while (nr != 0) {
      long long q = r / nr;
      std::swap(t -= q * nt, nt);
      std::swap(r -= q * nr, nr);
    }
    if (r != 1) throw DomainError("element not invertible mod p");
    return t < 0 ? t + p_ : t;
  }
  long long p_;
};

/// Fraction-free (Bareiss) elimination rank of an integer matrix; the rank
/// over the rationals.
inline std::size_t rank_bareiss(std::vector<std::vector<BigInt>> M) {
  std::size_t rows = M.size();
  if (rows == 0) return 0;
  std::size_t cols = M[0].size();
  BigInt prev(1);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && M[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(M[rank], M[pivot]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t k = c + 1; k < cols; ++k)
        M[r][k] = (M[rank][c] * M[r][k] - M[r][c] * M[rank][k]) / prev;
      M[r][c] = 0;
    }
    prev = M[rank][c];
    ++rank;
  }
  return rank;
}

/// Rank of a matrix with entries reduced mod p.
inline std::size_t rank_mod_p(std::vector<std::vector<long long>> M, long long p) {
  std::size_t rows = M.size();
  if (rows == 0) return 0;
  std::size_t cols = M[0].size();
  auto norm = [&](long long v) {
    v %= p;
    return v < 0 ? v + p : v;
  };
  auto inv = [&](long long a) {
    long long t = 0, nt = 1, r = p, nr = norm(a);
    while (nr != 0) {
      long long q = r / nr;
      std::swap(t -= q * nt, nt);
      std::swap(r -= q * nr, nr);
    }
    return t < 0 ? t + p : t;
  };
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && norm(M[pivot][c]) == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(M[rank], M[pivot]);
    long long pi = inv(M[rank][c]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      long long f = norm((__int128)norm(M[r][c]) * pi % p);
      if (f == 0) continue;
      for (std::size_t k = c; k < cols; ++k)
        M[r][k] = norm(M[r][k] - (__int128)f * norm(M[rank][k]) % p);
    }
    ++rank;
  }
  return rank;
}

/// Rank of an integer matrix over the field of the given characteristic.
inline std::size_t rank_over(const std::vector<std::vector<long long>>& M,
                             long long characteristic) {
  if (characteristic != 0) return rank_mod_p(M, characteristic);
  std::vector<std::vector<BigInt>> B(M.size());
  for (std::size_t r = 0; r < M.size(); ++r)
    B[r].assign(M[r].begin(), M[r].end());
  return rank_bareiss(std::move(B));
}

struct GaussResult {
  std::size_t rank = 0;
  std::optional<std::vector<Rational>> solution;  // set when a rhs was given
};

/// Row-reduces A (optionally augmented with rhs b) over the coefficient
/// field. Pivots are chosen in column order, first nonzero row; free
/// variables are set to zero, so solutions are deterministic.
inline GaussResult gauss(std::vector<std::vector<Rational>> A,
                         std::optional<std::vector<Rational>> b,
                         const CoeffField& F) {
  std::size_t rows = A.size();
  std::size_t cols = rows == 0 ? 0 : A[0].size();
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && F.is_zero(A[pivot][c])) ++pivot;
    if (pivot == rows) continue;
    std::swap(A[rank], A[pivot]);
    if (b) std::swap((*b)[rank], (*b)[pivot]);
    Rational pi = F.inv(A[rank][c]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || F.is_zero(A[r][c])) continue;
      Rational f = F.mul(A[r][c], pi);
      for (std::size_t k = c; k < cols; ++k)
        A[r][k] = F.sub(A[r][k], F.mul(f, A[rank][k]));
      if (b) (*b)[r] = F.sub((*b)[r], F.mul(f, (*b)[rank]));
    }
    pivot_col.push_back(c);
    ++rank;
  }
  GaussResult res;
  res.rank = rank;
  if (b) {
    for (std::size_t r = rank; r < rows; ++r)
      if (!F.is_zero((*b)[r])) return res;  // inconsistent: no solution field set
    std::vector<Rational> x(cols, F.zero());
    for (std::size_t r = 0; r < rank; ++r)
      x[pivot_col[r]] = F.div((*b)[r], A[r][pivot_col[r]]);
    res.solution = std::move(x);
  }
  return res;
}

inline std::size_t rank_rational(std::vector<std::vector<Rational>> A,
                                 const CoeffField& F) {
  return gauss(std::move(A), std::nullopt, F).rank;
}

/// Basis of the nullspace of A over the coefficient field, one vector per
/// free column of the reduced echelon form.
inline std::vector<std::vector<Rational>> nullspace(
    std::vector<std::vector<Rational>> A, const CoeffField& F) {
  std::size_t rows = A.size();
  std::size_t cols = rows == 0 ? 0 : A[0].size();
  std::vector<int> pivot_of_col(cols, -1);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && F.is_zero(A[pivot][c])) ++pivot;
    if (pivot == rows) continue;
    std::swap(A[rank], A[pivot]);
    Rational pi = F.inv(A[rank][c]);
    for (std::size_t k = c; k < cols; ++k) A[rank][k] = F.mul(A[rank][k], pi);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || F.is_zero(A[r][c])) continue;
      Rational f = A[r][c];
      for (std::size_t k = c; k < cols; ++k)
        A[r][k] = F.sub(A[r][k], F.mul(f, A[rank][k]));
    }
    pivot_of_col[c] = static_cast<int>(rank);
    ++rank;
  }
  std::vector<std::vector<Rational>> basis;
  for (std::size_t c = 0; c < cols; ++c) {
    if (pivot_of_col[c] >= 0) continue;
    std::vector<Rational> v(cols, F.zero());
    v[c] = F.one();
    for (std::size_t c2 = 0; c2 < cols; ++c2)
      if (pivot_of_col[c2] >= 0)
        v[c2] = F.neg(A[static_cast<std::size_t>(pivot_of_col[c2])][c]);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace mixsum

#endif  // MIXSUM_LINALG_HPP
