#pragma once
#include <cstdint>
#include <vector>

#include "grograde/error.hpp"

namespace grograde {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using Vec = std::vector<u32>;  // coordinate vector mod p

bool is_prime(u64 n);

// Arithmetic in Z_p, p prime. Values are kept in [0, p).
struct Fp {
  u32 p = 2;
  u32 norm(long long a) const {
    long long r = a % (long long)p;
    return (u32)(r < 0 ? r + p : r);
  }
  u32 add(u32 a, u32 b) const { u32 s = a + b; return s >= p ? s - p : s; }
  u32 sub(u32 a, u32 b) const { return a >= b ? a - b : a + p - b; }
  u32 neg(u32 a) const { return a ? p - a : 0; }
  u32 mul(u32 a, u32 b) const { return (u32)((u64)a * b % p); }
  u32 pw(u32 a, u64 e) const;
  u32 inv(u32 a) const;  // fails("DivisionByZero") on 0

  void axpy(Vec& y, u32 c, const Vec& x) const;  // y += c*x
  Vec scaled(const Vec& x, u32 c) const;
  Vec plus(const Vec& a, const Vec& b) const;
  bool is_zero(const Vec& x) const;
};

// Incremental subspace of (Z_p)^width kept in reduced row echelon form, so
// basis() is canonical for the subspace no matter the insertion order.
class RowSpace {
public:
  RowSpace(Fp f, size_t width) : f_(f), width_(width) {}
  bool insert(Vec v);            // true if the dimension grew
  bool contains(const Vec& v) const { return f_.is_zero(reduce(v)); }
  Vec reduce(Vec v) const;       // residue after elimination against basis
  size_t dim() const { return rows_.size(); }
  size_t width() const { return width_; }
  const std::vector<Vec>& basis() const { return rows_; }
  // Coordinates of v w.r.t. basis(); fails("NotInSpan") if not contained.
  Vec coords(const Vec& v) const;

private:
  Fp f_;
  size_t width_;
  std::vector<Vec> rows_;         // pivots strictly increasing
  std::vector<size_t> pivots_;
};

// One solution of M t = r over Z_p (M given as rows). ok=false if
// inconsistent; nullity = dim of the solution space of M t = 0.
struct LinSolve {
  bool ok = false;
  Vec sol;
  size_t nullity = 0;
};
LinSolve solve_linear(const Fp& f, std::vector<Vec> rows, Vec rhs);

// Canonical basis of { t : M t = 0 } with M given as rows of length width.
std::vector<Vec> nullspace(const Fp& f, std::vector<Vec> rows, size_t width);

}  // namespace grograde
