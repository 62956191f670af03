#include "grograde/intlat.hpp"

#include <algorithm>
#include <cstdlib>

#include "grograde/error.hpp"
#include "grograde/fp.hpp"
#include "grograde/util.hpp"

namespace grograde {

// ---------------------------------------------------------------- util

int resolve_threads(int flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("GROGRADE_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 1;
}

void parallel_for(size_t n, int threads,
                  const std::function<void(size_t)>& fn) {
  if (threads <= 1 || n < 2) {
    for (size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  size_t w = std::min<size_t>((size_t)threads, n);
  std::vector<std::thread> pool;
  pool.reserve(w);
  for (size_t t = 0; t < w; ++t) {
    pool.emplace_back([&, t]() {
      for (size_t i = t; i < n; i += w) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

std::string fnv1a_hex(const std::string& bytes) {
  u64 h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = hex[h & 0xf];
    h >>= 4;
  }
  return out;
}

// ---------------------------------------------------------------- fp

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

u32 Fp::pw(u32 a, u64 e) const {
  u32 r = 1 % p, b = a % p;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

u32 Fp::inv(u32 a) const {
  check(a % p != 0, "DivisionByZero", "inverse of 0 mod p");
  return pw(a, p - 2);
}

void Fp::axpy(Vec& y, u32 c, const Vec& x) const {
  for (size_t i = 0; i < y.size(); ++i) y[i] = add(y[i], mul(c, x[i]));
}

Vec Fp::scaled(const Vec& x, u32 c) const {
  Vec r(x.size());
  for (size_t i = 0; i < x.size(); ++i) r[i] = mul(c, x[i]);
  return r;
}

Vec Fp::plus(const Vec& a, const Vec& b) const {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = add(a[i], b[i]);
  return r;
}

bool Fp::is_zero(const Vec& x) const {
  for (u32 v : x)
    if (v % p) return false;
  return true;
}

Vec RowSpace::reduce(Vec v) const {
  check(v.size() == width_, "DimensionMismatch", "rowspace reduce width");
  for (size_t r = 0; r < rows_.size(); ++r) {
    u32 c = v[pivots_[r]];
    if (c) {
      for (size_t j = 0; j < width_; ++j)
        v[j] = f_.sub(v[j], f_.mul(c, rows_[r][j]));
    }
  }
  return v;
}

bool RowSpace::insert(Vec v) {
  v = reduce(std::move(v));
  size_t piv = width_;
  for (size_t j = 0; j < width_; ++j)
    if (v[j] % f_.p) {
      piv = j;
      break;
    }
  if (piv == width_) return false;
  u32 s = f_.inv(v[piv]);
  for (auto& x : v) x = f_.mul(x, s);
  // back-substitute into existing rows to keep reduced echelon form
  for (size_t r = 0; r < rows_.size(); ++r) {
    u32 c = rows_[r][piv];
    if (c)
      for (size_t j = 0; j < width_; ++j)
        rows_[r][j] = f_.sub(rows_[r][j], f_.mul(c, v[j]));
  }
  size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(v));
  pivots_.insert(pivots_.begin() + pos, piv);
  return true;
}

Vec RowSpace::coords(const Vec& v) const {
  check(v.size() == width_, "DimensionMismatch", "rowspace coords width");
  Vec rem = v, out(rows_.size(), 0);
  for (size_t r = 0; r < rows_.size(); ++r) {
    u32 c = rem[pivots_[r]];
    out[r] = c;
    if (c)
      for (size_t j = 0; j < width_; ++j)
        rem[j] = f_.sub(rem[j], f_.mul(c, rows_[r][j]));
  }
  check(f_.is_zero(rem), "NotInSpan", "vector not in row space");
  return out;
}

LinSolve solve_linear(const Fp& f, std::vector<Vec> rows, Vec rhs) {
  check(rows.size() == rhs.size(), "DimensionMismatch", "solve_linear shape");
  size_t m = rows.size(), n = m ? rows[0].size() : 0;
  for (auto& r : rows) check(r.size() == n, "DimensionMismatch", "ragged rows");
  std::vector<size_t> pivcol;
  size_t row = 0;
  for (size_t col = 0; col < n && row < m; ++col) {
    size_t sel = m;
    for (size_t i = row; i < m; ++i)
      if (rows[i][col] % f.p) {
        sel = i;
        break;
      }
    if (sel == m) continue;
    std::swap(rows[sel], rows[row]);
    std::swap(rhs[sel], rhs[row]);
    u32 s = f.inv(rows[row][col]);
    for (auto& x : rows[row]) x = f.mul(x, s);
    rhs[row] = f.mul(rhs[row], s);
    for (size_t i = 0; i < m; ++i) {
      if (i == row) continue;
      u32 c = rows[i][col];
      if (!c) continue;
      for (size_t j = col; j < n; ++j)
        rows[i][j] = f.sub(rows[i][j], f.mul(c, rows[row][j]));
      rhs[i] = f.sub(rhs[i], f.mul(c, rhs[row]));
    }
    pivcol.push_back(col);
    ++row;
  }
  LinSolve out;
  for (size_t i = row; i < m; ++i)
    if (rhs[i] % f.p) return out;  // inconsistent
  out.ok = true;
  out.nullity = n - pivcol.size();
  out.sol.assign(n, 0);
  for (size_t r = 0; r < pivcol.size(); ++r) out.sol[pivcol[r]] = rhs[r];
  return out;
}

std::vector<Vec> nullspace(const Fp& f, std::vector<Vec> rows, size_t width) {
  size_t m = rows.size(), n = width;
  for (auto& r : rows) check(r.size() == n, "DimensionMismatch", "ragged rows");
  std::vector<size_t> pivcol;
  size_t row = 0;
  for (size_t col = 0; col < n && row < m; ++col) {
    size_t sel = m;
    for (size_t i = row; i < m; ++i)
      if (rows[i][col] % f.p) {
        sel = i;
        break;
      }
    if (sel == m) continue;
    std::swap(rows[sel], rows[row]);
    u32 s = f.inv(rows[row][col]);
    for (auto& x : rows[row]) x = f.mul(x, s);
    for (size_t i = 0; i < m; ++i) {
      if (i == row) continue;
      u32 c = rows[i][col];
      if (!c) continue;
      for (size_t j = col; j < n; ++j)
        rows[i][j] = f.sub(rows[i][j], f.mul(c, rows[row][j]));
    }
    pivcol.push_back(col);
    ++row;
  }
  std::vector<bool> is_piv(n, false);
  for (size_t c : pivcol) is_piv[c] = true;
  std::vector<Vec> basis;
  for (size_t c = 0; c < n; ++c) {
    if (is_piv[c]) continue;
    Vec v(n, 0);
    v[c] = 1;
    for (size_t r = 0; r < pivcol.size(); ++r) v[pivcol[r]] = f.neg(rows[r][c]);
    basis.push_back(v);
  }
  return basis;
}

// ---------------------------------------------------------------- intlat

IMat imat_identity(size_t n) {
  IMat a(n, std::vector<i64>(n, 0));
  for (size_t i = 0; i < n; ++i) a[i][i] = 1;
  return a;
}

static i64 checked_mul(i64 a, i64 b) {
  __int128 r = (__int128)a * b;
  check(r <= INT64_MAX && r >= INT64_MIN, "Overflow", "integer overflow");
  return (i64)r;
}

static i64 checked_add(i64 a, i64 b) {
  __int128 r = (__int128)a + b;
  check(r <= INT64_MAX && r >= INT64_MIN, "Overflow", "integer overflow");
  return (i64)r;
}

IMat imat_mul(const IMat& A, const IMat& B) {
  size_t m = A.size(), k = m ? A[0].size() : 0, n = B.empty() ? 0 : B[0].size();
  check(B.size() == k, "DimensionMismatch", "imat_mul shape");
  IMat C(m, std::vector<i64>(n, 0));
  for (size_t i = 0; i < m; ++i)
    for (size_t t = 0; t < k; ++t) {
      if (A[i][t] == 0) continue;
      for (size_t j = 0; j < n; ++j)
        C[i][j] = checked_add(C[i][j], checked_mul(A[i][t], B[t][j]));
    }
  return C;
}

namespace {

struct SnfWork {
  IMat D, P, Pinv, Q, Qinv;
  size_t m, n;

  void row_swap(size_t a, size_t b) {
    std::swap(D[a], D[b]);
    std::swap(P[a], P[b]);
    for (size_t i = 0; i < m; ++i) std::swap(Pinv[i][a], Pinv[i][b]);
  }
  void col_swap(size_t a, size_t b) {
    for (size_t i = 0; i < m; ++i) std::swap(D[i][a], D[i][b]);
    for (size_t i = 0; i < n; ++i) std::swap(Q[i][a], Q[i][b]);
    std::swap(Qinv[a], Qinv[b]);
  }
  // row a += c * row b
  void row_add(size_t a, i64 c, size_t b) {
    for (size_t j = 0; j < n; ++j)
      D[a][j] = checked_add(D[a][j], checked_mul(c, D[b][j]));
    for (size_t j = 0; j < m; ++j)
      P[a][j] = checked_add(P[a][j], checked_mul(c, P[b][j]));
    for (size_t i = 0; i < m; ++i)
      Pinv[i][b] = checked_add(Pinv[i][b], checked_mul(-c, Pinv[i][a]));
  }
  // col a += c * col b
  void col_add(size_t a, i64 c, size_t b) {
    for (size_t i = 0; i < m; ++i)
      D[i][a] = checked_add(D[i][a], checked_mul(c, D[i][b]));
    for (size_t i = 0; i < n; ++i)
      Q[i][a] = checked_add(Q[i][a], checked_mul(c, Q[i][b]));
    for (size_t j = 0; j < n; ++j)
      Qinv[b][j] = checked_add(Qinv[b][j], checked_mul(-c, Qinv[a][j]));
  }
  void row_negate(size_t a) {
    for (auto& x : D[a]) x = -x;
    for (auto& x : P[a]) x = -x;
    for (size_t i = 0; i < m; ++i) Pinv[i][a] = -Pinv[i][a];
  }
};

}  // namespace

Snf smith_normal_form(IMat A) {
  size_t m = A.size(), n = m ? A[0].size() : 0;
  for (auto& r : A) check(r.size() == n, "DimensionMismatch", "ragged matrix");
  SnfWork w{std::move(A), imat_identity(m), imat_identity(m),
            imat_identity(n), imat_identity(n), m, n};
  size_t t = std::min(m, n);
  for (size_t k = 0; k < t; ++k) {
    for (;;) {
      // locate a nonzero pivot of minimal absolute value in the remaining block
      size_t bi = m, bj = n;
      i64 best = 0;
      for (size_t i = k; i < m; ++i)
        for (size_t j = k; j < n; ++j) {
          i64 v = w.D[i][j] < 0 ? -w.D[i][j] : w.D[i][j];
          if (v != 0 && (best == 0 || v < best)) {
            best = v;
            bi = i;
            bj = j;
          }
        }
      if (best == 0) goto done;  // block is zero; remaining diag entries are 0
      if (bi != k) w.row_swap(bi, k);
      if (bj != k) w.col_swap(bj, k);
      if (w.D[k][k] < 0) w.row_negate(k);
      bool clean = true;
      for (size_t i = k + 1; i < m; ++i) {
        i64 q = w.D[i][k] / w.D[k][k];
        if (q) w.row_add(i, -q, k);
        if (w.D[i][k] != 0) clean = false;
      }
      for (size_t j = k + 1; j < n; ++j) {
        i64 q = w.D[k][j] / w.D[k][k];
        if (q) w.col_add(j, -q, k);
        if (w.D[k][j] != 0) clean = false;
      }
      if (!clean) continue;
      // divisibility: fold any entry not divisible by the pivot into row k
      bool fixed = false;
      for (size_t i = k + 1; i < m && !fixed; ++i)
        for (size_t j = k + 1; j < n && !fixed; ++j)
          if (w.D[i][j] % w.D[k][k] != 0) {
            w.row_add(k, 1, i);
            fixed = true;
          }
      if (!fixed) break;
    }
  }
done:
  Snf out;
  out.diag.assign(t, 0);
  for (size_t i = 0; i < t; ++i) out.diag[i] = w.D[i][i];
  out.D = std::move(w.D);
  out.P = std::move(w.P);
  out.Pinv = std::move(w.Pinv);
  out.Q = std::move(w.Q);
  out.Qinv = std::move(w.Qinv);
  return out;
}

IMat integer_kernel(const IMat& A) {
  size_t m = A.size(), n = m ? A[0].size() : 0;
  Snf s = smith_normal_form(A);
  std::vector<size_t> free_cols;
  for (size_t j = 0; j < n; ++j)
    if (j >= s.diag.size() || s.diag[j] == 0) free_cols.push_back(j);
  IMat K(n, std::vector<i64>(free_cols.size(), 0));
  for (size_t c = 0; c < free_cols.size(); ++c)
    for (size_t i = 0; i < n; ++i) K[i][c] = s.Q[i][free_cols[c]];
  return K;
}

std::optional<std::vector<i64>> integer_solve(const IMat& A,
                                              const std::vector<i64>& b) {
  size_t m = A.size(), n = m ? A[0].size() : 0;
  check(b.size() == m, "DimensionMismatch", "integer_solve shape");
  Snf s = smith_normal_form(A);
  // A x = b  <=>  D y = P b with x = Q y
  std::vector<i64> pb(m, 0);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j)
      pb[i] = checked_add(pb[i], checked_mul(s.P[i][j], b[j]));
  std::vector<i64> y(n, 0);
  for (size_t i = 0; i < m; ++i) {
    i64 d = i < s.diag.size() ? s.diag[i] : 0;
    if (d == 0) {
      if (pb[i] != 0) return std::nullopt;
    } else {
      if (pb[i] % d != 0) return std::nullopt;
      if (i < n) y[i] = pb[i] / d;
    }
  }
  std::vector<i64> x(n, 0);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      x[i] = checked_add(x[i], checked_mul(s.Q[i][j], y[j]));
  return x;
}

IMat lattice_column_basis(const IMat& G) {
  size_t n = G.size();
  // SNF of G: columns of P^{-1} D' generate the same lattice; keep nonzeros.
  Snf s = smith_normal_form(G);
  // lattice(G) = lattice(P^{-1} D) since Q only mixes columns unimodularly
  IMat PD = imat_mul(s.Pinv, s.D);
  IMat basis;
  size_t rank = 0;
  for (i64 d : s.diag)
    if (d != 0) ++rank;
  check(rank == n, "RankDeficient", "lattice is not full rank");
  basis.assign(n, std::vector<i64>(rank, 0));
  for (size_t c = 0; c < rank; ++c)
    for (size_t i = 0; i < n; ++i) basis[i][c] = PD[i][c];
  return basis;
}

LatticeQuotient lattice_quotient(const IMat& K, const IMat& L) {
  size_t n = K.size();
  check(!K.empty() && K[0].size() == n, "DimensionMismatch",
        "K must be square full rank");
  check(L.size() == n, "DimensionMismatch", "L row count");
  // write each column of L in the basis K: solve K c = l
  size_t nl = L[0].size();
  IMat C(n, std::vector<i64>(nl, 0));
  for (size_t c = 0; c < nl; ++c) {
    std::vector<i64> l(n);
    for (size_t i = 0; i < n; ++i) l[i] = L[i][c];
    auto sol = integer_solve(K, l);
    check(sol.has_value(), "NotSublattice", "L is not contained in K");
    for (size_t i = 0; i < n; ++i) C[i][c] = (*sol)[i];
  }
  Snf s = smith_normal_form(C);
  LatticeQuotient out;
  size_t rank = 0;
  for (size_t i = 0; i < s.diag.size(); ++i)
    if (s.diag[i] != 0) ++rank;
  check(rank == n, "NotFiniteQuotient", "quotient is infinite");
  for (size_t i = 0; i < n; ++i) {
    i64 d = s.diag[i];
    out.order = checked_mul(out.order, d);
    if (d > 1) {
      // generator of factor i: K * Pinv e_i
      std::vector<i64> g(n, 0);
      for (size_t r = 0; r < n; ++r)
        for (size_t j = 0; j < n; ++j)
          g[r] = checked_add(g[r], checked_mul(K[r][j], s.Pinv[j][i]));
      out.orders.push_back(d);
      if (out.gens.empty()) out.gens.assign(n, {});
      for (size_t r = 0; r < n; ++r) out.gens[r].push_back(g[r]);
    }
  }
  if (out.gens.empty()) out.gens.assign(n, {});
  return out;
}

AbelianDecomp abelian_decompose(const std::vector<std::vector<int>>& table,
                                int id) {
  size_t n = table.size();
  check(n > 0, "EmptyGroup", "empty multiplication table");
  // Present the group on one generator per element: relations
  // x_i + x_j - x_{ij} = 0 (i <= j suffices for abelian tables), x_id = 0.
  // The relation lattice is the row space; decompose Z^n by it.
  IMat rel;
  {
    std::vector<i64> r(n, 0);
    r[id] = 1;
    rel.push_back(r);
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i; j < n; ++j) {
      std::vector<i64> r(n, 0);
      r[i] += 1;
      r[j] += 1;
      r[(size_t)table[i][j]] -= 1;
      bool nz = false;
      for (i64 v : r)
        if (v) nz = true;
      if (nz) rel.push_back(r);
    }
  // SNF of rel^T: lattice = colspace(rel^T); in coordinates w = P v the
  // lattice becomes the span of d_j e_j.
  IMat relT(n, std::vector<i64>(rel.size(), 0));
  for (size_t i = 0; i < rel.size(); ++i)
    for (size_t j = 0; j < n; ++j) relT[j][i] = rel[i][j];
  Snf s = smith_normal_form(relT);
  AbelianDecomp out;
  std::vector<size_t> keep;
  for (size_t i = 0; i < n; ++i) {
    i64 d = i < s.diag.size() ? s.diag[i] : 0;
    check(d != 0, "NotFiniteQuotient", "presentation has infinite quotient");
    if (d > 1) {
      keep.push_back(i);
      out.orders.push_back(d);
    }
  }
  out.log.assign(n, std::vector<i64>(keep.size(), 0));
  for (size_t e = 0; e < n; ++e)
    for (size_t t = 0; t < keep.size(); ++t) {
      i64 v = s.P[keep[t]][e] % out.orders[t];
      if (v < 0) v += out.orders[t];
      out.log[e][t] = v;
    }
  size_t claimed = 1;
  for (i64 d : out.orders) claimed *= (size_t)d;
  check(claimed == n, "BadPresentation",
        "table group order mismatch with decomposition");
  for (size_t e = 0; e < n; ++e) {
    auto ins = out.exp_table.emplace(out.log[e], (int)e);
    check(ins.second, "BadPresentation", "log map not injective");
  }
  return out;
}

int AbelianDecomp::exp(std::vector<i64> coords) const {
  check(coords.size() == orders.size(), "DimensionMismatch", "exp coords");
  for (size_t i = 0; i < coords.size(); ++i) {
    coords[i] %= orders[i];
    if (coords[i] < 0) coords[i] += orders[i];
  }
  auto it = exp_table.find(coords);
  check(it != exp_table.end(), "BadPresentation", "exp lookup failed");
  return it->second;
}

size_t AbelianDecomp::group_order() const {
  size_t r = 1;
  for (i64 d : orders) r *= (size_t)d;
  return r;
}

std::vector<i64> elementary_divisors(const std::vector<i64>& invariant) {
  std::vector<i64> out;
  for (i64 d : invariant) {
    for (i64 q = 2; q * q <= d; ++q) {
      if (d % q) continue;
      i64 pk = 1;
      while (d % q == 0) {
        pk *= q;
        d /= q;
      }
      out.push_back(pk);
    }
    if (d > 1) out.push_back(d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace grograde
