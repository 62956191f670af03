#pragma once
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace grograde {

using i64 = std::int64_t;
using IMat = std::vector<std::vector<i64>>;  // row-major

IMat imat_identity(size_t n);
IMat imat_mul(const IMat& A, const IMat& B);

// Smith normal form D = P * A * Q with P, Q unimodular, D diagonal,
// diag[0] | diag[1] | ..., all entries >= 0. Pinv and Qinv are maintained
// alongside so no matrix inversion is ever needed downstream.
struct Snf {
  IMat D, P, Pinv, Q, Qinv;
  std::vector<i64> diag;
};
Snf smith_normal_form(IMat A);

// Basis (as columns) of {x : A x = 0}.
IMat integer_kernel(const IMat& A);

// One integer solution of A x = b, if any.
std::optional<std::vector<i64>> integer_solve(const IMat& A,
                                              const std::vector<i64>& b);

// Full-rank column basis of the lattice generated by the columns of G.
// fails("RankDeficient") if the lattice has rank < rows(G).
IMat lattice_column_basis(const IMat& G);

// Cyclic structure of the quotient K / L of two full-rank lattices in Z^n,
// given by column bases with L contained in K. `orders` are the invariant
// factors > 1 (d1 | d2 | ...); `gens` holds one column of Z^n coordinates
// per factor, a lattice point of K generating that cyclic summand mod L.
struct LatticeQuotient {
  std::vector<i64> orders;
  IMat gens;  // n x orders.size()
  i64 order = 1;
};
LatticeQuotient lattice_quotient(const IMat& K, const IMat& L);

// Finite abelian group presented by a multiplication table.
// table[i][j] = index of the product, id = identity index.
// orders: invariant factors > 1; log: element -> coordinates (one per
// factor); exp: coordinates -> element. Both directions are total.
struct AbelianDecomp {
  std::vector<i64> orders;
  std::vector<std::vector<i64>> log;
  std::map<std::vector<i64>, int> exp_table;
  int exp(std::vector<i64> coords) const;
  size_t group_order() const;
};
AbelianDecomp abelian_decompose(const std::vector<std::vector<int>>& table,
                                int id);

// Invariant factors -> sorted elementary divisors (prime powers), e.g.
// [2, 6] -> [2, 2, 3]. The canonical public form for cyclic factor lists.
std::vector<i64> elementary_divisors(const std::vector<i64>& invariant);

}  // namespace grograde
