#pragma once
#include <string>
#include <vector>

#include "grograde/algebra.hpp"
#include "grograde/groupoid.hpp"

namespace grograde {

// Basis monomial alpha beta* of a Leavitt path algebra. Both paths are
// given as edge index sequences, end at the same sink, and may be trivial.
struct PathMono {
  int src_a, src_b;              // source vertices of alpha and beta
  int sink;                      // common range
  std::vector<int> alpha, beta;  // edge indices
};

// Leavitt path algebra of a finite acyclic graph over Z_p, on the basis of
// sink-ended monomials alpha beta*, graded by the pair groupoids of the
// weakly connected components with deg(alpha beta*) = (s(alpha), s(beta)).
class LeavittAlgebra {
public:
  static LeavittAlgebra make(FinGraph graph, u32 p);  // fails("CyclicGraph")

  const FinGraph& graph() const { return graph_; }
  const GradedAlgebra& graded() const { return graded_; }
  int dim() const { return graded_.alg().dim(); }
  const PathMono& mono(int i) const { return monos_[(size_t)i]; }
  std::string mono_name(int i) const;

  Vec vertex_vec(int v) const;  // sum of alpha alpha* over paths from v
  Vec edge_vec(int e) const;
  Vec ghost_vec(int e) const;   // edge_vec(e) starred
  Vec star(const Vec& x) const;

  // Local unit for the degree (u, v): the vertex u when it already lies in
  // span(S_g S_{g^-1}), otherwise the sum of alpha alpha* over the paths
  // from u to a sink also reachable from v. Arguments are vertex indices.
  Vec epsilon(int u, int v) const;
  std::vector<Vec> epsilons() const;  // per groupoid morphism index

private:
  FinGraph graph_;
  GradedAlgebra graded_;
  std::vector<PathMono> monos_;
  std::vector<int> star_perm_;                  // index of (beta, alpha)
  std::vector<std::vector<int>> paths_from_;    // per vertex, the diagonal
                                                // monomials alpha alpha*
  std::vector<std::vector<char>> reach_;        // vertex x vertex
  std::vector<Vec> edge_vecs_;
};

}  // namespace grograde
