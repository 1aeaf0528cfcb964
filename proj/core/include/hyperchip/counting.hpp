#pragma once

#include <gmpxx.h>

#include <vector>

#include "hyperchip/hypergraph.hpp"

namespace hyperchip {

/// Sorted-coordinate test: the weakly increasing rearrangement of c satisfies
/// c_(k) < u_k for every k.
bool is_u_parking(const Configuration& c, const std::vector<int>& u);

/// The vector attached to the complete d-uniform hypergraph on n+1 vertices:
/// u_k = C(n, d-1) - C(n-k, d-1) for k <= n+1-d, and C(n, d-1) afterwards.
std::vector<int> u_vector_complete(int n, int d);

/// Number of n-tuples that u-park, by the determinant formula
/// n! * det[ u_i^(j-i+1) / (j-i+1)! ].
mpz_class steck_count(const std::vector<int>& u);

/// The maximal u-parking functions: all distinct permutations of u - 1.
std::vector<Configuration> maximal_u_parking(const std::vector<int>& u);

/// Acyclic orientations of the complete bipartite graph K_{m,n}, via
/// sum_j (j-1)!^2 S(m+1, j) S(n+1, j) with Stirling numbers of the second kind.
mpz_class acyclic_count_complete_bipartite(int m, int n);

mpz_class stirling2(int n, int k);

}  // namespace hyperchip
