#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hyperchip/hypergraph.hpp"

namespace hyperchip {

/// Directed multigraph with a sink. Loops are forbidden.
struct Digraph {
    std::vector<std::string> labels;
    std::map<std::pair<int, int>, int> arcs;  // (from, to) -> multiplicity >= 1
    int sink = -1;

    int vertex_count() const { return static_cast<int>(labels.size()); }
    void add_arc(int u, int v, int mult = 1);
    int multiplicity(int u, int v) const;
    int outdeg(int v) const;
    int indeg(int v) const;
    /// Nonsink vertices in input order.
    std::vector<int> nonsink() const;
};

/// Row-major integer matrix.
using Matrix = std::vector<std::vector<long long>>;

/// Diagonal = outdegree, off-diagonal (i,j) = -multiplicity(i,j), indexed by
/// nonsink vertices in input order.
Matrix reduced_laplacian(const Digraph& d);

/// Exact determinant by fraction-free (Bareiss) elimination over big integers.
mpz_class laplacian_determinant(const Matrix& m);

/// All G-parking functions of d by box scan over [0, outdeg-1], sorted.
std::vector<Configuration> digraph_parking_enumerate(const Digraph& d,
                                                     long long max_box = 4'000'000);

/// Superstable test via Laplacian columns (cross-check path for Eulerian digraphs).
bool is_superstable_laplacian(const Digraph& d, const Configuration& c);

/// One cyclic order per hyperedge occurrence, stored rotated so the smallest
/// member comes first.
struct Cycling {
    std::vector<std::vector<int>> cycles;  // per edge occurrence, global vertex indices

    bool operator==(const Cycling&) const = default;
    bool operator<(const Cycling& o) const { return cycles < o.cycles; }
};

/// Sort each edge's members under the given total order, close into a cycle.
/// order = permutation of global vertex indices, smallest first.
Cycling cycling_from_order(const RootedHypergraph& h, const std::vector<int>& order);

/// One arc per consecutive pair per cycle; multiplicities accumulate.
Digraph digraph_from_cycling(const RootedHypergraph& h, const Cycling& c);

bool is_eulerian(const Digraph& d);

/// Distinct vertex-induced cyclings (deduplicated across the (n+1)! orders).
std::vector<Cycling> all_vertex_induced_cyclings(const RootedHypergraph& h,
                                                 long long max_orders = 500'000);

/// Union of digraph parking sets over all vertex-induced cyclings; equals the
/// H-parking set.
std::vector<Configuration> union_over_cyclings(const RootedHypergraph& h,
                                               long long max_orders = 500'000);

/// Greedy selection of cyclings whose parking sets already cover the union.
/// A valid cover, not proven minimal.
std::vector<Cycling> greedy_cycling_cover(const RootedHypergraph& h,
                                          long long max_orders = 500'000);

/// For star hypergraphs (q in every edge): the digraph on E(H) + V(H) with
/// arcs e -> q and v -> e for nonsink v in e. Throws on non-star input.
Digraph star_digraph(const RootedHypergraph& h);

}  // namespace hyperchip
