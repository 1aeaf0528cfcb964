#pragma once

#include <utility>
#include <vector>

#include "hyperchip/hypergraph.hpp"

namespace hyperchip {

/// Spanning tree of B(H), stored with derived parent/height maps toward the sink.
struct BTree {
    std::vector<std::pair<int, int>> edges;  // node id pairs, first < second
    std::vector<int> parent;                 // node id -> parent node id, -1 at the root
    std::vector<int> height;                 // node id -> distance to the root
};

/// Burning-equivalence class: the set of vertex-node -> edge-node tree arcs.
/// Every nonsink vertex of H appears in exactly one pair.
struct TreeClass {
    std::vector<std::pair<int, int>> lr;  // (nonsink index, edge index), sorted

    bool operator==(const TreeClass&) const = default;
    bool operator<(const TreeClass& o) const { return lr < o.lr; }
};

/// Total order on the nodes of B(H): beta[id] = rank, lower is smaller.
using Beta = std::vector<int>;

/// q first, then nonsink vertices in input order, then edge-nodes in input order.
Beta default_beta(const RootedHypergraph& h, const BipartiteIncidence& b);

/// Builds parent/height maps toward the sink; validates that the edges form a
/// spanning tree of b.
BTree make_tree(const BipartiteIncidence& b, std::vector<std::pair<int, int>> edges);

/// Every spanning tree exactly once, by deletion/contraction. Oracle-scale.
std::vector<BTree> all_spanning_trees(const BipartiteIncidence& b, int max_nodes = 14);

TreeClass tree_class_of(const RootedHypergraph& h, const BipartiteIncidence& b, const BTree& t);

/// Distinct burning-equivalence classes of all spanning trees of B(H), sorted.
std::vector<TreeClass> tree_classes(const RootedHypergraph& h, int max_nodes = 14);

/// Inverse-BCP construction on B(H) with c lifted (zeros on edge-nodes), using
/// breadth-first tree orders from beta. Also runs the batched variant and
/// checks both produce the same tree. Throws domain_error if c is not a
/// parking function (the burning stalls).
std::pair<BTree, TreeClass> parking_to_tree(const RootedHypergraph& h, const Configuration& c,
                                            const Beta& beta);

/// Forward map: values on every node of B(H) (0 at the sink), indexed by node id.
std::vector<int> tree_to_parking(const BipartiteIncidence& b, const BTree& t, const Beta& beta);

/// Restriction of a B(H) configuration to the nonsink vertex-nodes, in nonsink order.
Configuration restrict_to_vertices(const RootedHypergraph& h, const BipartiteIncidence& b,
                                   const std::vector<int>& full);

/// The layered representative of a class: edge-nodes attach breadth-first via
/// the beta-smallest available edge, vertex-nodes via their unique lr pair.
/// Its parking function is zero on all edge-nodes.
BTree class_canonical_tree(const RootedHypergraph& h, const TreeClass& k, const Beta& beta);

/// f(e) = max(deg_T(e) - 1, 0) per edge occurrence.
std::vector<int> hypertree_of(const BipartiteIncidence& b, const BTree& t);

}  // namespace hyperchip
