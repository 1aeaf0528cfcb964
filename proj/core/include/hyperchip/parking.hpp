#pragma once

#include <vector>

#include "hyperchip/hypergraph.hpp"

namespace hyperchip {

/// One chosen vertex per hyperedge occurrence.
struct Orientation {
    std::vector<int> chosen;  // edge index -> global vertex index, a member of that edge

    bool operator==(const Orientation&) const = default;
};

/// Subset test straight from the definition: exponential in n, intended as oracle.
bool is_parking_bruteforce(const RootedHypergraph& h, const Configuration& c);

/// All nonempty T with deg_T(i) <= c_i for every i in T. Empty iff c is a parking function.
std::vector<VertexSet> bounded_sets(const RootedHypergraph& h, const Configuration& c);

/// Dhar marking on B(H) with zeros lifted onto edge-nodes; polynomial time.
bool is_parking_burn(const RootedHypergraph& h, const Configuration& c);

/// All H-parking functions, lexicographically sorted. Computed as the downward
/// closure of the maximal ones.
std::vector<Configuration> enumerate_parking(const RootedHypergraph& h);

/// Orientations whose induced directed B(H) is acyclic with q the only source.
std::vector<Orientation> enumerate_acyclic_orientations(const RootedHypergraph& h);

/// c_i = indegree of vertex-node i in the induced directed B(H), minus 1.
/// Throws domain_error if some nonsink vertex has indegree 0.
Configuration orientation_to_config(const RootedHypergraph& h, const Orientation& o);

/// Maximal H-parking functions, sorted; images of the acyclic orientations.
std::vector<Configuration> maximal_parking(const RootedHypergraph& h);

}  // namespace hyperchip
