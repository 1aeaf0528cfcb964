#pragma once

#include <map>
#include <optional>
#include <vector>

#include "hyperchip/hypergraph.hpp"

namespace hyperchip {

/// Per-edge receiving vertex for one fired vertex. Keys are exactly the edge
/// occurrences incident to the firer; targets are members of their edge and
/// never the firer itself.
struct FiringChoice {
    int vertex;                  // global vertex index of the firer
    std::map<int, int> targets;  // edge index -> global vertex index
};

/// Firing choices for every vertex of a set T.
struct SetFiringChoice {
    std::map<int, FiringChoice> by_vertex;  // key: nonsink index
};

/// Outcome of a firing; entries may be negative so oracles can inspect
/// failing witnesses.
struct FireResult {
    std::vector<int> config;  // nonsink order, possibly negative
    bool nonnegative;
};

FireResult fire_vertex(const RootedHypergraph& h, const Configuration& c,
                       const FiringChoice& choice);

/// True iff for every edge occurrence contained in T, the targets restricted
/// to that edge form a fixed-point-free permutation of its members.
bool is_cancellative(const RootedHypergraph& h, VertexSet T, const SetFiringChoice& choices);

/// Simultaneous firing of all vertices of T; rejects non-cancellative choices.
FireResult fire_set(const RootedHypergraph& h, const Configuration& c, VertexSet T,
                    const SetFiringChoice& choices);

/// Degree test: deg_T(i) <= c_i for all i in T.
bool ready_to_fire(const RootedHypergraph& h, const Configuration& c, VertexSet T);

/// Exhaustive check over every cancellative firing choice for T. If a choice
/// yields a negative configuration, the witness is stored when requested.
bool ready_to_fire_oracle(const RootedHypergraph& h, const Configuration& c, VertexSet T,
                          SetFiringChoice* witness = nullptr,
                          long long max_choices = 2'000'000);

/// No nonempty sink-free set is ready to fire.
bool is_superstable(const RootedHypergraph& h, const Configuration& c);

}  // namespace hyperchip
