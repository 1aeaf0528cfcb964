#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hyperchip {

/// Malformed or inconsistent input (bad JSON, duplicate labels, disconnected, ...).
class invalid_input : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An operation was asked something outside its domain (unknown vertex, v not in T, ...).
class domain_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An exhaustive enumeration exceeded its size guard.
class size_guard_error : public std::runtime_error {
public:
    size_guard_error(const std::string& what, long long guard)
        : std::runtime_error(what + " (size guard: " + std::to_string(guard) +
                             ", override with --max-size)"),
          guard(guard) {}
    long long guard;
};

/// Chip counts indexed by nonsink vertices in input order.
using Configuration = std::vector<int>;

/// Subset of the nonsink vertices, as a bitmask over nonsink indices 0..n-1.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    static VertexSet single(int i) { return VertexSet(std::uint64_t{1} << i); }

    bool contains(int i) const { return (bits_ >> i) & 1; }
    VertexSet with(int i) const { return VertexSet(bits_ | (std::uint64_t{1} << i)); }
    bool empty() const { return bits_ == 0; }
    int count() const;
    std::uint64_t bits() const { return bits_; }
    bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
    std::vector<int> members() const;

    bool operator==(const VertexSet&) const = default;

private:
    std::uint64_t bits_ = 0;
};

/// Bipartite incidence graph B(H): one node per hyperedge occurrence on the
/// left, one per vertex on the right, adjacency = membership.
struct BipartiteIncidence {
    int edge_nodes = 0;    // |E|
    int vertex_nodes = 0;  // |V|
    std::vector<std::vector<int>> adj;           // node id -> neighbor ids
    std::vector<std::pair<int, int>> incidences; // (edge index, vertex index), input order
    int sink_node = -1;

    int node_count() const { return edge_nodes + vertex_nodes; }
    int edge_node(int e) const { return e; }
    int vertex_node(int v) const { return edge_nodes + v; }
    bool is_edge_node(int id) const { return id < edge_nodes; }
};

/// Connected hypergraph with a distinguished sink vertex q. Immutable after
/// construction; nonsink vertices carry implicit indices 0..n-1 in input
/// order, and all configurations and matrices index in that order.
class RootedHypergraph {
public:
    RootedHypergraph(std::vector<std::string> vertex_labels,
                     std::vector<std::vector<std::string>> edge_labels,
                     const std::string& sink_label);

    int vertex_count() const { return static_cast<int>(labels_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int nonsink_count() const { return static_cast<int>(nonsink_.size()); }

    const std::vector<std::string>& vertex_labels() const { return labels_; }
    const std::string& label(int v) const { return labels_[v]; }
    /// Members of edge occurrence e, as global vertex indices in input order.
    const std::vector<int>& edge(int e) const { return edges_[e]; }
    const std::vector<std::vector<int>>& edges() const { return edges_; }
    int sink() const { return sink_; }

    int vertex_index(const std::string& label) const;  // throws on unknown label
    /// Nonsink vertices as global indices, in input order.
    const std::vector<int>& nonsink_vertices() const { return nonsink_; }
    /// Nonsink index of a global vertex index, or -1 for the sink.
    int nonsink_index(int v) const { return nonsink_index_[v]; }

    bool edge_contains(int e, int v) const;
    /// True iff every member of edge e is a nonsink vertex in T.
    bool edge_within(int e, VertexSet T) const;

    int degree(int v) const;  // v = global vertex index
    /// deg_T(i): edge occurrences containing i and not contained in T.
    /// i is a nonsink index and must lie in T.
    int degree_in_set(VertexSet T, int i) const;

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<int>> edges_;
    int sink_;
    std::vector<int> nonsink_;
    std::vector<int> nonsink_index_;
};

RootedHypergraph parse_hypergraph(const std::string& json_text);
RootedHypergraph parse_hypergraph_file(const std::string& path);
/// Canonical serialization: preserves input order so round-trips are bit-stable.
std::string serialize_hypergraph(const RootedHypergraph& h);

BipartiteIncidence bipartite_incidence(const RootedHypergraph& h);

/// All d-subsets of {1,...,vertices} as hyperedges, sink = last vertex.
RootedHypergraph complete_hypergraph(int vertices, int d);

}  // namespace hyperchip
