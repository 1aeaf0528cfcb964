#include "hyperchip/trees.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace hyperchip {

namespace {

// breadth-first tree order: height first, beta breaks ties
struct TreeOrderLess {
    const std::vector<int>& height;
    const Beta& beta;
    bool operator()(int a, int b) const {
        if (height[a] != height[b]) return height[a] < height[b];
        return beta[a] < beta[b];
    }
};

}  // namespace

Beta default_beta(const RootedHypergraph& h, const BipartiteIncidence& b) {
    Beta beta(b.node_count(), 0);
    int rank = 0;
    beta[b.sink_node] = rank++;
    for (int v : h.nonsink_vertices()) beta[b.vertex_node(v)] = rank++;
    for (int e = 0; e < b.edge_nodes; ++e) beta[b.edge_node(e)] = rank++;
    return beta;
}

BTree make_tree(const BipartiteIncidence& b, std::vector<std::pair<int, int>> edges) {
    int N = b.node_count();
    if (static_cast<int>(edges.size()) != N - 1)
        throw domain_error("spanning tree must have |V|-1 edges");
    for (auto& [u, v] : edges)
        if (u > v) std::swap(u, v);

    BTree t;
    t.edges = std::move(edges);
    t.parent.assign(N, -1);
    t.height.assign(N, -1);
    std::vector<std::vector<int>> adj(N);
    for (auto [u, v] : t.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<int> queue{b.sink_node};
    t.height[b.sink_node] = 0;
    for (std::size_t k = 0; k < queue.size(); ++k) {
        int u = queue[k];
        for (int w : adj[u]) {
            if (t.height[w] >= 0) continue;
            t.height[w] = t.height[u] + 1;
            t.parent[w] = u;
            queue.push_back(w);
        }
    }
    if (static_cast<int>(queue.size()) != N)
        throw domain_error("edge set does not span the incidence graph");
    return t;
}

namespace {

struct MultiEdge {
    int a, b, orig;
};

bool still_connected(const std::vector<MultiEdge>& edges, const std::vector<int>& nodes) {
    if (nodes.empty()) return true;
    std::vector<int> uf(nodes.size());
    std::iota(uf.begin(), uf.end(), 0);
    std::vector<int> idx(*std::max_element(nodes.begin(), nodes.end()) + 1, -1);
    for (std::size_t i = 0; i < nodes.size(); ++i) idx[nodes[i]] = static_cast<int>(i);
    auto find = [&](int x) {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
    };
    int parts = static_cast<int>(nodes.size());
    for (const auto& e : edges) {
        int ra = find(idx[e.a]), rb = find(idx[e.b]);
        if (ra != rb) {
            uf[ra] = rb;
            --parts;
        }
    }
    return parts == 1;
}

void enumerate_trees(std::vector<MultiEdge> edges, std::vector<int> nodes,
                     std::vector<int>& chosen, std::vector<std::vector<int>>& out) {
    if (nodes.size() == 1) {
        out.push_back(chosen);
        return;
    }
    if (edges.empty()) return;
    MultiEdge e = edges.front();

    // trees containing e: contract b into a
    {
        std::vector<MultiEdge> contracted;
        for (std::size_t i = 1; i < edges.size(); ++i) {
            MultiEdge f = edges[i];
            if (f.a == e.b) f.a = e.a;
            if (f.b == e.b) f.b = e.a;
            if (f.a != f.b) contracted.push_back(f);
        }
        std::vector<int> rest;
        for (int v : nodes)
            if (v != e.b) rest.push_back(v);
        chosen.push_back(e.orig);
        enumerate_trees(std::move(contracted), std::move(rest), chosen, out);
        chosen.pop_back();
    }

    // trees avoiding e: delete, prune if that disconnects
    std::vector<MultiEdge> deleted(edges.begin() + 1, edges.end());
    if (still_connected(deleted, nodes))
        enumerate_trees(std::move(deleted), std::move(nodes), chosen, out);
}

}  // namespace

std::vector<BTree> all_spanning_trees(const BipartiteIncidence& b, int max_nodes) {
    int N = b.node_count();
    if (N > max_nodes)
        throw size_guard_error("incidence graph too large for spanning-tree enumeration",
                               max_nodes);
    std::vector<std::pair<int, int>> all_edges;
    std::vector<MultiEdge> edges;
    for (std::size_t k = 0; k < b.incidences.size(); ++k) {
        auto [e, v] = b.incidences[k];
        all_edges.emplace_back(b.edge_node(e), b.vertex_node(v));
        edges.push_back({b.edge_node(e), b.vertex_node(v), static_cast<int>(k)});
    }
    std::vector<int> nodes(N);
    std::iota(nodes.begin(), nodes.end(), 0);
    std::vector<std::vector<int>> picks;
    std::vector<int> chosen;
    enumerate_trees(std::move(edges), std::move(nodes), chosen, picks);

    std::vector<BTree> out;
    out.reserve(picks.size());
    for (const auto& pick : picks) {
        std::vector<std::pair<int, int>> tree_edges;
        for (int k : pick) tree_edges.push_back(all_edges[k]);
        out.push_back(make_tree(b, std::move(tree_edges)));
    }
    return out;
}

TreeClass tree_class_of(const RootedHypergraph& h, const BipartiteIncidence& b, const BTree& t) {
    TreeClass k;
    for (int v : h.nonsink_vertices()) {
        int id = b.vertex_node(v);
        int p = t.parent[id];
        if (p < 0 || !b.is_edge_node(p))
            throw domain_error("tree parent of a vertex-node must be an edge-node");
        k.lr.emplace_back(h.nonsink_index(v), p);
    }
    std::sort(k.lr.begin(), k.lr.end());
    return k;
}

std::vector<TreeClass> tree_classes(const RootedHypergraph& h, int max_nodes) {
    BipartiteIncidence b = bipartite_incidence(h);
    std::set<TreeClass> classes;
    for (const BTree& t : all_spanning_trees(b, max_nodes))
        classes.insert(tree_class_of(h, b, t));
    return {classes.begin(), classes.end()};
}

namespace {

// One step of the inverse-BCP eligibility scan: vertices outside the tree with
// at least b_j + 1 tree neighbors, each paired with its selected attachment.
struct Eligible {
    int node;
    int attach;  // neighbor already in the tree
};

std::vector<Eligible> eligible_vertices(const BipartiteIncidence& b, const std::vector<int>& bval,
                                        const std::vector<char>& in_tree,
                                        const std::vector<int>& height, const Beta& beta) {
    TreeOrderLess less{height, beta};
    std::vector<Eligible> out;
    for (int j = 0; j < b.node_count(); ++j) {
        if (in_tree[j]) continue;
        std::vector<int> nbrs;
        for (int i : b.adj[j])
            if (in_tree[i]) nbrs.push_back(i);
        if (static_cast<int>(nbrs.size()) < bval[j] + 1) continue;
        std::sort(nbrs.begin(), nbrs.end(), less);
        out.push_back({j, nbrs[bval[j]]});
    }
    return out;
}

// Shared driver for the one-at-a-time and batched constructions.
BTree grow_tree(const BipartiteIncidence& b, const std::vector<int>& bval, const Beta& beta,
                bool batched) {
    int N = b.node_count();
    std::vector<char> in_tree(N, 0);
    std::vector<int> height(N, 0);
    in_tree[b.sink_node] = 1;
    std::vector<std::pair<int, int>> edges;
    int placed = 1;
    while (placed < N) {
        auto elig = eligible_vertices(b, bval, in_tree, height, beta);
        if (elig.empty())
            throw domain_error("burning stalls: configuration is not a parking function");
        // heights the candidates would get
        auto cand_height = [&](const Eligible& c) { return height[c.attach] + 1; };
        const Eligible* best = &elig[0];
        for (const auto& c : elig) {
            if (cand_height(c) < cand_height(*best) ||
                (cand_height(c) == cand_height(*best) && beta[c.node] < beta[best->node]))
                best = &c;
        }
        int h0 = cand_height(*best);
        for (const auto& c : elig) {
            if (!batched && c.node != best->node) continue;
            if (batched && cand_height(c) != h0) continue;
            in_tree[c.node] = 1;
            height[c.node] = cand_height(c);
            edges.emplace_back(c.node, c.attach);
            ++placed;
        }
    }
    return make_tree(b, std::move(edges));
}

}  // namespace

std::pair<BTree, TreeClass> parking_to_tree(const RootedHypergraph& h, const Configuration& c,
                                            const Beta& beta) {
    if (static_cast<int>(c.size()) != h.nonsink_count())
        throw domain_error("configuration length does not match nonsink vertex count");
    BipartiteIncidence b = bipartite_incidence(h);
    std::vector<int> bval(b.node_count(), 0);
    for (int i = 0; i < h.nonsink_count(); ++i)
        bval[b.vertex_node(h.nonsink_vertices()[i])] = c[i];

    BTree one_at_a_time = grow_tree(b, bval, beta, false);
    BTree batch = grow_tree(b, bval, beta, true);
    std::set<std::pair<int, int>> a(one_at_a_time.edges.begin(), one_at_a_time.edges.end());
    std::set<std::pair<int, int>> bb(batch.edges.begin(), batch.edges.end());
    if (a != bb)
        throw domain_error("batched and one-at-a-time burning disagree");
    TreeClass k = tree_class_of(h, b, batch);
    return {std::move(batch), std::move(k)};
}

std::vector<int> tree_to_parking(const BipartiteIncidence& b, const BTree& t, const Beta& beta) {
    TreeOrderLess less{t.height, beta};
    std::vector<int> out(b.node_count(), 0);
    for (int j = 0; j < b.node_count(); ++j) {
        if (j == b.sink_node) continue;
        int p = t.parent[j];
        int count = 0;
        for (int i : b.adj[j])
            if (less(i, p)) ++count;
        out[j] = count;
    }
    return out;
}

Configuration restrict_to_vertices(const RootedHypergraph& h, const BipartiteIncidence& b,
                                   const std::vector<int>& full) {
    Configuration c;
    for (int v : h.nonsink_vertices()) c.push_back(full[b.vertex_node(v)]);
    return c;
}

BTree class_canonical_tree(const RootedHypergraph& h, const TreeClass& k, const Beta& beta) {
    BipartiteIncidence b = bipartite_incidence(h);
    int N = b.node_count();

    // unique lr edge per nonsink vertex-node
    std::vector<int> lr_edge(N, -1);
    for (auto [i, e] : k.lr) {
        int id = b.vertex_node(h.nonsink_vertices()[i]);
        if (lr_edge[id] != -1) throw domain_error("tree class assigns two edges to one vertex");
        lr_edge[id] = e;
    }
    for (int v : h.nonsink_vertices())
        if (lr_edge[b.vertex_node(v)] == -1)
            throw domain_error("tree class misses vertex " + h.label(v));

    std::vector<char> used(N, 0);
    std::vector<std::pair<int, int>> edges;
    std::vector<int> layer{b.sink_node};
    used[b.sink_node] = 1;
    int placed = 1;
    while (placed < N && !layer.empty()) {
        // odd layer: unused edge-nodes adjacent to the current vertex layer,
        // each attached to its beta-smallest neighbor there
        std::vector<int> next_edges;
        for (int e = 0; e < b.edge_nodes; ++e) {
            int id = b.edge_node(e);
            if (used[id]) continue;
            int best = -1;
            for (int w : b.adj[id]) {
                if (std::find(layer.begin(), layer.end(), w) == layer.end()) continue;
                if (best == -1 || beta[w] < beta[best]) best = w;
            }
            if (best == -1) continue;
            edges.emplace_back(id, best);
            used[id] = 1;
            next_edges.push_back(e);
            ++placed;
        }
        // even layer: vertex-nodes whose lr edge just appeared
        std::vector<int> next_vertices;
        for (int v : h.nonsink_vertices()) {
            int id = b.vertex_node(v);
            if (used[id]) continue;
            int e = lr_edge[id];
            if (std::find(next_edges.begin(), next_edges.end(), e) == next_edges.end()) continue;
            edges.emplace_back(id, b.edge_node(e));
            used[id] = 1;
            next_vertices.push_back(id);
            ++placed;
        }
        layer = std::move(next_vertices);
    }
    if (placed != N)
        throw domain_error("tree class is inconsistent: layered construction cannot reach every node");
    return make_tree(b, std::move(edges));
}

std::vector<int> hypertree_of(const BipartiteIncidence& b, const BTree& t) {
    std::vector<int> deg(b.edge_nodes, 0);
    for (auto [u, v] : t.edges) {
        if (b.is_edge_node(u)) ++deg[u];
        if (b.is_edge_node(v)) ++deg[v];
    }
    std::vector<int> f(b.edge_nodes, 0);
    for (int e = 0; e < b.edge_nodes; ++e) f[e] = std::max(deg[e] - 1, 0);
    return f;
}

}  // namespace hyperchip
