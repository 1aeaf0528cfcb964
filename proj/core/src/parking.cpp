#include "hyperchip/parking.hpp"

#include <algorithm>
#include <set>

namespace hyperchip {

namespace {

void check_config(const RootedHypergraph& h, const Configuration& c) {
    if (static_cast<int>(c.size()) != h.nonsink_count())
        throw domain_error("configuration length does not match nonsink vertex count");
    for (int x : c)
        if (x < 0) throw domain_error("configuration has a negative entry");
}

}  // namespace

bool is_parking_bruteforce(const RootedHypergraph& h, const Configuration& c) {
    check_config(h, c);
    int n = h.nonsink_count();
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
        VertexSet T(m);
        bool escaped = false;
        for (int i : T.members()) {
            if (c[i] < h.degree_in_set(T, i)) {
                escaped = true;
                break;
            }
        }
        if (!escaped) return false;
    }
    return true;
}

std::vector<VertexSet> bounded_sets(const RootedHypergraph& h, const Configuration& c) {
    check_config(h, c);
    int n = h.nonsink_count();
    std::vector<VertexSet> out;
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
        VertexSet T(m);
        bool bounded = true;
        for (int i : T.members()) {
            if (c[i] < h.degree_in_set(T, i)) {
                bounded = false;
                break;
            }
        }
        if (bounded) out.push_back(T);
    }
    return out;
}

bool is_parking_burn(const RootedHypergraph& h, const Configuration& c) {
    check_config(h, c);
    BipartiteIncidence b = bipartite_incidence(h);
    int N = b.node_count();
    std::vector<int> chips(N, 0);
    for (int i = 0; i < h.nonsink_count(); ++i)
        chips[b.vertex_node(h.nonsink_vertices()[i])] = c[i];

    std::vector<char> marked(N, 0);
    std::vector<int> marked_neighbors(N, 0);
    std::vector<int> queue{b.sink_node};
    marked[b.sink_node] = 1;
    int done = 1;
    while (!queue.empty()) {
        int u = queue.back();
        queue.pop_back();
        for (int w : b.adj[u]) {
            if (marked[w]) continue;
            if (++marked_neighbors[w] > chips[w]) {
                marked[w] = 1;
                ++done;
                queue.push_back(w);
            }
        }
    }
    return done == N;
}

std::vector<Orientation> enumerate_acyclic_orientations(const RootedHypergraph& h) {
    int m = h.edge_count();
    std::vector<Orientation> out;
    Orientation o;
    o.chosen.assign(m, -1);

    // is the induced directed B(H) acyclic with q its only indegree-0 node?
    auto admissible = [&]() {
        BipartiteIncidence b = bipartite_incidence(h);
        int N = b.node_count();
        std::vector<std::vector<int>> succ(N);
        std::vector<int> indeg(N, 0);
        for (int e = 0; e < m; ++e) {
            for (int v : h.edge(e)) {
                int from, to;
                if (v == o.chosen[e]) {
                    from = b.vertex_node(v);
                    to = b.edge_node(e);
                } else {
                    from = b.edge_node(e);
                    to = b.vertex_node(v);
                }
                succ[from].push_back(to);
                ++indeg[to];
            }
        }
        for (int u = 0; u < N; ++u)
            if (indeg[u] == 0 && u != b.sink_node) return false;
        if (indeg[b.sink_node] != 0) return false;
        // Kahn
        std::vector<int> order{b.sink_node};
        std::vector<int> deg = indeg;
        for (std::size_t k = 0; k < order.size(); ++k)
            for (int w : succ[order[k]])
                if (--deg[w] == 0) order.push_back(w);
        return static_cast<int>(order.size()) == N;
    };

    auto rec = [&](auto&& self, int e) -> void {
        if (e == m) {
            if (admissible()) out.push_back(o);
            return;
        }
        for (int v : h.edge(e)) {
            o.chosen[e] = v;
            self(self, e + 1);
        }
    };
    rec(rec, 0);
    return out;
}

Configuration orientation_to_config(const RootedHypergraph& h, const Orientation& o) {
    if (static_cast<int>(o.chosen.size()) != h.edge_count())
        throw domain_error("orientation must choose a vertex for every edge occurrence");
    for (int e = 0; e < h.edge_count(); ++e)
        if (!h.edge_contains(e, o.chosen[e]))
            throw domain_error("orientation chooses a vertex outside its edge");
    Configuration c(h.nonsink_count(), 0);
    for (int i = 0; i < h.nonsink_count(); ++i) {
        int v = h.nonsink_vertices()[i];
        int indeg = 0;
        for (int e = 0; e < h.edge_count(); ++e)
            if (h.edge_contains(e, v) && o.chosen[e] != v) ++indeg;
        if (indeg == 0)
            throw domain_error("vertex " + h.label(v) +
                               " has indegree 0: orientation is not acyclic with unique source q");
        c[i] = indeg - 1;
    }
    return c;
}

std::vector<Configuration> maximal_parking(const RootedHypergraph& h) {
    std::vector<Configuration> out;
    for (const Orientation& o : enumerate_acyclic_orientations(h))
        out.push_back(orientation_to_config(h, o));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Configuration> enumerate_parking(const RootedHypergraph& h) {
    int n = h.nonsink_count();
    if (n == 0) return {Configuration{}};
    std::set<Configuration> seen;
    std::vector<Configuration> stack = maximal_parking(h);
    for (const auto& c : stack) seen.insert(c);
    while (!stack.empty()) {
        Configuration c = stack.back();
        stack.pop_back();
        for (int i = 0; i < n; ++i) {
            if (c[i] == 0) continue;
            Configuration d = c;
            --d[i];
            if (seen.insert(d).second) stack.push_back(d);
        }
    }
    return {seen.begin(), seen.end()};
}

}  // namespace hyperchip
