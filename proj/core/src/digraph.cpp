#include "hyperchip/digraph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace hyperchip {

void Digraph::add_arc(int u, int v, int mult) {
    if (u == v) throw domain_error("loops are forbidden");
    if (mult < 1) throw domain_error("arc multiplicity must be positive");
    arcs[{u, v}] += mult;
}

int Digraph::multiplicity(int u, int v) const {
    auto it = arcs.find({u, v});
    return it == arcs.end() ? 0 : it->second;
}

int Digraph::outdeg(int v) const {
    int d = 0;
    for (const auto& [arc, m] : arcs)
        if (arc.first == v) d += m;
    return d;
}

int Digraph::indeg(int v) const {
    int d = 0;
    for (const auto& [arc, m] : arcs)
        if (arc.second == v) d += m;
    return d;
}

std::vector<int> Digraph::nonsink() const {
    std::vector<int> out;
    for (int v = 0; v < vertex_count(); ++v)
        if (v != sink) out.push_back(v);
    return out;
}

Matrix reduced_laplacian(const Digraph& d) {
    if (d.sink < 0 || d.sink >= d.vertex_count()) throw domain_error("no sink chosen");
    std::vector<int> ns = d.nonsink();
    int n = static_cast<int>(ns.size());
    Matrix m(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i) {
        m[i][i] = d.outdeg(ns[i]);
        for (int j = 0; j < n; ++j)
            if (i != j) m[i][j] = -d.multiplicity(ns[i], ns[j]);
    }
    return m;
}

mpz_class laplacian_determinant(const Matrix& mat) {
    int n = static_cast<int>(mat.size());
    if (n == 0) return 1;
    std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(mat[i].size()) != n) throw domain_error("matrix must be square");
        for (int j = 0; j < n; ++j) a[i][j] = static_cast<long>(mat[i][j]);
    }
    mpz_class prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int p = -1;
            for (int r = k + 1; r < n; ++r)
                if (a[r][k] != 0) {
                    p = r;
                    break;
                }
            if (p < 0) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

namespace {

// per nonsink vertex: outgoing arcs as (target nonsink index or -1 for sink, mult)
using OutArcs = std::vector<std::vector<std::pair<int, int>>>;

OutArcs out_arcs(const Digraph& d, const std::vector<int>& ns) {
    int n = static_cast<int>(ns.size());
    std::vector<int> pos(d.vertex_count(), -1);
    for (int i = 0; i < n; ++i) pos[ns[i]] = i;
    OutArcs out(n);
    for (const auto& [arc, m] : d.arcs) {
        int i = pos[arc.first];
        if (i >= 0) out[i].emplace_back(pos[arc.second], m);
    }
    return out;
}

bool is_digraph_parking(const OutArcs& out, const Configuration& b) {
    int n = static_cast<int>(out.size());
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        bool ok = false;
        for (int i = 0; i < n && !ok; ++i) {
            if (!((mask >> i) & 1)) continue;
            int leaving = 0;
            for (auto [j, m] : out[i])
                if (j < 0 || !((mask >> j) & 1)) leaving += m;  // sink counts
            if (leaving > b[i]) ok = true;
        }
        if (!ok) return false;
    }
    return true;
}

}  // namespace

std::vector<Configuration> digraph_parking_enumerate(const Digraph& d, long long max_box) {
    std::vector<int> ns = d.nonsink();
    int n = static_cast<int>(ns.size());
    if (n == 0) return {Configuration{}};
    std::vector<int> bound(n);
    long long box = 1;
    for (int i = 0; i < n; ++i) {
        bound[i] = d.outdeg(ns[i]);
        if (bound[i] == 0) return {};
        box *= bound[i];
        if (box > max_box) throw size_guard_error("parking box too large", max_box);
    }
    OutArcs arcs = out_arcs(d, ns);
    std::vector<Configuration> out;
    Configuration b(n, 0);
    while (true) {
        if (is_digraph_parking(arcs, b)) out.push_back(b);
        int k = n - 1;
        while (k >= 0 && b[k] == bound[k] - 1) b[k--] = 0;
        if (k < 0) break;
        ++b[k];
    }
    return out;
}

bool is_superstable_laplacian(const Digraph& d, const Configuration& c) {
    std::vector<int> ns = d.nonsink();
    int n = static_cast<int>(ns.size());
    Matrix L = reduced_laplacian(d);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        bool nonneg = true;
        for (int i = 0; i < n && nonneg; ++i) {
            long long x = c[i];
            for (int j = 0; j < n; ++j)
                if ((mask >> j) & 1) x -= L[i][j];
            if (x < 0) nonneg = false;
        }
        if (nonneg) return false;  // this set is ready to fire
    }
    return true;
}

Cycling cycling_from_order(const RootedHypergraph& h, const std::vector<int>& order) {
    std::vector<int> rank(h.vertex_count(), -1);
    if (static_cast<int>(order.size()) != h.vertex_count())
        throw domain_error("order must list every vertex exactly once");
    for (int r = 0; r < static_cast<int>(order.size()); ++r) {
        int v = order[r];
        if (v < 0 || v >= h.vertex_count() || rank[v] >= 0)
            throw domain_error("order is not a permutation of the vertex set");
        rank[v] = r;
    }
    Cycling c;
    for (const auto& e : h.edges()) {
        std::vector<int> cyc = e;
        std::sort(cyc.begin(), cyc.end(), [&](int a, int b) { return rank[a] < rank[b]; });
        // canonical rotation: smallest vertex index first
        auto it = std::min_element(cyc.begin(), cyc.end());
        std::rotate(cyc.begin(), it, cyc.end());
        c.cycles.push_back(std::move(cyc));
    }
    return c;
}

Digraph digraph_from_cycling(const RootedHypergraph& h, const Cycling& c) {
    if (c.cycles.size() != h.edges().size())
        throw domain_error("cycling must order every edge occurrence");
    for (std::size_t e = 0; e < c.cycles.size(); ++e) {
        std::vector<int> a = c.cycles[e], b = h.edge(e);
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) throw domain_error("cycle is not a permutation of its edge's members");
    }
    Digraph d;
    d.labels = h.vertex_labels();
    d.sink = h.sink();
    for (const auto& cyc : c.cycles) {
        int k = static_cast<int>(cyc.size());
        for (int i = 0; i < k; ++i) d.add_arc(cyc[i], cyc[(i + 1) % k]);
    }
    return d;
}

bool is_eulerian(const Digraph& d) {
    int N = d.vertex_count();
    for (int v = 0; v < N; ++v)
        if (d.indeg(v) != d.outdeg(v)) return false;
    // strong connectivity via forward and backward reachability from node 0
    for (bool reverse : {false, true}) {
        std::vector<char> seen(N, 0);
        std::vector<int> queue{0};
        seen[0] = 1;
        for (std::size_t k = 0; k < queue.size(); ++k) {
            for (const auto& [arc, m] : d.arcs) {
                int from = reverse ? arc.second : arc.first;
                int to = reverse ? arc.first : arc.second;
                if (from == queue[k] && !seen[to]) {
                    seen[to] = 1;
                    queue.push_back(to);
                }
            }
        }
        if (std::count(seen.begin(), seen.end(), 1) != N) return false;
    }
    return true;
}

std::vector<Cycling> all_vertex_induced_cyclings(const RootedHypergraph& h,
                                                 long long max_orders) {
    int N = h.vertex_count();
    long long fact = 1;
    for (int i = 2; i <= N; ++i) {
        fact *= i;
        if (fact > max_orders) throw size_guard_error("too many vertex orders", max_orders);
    }
    std::vector<int> order(N);
    std::iota(order.begin(), order.end(), 0);
    std::set<Cycling> seen;
    do {
        seen.insert(cycling_from_order(h, order));
    } while (std::next_permutation(order.begin(), order.end()));
    return {seen.begin(), seen.end()};
}

std::vector<Configuration> union_over_cyclings(const RootedHypergraph& h, long long max_orders) {
    std::set<Configuration> all;
    for (const Cycling& c : all_vertex_induced_cyclings(h, max_orders)) {
        Digraph d = digraph_from_cycling(h, c);
        for (const auto& b : digraph_parking_enumerate(d)) all.insert(b);
    }
    return {all.begin(), all.end()};
}

std::vector<Cycling> greedy_cycling_cover(const RootedHypergraph& h, long long max_orders) {
    std::vector<Cycling> cyclings = all_vertex_induced_cyclings(h, max_orders);
    std::vector<std::set<Configuration>> sets;
    std::set<Configuration> target;
    for (const Cycling& c : cyclings) {
        Digraph d = digraph_from_cycling(h, c);
        auto pf = digraph_parking_enumerate(d);
        sets.emplace_back(pf.begin(), pf.end());
        target.insert(pf.begin(), pf.end());
    }
    std::vector<Cycling> cover;
    std::set<Configuration> covered;
    while (covered != target) {
        std::size_t best = 0;
        long long gain = -1;
        for (std::size_t k = 0; k < cyclings.size(); ++k) {
            long long g = 0;
            for (const auto& c : sets[k])
                if (!covered.count(c)) ++g;
            if (g > gain) {
                gain = g;
                best = k;
            }
        }
        if (gain <= 0) break;
        cover.push_back(cyclings[best]);
        covered.insert(sets[best].begin(), sets[best].end());
    }
    return cover;
}

Digraph star_digraph(const RootedHypergraph& h) {
    int q = h.sink();
    for (int e = 0; e < h.edge_count(); ++e)
        if (!h.edge_contains(e, q))
            throw domain_error("not a star hypergraph: edge " + std::to_string(e) +
                               " does not contain the sink");
    Digraph d;
    for (int e = 0; e < h.edge_count(); ++e) d.labels.push_back("e" + std::to_string(e + 1));
    int base = h.edge_count();
    for (const auto& l : h.vertex_labels()) d.labels.push_back(l);
    d.sink = base + q;
    for (int e = 0; e < h.edge_count(); ++e) {
        d.add_arc(e, d.sink);
        for (int v : h.edge(e))
            if (v != q) d.add_arc(base + v, e);
    }
    return d;
}

}  // namespace hyperchip
