#include "hyperchip/firing.hpp"

#include <algorithm>
#include <limits>

namespace hyperchip {

namespace {

void validate_choice(const RootedHypergraph& h, const FiringChoice& choice) {
    int v = choice.vertex;
    if (v < 0 || v >= h.vertex_count() || v == h.sink())
        throw domain_error("firing vertex must be a nonsink vertex");
    for (int e = 0; e < h.edge_count(); ++e) {
        bool incident = h.edge_contains(e, v);
        auto it = choice.targets.find(e);
        if (incident && it == choice.targets.end())
            throw domain_error("firing choice misses incident edge " + std::to_string(e));
        if (!incident && it != choice.targets.end())
            throw domain_error("firing choice names a non-incident edge " + std::to_string(e));
        if (incident) {
            int t = it->second;
            if (t == v || !h.edge_contains(e, t))
                throw domain_error("firing choice target must be another member of the edge");
        }
    }
}

}  // namespace

FireResult fire_vertex(const RootedHypergraph& h, const Configuration& c,
                       const FiringChoice& choice) {
    validate_choice(h, choice);
    FireResult r{std::vector<int>(c.begin(), c.end()), true};
    int vi = h.nonsink_index(choice.vertex);
    r.config[vi] -= h.degree(choice.vertex);
    for (auto [e, t] : choice.targets) {
        int ti = h.nonsink_index(t);
        if (ti >= 0) r.config[ti] += 1;  // chips sent to the sink vanish
    }
    r.nonnegative = std::all_of(r.config.begin(), r.config.end(), [](int x) { return x >= 0; });
    return r;
}

bool is_cancellative(const RootedHypergraph& h, VertexSet T, const SetFiringChoice& choices) {
    for (int i : T.members())
        if (!choices.by_vertex.count(i))
            throw domain_error("set firing choice misses a vertex of T");
    if (choices.by_vertex.size() != static_cast<std::size_t>(T.count()))
        throw domain_error("set firing choice names vertices outside T");

    for (int e = 0; e < h.edge_count(); ++e) {
        if (!h.edge_within(e, T)) continue;
        // targets over the edge must hit every member exactly once, no fixed point
        std::vector<int> hit;
        for (int v : h.edge(e)) {
            const FiringChoice& fc = choices.by_vertex.at(h.nonsink_index(v));
            int t = fc.targets.at(e);
            if (t == v) return false;
            hit.push_back(t);
        }
        std::vector<int> members = h.edge(e);
        std::sort(hit.begin(), hit.end());
        std::sort(members.begin(), members.end());
        if (hit != members) return false;
    }
    return true;
}

FireResult fire_set(const RootedHypergraph& h, const Configuration& c, VertexSet T,
                    const SetFiringChoice& choices) {
    for (auto& [i, fc] : choices.by_vertex) validate_choice(h, fc);
    if (!is_cancellative(h, T, choices))
        throw domain_error("set firing choice is not cancellative");
    FireResult r{std::vector<int>(c.begin(), c.end()), true};
    for (auto& [i, fc] : choices.by_vertex) {
        r.config[i] -= h.degree(fc.vertex);
        for (auto [e, t] : fc.targets) {
            int ti = h.nonsink_index(t);
            if (ti >= 0) r.config[ti] += 1;
        }
    }
    r.nonnegative = std::all_of(r.config.begin(), r.config.end(), [](int x) { return x >= 0; });
    return r;
}

bool ready_to_fire(const RootedHypergraph& h, const Configuration& c, VertexSet T) {
    if (T.empty()) throw domain_error("T must be nonempty");
    for (int i : T.members())
        if (h.degree_in_set(T, i) > c[i]) return false;
    return true;
}

bool ready_to_fire_oracle(const RootedHypergraph& h, const Configuration& c, VertexSet T,
                          SetFiringChoice* witness, long long max_choices) {
    if (T.empty()) throw domain_error("T must be nonempty");
    int n = h.nonsink_count();

    // Per edge, the receiving tuples factor independently: cancellativity is a
    // per-edge constraint and a set firing choice is exactly one tuple per
    // edge that has firers. So the minimum outcome at each vertex is the sum
    // of per-edge minima.
    struct EdgeTuples {
        int edge;
        std::vector<int> firers;                 // members of the edge that lie in T
        std::vector<std::vector<int>> tuples;    // target per firer
        std::vector<std::vector<int>> receipts;  // per tuple, receipts per nonsink index
    };
    std::vector<EdgeTuples> per_edge;
    long long visited = 0;
    for (int e = 0; e < h.edge_count(); ++e) {
        EdgeTuples et;
        et.edge = e;
        for (int v : h.edge(e)) {
            int i = h.nonsink_index(v);
            if (i >= 0 && T.contains(i)) et.firers.push_back(v);
        }
        if (et.firers.empty()) continue;
        bool full = h.edge_within(e, T);
        std::vector<int> tuple(et.firers.size(), -1);
        auto rec = [&](auto&& self, std::size_t k) -> void {
            if (k == et.firers.size()) {
                if (++visited > max_choices)
                    throw size_guard_error("firing-choice space too large", max_choices);
                if (full) {
                    std::vector<int> hit = tuple;
                    std::vector<int> members = h.edge(e);
                    std::sort(hit.begin(), hit.end());
                    std::sort(members.begin(), members.end());
                    if (hit != members) return;
                }
                std::vector<int> rec_vec(n, 0);
                for (int t : tuple) {
                    int ti = h.nonsink_index(t);
                    if (ti >= 0) ++rec_vec[ti];
                }
                et.tuples.push_back(tuple);
                et.receipts.push_back(std::move(rec_vec));
                return;
            }
            for (int t : h.edge(e)) {
                if (t == et.firers[k]) continue;
                tuple[k] = t;
                self(self, k + 1);
            }
        };
        rec(rec, 0);
        per_edge.push_back(std::move(et));
    }

    std::vector<int> base(n, 0);
    for (int i = 0; i < n; ++i) base[i] = c[i];
    for (int i : T.members()) base[i] -= h.degree(h.nonsink_vertices()[i]);

    // min achievable chips per vertex, and the tuple choices realizing it
    int failing = -1;
    std::vector<int> low = base;
    for (const auto& et : per_edge) {
        for (int i = 0; i < n; ++i) {
            int best = std::numeric_limits<int>::max();
            for (const auto& r : et.receipts) best = std::min(best, r[i]);
            // accumulate per-coordinate minimum; only meaningful per coordinate
            low[i] += best;
        }
    }
    for (int i = 0; i < n && failing < 0; ++i)
        if (low[i] < 0) failing = i;
    if (failing < 0) return true;

    if (witness) {
        witness->by_vertex.clear();
        for (int i : T.members()) {
            FiringChoice fc;
            fc.vertex = h.nonsink_vertices()[i];
            witness->by_vertex[i] = fc;
        }
        for (const auto& et : per_edge) {
            std::size_t pick = 0;
            for (std::size_t k = 1; k < et.tuples.size(); ++k)
                if (et.receipts[k][failing] < et.receipts[pick][failing]) pick = k;
            for (std::size_t k = 0; k < et.firers.size(); ++k) {
                int firer = et.firers[k];
                witness->by_vertex[h.nonsink_index(firer)].targets[et.edge] =
                    et.tuples[pick][k];
            }
        }
    }
    return false;
}

bool is_superstable(const RootedHypergraph& h, const Configuration& c) {
    int n = h.nonsink_count();
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m)
        if (ready_to_fire(h, c, VertexSet(m))) return false;
    return true;
}

}  // namespace hyperchip
